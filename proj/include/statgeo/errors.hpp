#pragma once

#include <stdexcept>
#include <string>

namespace statgeo {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A point or parameter lies outside the admissible domain (e.g. sigma <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The metric could not be inverted at the requested point.
class SingularMetricError : public Error {
public:
    using Error::Error;
};

/// A density failed its normalization check under the supplied quadrature.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// The quadrature cannot represent the integrand (nodes outside support,
/// non-finite values, or an unresolvable transformed density).
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// A micro-variable map is not monotone on the sampled support.
class MapError : public Error {
public:
    using Error::Error;
};

/// A chart map has a singular (rank-deficient) Jacobian.
class SingularJacobianError : public Error {
public:
    using Error::Error;
};

/// A trajectory left the admissible domain or exceeded a growth bound.
/// Subclasses carry the partial trajectory integrated so far.
class BlowupError : public Error {
public:
    using Error::Error;
};

/// A least-squares or estimator fit could not be performed.
class FitError : public Error {
public:
    using Error::Error;
};

/// A constrained optimization has no feasible solution (or the solver
/// exhausted its iteration budget without reducing the residuals).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// One density places mass where a reference density vanishes.
class SupportError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (unwritable directory, failed write).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace statgeo
