#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace statgeo {

/// Dense rank-3 array with equal extents, indexed (a,b,c) in 0..d-1.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int d) : d_(d), v_(static_cast<std::size_t>(d) * d * d, 0.0) {}

    int dim() const { return d_; }

    double& operator()(int a, int b, int c) {
        assert(a >= 0 && a < d_ && b >= 0 && b < d_ && c >= 0 && c < d_);
        return v_[(static_cast<std::size_t>(a) * d_ + b) * d_ + c];
    }
    double operator()(int a, int b, int c) const {
        assert(a >= 0 && a < d_ && b >= 0 && b < d_ && c >= 0 && c < d_);
        return v_[(static_cast<std::size_t>(a) * d_ + b) * d_ + c];
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    int d_ = 0;
    std::vector<double> v_;
};

/// Dense rank-4 array with equal extents.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int d)
        : d_(d), v_(static_cast<std::size_t>(d) * d * d * d, 0.0) {}

    int dim() const { return d_; }

    double& operator()(int a, int b, int c, int e) {
        return v_[((static_cast<std::size_t>(a) * d_ + b) * d_ + c) * d_ + e];
    }
    double operator()(int a, int b, int c, int e) const {
        return v_[((static_cast<std::size_t>(a) * d_ + b) * d_ + c) * d_ + e];
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

private:
    int d_ = 0;
    std::vector<double> v_;
};

}  // namespace statgeo
