#pragma once

#include <vector>

namespace statgeo {

enum class QuadScheme { gauss_hermite, gauss_laguerre, trapezoid };

// Describes a 1D rule for plain integrals over the scheme's natural support:
// (-inf, inf) for Hermite, [left, inf) for Laguerre, [center - 6*scale,
// center + 6*scale] for trapezoid. Nodes/weights come back ready for
// sum(w_i * f(x_i)) against an ordinary density; the exponential reference
// factors are folded into the weights.
struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::gauss_hermite;
    int order = 64;
    double center = 0.0;  // affine shift of the nodes
    double scale = 1.0;   // affine stretch, must be > 0
    double left = 0.0;    // support edge for Laguerre
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule make_quadrature(const QuadratureSpec& spec);

}  // namespace statgeo
