#pragma once

#include <functional>

namespace motzeta::acceptance::quadrature {

/// Adaptive Gauss-Legendre on [a, b].
double adaptive(const std::function<double(double)>& f, double a, double b, double tol, int depth = 0);

/// Integral of (x1 x2 + x1 x3 + x2 x3)^(-3/2) over the 2-simplex with
/// volume normalized to 1, by deterministic quadrature.
double banana3_d3();

} // namespace motzeta::acceptance::quadrature
