#include "quadrature.hpp"

#include <cmath>

namespace motzeta::acceptance::quadrature {

// accept a panel when its 10-point value matches the sum over its halves
double adaptive(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
    static const double xs[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244, 0.8650633666889845,
                                 0.9739065285171717};
    static const double ws[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
                                 0.0666713443086881};
    auto gl = [&](double lo, double hi) {
        const double c = (lo + hi) / 2, h = (hi - lo) / 2;
        double s = 0;
        for (int i = 0; i < 5; ++i) s += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
        return s * h;
    };
    const double m = (a + b) / 2;
    const double whole = gl(a, b), halves = gl(a, m) + gl(m, b);
    if (std::abs(whole - halves) < tol || depth > 30) return halves;
    return adaptive(f, a, m, tol / 2, depth + 1) + adaptive(f, m, b, tol / 2, depth + 1);
}

// Six copies of the triangle (v1, m12, c). A Duffy map at v1 with u = s^2
// leaves the smooth integrand 4 Psi^(-3/2) s^3 on the unit square.
double banana3_d3() {
    auto psi = [](double s, double w) {
        const double u = s * s;
        const double x2 = u * (0.5 + w * (1.0 / 3 - 0.5));
        const double x3 = u * (w / 3);
        const double x1 = 1 - x2 - x3;
        return x1 * x2 + x1 * x3 + x2 * x3;
    };
    auto inner = [&](double w) {
        return adaptive([&](double s) { return s == 0 ? 0.0 : std::pow(psi(s, w), -1.5) * s * s * s; }, 0, 1, 1e-12);
    };
    return 4 * adaptive(inner, 0, 1, 1e-11);
}

} // namespace motzeta::acceptance::quadrature
