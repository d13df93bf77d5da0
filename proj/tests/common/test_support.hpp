#pragma once

#include <cmath>
#include <functional>

#include "icrf/channel.hpp"

// Shared fixtures and independent numeric oracles for the test suites.
// The quadrature oracle here must stay independent of src/exp_integral.cpp:
// it integrates the defining integral directly.

namespace icrf::test {

// Adaptive Simpson on [a, b] with absolute tolerance tol.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 0) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    auto simpson = [](double fa, double fm, double fb, double h) {
        return h / 6.0 * (fa + 4.0 * fm + fb);
    };
    const double whole = simpson(fa, fm, fb, b - a);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    if (depth > 48 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    std::function<double(double)> g = f;
    return adaptive_simpson(g, a, m, tol / 2, depth + 1) +
           adaptive_simpson(g, m, b, tol / 2, depth + 1);
}

// exp(x) E1(x) = int_0^inf exp(-s) / (x + s) ds by direct quadrature.
// Truncating at s = 60 leaves a tail below e^-60 / x relative ~ 1e-24.
inline double oracle_e1_scaled(double x) {
    auto f = [x](double s) { return std::exp(-s) / (x + s); };
    return adaptive_simpson(f, 0.0, 60.0, 1e-15 / std::max(x, 1.0));
}

inline double oracle_e1(double x) { return std::exp(-x) * oracle_e1_scaled(x); }

// Reference scenario: P1 = P2 = P3 = 10, direct links 0.42 / 0.25, relay
// links 0.26 / 0.1. The cross links select the regime: 0.7 / 0.7 lands in
// VSI, 0.53 / 0.36 in SI only.
inline NetworkParams example_region_params(double a12, double a21) {
    NetworkParams p;
    p.a11 = 0.42;
    p.a22 = 0.25;
    p.a31 = 0.26;
    p.a32 = 0.1;
    p.a12 = a12;
    p.a21 = a21;
    p.a13 = 0.5;
    p.a23 = 0.5;
    p.p1 = p.p2 = p.p3 = 10;
    return p;
}

inline NetworkParams example_vsi_params() { return example_region_params(0.7, 0.7); }
inline NetworkParams example_si_params() { return example_region_params(0.53, 0.36); }

// Reference scenario for the transmitter-feedback bounds.
inline NetworkParams example_txfb_params() {
    NetworkParams p;
    p.a11 = 0.2;
    p.a12 = 0.44;
    p.a22 = 0.2;
    p.a21 = 0.27;
    p.a13 = 0.01;
    p.a23 = 0.6;
    p.a31 = 0.1;
    p.a32 = 0.1;
    p.p1 = p.p2 = p.p3 = 10;
    return p;
}

// Reference scenario for partial feedback from Rx1 only.
inline NetworkParams example_partial_params() {
    NetworkParams p;
    p.a11 = 0.2;
    p.a12 = 0.27;
    p.a21 = 0.44;
    p.a22 = 0.2;
    p.a31 = 0.1;
    p.a32 = 0.1;
    p.a13 = 0.3;
    p.a23 = 0.3;
    p.p1 = p.p2 = p.p3 = 10;
    return p;
}

}  // namespace icrf::test
