#include "icrf/exp_integral.hpp"

#include <cmath>
#include <limits>

#include "icrf/errors.hpp"

namespace icrf {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

void check_domain(double x) {
    if (!(x > 0) || !std::isfinite(x)) throw DomainError("e1 requires finite x > 0");
}

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!), for x <= 1.
double e1_series(double x) {
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -x / k;
        const double contrib = -term / k;
        sum += contrib;
        if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// exp(x)*E1(x) = 1/(x+1 - 1/(x+3 - 4/(x+5 - 9/(x+7 - ...)))), for x > 1.
// Evaluated with the modified Lentz algorithm.
double e1_scaled_contfrac(double x) {
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double e1(double x) {
    check_domain(x);
    if (x <= 1.0) return e1_series(x);
    return std::exp(-x) * e1_scaled_contfrac(x);
}

double e1_scaled(double x) {
    check_domain(x);
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    return e1_scaled_contfrac(x);
}

namespace {

// Recursive adaptive Simpson for exp(x) E1(x) = int_0^inf exp(-s)/(x+s) ds.
// The tail beyond s = 60 is below e^-60 relative to the value.
double simpson_rec(double x, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = std::exp(-lm) / (x + lm);
    const double frm = std::exp(-rm) / (x + rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 52 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(x, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           simpson_rec(x, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

double e1_scaled_adaptive(double x, double rel_tol) {
    const double a = 0.0, b = 60.0;
    const double m = 0.5 * (a + b);
    const double fa = 1.0 / x;
    const double fm = std::exp(-m) / (x + m);
    const double fb = std::exp(-b) / (x + b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // absolute tolerance scaled by a crude magnitude estimate of the result
    const double scale = std::log1p(1.0 / x);
    return simpson_rec(x, a, b, fa, fm, fb, whole, 0.02 * rel_tol * scale, 0);
}

void check_spec(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0) || spec.rel_tol > 1e-3)
        throw DomainError("rel_tol must lie in (0, 1e-3]");
}

}  // namespace

double e1(double x, const QuadratureSpec& spec) {
    check_spec(spec);
    check_domain(x);
    if (spec.method == E1Method::SeriesPlusContinuedFraction) return e1(x);
    return std::exp(-x) * e1_scaled_adaptive(x, spec.rel_tol);
}

double e1_scaled(double x, const QuadratureSpec& spec) {
    check_spec(spec);
    check_domain(x);
    if (spec.method == E1Method::SeriesPlusContinuedFraction) return e1_scaled(x);
    return e1_scaled_adaptive(x, spec.rel_tol);
}

}  // namespace icrf
