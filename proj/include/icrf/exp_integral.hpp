#pragma once

// Exponential integral E1(x) = int_x^inf exp(-t)/t dt, x > 0, and the
// overflow-safe scaled variant exp(x)*E1(x). The Rayleigh-fading regime
// conditions are stated directly in terms of these.

namespace icrf {

// Power series below x = 1, modified Lentz continued fraction above.
// Relative error <= 1e-13 against quadrature over the tested range; the
// unscaled value underflows to 0 for x beyond ~700. Throws DomainError
// for x <= 0 or non-finite x.
double e1(double x);

// exp(x) * E1(x); strictly decreasing, finite up to x = 1e6 and beyond.
double e1_scaled(double x);

enum class E1Method { AdaptiveQuadrature, SeriesPlusContinuedFraction };

struct QuadratureSpec {
    E1Method method = E1Method::SeriesPlusContinuedFraction;
    double rel_tol = 1e-10;  // must lie in (0, 1e-3]
};

// Method-selectable variants. The adaptive route integrates
// int_0^inf exp(-s)/(x+s) ds directly and serves as a slow reference;
// the series/continued-fraction route is the production path.
double e1(double x, const QuadratureSpec& spec);
double e1_scaled(double x, const QuadratureSpec& spec);

}  // namespace icrf
