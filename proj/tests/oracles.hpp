#pragma once

// Brute-force quadrature oracles used only by the tests. Deliberately
// independent of the library's quadratures: adaptive Simpson plus
// std::tgamma, no product weights, no Lanczos.

#include "fracwave/core.hpp"

#include <functional>

namespace oracles {

fracwave::cplx adaptive_simpson(const std::function<fracwave::cplx(double)>& f, double a,
                                double b, double tol);

/// Fractional integral of order alpha at x, base point 0, via the
/// regularizing substitution u = (x - t)^alpha which makes the integrand
/// bounded: (1/Gamma(alpha)) (1/alpha) Int_0^{x^alpha} f(x - u^(1/alpha)) du.
fracwave::cplx rl_integral(const std::function<fracwave::cplx(double)>& f, double alpha,
                           double x, double tol);

} // namespace oracles
