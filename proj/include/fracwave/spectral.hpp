#pragma once

#include "fracwave/core.hpp"
#include "fracwave/grid.hpp"

#include <vector>

namespace fracwave {

/// Two-sided Fourier coefficients c_n for n in [-N, N].
struct FourierSpectrum {
    int max_index = 0;
    std::vector<cplx> coeffs;   // index n + max_index

    explicit FourierSpectrum(int N = 0)
        : max_index(N), coeffs(static_cast<std::size_t>(2 * N + 1), cplx(0.0, 0.0)) {}

    cplx at(int n) const { return coeffs.at(static_cast<std::size_t>(n + max_index)); }
    cplx& ref_at(int n) { return coeffs.at(static_cast<std::size_t>(n + max_index)); }
};

/// Coefficients of f sampled uniformly over one full period:
/// c_n = (1/2pi) sum f(x_j) e^{-i n x_j} step. The uniform sum is the
/// periodic trapezoid rule, spectrally accurate, and synthesize(analyze(f))
/// is the identity on band-limited f. Warns to stderr when N exceeds the
/// Nyquist index of the grid.
FourierSpectrum analyze(const GridFunction& f, int N);

namespace ref {
/// Serial reference for analyze; same arithmetic per coefficient.
FourierSpectrum analyze(const GridFunction& f, int N);
} // namespace ref

/// d_n = (i n)^beta c_n on the declared branch. The n = 0 mode: identity
/// at beta = 0, dropped (set to 0) for beta > 0, and rejected for
/// beta < 0 unless |c_0| <= 1e-12, since no periodic antiderivative of a
/// constant exists.
FourierSpectrum frac_coeffs(const FourierSpectrum& s, Order beta);

/// Pointwise partial sum over n in [-N, N].
cplx synthesize(const FourierSpectrum& s, double x);

GridFunction synthesize_grid(const FourierSpectrum& s, double start, double step,
                             std::size_t count);

/// Partial sum of the fractional delta series: sum over 0 < |n| <= N of
/// (i n)^alpha e^{i n x}, plus the n = 0 term (1 at alpha = 0, else 0;
/// the alpha < 0 constant mode is dropped for the same reason as in
/// frac_coeffs). At alpha = 0 this is the Dirichlet kernel.
cplx delta_series_partial(Order alpha, int N, double x);

/// Pairs the truncated delta series against a periodic test function:
/// (1/2pi) integral of phi(t) * delta_series_partial(alpha, N, x - t)
/// over the period, by the uniform rule on phi's grid. Converges to the
/// order-alpha derivative of phi at x as N grows.
cplx pair_delta_series(const GridFunction& phi, Order alpha, int N, double x);

} // namespace fracwave
