#pragma once

#include "fracwave/core.hpp"
#include "fracwave/differint.hpp"
#include "fracwave/grid.hpp"

#include <vector>

namespace fracwave {

/// One row of a multiplier comparison report.
struct MultiplierRow {
    double omega = 0.0;
    cplx lhs{0.0, 0.0};     // transform of the fractional derivative
    cplx rhs{0.0, 0.0};     // (i omega)^alpha times the transform of f
    double relerr = 0.0;
};

/// Unitary Fourier transform (1/sqrt(2pi)) integral of f(t) e^{-i omega t}
/// by the trapezoid rule over f's grid. Warns when f is not negligible at
/// the grid ends.
cplx ft_quadrature(const GridFunction& f, double omega);

/// Inverse-convention counterpart with e^{+i omega t}; kept for one smoke
/// test of the symmetry, not a tuned code path.
cplx ift_quadrature(const GridFunction& fhat, double omega);

/// Compares the transform of the grid fractional derivative against the
/// multiplier (i omega)^alpha acting on the transform of f, per omega.
/// alpha in [0, 1]. The grid operator fixes its base point at the grid
/// start, so for fractional alpha the identity holds only up to the
/// slowly decaying memory of that base point; expect percent-level
/// residuals at desk-scale grids and refine the grid to shrink them.
std::vector<MultiplierRow> multiplier_check(const GridFunction& f, Order alpha,
                                            const std::vector<double>& omegas);

struct LaplacianMultipliers {
    cplx composed_mult{0.0, 0.0};   // -(i omega)^(2 alpha), square of the derivative symbol
    double modulus_mult = 0.0;      // |omega|^(2 alpha), the classical fractional Laplacian
};

/// The two candidate symbols for a fractional Laplacian. They agree only
/// at integer alpha; the gap is the point of the comparison.
LaplacianMultipliers laplacian_multiplier_compare(double omega, Order alpha);

} // namespace fracwave
