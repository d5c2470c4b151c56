#pragma once

#include "fracwave/core.hpp"
#include "fracwave/grid.hpp"

#include <variant>

namespace fracwave {

/// Convolution kernel of the fractional integral of order alpha > 0:
/// x^(alpha-1) / Gamma(alpha) * H(x). Throws std::domain_error at the
/// unbounded point x = 0 when alpha < 1; quadrature callers use the
/// product-integration path instead of sampling the kernel there.
double kernel_delta(Order alpha, double x);

/// The kernel without its Heaviside factor. Vanishes identically at
/// non-positive integer orders through the 1/Gamma zeros, which is what
/// keeps integer derivatives of constants labeled rather than lost.
double zero_function(Order alpha, double x);

/// Fractional integral S^alpha f on f's own grid, base point at the grid
/// start. Product-integration weights integrate the singular kernel
/// exactly against piecewise-linear f, so smooth data converges at
/// O(step^2) away from the base point. alpha in (0, 4].
GridFunction frac_integral(const GridFunction& f, Order alpha);

/// Fractional derivative of order alpha in (0, 2], realized as n integer
/// derivatives of S^(n-alpha) f with n = ceil(alpha). Central differences
/// inside, one-sided stencils at the ends.
GridFunction frac_derivative(const GridFunction& f, Order alpha);

/// Signed dispatch: order > 0 differentiates, order < 0 integrates,
/// order 0 is the identity.
GridFunction differint(const GridFunction& f, Order order);

namespace ref {
/// Serial reference implementation of frac_integral: per-interval moment
/// formulas recomputed in place, no weight tables, no threading. Kept for
/// testing the parallel kernel against.
GridFunction frac_integral(const GridFunction& f, Order alpha);
} // namespace ref

/// Antiderivative normalized to vanish at 0 ("inverse derivative"). The
/// grid must contain 0 as a sample; an eps = 4*step neighborhood of 0 is
/// excluded and bridged by linear extrapolation of the cumulative sum,
/// which assigns the finite part when the integrand diverges at 0.
GridFunction inverse_derivative(const GridFunction& w);

struct PointMass {
    double location = 0.0;
    cplx weight{1.0, 0.0};
};

struct HeavisideStep {
    double location = 0.0;
};

/// Distribution with just enough structure to be paired: an ordinary
/// function on a grid, a point mass, or a step.
struct DistributionRep {
    std::variant<GridFunction, PointMass, HeavisideStep> kind;
};

/// Phase attached to moving a differintegral of the given order off a
/// distribution and onto the test function. Kept as one auditable
/// function: with the order convention used here (positive =
/// differentiate), it is exp(+i*pi*order), which at order +-1 reduces to
/// the classical sign flip T'[phi] = -T[phi'].
cplx pairing_phase(double order);

/// Pairs T, differintegrated by `order`, against the test function phi:
/// pairing_phase(order) * T[phi^(order)]. phi must be compactly supported
/// inside its grid (a support violation only warns). order in (-2, 2).
cplx distribution_pair(const DistributionRep& T, Order order, const GridFunction& phi);

} // namespace fracwave
