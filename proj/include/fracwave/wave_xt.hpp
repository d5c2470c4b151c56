#pragma once

#include "fracwave/core.hpp"
#include "fracwave/grid.hpp"

#include <optional>
#include <vector>

namespace fracwave {

/// Enumerated values of base^exponent, one per branch of the logarithm:
/// values[k - k_min] = exp(exponent * (ln|base| + i(theta0 + 2 pi k)))
/// with theta0 the declared principal argument, so k = 0 agrees with
/// cpow_branch.
struct BranchSet {
    cplx base{0.0, 0.0};
    double exponent = 0.0;
    int k_min = 0;
    std::vector<cplx> values;

    cplx at(int k) const { return values.at(static_cast<std::size_t>(k - k_min)); }
};

BranchSet omega_powers(cplx omega, double p, int k_min, int k_max);

/// One exponential eigenmode e^{omega^alpha t + omega^beta x} with the two
/// powers taken on chosen branches. nullopt when the exponent's real part
/// exceeds 700 and the value would overflow.
std::optional<cplx> mode(cplx omega, Order alpha, Order beta, int branch_t, int branch_x,
                         double x, double t);

/// Sine-data solution of the order-(beta in t, alpha in x) wave equation:
/// with r = alpha/beta,
///   f(x,t) = (1/2i)[e^{i^r t + i x} - e^{(-i)^r t - i x}]
///          = e^{cos(r pi/2) t} sin(x + sin(r pi/2) t).
/// i^r and (-i)^r are the principal-branch values e^{+-i r pi/2}; the
/// conjugate pair is what keeps f real for every r.
cplx sin_solution(Order alpha, Order beta, double x, double t);

enum class Damping { growth, decay, neutral };

/// Sign of cos(r pi/2) for r = alpha/beta in (0, 2): positive means
/// amplitude growth in t, negative decay, r = 1 neutral.
Damping damping_classify(Order alpha, Order beta);

/// Grid evaluation of sin_solution; overflow cells are masked.
Field2D sin_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis);

namespace ref {
/// Serial reference for sin_field.
Field2D sin_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis);
} // namespace ref

} // namespace fracwave
