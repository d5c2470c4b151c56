#pragma once

#include "fracwave/core.hpp"
#include "fracwave/differint.hpp"
#include "fracwave/grid.hpp"

#include <optional>

namespace fracwave {

/// Fundamental solution of the cone-factored wave operator:
/// (x+t)^(beta-1) (x-t)^(alpha-1) / (2 Gamma(beta) Gamma(alpha))
/// restricted to the cone {x+t >= 0, x-t >= 0}. Exactly zero outside the
/// cone; nullopt marks the cone boundary when the exponent there is
/// negative. Order 0 yields 0 off the boundary through the 1/Gamma zero
/// (the density degenerates to pure boundary terms).
std::optional<cplx> fundamental_solution(Order alpha, Order beta, double x, double t);

/// Two-profile general solution
/// (x-t)^(alpha-1)/Gamma(alpha) * phi(x+t) + (x+t)^(beta-1)/Gamma(beta) * psi(x-t)
/// with profiles read off grids by linear interpolation. Negative bases go
/// through the declared complex branch.
cplx general_solution(Order alpha, Order beta, const GridFunction& phi,
                      const GridFunction& psi, double x, double t);

/// Initial-value solver for the cone-factored wave equation. Precomputes,
/// on the shared grid of the initial data (which must contain 0),
///   eta(y)  = y^(alpha+beta-3) * Int_0^y (2-alpha-beta-power kernel)
///                                * [(alpha-beta) g' + (alpha+beta-2) h]
///   Hinv(y) = Inv[h + eta]
/// where the inner integral uses product quadrature (the power kernel
/// integrated exactly against piecewise-linear data) and Inv is the
/// 0-normalized antiderivative with the eps-excluded origin. Then
///   f(x,t) = 1/2 ((x+t)/(x-t))^(1-alpha) [g(x+t) + Hinv(x+t)]
///          + 1/2 ((x-t)/(x+t))^(1-beta)  [g(x-t) - Hinv(x-t)].
/// Orders: alpha in (0,1], beta in [1-alpha, 1]. Cells on x = +-t where a
/// prefactor exponent is nonzero are masked (nullopt).
class UvSolver {
public:
    UvSolver(Order alpha, Order beta, ICPair ic);

    std::optional<cplx> at(double x, double t) const;

    /// eta on the data grid; the sample at y = 0 carries the continuous
    /// limit R(0)/(3-alpha-beta).
    const GridFunction& eta() const { return eta_; }
    const GridFunction& hinv() const { return hinv_; }
    double eps() const { return 4.0 * ic_.g.step; }

private:
    double alpha_;
    double beta_;
    ICPair ic_;
    GridFunction dg_;      // g' by finite differences
    GridFunction eta_;
    GridFunction hinv_;
};

/// eta at one point through a throwaway solver; throws inside the
/// excluded origin neighborhood |x| < 4 * grid step.
cplx eta_closed_form(Order alpha, Order beta, const GridFunction& g,
                     const GridFunction& h, double x);

/// Independent check on eta: integrates
///   eta'(x) = [(alpha-beta) g'(x) + (alpha+beta-2) h(x)
///              - (3-alpha-beta) eta(x)] / x
/// by classical RK4 from the first grid point at or beyond eps = 4*step,
/// seeded there from the closed form. Returns eta on [seed, grid end].
GridFunction eta_ode_oracle(Order alpha, Order beta, const GridFunction& g,
                            const GridFunction& h);

/// Closed-form field for initial data g = sin, h = cos on the given axes;
/// the generator behind the cone-figure data. Cone-boundary cells are
/// masked as in UvSolver::at.
Field2D sincos_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis);

namespace ref {
/// Serial reference for sincos_field.
Field2D sincos_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis);
} // namespace ref

/// Generalized binomial coefficient Gamma(b+1)/(Gamma(b-k+1) Gamma(k+1)),
/// evaluated as the falling-factorial product so Gamma poles become exact
/// zeros and no intermediate overflows.
double binomial_coeff(Order beta, int k);

struct BinomialCheck {
    cplx partial_sum{0.0, 0.0};
    cplx target{0.0, 0.0};
    double relerr = 0.0;
};

/// Partial sum of sum_k C(beta,k) a^(beta-k) b^k against (a+b)^beta on
/// exponential symbols. Requires |b| < |a| for convergence and K <= 200.
BinomialCheck binomial_operator_check(cplx a, cplx b, Order beta, int K);

} // namespace fracwave
