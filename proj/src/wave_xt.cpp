#include "fracwave/wave_xt.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

BranchSet omega_powers(cplx omega, double p, int k_min, int k_max) {
    if (omega == cplx(0.0, 0.0))
        throw std::domain_error("omega_powers: zero base has no branch structure");
    if (k_max < k_min)
        throw std::invalid_argument("omega_powers: empty branch range");
    BranchSet set;
    set.base = omega;
    set.exponent = p;
    set.k_min = k_min;
    const double lnr = std::log(std::abs(omega));
    const double theta0 = branch_arg(omega);
    set.values.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k) {
        const double theta = theta0 + two_pi * static_cast<double>(k);
        set.values.push_back(std::polar(std::exp(p * lnr), p * theta));
    }
    return set;
}

namespace {

std::optional<cplx> guarded_exp(cplx z) {
    if (z.real() > 700.0)
        return std::nullopt;
    return std::exp(z);
}

} // namespace

std::optional<cplx> mode(cplx omega, Order alpha, Order beta, int branch_t, int branch_x,
                         double x, double t) {
    const cplx wt = omega_powers(omega, alpha.value, branch_t, branch_t).at(branch_t);
    const cplx wx = omega_powers(omega, beta.value, branch_x, branch_x).at(branch_x);
    return guarded_exp(wt * t + wx * x);
}

namespace {

std::optional<cplx> sin_value(Order alpha, Order beta, double x, double t) {
    if (beta.value == 0.0)
        throw std::domain_error("sin_solution: beta must be nonzero");
    const double r = alpha.value / beta.value;
    const cplx ir = cpow_branch(cplx(0.0, 1.0), r);     // e^{+i r pi/2}
    const cplx mir = cpow_branch(cplx(0.0, -1.0), r);   // e^{-i r pi/2}
    if (ir.real() * t > 700.0)
        return std::nullopt;
    const cplx lhs = std::exp(ir * t + cplx(0.0, x));
    const cplx rhs = std::exp(mir * t - cplx(0.0, x));
    return (lhs - rhs) / cplx(0.0, 2.0);
}

} // namespace

cplx sin_solution(Order alpha, Order beta, double x, double t) {
    const auto v = sin_value(alpha, beta, x, t);
    if (!v)
        throw std::overflow_error("sin_solution: amplitude exceeds the double range");
    return *v;
}

Damping damping_classify(Order alpha, Order beta) {
    if (beta.value == 0.0)
        throw std::domain_error("damping_classify: beta must be nonzero");
    const double r = alpha.value / beta.value;
    if (!(r > 0.0) || !(r < 2.0))
        throw std::domain_error("damping_classify: r = alpha/beta must lie in (0, 2)");
    if (r == 1.0)
        return Damping::neutral;
    return std::cos(r * half_pi) > 0.0 ? Damping::growth : Damping::decay;
}

Field2D sin_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis) {
    Field2D field(x_axis, t_axis);
    const auto total = static_cast<std::ptrdiff_t>(x_axis.count * t_axis.count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t cidx = 0; cidx < total; ++cidx) {
        const auto i = static_cast<std::size_t>(cidx) / t_axis.count;
        const auto j = static_cast<std::size_t>(cidx) % t_axis.count;
        field.set(i, j, sin_value(alpha, beta, x_axis.at(i), t_axis.at(j)));
    }
    return field;
}

namespace ref {

Field2D sin_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis) {
    Field2D field(x_axis, t_axis);
    for (std::size_t i = 0; i < x_axis.count; ++i)
        for (std::size_t j = 0; j < t_axis.count; ++j)
            field.set(i, j, sin_value(alpha, beta, x_axis.at(i), t_axis.at(j)));
    return field;
}

} // namespace ref

} // namespace fracwave
