#include "fracwave/wave_uv.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <utility>

namespace fracwave {

std::optional<cplx> fundamental_solution(Order alpha, Order beta, double x, double t) {
    const double u = x + t;
    const double v = x - t;
    if (u < 0.0 || v < 0.0)
        return cplx(0.0, 0.0);
    if (u == 0.0 && beta.value < 1.0)
        return std::nullopt;
    if (v == 0.0 && alpha.value < 1.0)
        return std::nullopt;
    const double value = 0.5 * std::pow(u, beta.value - 1.0) * std::pow(v, alpha.value - 1.0)
                       * recip_gamma(alpha.value) * recip_gamma(beta.value);
    return cplx(value, 0.0);
}

cplx general_solution(Order alpha, Order beta, const GridFunction& phi,
                      const GridFunction& psi, double x, double t) {
    const double u = x + t;
    const double v = x - t;
    cplx acc(0.0, 0.0);
    const double rga = recip_gamma(alpha.value);
    if (rga != 0.0)
        acc += cpow_branch(cplx(v, 0.0), alpha.value - 1.0) * rga * interp(phi, u);
    const double rgb = recip_gamma(beta.value);
    if (rgb != 0.0)
        acc += cpow_branch(cplx(u, 0.0), beta.value - 1.0) * rgb * interp(psi, v);
    return acc;
}

namespace {

std::size_t origin_index(const GridFunction& g) {
    const double h = g.step;
    const auto i0 = static_cast<std::ptrdiff_t>(std::llround(-g.start / h));
    if (i0 < 0 || i0 >= static_cast<std::ptrdiff_t>(g.size())
        || std::abs(g.start + static_cast<double>(i0) * h) > 0.26 * h)
        throw std::invalid_argument("initial data grid must contain 0 as a sample");
    return static_cast<std::size_t>(i0);
}

// Prefix integrals I(x_i) = integral from 0 to x_i of y^c R(y) dy, with the
// kernel y^c integrated exactly against piecewise-linear R (product
// quadrature). Valid on both sides of 0 through the branch convention;
// needs c > -1 so the panels touching 0 converge.
GridFunction power_weighted_prefix(const GridFunction& r, double c, std::size_t i0) {
    const double h = r.step;
    const std::size_t n = r.size();
    auto panel = [&](std::size_t j) {
        const double y0 = r.x(j);
        const double y1 = r.x(j + 1);
        const cplx m0 = (cpow_branch(cplx(y1, 0.0), c + 1.0)
                         - cpow_branch(cplx(y0, 0.0), c + 1.0)) / (c + 1.0);
        const cplx m1 = (cpow_branch(cplx(y1, 0.0), c + 2.0)
                         - cpow_branch(cplx(y0, 0.0), c + 2.0)) / (c + 2.0);
        return r.values[j] * m0 + (r.values[j + 1] - r.values[j]) * (m1 - y0 * m0) / h;
    };
    GridFunction out;
    out.start = r.start;
    out.step = h;
    out.values.assign(n, cplx(0.0, 0.0));
    for (std::size_t i = i0 + 1; i < n; ++i)
        out.values[i] = out.values[i - 1] + panel(i - 1);
    for (std::size_t i = i0; i-- > 0;)
        out.values[i] = out.values[i + 1] - panel(i);
    return out;
}

} // namespace

UvSolver::UvSolver(Order alpha, Order beta, ICPair ic)
    : alpha_(alpha.value), beta_(beta.value), ic_(std::move(ic)) {
    if (!(alpha_ > 0.0) || alpha_ > 1.0 || beta_ < 1.0 - alpha_ || beta_ > 1.0)
        throw std::domain_error("UvSolver: need alpha in (0,1] and beta in [1-alpha, 1]");
    const std::size_t i0 = origin_index(ic_.g);
    const std::size_t n = ic_.g.size();

    dg_ = frac_derivative(ic_.g, Order(1.0));

    const double ca = alpha_ - beta_;
    const double cb = alpha_ + beta_ - 2.0;
    eta_.start = ic_.g.start;
    eta_.step = ic_.g.step;
    eta_.values.assign(n, cplx(0.0, 0.0));
    if (ca != 0.0 || cb != 0.0) {
        const double ex_in = 2.0 - alpha_ - beta_;
        const double ex_out = alpha_ + beta_ - 3.0;
        GridFunction rsmooth;   // the smooth factor of the inner integrand
        rsmooth.start = eta_.start;
        rsmooth.step = eta_.step;
        rsmooth.values.assign(n, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            rsmooth.values[i] = ca * dg_.values[i] + cb * ic_.h.values[i];
        const GridFunction integral = power_weighted_prefix(rsmooth, ex_in, i0);
        for (std::size_t i = 0; i < n; ++i) {
            // The prefactor cancels the kernel's leading power, so eta
            // extends continuously to 0 with value R(0)/(3-alpha-beta).
            eta_.values[i] = (i == i0)
                ? rsmooth.values[i0] / (3.0 - alpha_ - beta_)
                : cpow_branch(cplx(eta_.x(i), 0.0), ex_out) * integral.values[i];
        }
    }

    GridFunction w_out = ic_.h;
    for (std::size_t i = 0; i < n; ++i)
        w_out.values[i] += eta_.values[i];
    hinv_ = inverse_derivative(w_out);
}

std::optional<cplx> UvSolver::at(double x, double t) const {
    const double u = x + t;
    const double v = x - t;
    const double lo = ic_.g.start;
    const double hi = ic_.g.x_back();
    if (u < lo || u > hi || v < lo || v > hi)
        throw std::domain_error("UvSolver::at: x+t or x-t leaves the initial data grid");

    const double e1 = 1.0 - alpha_;
    const double e2 = 1.0 - beta_;
    cplx p1(1.0, 0.0);
    cplx p2(1.0, 0.0);
    if (e1 != 0.0) {
        if (v == 0.0)
            return std::nullopt;
        p1 = cpow_branch(cplx(u / v, 0.0), e1);
    }
    if (e2 != 0.0) {
        if (u == 0.0)
            return std::nullopt;
        p2 = cpow_branch(cplx(v / u, 0.0), e2);
    }
    const cplx b1 = interp(ic_.g, u) + interp(hinv_, u);
    const cplx b2 = interp(ic_.g, v) - interp(hinv_, v);
    return 0.5 * (p1 * b1 + p2 * b2);
}

cplx eta_closed_form(Order alpha, Order beta, const GridFunction& g,
                     const GridFunction& h, double x) {
    if (std::abs(x) < 4.0 * g.step)
        throw std::domain_error("eta_closed_form: inside the excluded origin neighborhood");
    UvSolver solver(alpha, beta, ICPair(g, h));
    return interp(solver.eta(), x);
}

GridFunction eta_ode_oracle(Order alpha, Order beta, const GridFunction& g,
                            const GridFunction& h) {
    const ICPair ic(g, h);
    const std::size_t i0 = origin_index(g);
    const std::size_t i_seed = i0 + 4;
    if (i_seed + 1 >= g.size())
        throw std::invalid_argument("eta_ode_oracle: grid too short beyond the origin");

    UvSolver solver(alpha, beta, ic);
    const GridFunction dg = frac_derivative(g, Order(1.0));
    const double ca = alpha.value - beta.value;
    const double cb = alpha.value + beta.value - 2.0;
    const double decay = 3.0 - alpha.value - beta.value;
    const double hstep = g.step;
    if (std::abs(hstep * decay / g.x(i_seed)) > 2.5)
        std::cerr << "eta_ode_oracle: step too coarse for a stable march from eps\n";

    auto rhs = [&](double x, cplx eta) {
        return (ca * interp(dg, x) + cb * interp(h, x) - decay * eta) / x;
    };

    GridFunction out;
    out.start = g.x(i_seed);
    out.step = hstep;
    out.values.assign(g.size() - i_seed, cplx(0.0, 0.0));
    cplx y = solver.eta().values[i_seed];
    out.values[0] = y;
    for (std::size_t i = i_seed; i + 1 < g.size(); ++i) {
        const double x = g.x(i);
        const cplx k1 = rhs(x, y);
        const cplx k2 = rhs(x + 0.5 * hstep, y + 0.5 * hstep * k1);
        const cplx k3 = rhs(x + 0.5 * hstep, y + 0.5 * hstep * k2);
        const cplx k4 = rhs(x + hstep, y + hstep * k3);
        y += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.values[i + 1 - i_seed] = y;
    }
    return out;
}

namespace {

ICPair sincos_data(const Axis& x_axis, const Axis& t_axis) {
    const double x_hi = x_axis.at(x_axis.count - 1);
    const double t_hi = t_axis.at(t_axis.count - 1);
    const double u_lo = x_axis.start + t_axis.start;
    const double u_hi = x_hi + t_hi;
    const double v_lo = x_axis.start - t_hi;
    const double v_hi = x_hi - t_axis.start;
    const double lo = std::min({u_lo, v_lo, 0.0});
    const double hi = std::max({u_hi, v_hi, 0.0});

    const double h = std::min(x_axis.step, t_axis.step) / 4.0;
    const auto n_neg = static_cast<std::size_t>(std::ceil(-lo / h)) + 6;
    const auto n_pos = static_cast<std::size_t>(std::ceil(hi / h)) + 6;
    GridFunction g = sample_grid([](double x) { return cplx(std::sin(x), 0.0); },
                                 -static_cast<double>(n_neg) * h, h, n_neg + n_pos + 1);
    GridFunction hh = sample_grid([](double x) { return cplx(std::cos(x), 0.0); },
                                  g.start, h, g.size());
    return ICPair(std::move(g), std::move(hh));
}

} // namespace

Field2D sincos_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis) {
    const UvSolver solver(alpha, beta, sincos_data(x_axis, t_axis));
    Field2D field(x_axis, t_axis);
    const auto total = static_cast<std::ptrdiff_t>(x_axis.count * t_axis.count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < total; ++c) {
        const auto i = static_cast<std::size_t>(c) / t_axis.count;
        const auto j = static_cast<std::size_t>(c) % t_axis.count;
        field.set(i, j, solver.at(x_axis.at(i), t_axis.at(j)));
    }
    return field;
}

namespace ref {

Field2D sincos_field(Order alpha, Order beta, const Axis& x_axis, const Axis& t_axis) {
    const UvSolver solver(alpha, beta, sincos_data(x_axis, t_axis));
    Field2D field(x_axis, t_axis);
    for (std::size_t i = 0; i < x_axis.count; ++i)
        for (std::size_t j = 0; j < t_axis.count; ++j)
            field.set(i, j, solver.at(x_axis.at(i), t_axis.at(j)));
    return field;
}

} // namespace ref

double binomial_coeff(Order beta, int k) {
    if (k < 0)
        throw std::invalid_argument("binomial_coeff: k must be non-negative");
    double c = 1.0;
    for (int j = 1; j <= k; ++j)
        c *= (beta.value - static_cast<double>(j) + 1.0) / static_cast<double>(j);
    return c;
}

BinomialCheck binomial_operator_check(cplx a, cplx b, Order beta, int K) {
    if (K < 0 || K > 200)
        throw std::invalid_argument("binomial_operator_check: K must lie in [0, 200]");
    if (!(std::abs(b) < std::abs(a)))
        throw std::domain_error("binomial_operator_check: series diverges unless |b| < |a|");

    // a^(beta-k) b^k = a^beta (b/a)^k keeps every factor bounded.
    const cplx head = cpow_branch(a, beta.value);
    const cplx ratio = b / a;
    cplx ratio_pow(1.0, 0.0);
    BinomialCheck out;
    for (int k = 0; k <= K; ++k) {
        out.partial_sum += binomial_coeff(beta, k) * head * ratio_pow;
        ratio_pow *= ratio;
    }
    out.target = cpow_branch(a + b, beta.value);
    out.relerr = std::abs(out.partial_sum - out.target)
               / std::max(std::abs(out.target), 1e-300);
    return out;
}

} // namespace fracwave
