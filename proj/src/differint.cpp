#include "fracwave/differint.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace fracwave {

double kernel_delta(Order alpha, double x) {
    const double a = alpha.value;
    if (a <= 0.0)
        throw std::domain_error("kernel_delta: order must be positive");
    if (x < 0.0)
        return 0.0;
    if (x == 0.0) {
        if (a < 1.0)
            throw std::domain_error("kernel_delta: kernel is unbounded at x = 0 for order < 1");
        if (a == 1.0)
            return 0.5 * recip_gamma(1.0);
        return 0.0;
    }
    return std::pow(x, a - 1.0) * recip_gamma(a);
}

double zero_function(Order alpha, double x) {
    const double a = alpha.value;
    if (x == 0.0 && a < 1.0)
        throw std::domain_error("zero_function: unbounded at x = 0 for order < 1");
    const double rg = recip_gamma(a);
    if (rg == 0.0)
        return 0.0;
    if (x < 0.0 && a != std::floor(a))
        throw std::domain_error("zero_function: x^(alpha-1) is not real for x < 0 at non-integer order");
    return std::pow(x, a - 1.0) * rg;
}

namespace {

void require_integral_order(double a) {
    if (!(a > 0.0) || a > 4.0)
        throw std::domain_error("frac_integral: order must lie in (0, 4]");
}

} // namespace

// Weights below integrate x^(alpha-1) exactly against the piecewise-linear
// interpolant of f. With m = i - j, interval j of output point i picks up
//   f_j * (A_m - (m-1) B_m) + f_{j+1} * (m B_m - A_m),
// A_m = (m^(a+1) - (m-1)^(a+1)) / (a+1), B_m = (m^a - (m-1)^a) / a,
// everything scaled by step^a / Gamma(a). At alpha = 1 this is the
// trapezoid rule.
GridFunction frac_integral(const GridFunction& f, Order alpha) {
    const double a = alpha.value;
    require_integral_order(a);
    validate_grid(f);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    std::vector<double> q(static_cast<std::size_t>(n), 0.0);
    double pow_prev_a = 0.0;       // (m-1)^a
    double pow_prev_a1 = 0.0;      // (m-1)^(a+1)
    for (std::ptrdiff_t m = 1; m < n; ++m) {
        const double md = static_cast<double>(m);
        const double pow_a = std::pow(md, a);
        const double pow_a1 = pow_a * md;
        const double am = (pow_a1 - pow_prev_a1) / (a + 1.0);
        const double bm = (pow_a - pow_prev_a) / a;
        p[static_cast<std::size_t>(m)] = am - (md - 1.0) * bm;
        q[static_cast<std::size_t>(m)] = md * bm - am;
        pow_prev_a = pow_a;
        pow_prev_a1 = pow_a1;
    }
    const double scale = std::pow(f.step, a) * recip_gamma(a);

    GridFunction out;
    out.start = f.start;
    out.step = f.step;
    out.values.assign(f.values.size(), cplx(0.0, 0.0));

#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (std::ptrdiff_t m = 1; m <= i; ++m) {
            const std::size_t mm = static_cast<std::size_t>(m);
            acc += f.values[static_cast<std::size_t>(i - m)] * p[mm]
                 + f.values[static_cast<std::size_t>(i - m + 1)] * q[mm];
        }
        out.values[static_cast<std::size_t>(i)] = scale * acc;
    }
    return out;
}

namespace ref {

GridFunction frac_integral(const GridFunction& f, Order alpha) {
    const double a = alpha.value;
    require_integral_order(a);
    validate_grid(f);

    const std::size_t n = f.size();
    const double scale = std::pow(f.step, a) * recip_gamma(a);
    GridFunction out;
    out.start = f.start;
    out.step = f.step;
    out.values.assign(n, cplx(0.0, 0.0));
    for (std::size_t i = 1; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < i; ++j) {
            const double m = static_cast<double>(i - j);
            const double am = (std::pow(m, a + 1.0) - std::pow(m - 1.0, a + 1.0)) / (a + 1.0);
            const double bm = (std::pow(m, a) - std::pow(m - 1.0, a)) / a;
            acc += f.values[j] * (am - (m - 1.0) * bm) + f.values[j + 1] * (m * bm - am);
        }
        out.values[i] = scale * acc;
    }
    return out;
}

} // namespace ref

namespace {

GridFunction derivative_once(const GridFunction& g) {
    const std::size_t n = g.size();
    if (n < 3)
        throw std::invalid_argument("frac_derivative: need at least 3 samples");
    const double h = g.step;
    GridFunction d;
    d.start = g.start;
    d.step = h;
    d.values.assign(n, cplx(0.0, 0.0));
    d.values[0] = (-3.0 * g.values[0] + 4.0 * g.values[1] - g.values[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d.values[i] = (g.values[i + 1] - g.values[i - 1]) / (2.0 * h);
    d.values[n - 1] = (3.0 * g.values[n - 1] - 4.0 * g.values[n - 2] + g.values[n - 3]) / (2.0 * h);
    return d;
}

GridFunction derivative_twice(const GridFunction& g) {
    const std::size_t n = g.size();
    if (n < 4)
        throw std::invalid_argument("frac_derivative: need at least 4 samples");
    const double h2 = g.step * g.step;
    GridFunction d;
    d.start = g.start;
    d.step = g.step;
    d.values.assign(n, cplx(0.0, 0.0));
    d.values[0] = (2.0 * g.values[0] - 5.0 * g.values[1] + 4.0 * g.values[2] - g.values[3]) / h2;
    for (std::size_t i = 1; i + 1 < n; ++i)
        d.values[i] = (g.values[i - 1] - 2.0 * g.values[i] + g.values[i + 1]) / h2;
    d.values[n - 1] = (2.0 * g.values[n - 1] - 5.0 * g.values[n - 2] + 4.0 * g.values[n - 3]
                       - g.values[n - 4]) / h2;
    return d;
}

} // namespace

GridFunction frac_derivative(const GridFunction& f, Order alpha) {
    const double a = alpha.value;
    if (!(a > 0.0) || a > 2.0)
        throw std::domain_error("frac_derivative: order must lie in (0, 2]");
    validate_grid(f);
    const int n = static_cast<int>(std::ceil(a));
    GridFunction g = (static_cast<double>(n) == a) ? f : frac_integral(f, Order(n - a));
    return n == 1 ? derivative_once(g) : derivative_twice(g);
}

GridFunction differint(const GridFunction& f, Order order) {
    if (order.value > 0.0)
        return frac_derivative(f, order);
    if (order.value < 0.0)
        return frac_integral(f, Order(-order.value));
    validate_grid(f);
    return f;
}

// The sample at 0 itself is never read, so callers may leave a divergent
// integrand's value there unset.
GridFunction inverse_derivative(const GridFunction& w) {
    validate_grid(w);
    const double h = w.step;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.size());
    const std::ptrdiff_t i0 = static_cast<std::ptrdiff_t>(std::llround(-w.start / h));
    if (i0 < 0 || i0 >= n || std::abs(w.start + static_cast<double>(i0) * h) > 0.26 * h)
        throw std::invalid_argument("inverse_derivative: grid must contain 0 as a sample");

    const double eps = 4.0 * h;
    GridFunction out;
    out.start = w.start;
    out.step = h;
    out.values.assign(w.values.size(), cplx(0.0, 0.0));

    const std::ptrdiff_t n_pos = (n - 1) - i0;
    if (n_pos >= 1) {
        if (n_pos < 5)
            throw std::invalid_argument("inverse_derivative: need 5 samples beyond 0 on the positive side");
        const cplx c = eps * 0.5 * (w.values[static_cast<std::size_t>(i0 + 4)]
                                    + w.values[static_cast<std::size_t>(i0 + 5)]);
        for (std::ptrdiff_t k = 1; k <= 3; ++k)
            out.values[static_cast<std::size_t>(i0 + k)] = c * (static_cast<double>(k) / 4.0);
        out.values[static_cast<std::size_t>(i0 + 4)] = c;
        for (std::ptrdiff_t j = i0 + 4; j + 1 < n; ++j)
            out.values[static_cast<std::size_t>(j + 1)] =
                out.values[static_cast<std::size_t>(j)]
                + h * 0.5 * (w.values[static_cast<std::size_t>(j)]
                             + w.values[static_cast<std::size_t>(j + 1)]);
    }

    const std::ptrdiff_t n_neg = i0;
    if (n_neg >= 1) {
        if (n_neg < 5)
            throw std::invalid_argument("inverse_derivative: need 5 samples beyond 0 on the negative side");
        const cplx c = -eps * 0.5 * (w.values[static_cast<std::size_t>(i0 - 4)]
                                     + w.values[static_cast<std::size_t>(i0 - 5)]);
        for (std::ptrdiff_t k = 1; k <= 3; ++k)
            out.values[static_cast<std::size_t>(i0 - k)] = c * (static_cast<double>(k) / 4.0);
        out.values[static_cast<std::size_t>(i0 - 4)] = c;
        for (std::ptrdiff_t j = i0 - 4; j > 0; --j)
            out.values[static_cast<std::size_t>(j - 1)] =
                out.values[static_cast<std::size_t>(j)]
                - h * 0.5 * (w.values[static_cast<std::size_t>(j)]
                             + w.values[static_cast<std::size_t>(j - 1)]);
    }

    return out;
}

cplx pairing_phase(double order) {
    const double r = std::nearbyint(order);
    if (r == order) {
        const bool odd = std::fmod(std::abs(r), 2.0) == 1.0;
        return odd ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
    }
    return cplx(std::cos(pi * order), std::sin(pi * order));
}

namespace {

GridFunction apply_order_to_test(const GridFunction& phi, Order order) {
    if (order.value > 0.0)
        return frac_derivative(phi, order);
    if (order.value < 0.0)
        return frac_integral(phi, Order(-order.value));
    return phi;
}

cplx pair_function(const GridFunction& g, const GridFunction& psi) {
    const std::size_t n = psi.size();
    const double g_end = g.x_back();
    auto g_at = [&](double x) -> cplx {
        if (x < g.start || x > g_end)
            return cplx(0.0, 0.0);
        return interp(g, x);
    };
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double wgt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        acc += wgt * g_at(psi.x(i)) * psi.values[i];
    }
    return acc * psi.step;
}

cplx pair_step_tail(double a, const GridFunction& psi) {
    const double end = psi.x_back();
    if (a >= end)
        return cplx(0.0, 0.0);
    double lo = a;
    if (lo <= psi.start)
        lo = psi.start;
    const auto j = static_cast<std::size_t>(std::floor((lo - psi.start) / psi.step + 1e-12));
    std::size_t first_full = j;
    cplx acc(0.0, 0.0);
    if (psi.x(j) < lo) {
        first_full = j + 1;
        const double width = psi.x(j + 1) - lo;
        acc += width * 0.5 * (interp(psi, lo) + psi.values[j + 1]);
    }
    for (std::size_t i = first_full; i + 1 < psi.size(); ++i)
        acc += psi.step * 0.5 * (psi.values[i] + psi.values[i + 1]);
    return acc;
}

} // namespace

cplx distribution_pair(const DistributionRep& T, Order order, const GridFunction& phi) {
    if (std::abs(order.value) >= 2.0)
        throw std::domain_error("distribution_pair: order must lie in (-2, 2)");
    validate_grid(phi);
    if (!has_compact_support(phi))
        std::cerr << "distribution_pair: test function is not negligible at its grid ends\n";

    const GridFunction psi = apply_order_to_test(phi, order);
    const cplx phase = pairing_phase(order.value);

    if (const auto* g = std::get_if<GridFunction>(&T.kind))
        return phase * pair_function(*g, psi);
    if (const auto* pm = std::get_if<PointMass>(&T.kind))
        return phase * pm->weight * interp(psi, pm->location);
    const auto& hs = std::get<HeavisideStep>(T.kind);
    return phase * pair_step_tail(hs.location, psi);
}

} // namespace fracwave
