#include "fracwave/ftmult.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace fracwave {

namespace {

const double inv_sqrt_two_pi = 1.0 / std::sqrt(two_pi);

cplx oscillatory_trapezoid(const GridFunction& f, double omega, double sign) {
    cplx acc(0.0, 0.0);
    const std::size_t n = f.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double wgt = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
        acc += wgt * f.values[j] * std::polar(1.0, sign * omega * f.x(j));
    }
    return acc * (f.step * inv_sqrt_two_pi);
}

} // namespace

cplx ft_quadrature(const GridFunction& f, double omega) {
    validate_grid(f);
    if (!has_compact_support(f))
        std::cerr << "ft_quadrature: integrand is not negligible at the grid ends\n";
    return oscillatory_trapezoid(f, omega, -1.0);
}

cplx ift_quadrature(const GridFunction& fhat, double omega) {
    validate_grid(fhat);
    if (!has_compact_support(fhat))
        std::cerr << "ift_quadrature: integrand is not negligible at the grid ends\n";
    return oscillatory_trapezoid(fhat, omega, 1.0);
}

std::vector<MultiplierRow> multiplier_check(const GridFunction& f, Order alpha,
                                            const std::vector<double>& omegas) {
    const double a = alpha.value;
    if (a < 0.0 || a > 1.0)
        throw std::domain_error("multiplier_check: order must lie in [0, 1]");
    const GridFunction df = (a == 0.0) ? f : frac_derivative(f, alpha);
    validate_grid(f);
    if (!has_compact_support(f))
        std::cerr << "multiplier_check: f is not negligible at the grid ends\n";
    if (!has_compact_support(df))
        std::cerr << "multiplier_check: the fractional derivative keeps a tail at the grid end"
                     " (base-point memory); treat the report accordingly\n";

    std::vector<MultiplierRow> rows(omegas.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(omegas.size());
#pragma omp parallel for
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double w = omegas[static_cast<std::size_t>(i)];
        MultiplierRow row;
        row.omega = w;
        row.lhs = oscillatory_trapezoid(df, w, -1.0);
        row.rhs = cpow_branch(cplx(0.0, w), a) * oscillatory_trapezoid(f, w, -1.0);
        const double denom = std::max(std::abs(row.rhs), 1e-300);
        row.relerr = std::abs(row.lhs - row.rhs) / denom;
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

LaplacianMultipliers laplacian_multiplier_compare(double omega, Order alpha) {
    if (omega == 0.0)
        throw std::domain_error("laplacian_multiplier_compare: omega must be nonzero");
    LaplacianMultipliers out;
    out.composed_mult = -cpow_branch(cplx(0.0, omega), 2.0 * alpha.value);
    out.modulus_mult = std::pow(std::abs(omega), 2.0 * alpha.value);
    return out;
}

} // namespace fracwave
