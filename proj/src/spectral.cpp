#include "fracwave/spectral.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace fracwave {

namespace {

void check_period(const GridFunction& f) {
    validate_grid(f);
    const double period = f.step * static_cast<double>(f.size());
    if (std::abs(period - two_pi) > 1e-9)
        throw std::invalid_argument("analyze: grid must cover exactly one period (step * count = 2pi)");
}

cplx coefficient(const GridFunction& f, int n) {
    cplx acc(0.0, 0.0);
    const double nn = static_cast<double>(n);
    for (std::size_t j = 0; j < f.size(); ++j)
        acc += f.values[j] * std::polar(1.0, -nn * f.x(j));
    return acc * (f.step / two_pi);
}

void warn_aliasing(const GridFunction& f, int N) {
    if (N < 0)
        throw std::invalid_argument("analyze: N must be non-negative");
    if (static_cast<std::size_t>(2 * N) >= f.size())
        std::cerr << "analyze: truncation N=" << N << " exceeds the Nyquist index of "
                  << f.size() << " samples\n";
}

} // namespace

FourierSpectrum analyze(const GridFunction& f, int N) {
    check_period(f);
    warn_aliasing(f, N);
    FourierSpectrum s(N);
#pragma omp parallel for
    for (int n = -N; n <= N; ++n)
        s.ref_at(n) = coefficient(f, n);
    return s;
}

namespace ref {

FourierSpectrum analyze(const GridFunction& f, int N) {
    check_period(f);
    warn_aliasing(f, N);
    FourierSpectrum s(N);
    for (int n = -N; n <= N; ++n)
        s.ref_at(n) = coefficient(f, n);
    return s;
}

} // namespace ref

FourierSpectrum frac_coeffs(const FourierSpectrum& s, Order beta) {
    const double b = beta.value;
    if (b < 0.0 && std::abs(s.at(0)) > 1e-12)
        throw std::domain_error("frac_coeffs: constant mode has no periodic antiderivative");
    FourierSpectrum out(s.max_index);
    for (int n = -s.max_index; n <= s.max_index; ++n) {
        if (n == 0) {
            out.ref_at(0) = (b == 0.0) ? s.at(0) : cplx(0.0, 0.0);
            continue;
        }
        out.ref_at(n) = cpow_branch(cplx(0.0, static_cast<double>(n)), b) * s.at(n);
    }
    return out;
}

cplx synthesize(const FourierSpectrum& s, double x) {
    cplx acc(0.0, 0.0);
    for (int n = -s.max_index; n <= s.max_index; ++n)
        acc += s.at(n) * std::polar(1.0, static_cast<double>(n) * x);
    return acc;
}

GridFunction synthesize_grid(const FourierSpectrum& s, double start, double step,
                             std::size_t count) {
    GridFunction g;
    g.start = start;
    g.step = step;
    g.values.assign(count, cplx(0.0, 0.0));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for
    for (std::ptrdiff_t i = 0; i < n; ++i)
        g.values[static_cast<std::size_t>(i)] = synthesize(s, g.x(static_cast<std::size_t>(i)));
    return g;
}

cplx delta_series_partial(Order alpha, int N, double x) {
    if (N < 1)
        throw std::invalid_argument("delta_series_partial: N must be at least 1");
    const double a = alpha.value;
    cplx acc = (a == 0.0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    for (int n = 1; n <= N; ++n) {
        const double nn = static_cast<double>(n);
        acc += cpow_branch(cplx(0.0, nn), a) * std::polar(1.0, nn * x)
             + cpow_branch(cplx(0.0, -nn), a) * std::polar(1.0, -nn * x);
    }
    return acc;
}

cplx pair_delta_series(const GridFunction& phi, Order alpha, int N, double x) {
    check_period(phi);
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < phi.size(); ++j)
        acc += phi.values[j] * delta_series_partial(alpha, N, x - phi.x(j));
    return acc * (phi.step / two_pi);
}

} // namespace fracwave
