#include "fracwave/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fracwave {

GridFunction::GridFunction(double start_, double step_, std::vector<cplx> values_)
    : start(start_), step(step_), values(std::move(values_)) {
    validate_grid(*this);
}

GridFunction sample_grid(const std::function<cplx(double)>& f, double start, double step,
                         std::size_t count) {
    std::vector<cplx> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = f(start + static_cast<double>(i) * step);
    return GridFunction(start, step, std::move(v));
}

void validate_grid(const GridFunction& f) {
    if (f.values.empty()) throw std::invalid_argument("grid: empty");
    if (!(f.step > 0.0) || !std::isfinite(f.step) || !std::isfinite(f.start))
        throw std::invalid_argument("grid: bad start/step");
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("grid: non-finite sample");
}

cplx interp(const GridFunction& f, double x) {
    double s = (x - f.start) / f.step;
    if (s < -0.5 || s > static_cast<double>(f.size() - 1) + 0.5)
        throw std::domain_error("interp: x outside grid");
    if (s <= 0.0) return f.values.front();
    std::size_t i = static_cast<std::size_t>(s);
    if (i >= f.size() - 1) return f.values.back();
    double w = s - static_cast<double>(i);
    return f.values[i] * (1.0 - w) + f.values[i + 1] * w;
}

bool has_compact_support(const GridFunction& f, double tol) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    if (m == 0.0) return true;
    return std::abs(f.values.front()) <= tol * m && std::abs(f.values.back()) <= tol * m;
}

cplx trapezoid(const GridFunction& f) {
    if (f.size() < 2) return {0.0, 0.0};
    cplx acc = 0.5 * (f.values.front() + f.values.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f.values[i];
    return acc * f.step;
}

Field2D::Field2D(Axis x, Axis t) : x_axis(x), t_axis(t) {
    if (x.count < 2 || t.count < 2 || !(x.step > 0.0) || !(t.step > 0.0))
        throw std::invalid_argument("Field2D: counts >= 2 and steps > 0 required");
    values.assign(x.count * t.count, cplx(0.0, 0.0));
    mask.assign(x.count * t.count, 0);
}

void Field2D::set(std::size_t ix, std::size_t it, std::optional<cplx> v) {
    std::size_t k = index(ix, it);
    if (v) {
        values[k] = *v;
        mask[k] = 0;
    } else {
        values[k] = cplx(0.0, 0.0);
        mask[k] = 1;
    }
}

ICPair::ICPair(GridFunction g_, GridFunction h_) : g(std::move(g_)), h(std::move(h_)) {
    if (g.start != h.start || g.step != h.step || g.size() != h.size())
        throw std::invalid_argument("ICPair: g and h must share one grid");
}

} // namespace fracwave
