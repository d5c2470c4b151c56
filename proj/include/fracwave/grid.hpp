#pragma once

#include "fracwave/core.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace fracwave {

/// Uniform complex samples f(start + i*step), i = 0..size()-1. The grid
/// start doubles as the base point of the differintegral operators.
struct GridFunction {
    double start = 0.0;
    double step = 0.0;
    std::vector<cplx> values;

    GridFunction() = default;
    GridFunction(double start_, double step_, std::vector<cplx> values_);

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return start + static_cast<double>(i) * step; }
    double x_back() const { return x(values.size() - 1); }
};

/// Samples a callable on a uniform grid.
GridFunction sample_grid(const std::function<cplx(double)>& f, double start, double step,
                         std::size_t count);

/// Throws std::invalid_argument unless the grid invariants hold
/// (step > 0, non-empty, all samples finite).
void validate_grid(const GridFunction& f);

/// Linear interpolation at x; throws std::domain_error outside the grid
/// (a half-step of slack is allowed at each end).
cplx interp(const GridFunction& f, double x);

/// True when |f| at both grid ends is below tol * max|f| (the compact
/// support precondition of the transform quadratures).
bool has_compact_support(const GridFunction& f, double tol = 1e-8);

/// Trapezoid quadrature over the whole grid.
cplx trapezoid(const GridFunction& f);

struct Axis {
    double start = 0.0;
    double step = 0.0;
    std::size_t count = 0;

    double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Complex values on an (x, t) rectangle; singular cells are masked
/// rather than clamped. Row-major with x as the slow index.
struct Field2D {
    Axis x_axis;
    Axis t_axis;
    std::vector<cplx> values;
    std::vector<std::uint8_t> mask; // 1 = masked

    Field2D() = default;
    Field2D(Axis x, Axis t);

    std::size_t index(std::size_t ix, std::size_t it) const { return ix * t_axis.count + it; }
    cplx at(std::size_t ix, std::size_t it) const { return values[index(ix, it)]; }
    bool masked(std::size_t ix, std::size_t it) const { return mask[index(ix, it)] != 0; }
    void set(std::size_t ix, std::size_t it, std::optional<cplx> v);
};

/// Initial data f(x,0) = g, f_t(x,0) = h on one shared grid.
struct ICPair {
    GridFunction g;
    GridFunction h;

    ICPair(GridFunction g_, GridFunction h_);
};

} // namespace fracwave
