#include "fracwave/figures.hpp"

#include "fracwave/core.hpp"
#include "fracwave/wave_uv.hpp"
#include "fracwave/wave_xt.hpp"

#include <stdexcept>

namespace fracwave {

FigurePreset figure_preset(int id) {
    switch (id) {
    case 1: return {1, FigurePreset::Kind::cone, 0.0, 0.0};
    case 2: return {2, FigurePreset::Kind::cone, 0.5, 0.5};
    case 3: return {3, FigurePreset::Kind::cone, 0.75, 0.75};
    case 4: return {4, FigurePreset::Kind::cone, 1.0, 1.0};
    case 5: return {5, FigurePreset::Kind::damped, 0.5, 1.0};
    case 6: return {6, FigurePreset::Kind::damped, 1.5, 1.0};
    case 7: return {7, FigurePreset::Kind::damped, 1.0, 1.0};
    default:
        throw std::invalid_argument("figure id must lie in 1..7");
    }
}

Axis figure_axis() {
    return Axis{0.0, 4.0 * pi / 200.0, 201};
}

Field2D figure_field(int id) {
    const FigurePreset p = figure_preset(id);
    const Axis axis = figure_axis();
    if (p.id == 1) {
        Field2D field(axis, axis);
        for (std::size_t i = 0; i < axis.count; ++i)
            for (std::size_t j = 0; j < axis.count; ++j)
                field.set(i, j, std::nullopt);
        return field;
    }
    if (p.kind == FigurePreset::Kind::cone)
        return sincos_field(Order(p.alpha), Order(p.beta), axis, axis);
    return sin_field(Order(p.alpha), Order(p.beta), axis, axis);
}

} // namespace fracwave
