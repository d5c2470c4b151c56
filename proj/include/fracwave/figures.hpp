#pragma once

#include "fracwave/grid.hpp"

namespace fracwave {

/// Parameters behind one of the seven stock surface plots.
struct FigurePreset {
    int id = 0;
    enum class Kind { cone, damped } kind = Kind::cone;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Presets 1..4 are cone-factored fields at alpha = beta = 0, 1/2, 3/4, 1;
/// presets 5..7 are damped sine fields at r = alpha/beta = 1/2, 3/2, 1.
FigurePreset figure_preset(int id);

/// The shared plotting window: x and t over [0, 4pi], 201 samples each.
Axis figure_axis();

/// Field data for one preset on the default axes. Preset 1 has no
/// well-defined field (both orders 0 leave the data overdetermined) and
/// comes back fully masked.
Field2D figure_field(int id);

} // namespace fracwave
