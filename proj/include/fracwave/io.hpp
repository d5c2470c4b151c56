#pragma once

#include "fracwave/ftmult.hpp"
#include "fracwave/grid.hpp"
#include "fracwave/spectral.hpp"

#include <string>
#include <vector>

namespace fracwave {

/// Shortest round-trip decimal form of a double; the one formatting used
/// by every emitter so outputs are byte-stable.
std::string format_double(double v);

/// CSV with header `x,re,im`.
void write_grid_csv(const std::string& path, const GridFunction& g);
GridFunction read_grid_csv(const std::string& path);

/// CSV with header `n,re,im`, rows for n in [-N, N].
void write_spectrum_csv(const std::string& path, const FourierSpectrum& s);

/// CSV with header `x,t,re,im,masked`, one row per cell, x outer loop.
/// Masked cells carry re = im = 0 and masked = 1.
void write_field_csv(const std::string& path, const Field2D& f);

/// CSV with header `omega,lhs_re,lhs_im,rhs_re,rhs_im,relerr`.
void write_multiplier_csv(const std::string& path, const std::vector<MultiplierRow>& rows);

/// SVG heatmap of Re[f]: one 4x4-pixel rect per cell, color linear in the
/// value between the field's min and max, masked cells left transparent,
/// t increasing upward. Output depends only on the field.
void write_field_svg(const std::string& path, const Field2D& f);

} // namespace fracwave
