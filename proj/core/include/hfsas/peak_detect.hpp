#pragma once

#include <span>
#include <vector>

namespace hfsas {

/// Local maxima filtered by prominence and minimum spacing. Prominence is
/// measured against the lowest contour connecting a peak to higher terrain
/// (scipy-style) and compared to min_prominence * (signal range). When two
/// peaks fall within min_spacing samples the taller one wins. Indices are
/// returned ascending; an empty result is not an error.
std::vector<int> detect_etalon_peaks(std::span<const double> trace,
                                     double min_prominence,
                                     int min_spacing);

struct SubpixelResult {
    double center = 0;        // fractional sample position
    bool degenerate = false;  // flat triple, center fell back to the index
};

/// Vertex of the parabola through (i-1, i, i+1):
/// i + (y- - y+) / (2 (y- - 2 y0 + y+)). Exact for sampled parabolas.
SubpixelResult parabolic_subpixel(std::span<const double> trace, int index);

} // namespace hfsas
