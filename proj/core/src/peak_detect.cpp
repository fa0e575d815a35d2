#include "hfsas/peak_detect.hpp"

#include <algorithm>
#include <cmath>

#include "hfsas/errors.hpp"

namespace hfsas {

namespace {

// Local maxima; plateaus report their center sample.
std::vector<int> local_maxima(std::span<const double> y) {
    std::vector<int> out;
    const int n = static_cast<int>(y.size());
    int i = 1;
    while (i < n - 1) {
        if (y[static_cast<size_t>(i)] > y[static_cast<size_t>(i - 1)]) {
            int j = i;
            while (j < n - 1 && y[static_cast<size_t>(j + 1)] == y[static_cast<size_t>(i)]) ++j;
            if (j < n - 1 && y[static_cast<size_t>(j + 1)] < y[static_cast<size_t>(i)]) {
                out.push_back((i + j) / 2);
                i = j + 1;
                continue;
            }
            i = j + 1;
            continue;
        }
        ++i;
    }
    return out;
}

// Prominence relative to the lowest contour connecting the peak to higher
// terrain on either side.
double prominence(std::span<const double> y, int peak) {
    const int n = static_cast<int>(y.size());
    const double h = y[static_cast<size_t>(peak)];
    double left_min = h;
    for (int i = peak - 1; i >= 0; --i) {
        if (y[static_cast<size_t>(i)] > h) break;
        left_min = std::min(left_min, y[static_cast<size_t>(i)]);
    }
    double right_min = h;
    for (int i = peak + 1; i < n; ++i) {
        if (y[static_cast<size_t>(i)] > h) break;
        right_min = std::min(right_min, y[static_cast<size_t>(i)]);
    }
    return h - std::max(left_min, right_min);
}

} // namespace

std::vector<int> detect_etalon_peaks(std::span<const double> trace,
                                     double min_prominence, int min_spacing) {
    if (trace.size() < 3) return {};
    if (min_prominence < 0 || min_spacing < 0)
        throw ConfigError("detect_etalon_peaks: prominence and spacing must be >= 0");

    const auto [lo_it, hi_it] = std::minmax_element(trace.begin(), trace.end());
    const double range = *hi_it - *lo_it;
    if (range <= 0) return {};
    const double threshold = min_prominence * range;

    std::vector<int> candidates;
    for (int idx : local_maxima(trace))
        if (prominence(trace, idx) >= threshold) candidates.push_back(idx);

    // taller peaks win inside the spacing radius
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        if (trace[static_cast<size_t>(a)] != trace[static_cast<size_t>(b)])
            return trace[static_cast<size_t>(a)] > trace[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<int> kept;
    for (int idx : candidates) {
        bool ok = true;
        for (int k : kept)
            if (std::abs(k - idx) < min_spacing) { ok = false; break; }
        if (ok) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SubpixelResult parabolic_subpixel(std::span<const double> trace, int index) {
    const int n = static_cast<int>(trace.size());
    if (index < 1 || index > n - 2)
        throw ConfigError("parabolic_subpixel: index must have both neighbours in range");
    const double ym = trace[static_cast<size_t>(index - 1)];
    const double y0 = trace[static_cast<size_t>(index)];
    const double yp = trace[static_cast<size_t>(index + 1)];
    const double curvature = ym - 2.0 * y0 + yp;
    if (curvature == 0.0) return {static_cast<double>(index), true};
    return {static_cast<double>(index) + (ym - yp) / (2.0 * curvature), false};
}

} // namespace hfsas
