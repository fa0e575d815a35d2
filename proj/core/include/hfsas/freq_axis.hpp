#pragma once

#include <vector>

namespace hfsas {

/// Piecewise-linear sample -> frequency map built from etalon markers.
/// Consecutive markers are separated by exactly one free spectral range;
/// beyond the first/last marker the nearest segment slope extrapolates. The
/// whole axis is shifted so the anchor sample maps to the anchor detuning.
struct FrequencyAxis {
    std::vector<double> marker_samples;   // fractional sample positions
    std::vector<double> marker_freqs_mhz; // j*FSR + anchor offset
    double fsr_mhz = 0;
    double anchor_sample = 0;
    double anchor_detuning_mhz = 0;

    double at(double sample) const;
    std::vector<double> map(const std::vector<double>& samples) const;
    /// Frequencies for integer samples 0..n-1.
    std::vector<double> per_sample(int n) const;
};

struct AxisAnchor {
    double sample = 0;
    double detuning_mhz = 0;
};

/// Throws ConfigError for fewer than two markers or non-monotonic markers.
FrequencyAxis build_frequency_axis(const std::vector<double>& etalon_centers,
                                   double fsr_mhz, AxisAnchor anchor);

} // namespace hfsas
