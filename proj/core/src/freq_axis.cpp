#include "hfsas/freq_axis.hpp"

#include <algorithm>

#include "hfsas/errors.hpp"

namespace hfsas {

double FrequencyAxis::at(double sample) const {
    const auto& s = marker_samples;
    const auto& f = marker_freqs_mhz;
    const std::size_t n = s.size();
    // segment index: clamp to the end segments for extrapolation
    std::size_t seg;
    if (sample <= s.front()) {
        seg = 0;
    } else if (sample >= s.back()) {
        seg = n - 2;
    } else {
        seg = static_cast<std::size_t>(
                  std::upper_bound(s.begin(), s.end(), sample) - s.begin()) - 1;
        seg = std::min(seg, n - 2);
    }
    const double slope = (f[seg + 1] - f[seg]) / (s[seg + 1] - s[seg]);
    return f[seg] + slope * (sample - s[seg]);
}

std::vector<double> FrequencyAxis::map(const std::vector<double>& samples) const {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = at(samples[i]);
    return out;
}

std::vector<double> FrequencyAxis::per_sample(int n) const {
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = at(static_cast<double>(i));
    return out;
}

FrequencyAxis build_frequency_axis(const std::vector<double>& etalon_centers,
                                   double fsr_mhz, AxisAnchor anchor) {
    if (etalon_centers.size() < 2)
        throw ConfigError("build_frequency_axis: need at least two etalon markers, got " +
                          std::to_string(etalon_centers.size()));
    if (!(fsr_mhz > 0)) throw ConfigError("build_frequency_axis: FSR must be positive");
    for (std::size_t i = 1; i < etalon_centers.size(); ++i)
        if (!(etalon_centers[i] > etalon_centers[i - 1]))
            throw ConfigError("build_frequency_axis: markers must be strictly increasing");

    FrequencyAxis axis;
    axis.fsr_mhz = fsr_mhz;
    axis.marker_samples = etalon_centers;
    axis.marker_freqs_mhz.resize(etalon_centers.size());
    for (std::size_t j = 0; j < etalon_centers.size(); ++j)
        axis.marker_freqs_mhz[j] = fsr_mhz * static_cast<double>(j);

    const double at_anchor = axis.at(anchor.sample);
    for (double& f : axis.marker_freqs_mhz) f += anchor.detuning_mhz - at_anchor;
    axis.anchor_sample = anchor.sample;
    axis.anchor_detuning_mhz = anchor.detuning_mhz;
    return axis;
}

} // namespace hfsas
