#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hfsas {

struct SpectrumMeta {
    int schema_version = 1;
    double field_tesla = 0;
    std::uint64_t params_digest = 0;
    std::string constants_version;     // isotope + schema of the constants file
    std::uint64_t constants_digest = 0;
    double raw_peak_signal = 0;        // pre-normalization maximum of F
    bool normalized = true;
    std::string created_utc;           // empty unless timestamps are enabled
};

/// Signal versus laser detuning. Signal is normalized to unit maximum when
/// meta.normalized is set; the raw maximum is kept in the metadata.
struct Spectrum {
    std::vector<double> detuning_mhz;
    std::vector<double> signal;
    SpectrumMeta meta;

    std::size_t size() const { return detuning_mhz.size(); }
};

/// CSV (detuning_MHz,signal) plus a `<file>.meta` key/value sidecar.
void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& csv_path);
Spectrum read_spectrum(const std::filesystem::path& csv_path);

} // namespace hfsas
