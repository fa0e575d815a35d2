#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hfsas/run_config.hpp"
#include "hfsas/spectrum.hpp"

namespace hfsas {

struct ManifestEntry {
    std::string file;              // relative to the manifest directory
    double field_tesla = 0;
    std::uint64_t params_digest = 0;
    double noise_rms = 0;
    double axis_jitter_mhz = 0;
    std::uint64_t seed = 0;        // per-spectrum noise stream seed
    std::string file_digest;       // fnv1a of the spectrum CSV bytes
};

/// Links generated spectra to their ground-truth fields; the label source
/// for downstream model training.
struct DatasetManifest {
    int schema_version = 1;
    std::string generator_version;
    std::uint64_t seed = 0;
    std::string created_utc;       // empty unless timestamps are enabled
    std::vector<ManifestEntry> entries;

    void write(const std::filesystem::path& path) const;
    static DatasetManifest read(const std::filesystem::path& path);
    /// Checks that every listed file exists and its digest matches.
    void validate(const std::filesystem::path& manifest_dir) const;
};

/// Draws `count` fields uniformly from the configured range, simulates each
/// spectrum, applies the noise spec, writes the files and the manifest.
/// Deterministic for a fixed seed.
DatasetManifest generate_dataset(const RunConfig& config,
                                 const std::filesystem::path& out_dir,
                                 int n_jobs = 0);

} // namespace hfsas
