#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hfsas/config_file.hpp"
#include "hfsas/constants.hpp"
#include "hfsas/estimator.hpp"
#include "hfsas/extract.hpp"
#include "hfsas/obe.hpp"

namespace hfsas {

/// Calibration-pipeline settings ([calibration] section).
struct CalibrationConfig {
    std::string etalon_channel = "pd3_V";
    std::string signal_channel = "pd1_V";
    double fsr_mhz = 1500.0;
    int savgol_window = 11;
    int savgol_order = 3;
    double min_prominence = 0.1;
    int min_spacing_samples = 50;
    double anchor_sample = 0;             // sample index of the Delta = 0 reference
    double anchor_detuning_mhz = 0;
    std::optional<double> expected_field_t;  // windows from the transition table when set
    double peak_min_prominence = 0.05;       // detection fallback when field unknown
    int peak_min_spacing_samples = 100;
    bool features_are_dips = false;       // sub-Doppler features point down
    ProfileKind fit_kind = ProfileKind::gaussian;
    double search_half_width_mhz = 250.0;
};

/// Synthetic-dataset settings ([dataset] section).
struct DatasetConfig {
    int count = 1;
    double field_min_t = 0.2;
    double field_max_t = 0.4;
    double noise_rms = 0.0;          // additive white noise, units of peak signal
    double axis_jitter_mhz = 0.0;    // global axis offset sigma per spectrum
    std::uint64_t seed = 1;
};

/// Estimator settings beyond EstimatorOptions ([estimator] section).
struct EstimatorConfig {
    EstimatorOptions options;
    double sigma_calib_mhz = 1.0;
    int n_mc = 1000;
    std::uint64_t seed = 1;
    std::optional<double> measurement_time_s;  // enables the sensitivity line
};

/// Parsed, validated CLI run configuration (strict key/value file with
/// explicit units in key names; unknown keys are errors).
struct RunConfig {
    int schema_version = 1;
    std::filesystem::path config_path;
    std::filesystem::path constants_path;
    AtomicConstants constants;

    ObeParams obe;
    std::vector<double> fields_tesla;        // [fields] values_T
    std::filesystem::path output_dir = ".";
    bool emit_timestamps = false;

    CalibrationConfig calibration;
    DatasetConfig dataset;
    EstimatorConfig estimator;
    ExtractOptions extraction;

    /// Loads and validates; `need` lists the sections the command will use so
    /// unrelated sections in a shared config are not flagged as unknown.
    static RunConfig load(const std::filesystem::path& path,
                          const std::vector<std::string>& need);
};

} // namespace hfsas
