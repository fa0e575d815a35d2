#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hfsas/peak_fit.hpp"
#include "hfsas/transitions.hpp"

namespace hfsas {

enum class PeakStatus { ok, missing, blended };

std::string peak_status_name(PeakStatus s);

struct PeakEntry {
    std::string label;                        // transition label or free text
    std::optional<TransitionKey> assignment;  // filled by assign_peaks
    double center_mhz = 0;
    double sigma_fit_mhz = 0;
    double fwhm_mhz = 0;
    ProfileKind kind = ProfileKind::gaussian;
    PeakStatus status = PeakStatus::ok;

    bool usable() const { return status == PeakStatus::ok; }
};

/// Measured line centers with uncertainties; the interchange format between
/// spectral analysis and field estimation.
struct PeakList {
    std::vector<PeakEntry> entries;

    std::size_t n_usable() const;
    std::size_t n_assigned() const;
    void validate() const;   // finite centers, sigma > 0, no duplicate assignments

    void write_csv(std::ostream& os) const;
    void write_csv(const std::filesystem::path& path) const;
    static PeakList read_csv(const std::filesystem::path& path);
};

} // namespace hfsas
