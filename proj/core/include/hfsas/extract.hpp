#pragma once

#include "hfsas/peak_list.hpp"
#include "hfsas/spectrum.hpp"
#include "hfsas/transitions.hpp"

namespace hfsas {

struct ExtractOptions {
    double search_half_width_mhz = 250.0;
    ProfileKind kind = ProfileKind::lorentzian;
    /// Lines predicted closer than blend_fwhm_factor * fitted FWHM are fit
    /// jointly; a singular joint covariance collapses them into one blended
    /// entry that is excluded from field estimation.
    double blend_fwhm_factor = 2.0;
    /// A window is "missing" when its peak-to-peak excursion is below this
    /// fraction of the spectrum's full range.
    double min_excursion_frac = 1e-3;
};

/// One PeakFit per expected transition row. Transitions without an extremum
/// in their window are reported missing, never fabricated. Callers pass the
/// table rows they expect to resolve (typically table.strong()).
PeakList extract_peaks(const Spectrum& spectrum,
                       const std::vector<TransitionRow>& expected,
                       const ExtractOptions& options = {});

} // namespace hfsas
