#pragma once

#include <span>
#include <string>

#include "hfsas/spectrum.hpp"

namespace hfsas {

enum class ProfileKind { gaussian, lorentzian };

std::string profile_kind_name(ProfileKind k);
ProfileKind profile_kind_from(const std::string& name);

/// Result of a single-profile least-squares fit
///   amplitude * profile((x - center)/width) + baseline.
/// Gaussian width parameter is the Gaussian sigma, Lorentzian width the
/// half width at half maximum. sigma_fit is the 1-sigma center uncertainty
/// from the residual-variance-scaled covariance.
struct PeakFit {
    double center_mhz = 0;
    double width_mhz = 0;
    double amplitude = 0;     // signed; negative for dips
    double baseline = 0;
    double sigma_fit_mhz = 0;
    double fwhm_mhz = 0;
    ProfileKind kind = ProfileKind::gaussian;
    double reduced_residual = 0;  // sqrt(SSR / (n - p))
    int iterations = 0;
};

/// Levenberg-Marquardt with analytic Jacobian and deterministic
/// initialization (center = extremum, width = half window, baseline =
/// window-edge median). Throws ComputeError on non-convergence or a
/// degenerate (flat) window.
PeakFit fit_peak(std::span<const double> x_mhz, std::span<const double> y,
                 ProfileKind kind);

/// Fit within [lo, hi] MHz of a spectrum.
PeakFit fit_peak(const Spectrum& spectrum, double lo_mhz, double hi_mhz,
                 ProfileKind kind);

/// Joint two-profile fit for blended lines sharing one baseline.
struct TwoPeakFit {
    PeakFit first;
    PeakFit second;
    bool covariance_singular = false;
};

TwoPeakFit fit_two_peaks(std::span<const double> x_mhz, std::span<const double> y,
                         ProfileKind kind, double center_guess_1_mhz,
                         double center_guess_2_mhz);

} // namespace hfsas
