#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hfsas/constants.hpp"
#include "hfsas/peak_list.hpp"

namespace hfsas {

struct EstimatorOptions {
    double bounds_low_t = 0.2;
    double bounds_high_t = 0.5;
    double gate_mhz = 700.0;        // assignment acceptance gate
    double tolerance_t = 1e-6;      // |dB| stop for the scalar minimization
    int max_iterations = 200;
    double min_coupling = 0.5;      // table rows considered for assignment
};

/// Greedy one-to-one nearest-neighbour matching of usable measured centers
/// against the strong transition-table rows at b_guess. Pairs are accepted
/// in order of increasing mismatch while below the gate; blended/missing
/// entries stay unassigned. Throws ComputeError when fewer than two
/// assignments survive.
PeakList assign_peaks(const PeakList& peaks, double b_guess_tesla,
                      const AtomicConstants& constants,
                      const EstimatorOptions& options = {});

/// L(B) = sum_k (nu_exp_k - nu_theo_k(B))^2 over assigned peaks, in MHz^2.
double loss(double field_tesla, const PeakList& assigned,
            const AtomicConstants& constants);

/// Bounded scalar minimization of L(B): golden-section bracketing followed
/// by parabolic refinement, deterministic for fixed inputs. Errors when the
/// minimum pins to a bound or the iteration cap is hit.
double estimate_field(const PeakList& assigned, double bounds_low_t,
                      double bounds_high_t, const AtomicConstants& constants,
                      const EstimatorOptions& options = {});

struct TrialSummary {
    double mean = 0, stddev = 0, min = 0, max = 0;
};

struct FieldEstimate {
    double b_hat_tesla = 0;
    double sigma_b_tesla = 0;
    int n_mc = 0;
    int n_failed = 0;
    double loss_mhz2 = 0;
    double sigma_calib_mhz = 0;
    double bounds_low_t = 0, bounds_high_t = 0;
    std::uint64_t seed = 0;
    std::vector<double> residuals_mhz;        // per assigned peak at b_hat
    std::vector<std::string> residual_labels;
    std::vector<double> trials_tesla;         // successful trials, in order
    TrialSummary trials;

    void write_report(std::ostream& os) const;
    void write_trials_csv(std::ostream& os) const;
};

/// Monte Carlo error propagation: every assigned center is perturbed by
/// N(0, sigma_k) with sigma_k = sqrt(sigma_fit^2 + sigma_calib^2), the field
/// is re-estimated per trial, and sigma_B is the sample standard deviation.
/// Noise is drawn up-front in a deterministic order from the seed. Trials
/// that fail to converge are recorded and excluded; more than 5% failures is
/// an error. Requires n_mc >= 100.
FieldEstimate monte_carlo_uncertainty(const PeakList& assigned,
                                      double sigma_calib_mhz, int n_mc,
                                      double bounds_low_t, double bounds_high_t,
                                      std::uint64_t seed,
                                      const AtomicConstants& constants,
                                      const EstimatorOptions& options = {});

/// sigma_B * sqrt(measurement_time), reported in mT/sqrt(Hz).
double sensitivity_mt_per_sqrt_hz(double sigma_b_tesla, double measurement_time_s);

} // namespace hfsas
