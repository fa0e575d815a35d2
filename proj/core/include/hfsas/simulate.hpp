#pragma once

#include <vector>

#include "hfsas/obe.hpp"
#include "hfsas/spectrum.hpp"

namespace hfsas {

/// Uniform longitudinal velocity grid, n odd, spanning +/- span_vp most
/// probable speeds at temperature T.
std::vector<double> velocity_grid(double temperature_k, int n, double span_vp,
                                  const AtomicConstants& constants);

/// Discrete Maxwell-Boltzmann weights f(v_i) on the grid, normalized to
/// sum exactly 1. Throws ConfigError for non-positive temperature.
std::vector<double> maxwell_weights(double temperature_k,
                                    const std::vector<double>& velocities_m_s,
                                    const AtomicConstants& constants);

/// Velocity-averaged fluorescence spectrum
///   F(delta) = sum_beta sum_alpha C^2 sum_i f(v_i) rho_bb^avg(v_i, delta),
/// normalized to unit maximum (raw maximum kept in metadata). Deterministic:
/// identical inputs give bit-identical spectra for any thread count.
/// n_jobs = 0 uses the hardware concurrency.
Spectrum simulate_spectrum(double field_tesla, const ObeParams& params,
                           const AtomicConstants& constants, int n_jobs = 0);

} // namespace hfsas
