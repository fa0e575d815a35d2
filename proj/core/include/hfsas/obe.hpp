#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "hfsas/constants.hpp"
#include "hfsas/transitions.hpp"

namespace hfsas {

/// Pump/probe, gas and numerics parameters for the Bloch-equation solver.
struct ObeParams {
    // Drive. Either set peak_intensity_w_m2 directly or derive it from pump
    // power and beam waist via intensity_from_power.
    double peak_intensity_w_m2 = 5413.8;   // 6 mW into w0 = 0.84 mm
    double temperature_k = 313.0;

    // Longitudinal velocity grid: n_velocity odd points spanning
    // +/- velocity_span_vp most-probable speeds.
    int n_velocity = 81;
    double velocity_span_vp = 4.0;

    // Detuning grid (MHz), uniform and strictly increasing.
    double detuning_min_mhz = -13000.0;
    double detuning_max_mhz = 13500.0;
    double detuning_step_mhz = 8.0;

    // Integration: fixed-step RK4 from the thermal ground state.
    double dt_tau = 0.01;          // base step in units of tau
    double t_max_tau = 40.0;       // total time in units of tau
    double avg_window_frac = 0.5;  // average rho_bb over the trailing fraction
    int n_phases = 4;              // standing-wave entry phases z0 in [0, pi/k)

    enum class Drive { standing_wave, uniform };
    Drive drive = Drive::standing_wave;

    enum class Polarization { both, sigma_plus, sigma_minus };
    Polarization polarization = Polarization::both;

    // Numerics. A transition is driven only while it can interact:
    //  |line - laser| <= coherence_window and (standing wave only)
    //  min(|line - laser -+ kv/2pi|) <= resonance_margin. Zero disables a
    // filter. The RK4 step is refined so the fastest active angular rate
    // advances at most max_phase_step_rad per step.
    double coherence_window_mhz = 2500.0;
    double resonance_margin_mhz = 250.0;
    double max_phase_step_rad = 0.35;

    static double intensity_from_power(double power_w, double waist_m);
    double field_amplitude_v_m() const;   // E of one traveling component
    /// Per-polarization drive amplitude: E/sqrt(2) each when both sigma
    /// components are driven, E for single-sigma runs.
    double drive_amplitude_v_m(int q) const;

    int n_detuning() const;
    double detuning_at(int index) const;
    std::vector<double> detuning_grid() const;

    void validate() const;        // throws ConfigError
    std::uint64_t digest() const; // canonical fingerprint for metadata
};

/// Reduced dynamical state: 24 populations + 16 optical coherences, one per
/// (ground state, sigma polarization) pair.
struct ObeState {
    std::array<double, 8> ground{};
    std::array<double, 16> excited{};
    std::array<std::complex<double>, 16> coherence{};  // [0..7] sigma-, [8..15] sigma+

    double trace() const;
    static ObeState thermal();    // uniform 1/8 over ground sublevels
};

/// One retained coherence pair: ground eigenstate alpha driven to the
/// excited eigenstate of matching dominant nuclear character.
struct ObePair {
    int alpha = 0;
    int beta = 0;
    int q = 0;
    double coupling = 0;        // C_{beta,alpha}
    double rabi_rad_s = 0;      // Omega = C * sqrt(3 pi eps0/(k^3 tau hbar)) * E_q
    double detuning_mhz = 0;    // transition detuning from omega0
};

/// Field-dependent tables the solver needs, built once per field value.
struct ObeSystem {
    double field_tesla = 0;
    ZeemanEigensystem ground;
    ZeemanEigensystem excited;
    CouplingSet couplings;
    std::array<ObePair, 16> pairs;  // [0..7] sigma- by alpha, [8..15] sigma+
    double gamma = 0;               // 1/tau
    double wavevector = 0;          // k
};

ObeSystem build_obe_system(double field_tesla, const AtomicConstants& constants,
                           const ObeParams& params);

/// Rabi rate Omega = C * sqrt(3 pi eps0 / (k^3 tau hbar)) * E.
double rabi_frequency(double coupling, double field_amplitude_v_m,
                      const AtomicConstants& constants);

/// Full right-hand side of the 40 coupled equations at time t for an atom of
/// velocity v at laser detuning delta. phase0 is the standing-wave entry
/// phase k*z0. Throws ComputeError with (v, delta, t) on NaN/Inf.
ObeState obe_derivative(const ObeState& state, double t_s, double v_m_s,
                        double delta_mhz, const ObeSystem& sys,
                        const ObeParams& params, double phase0 = 0.0);

/// Fixed-step RK4 for t_max, averaging rho_bb over the trailing window and
/// over n_phases standing-wave entry phases. Returns the 16 time-averaged
/// excited populations (eigenstate order). Inactive transitions (outside the
/// coherence window / resonance margin) are not driven; if nothing is active
/// the integration is skipped and all populations are zero.
std::array<double, 16> integrate(const ObeState& initial, double v_m_s,
                                 double delta_mhz, const ObeSystem& sys,
                                 const ObeParams& params);

} // namespace hfsas
