#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hfsas/half_int.hpp"

namespace hfsas {

enum class Manifold { ground, excited };

std::string manifold_name(Manifold m);

/// Isotope-level physical constants for one D-line system, loaded from a
/// versioned key/value file (see core/data/rb87_d2.cfg). Energies are MHz
/// throughout the atomic-structure layer.
struct AtomicConstants {
    int schema_version = 0;
    std::string isotope;

    HalfInt nuclear_spin;          // I
    HalfInt j_ground;              // J of the lower manifold
    HalfInt j_excited;             // J of the upper manifold

    double a_hfs_ground_mhz = 0;   // magnetic-dipole constant, lower manifold
    double a_hfs_excited_mhz = 0;  // magnetic-dipole constant, upper manifold
    double b_hfs_excited_mhz = 0;  // electric-quadrupole constant, upper manifold

    double g_j_ground = 0;
    double g_j_excited = 0;
    double g_i = 0;

    double lifetime_s = 0;             // excited-state lifetime tau
    double wavelength_m = 0;           // vacuum wavelength of the line
    double line_frequency_hz = 0;      // fine-structure centre frequency
    double saturation_intensity_w_m2 = 0;
    double mass_kg = 0;

    double bohr_magneton_mhz_per_t = 0;  // mu_B/h

    std::string source_file;
    std::uint64_t source_digest = 0;

    HalfInt j(Manifold m) const { return m == Manifold::ground ? j_ground : j_excited; }
    int manifold_dim(Manifold m) const {
        return (nuclear_spin.twice + 1) * (j(m).twice + 1);
    }

    double gamma() const { return 1.0 / lifetime_s; }            // 1/tau, rad/s
    double wavevector() const;                                   // k, rad/m
    double omega0() const;                                       // 2*pi*nu0, rad/s
    /// sqrt(3*pi*eps0 / (k^3 * tau * hbar)); Rabi rate = C * this * E.
    double rabi_prefactor() const;

    static AtomicConstants load(const std::filesystem::path& path);
    /// Path of the constants file shipped with the library.
    static std::filesystem::path default_path();

    void validate() const;   // throws ConfigError on invariant violation
};

} // namespace hfsas
