#include "hfsas/constants.hpp"

#include <cmath>
#include <numbers>

#include "hfsas/config_file.hpp"
#include "hfsas/errors.hpp"
#include "hfsas/phys.hpp"

namespace hfsas {

std::string manifold_name(Manifold m) {
    return m == Manifold::ground ? "ground" : "excited";
}

double AtomicConstants::wavevector() const {
    return 2.0 * std::numbers::pi / wavelength_m;
}

double AtomicConstants::omega0() const {
    return 2.0 * std::numbers::pi * line_frequency_hz;
}

double AtomicConstants::rabi_prefactor() const {
    const double k = wavevector();
    return std::sqrt(3.0 * std::numbers::pi * phys::eps0 /
                     (k * k * k * lifetime_s * phys::hbar));
}

std::filesystem::path AtomicConstants::default_path() {
    return std::filesystem::path(HFSAS_DATA_DIR) / "rb87_d2.cfg";
}

AtomicConstants AtomicConstants::load(const std::filesystem::path& path) {
    ConfigFile cfg = ConfigFile::parse_file(path);
    AtomicConstants c;
    c.schema_version = static_cast<int>(cfg.get_int("", "schema_version"));
    if (c.schema_version != 1)
        throw ConfigError(path.string() + ": unsupported constants schema_version " +
                          std::to_string(c.schema_version));
    c.isotope = cfg.get_string("", "isotope");
    c.nuclear_spin = HalfInt::from_double(cfg.get_double("", "nuclear_spin"));
    c.j_ground = HalfInt::from_double(cfg.get_double("", "j_ground"));
    c.j_excited = HalfInt::from_double(cfg.get_double("", "j_excited"));
    c.a_hfs_ground_mhz = cfg.get_double("", "a_hfs_ground_MHz");
    c.a_hfs_excited_mhz = cfg.get_double("", "a_hfs_excited_MHz");
    c.b_hfs_excited_mhz = cfg.get_double("", "b_hfs_excited_MHz");
    c.g_j_ground = cfg.get_double("", "g_j_ground");
    c.g_j_excited = cfg.get_double("", "g_j_excited");
    c.g_i = cfg.get_double("", "g_i");
    c.lifetime_s = cfg.get_double("", "lifetime_ns") * 1e-9;
    c.wavelength_m = cfg.get_double("", "wavelength_nm") * 1e-9;
    c.line_frequency_hz = cfg.get_double("", "frequency_THz") * 1e12;
    c.saturation_intensity_w_m2 = cfg.get_double("", "saturation_intensity_W_m2");
    c.mass_kg = cfg.get_double("", "atomic_mass_u") * phys::amu;
    c.bohr_magneton_mhz_per_t = cfg.get_double("", "bohr_magneton_over_h_MHz_per_T");
    cfg.reject_unknown();

    c.source_file = path.string();
    c.source_digest = cfg.digest();
    c.validate();
    return c;
}

void AtomicConstants::validate() const {
    if (nuclear_spin.twice < 0 || j_ground.twice < 0 || j_excited.twice < 0)
        throw ConfigError("constants: I and J must be non-negative half-integers");
    if (manifold_dim(Manifold::ground) != 8 || manifold_dim(Manifold::excited) != 16)
        throw ConfigError("constants: manifold dimensions must be 8 (ground) and 16 (excited), got " +
                          std::to_string(manifold_dim(Manifold::ground)) + "/" +
                          std::to_string(manifold_dim(Manifold::excited)));
    if (!(lifetime_s > 0)) throw ConfigError("constants: lifetime must be positive");
    if (!(wavelength_m > 0)) throw ConfigError("constants: wavelength must be positive");
    if (!(line_frequency_hz > 0)) throw ConfigError("constants: line frequency must be positive");
    if (!(saturation_intensity_w_m2 > 0)) throw ConfigError("constants: I_sat must be positive");
    if (!(mass_kg > 0)) throw ConfigError("constants: mass must be positive");
    if (!(bohr_magneton_mhz_per_t > 0)) throw ConfigError("constants: mu_B/h must be positive");
}

} // namespace hfsas
