#include "hfsas/obe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hfsas/errors.hpp"
#include "hfsas/phys.hpp"

namespace hfsas {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double mhz_to_rad = two_pi * 1e6;
} // namespace

double ObeParams::intensity_from_power(double power_w, double waist_m) {
    if (!(power_w >= 0) || !(waist_m > 0))
        throw ConfigError("intensity_from_power: need power >= 0 and waist > 0");
    return 2.0 * power_w / (std::numbers::pi * waist_m * waist_m);
}

double ObeParams::field_amplitude_v_m() const {
    return std::sqrt(2.0 * peak_intensity_w_m2 / (phys::c * phys::eps0));
}

double ObeParams::drive_amplitude_v_m(int q) const {
    const double e = field_amplitude_v_m();
    switch (polarization) {
        case Polarization::both: return e / std::numbers::sqrt2;
        case Polarization::sigma_plus: return q > 0 ? e : 0.0;
        case Polarization::sigma_minus: return q < 0 ? e : 0.0;
    }
    return 0.0;
}

int ObeParams::n_detuning() const {
    return static_cast<int>(std::floor((detuning_max_mhz - detuning_min_mhz) /
                                       detuning_step_mhz + 1e-9)) + 1;
}

double ObeParams::detuning_at(int index) const {
    return detuning_min_mhz + index * detuning_step_mhz;
}

std::vector<double> ObeParams::detuning_grid() const {
    std::vector<double> grid(static_cast<size_t>(n_detuning()));
    for (size_t i = 0; i < grid.size(); ++i) grid[i] = detuning_at(static_cast<int>(i));
    return grid;
}

void ObeParams::validate() const {
    if (!(peak_intensity_w_m2 >= 0)) throw ConfigError("obe: peak intensity must be >= 0");
    if (!(temperature_k > 0)) throw ConfigError("obe: temperature must be positive");
    if (n_velocity < 3 || n_velocity % 2 == 0)
        throw ConfigError("obe: n_velocity must be odd and >= 3 (v = 0 included)");
    if (!(velocity_span_vp > 0)) throw ConfigError("obe: velocity span must be positive");
    if (!(detuning_step_mhz > 0) || !(detuning_max_mhz > detuning_min_mhz))
        throw ConfigError("obe: detuning grid must be strictly increasing");
    if (!(dt_tau > 0) || dt_tau > 1.0 / 50.0)
        throw ConfigError("obe: dt must satisfy 0 < dt <= tau/50");
    if (!(t_max_tau >= 20.0)) throw ConfigError("obe: t_max must be at least 20 tau");
    if (!(avg_window_frac > 0) || avg_window_frac > 1.0)
        throw ConfigError("obe: averaging window fraction must be in (0, 1]");
    if (n_phases < 1) throw ConfigError("obe: n_phases must be >= 1");
    if (!(max_phase_step_rad > 0) || max_phase_step_rad > 1.0)
        throw ConfigError("obe: max phase step must be in (0, 1] rad");
    if (coherence_window_mhz < 0 || resonance_margin_mhz < 0)
        throw ConfigError("obe: window/margin must be >= 0 (0 disables)");
}

std::uint64_t ObeParams::digest() const {
    std::ostringstream ss;
    ss.precision(17);
    ss << peak_intensity_w_m2 << '|' << temperature_k << '|' << n_velocity << '|'
       << velocity_span_vp << '|' << detuning_min_mhz << '|' << detuning_max_mhz << '|'
       << detuning_step_mhz << '|' << dt_tau << '|' << t_max_tau << '|'
       << avg_window_frac << '|' << n_phases << '|' << static_cast<int>(drive) << '|'
       << static_cast<int>(polarization) << '|' << coherence_window_mhz << '|'
       << resonance_margin_mhz << '|' << max_phase_step_rad;
    return fnv1a(ss.str());
}

double ObeState::trace() const {
    double t = 0;
    for (double g : ground) t += g;
    for (double e : excited) t += e;
    return t;
}

ObeState ObeState::thermal() {
    ObeState s;
    s.ground.fill(1.0 / 8.0);
    return s;
}

ObeSystem build_obe_system(double field_tesla, const AtomicConstants& constants,
                           const ObeParams& params) {
    ObeSystem sys;
    sys.field_tesla = field_tesla;
    sys.ground = eigensystem(Manifold::ground, field_tesla, constants);
    sys.excited = eigensystem(Manifold::excited, field_tesla, constants);
    sys.couplings = coupling_set(sys.ground, sys.excited);
    sys.gamma = constants.gamma();
    sys.wavevector = constants.wavevector();

    const double prefactor = constants.rabi_prefactor();
    for (int qi = 0; qi < 2; ++qi) {
        const int q = qi == 0 ? -1 : +1;
        const Eigen::MatrixXd& c = sys.couplings.for_q(q);
        const double e_drive = params.drive_amplitude_v_m(q);
        for (int a = 0; a < 8; ++a) {
            const BasisState gl =
                sys.ground.basis[static_cast<size_t>(sys.ground.dominant[static_cast<size_t>(a)])];
            int b = sys.excited.index_of(BasisState{gl.mi, gl.mj + half(2 * q)});
            if (b < 0) {
                // Ambiguous dominant labels (possible near zero field): fall
                // back to the strongest coupling partner.
                double best = -1.0;
                for (int bb = 0; bb < 16; ++bb)
                    if (std::abs(c(bb, a)) > best) { best = std::abs(c(bb, a)); b = bb; }
            }
            ObePair& p = sys.pairs[static_cast<size_t>(qi * 8 + a)];
            p.alpha = a;
            p.beta = b;
            p.q = q;
            p.coupling = c(b, a);
            p.rabi_rad_s = rabi_frequency(p.coupling, e_drive, constants);
            p.detuning_mhz = sys.excited.energies_mhz[static_cast<size_t>(b)] -
                             sys.ground.energies_mhz[static_cast<size_t>(a)];
        }
    }
    return sys;
}

double rabi_frequency(double coupling, double field_amplitude_v_m,
                      const AtomicConstants& constants) {
    if (field_amplitude_v_m < 0)
        throw ConfigError("rabi_frequency: field amplitude must be >= 0");
    return coupling * constants.rabi_prefactor() * field_amplitude_v_m;
}

namespace {

[[noreturn]] void numeric_abort(double v, double delta_mhz, double t_s, const char* what) {
    std::ostringstream ss;
    ss.precision(10);
    ss << "OBE integration " << what << " at v = " << v << " m/s, detuning = "
       << delta_mhz << " MHz, t = " << t_s << " s";
    throw ComputeError(ss.str());
}

// Compact active subsystem for one (v, delta) job. Coherences are stored as
// separate re/im arrays; populations of excited states that are never driven
// stay identically zero and are excluded.
struct ActiveSystem {
    int n_pairs = 0;
    int n_exc = 0;
    std::array<int, 16> alpha{};
    std::array<int, 16> slot{};       // pair -> compact excited slot
    std::array<int, 16> src_pair{};   // pair -> index into ObeSystem::pairs
    std::array<double, 16> omega{};
    std::array<double, 16> delta_rad{};  // (omega_beta_alpha - omega_laser)
    std::array<int, 16> exc_eigen{};  // slot -> eigenstate index
    std::array<std::array<double, 8>, 16> repop{};  // gamma * branching row per slot
    double gamma = 0;
    double k = 0;
};

struct CompactState {
    std::array<double, 8> g{};
    std::array<double, 16> e{};
    std::array<double, 16> cre{};
    std::array<double, 16> cim{};
};

inline void derivative(const ActiveSystem& as, const CompactState& s, double phi,
                       CompactState& d) {
    d.g.fill(0.0);
    for (int i = 0; i < as.n_exc; ++i) d.e[static_cast<size_t>(i)] = -as.gamma * s.e[static_cast<size_t>(i)];
    for (int p = 0; p < as.n_pairs; ++p) {
        const auto pa = static_cast<size_t>(as.alpha[static_cast<size_t>(p)]);
        const auto ps = static_cast<size_t>(as.slot[static_cast<size_t>(p)]);
        const double om = as.omega[static_cast<size_t>(p)];
        const double del = as.delta_rad[static_cast<size_t>(p)];
        const double drive = 2.0 * phi * om * s.cim[static_cast<size_t>(p)];
        d.g[pa] += drive;
        d.e[ps] -= drive;
        d.cre[static_cast<size_t>(p)] = del * s.cim[static_cast<size_t>(p)] - 0.5 * as.gamma * s.cre[static_cast<size_t>(p)];
        d.cim[static_cast<size_t>(p)] = phi * om * (s.e[ps] - s.g[pa]) - del * s.cre[static_cast<size_t>(p)] -
                                        0.5 * as.gamma * s.cim[static_cast<size_t>(p)];
    }
    for (int i = 0; i < as.n_exc; ++i) {
        const double pop = s.e[static_cast<size_t>(i)];
        if (pop == 0.0) continue;
        const auto& row = as.repop[static_cast<size_t>(i)];
        for (int a = 0; a < 8; ++a) d.g[static_cast<size_t>(a)] += row[static_cast<size_t>(a)] * pop;
    }
}

inline void axpy(const ActiveSystem& as, const CompactState& y, double h,
                 const CompactState& k, CompactState& out) {
    for (int a = 0; a < 8; ++a) out.g[static_cast<size_t>(a)] = y.g[static_cast<size_t>(a)] + h * k.g[static_cast<size_t>(a)];
    for (int i = 0; i < as.n_exc; ++i) out.e[static_cast<size_t>(i)] = y.e[static_cast<size_t>(i)] + h * k.e[static_cast<size_t>(i)];
    for (int p = 0; p < as.n_pairs; ++p) {
        out.cre[static_cast<size_t>(p)] = y.cre[static_cast<size_t>(p)] + h * k.cre[static_cast<size_t>(p)];
        out.cim[static_cast<size_t>(p)] = y.cim[static_cast<size_t>(p)] + h * k.cim[static_cast<size_t>(p)];
    }
}

inline void rk4_combine(const ActiveSystem& as, CompactState& y, double dt,
                        const CompactState& k1, const CompactState& k2,
                        const CompactState& k3, const CompactState& k4) {
    const double w = dt / 6.0;
    for (int a = 0; a < 8; ++a)
        y.g[static_cast<size_t>(a)] += w * (k1.g[static_cast<size_t>(a)] + 2 * k2.g[static_cast<size_t>(a)] + 2 * k3.g[static_cast<size_t>(a)] + k4.g[static_cast<size_t>(a)]);
    for (int i = 0; i < as.n_exc; ++i)
        y.e[static_cast<size_t>(i)] += w * (k1.e[static_cast<size_t>(i)] + 2 * k2.e[static_cast<size_t>(i)] + 2 * k3.e[static_cast<size_t>(i)] + k4.e[static_cast<size_t>(i)]);
    for (int p = 0; p < as.n_pairs; ++p) {
        y.cre[static_cast<size_t>(p)] += w * (k1.cre[static_cast<size_t>(p)] + 2 * k2.cre[static_cast<size_t>(p)] + 2 * k3.cre[static_cast<size_t>(p)] + k4.cre[static_cast<size_t>(p)]);
        y.cim[static_cast<size_t>(p)] += w * (k1.cim[static_cast<size_t>(p)] + 2 * k2.cim[static_cast<size_t>(p)] + 2 * k3.cim[static_cast<size_t>(p)] + k4.cim[static_cast<size_t>(p)]);
    }
}

ActiveSystem build_active(const ObeSystem& sys, const ObeParams& params,
                          double v, double delta_mhz) {
    ActiveSystem as;
    as.gamma = sys.gamma;
    as.k = sys.wavevector;
    const double doppler_mhz = sys.wavevector * std::abs(v) / mhz_to_rad;
    std::array<int, 16> slot_of_beta;
    slot_of_beta.fill(-1);
    for (int pi = 0; pi < 16; ++pi) {
        const ObePair& p = sys.pairs[static_cast<size_t>(pi)];
        if (p.rabi_rad_s == 0.0) continue;
        const double d = p.detuning_mhz - delta_mhz;
        if (params.coherence_window_mhz > 0 && std::abs(d) > params.coherence_window_mhz)
            continue;
        if (params.drive == ObeParams::Drive::standing_wave && params.resonance_margin_mhz > 0) {
            const double miss = std::min(std::abs(d - doppler_mhz), std::abs(d + doppler_mhz));
            if (miss > params.resonance_margin_mhz) continue;
        }
        int& slot = slot_of_beta[static_cast<size_t>(p.beta)];
        if (slot < 0) {
            slot = as.n_exc++;
            as.exc_eigen[static_cast<size_t>(slot)] = p.beta;
            for (int a = 0; a < 8; ++a)
                as.repop[static_cast<size_t>(slot)][static_cast<size_t>(a)] =
                    sys.gamma * sys.couplings.branching(p.beta, a);
        }
        const int i = as.n_pairs++;
        as.alpha[static_cast<size_t>(i)] = p.alpha;
        as.slot[static_cast<size_t>(i)] = slot;
        as.src_pair[static_cast<size_t>(i)] = pi;
        as.omega[static_cast<size_t>(i)] = p.rabi_rad_s;
        as.delta_rad[static_cast<size_t>(i)] = d * mhz_to_rad;
    }
    return as;
}

} // namespace

ObeState obe_derivative(const ObeState& state, double t_s, double v_m_s,
                        double delta_mhz, const ObeSystem& sys,
                        const ObeParams& params, double phase0) {
    for (double g : state.ground)
        if (!std::isfinite(g)) numeric_abort(v_m_s, delta_mhz, t_s, "hit non-finite state");
    for (double e : state.excited)
        if (!std::isfinite(e)) numeric_abort(v_m_s, delta_mhz, t_s, "hit non-finite state");

    const double phi = params.drive == ObeParams::Drive::uniform
                           ? 1.0
                           : std::cos(phase0 + sys.wavevector * v_m_s * t_s);

    ObeState d;
    for (int i = 0; i < 16; ++i) d.excited[static_cast<size_t>(i)] = -sys.gamma * state.excited[static_cast<size_t>(i)];
    for (int b = 0; b < 16; ++b) {
        const double pop = state.excited[static_cast<size_t>(b)];
        if (pop == 0.0) continue;
        for (int a = 0; a < 8; ++a)
            d.ground[static_cast<size_t>(a)] += sys.gamma * sys.couplings.branching(b, a) * pop;
    }
    for (int p = 0; p < 16; ++p) {
        const ObePair& pair = sys.pairs[static_cast<size_t>(p)];
        const std::complex<double> c = state.coherence[static_cast<size_t>(p)];
        const double delta_rad = (pair.detuning_mhz - delta_mhz) * mhz_to_rad;
        const double drive = 2.0 * phi * pair.rabi_rad_s * c.imag();
        d.ground[static_cast<size_t>(pair.alpha)] += drive;
        d.excited[static_cast<size_t>(pair.beta)] -= drive;
        const double dre = delta_rad * c.imag() - 0.5 * sys.gamma * c.real();
        const double dim = phi * pair.rabi_rad_s *
                               (state.excited[static_cast<size_t>(pair.beta)] - state.ground[static_cast<size_t>(pair.alpha)]) -
                           delta_rad * c.real() - 0.5 * sys.gamma * c.imag();
        d.coherence[static_cast<size_t>(p)] = {dre, dim};
    }
    return d;
}

std::array<double, 16> integrate(const ObeState& initial, double v_m_s,
                                 double delta_mhz, const ObeSystem& sys,
                                 const ObeParams& params) {
    std::array<double, 16> avg{};
    const ActiveSystem as = build_active(sys, params, v_m_s, delta_mhz);
    if (as.n_pairs == 0) return avg;  // no transition can interact: stays dark

    const double tau = 1.0 / sys.gamma;
    const double t_max = params.t_max_tau * tau;

    double omega_max = 0.0;
    double rabi_max = 0.0;
    for (int p = 0; p < as.n_pairs; ++p) {
        omega_max = std::max(omega_max, std::abs(as.delta_rad[static_cast<size_t>(p)]));
        rabi_max = std::max(rabi_max, std::abs(as.omega[static_cast<size_t>(p)]));
    }
    omega_max += sys.wavevector * std::abs(v_m_s) + 2.0 * rabi_max;

    double dt = params.dt_tau * tau;
    if (omega_max * dt > params.max_phase_step_rad) dt = params.max_phase_step_rad / omega_max;
    const double n_real = std::ceil(t_max / dt);
    if (n_real > 2e7) numeric_abort(v_m_s, delta_mhz, 0.0, "exceeded the step-count cap");
    const long n_steps = static_cast<long>(n_real);
    dt = t_max / static_cast<double>(n_steps);

    const long avg_start = n_steps - static_cast<long>(std::floor(
                               params.avg_window_frac * static_cast<double>(n_steps)));
    const long n_avg = n_steps - avg_start + 1;

    const bool uniform = params.drive == ObeParams::Drive::uniform;
    const int n_phases = uniform ? 1 : params.n_phases;

    CompactState y0;
    y0.g = initial.ground;
    for (int i = 0; i < as.n_exc; ++i)
        y0.e[static_cast<size_t>(i)] = initial.excited[static_cast<size_t>(as.exc_eigen[static_cast<size_t>(i)])];
    for (int p = 0; p < as.n_pairs; ++p) {
        const auto src = static_cast<size_t>(as.src_pair[static_cast<size_t>(p)]);
        y0.cre[static_cast<size_t>(p)] = initial.coherence[src].real();
        y0.cim[static_cast<size_t>(p)] = initial.coherence[src].imag();
    }

    const double init_trace_active = [&] {
        double t = 0;
        for (double g : y0.g) t += g;
        for (int i = 0; i < as.n_exc; ++i) t += y0.e[static_cast<size_t>(i)];
        return t;
    }();

    CompactState k1, k2, k3, k4, tmp;
    for (int phase_i = 0; phase_i < n_phases; ++phase_i) {
        const double phase0 = uniform ? 0.0
                                      : std::numbers::pi * static_cast<double>(phase_i) /
                                            static_cast<double>(n_phases);
        CompactState y = y0;
        std::array<double, 16> acc{};
        const double kv = sys.wavevector * v_m_s;
        double phi_start = uniform ? 1.0 : std::cos(phase0);
        for (long step = 1; step <= n_steps; ++step) {
            const double t0 = static_cast<double>(step - 1) * dt;
            const double phi_mid = uniform ? 1.0 : std::cos(phase0 + kv * (t0 + 0.5 * dt));
            const double phi_end = uniform ? 1.0 : std::cos(phase0 + kv * (t0 + dt));

            derivative(as, y, phi_start, k1);
            axpy(as, y, 0.5 * dt, k1, tmp);
            derivative(as, tmp, phi_mid, k2);
            axpy(as, y, 0.5 * dt, k2, tmp);
            derivative(as, tmp, phi_mid, k3);
            axpy(as, y, dt, k3, tmp);
            derivative(as, tmp, phi_end, k4);
            rk4_combine(as, y, dt, k1, k2, k3, k4);
            phi_start = phi_end;

            if (step >= avg_start)
                for (int i = 0; i < as.n_exc; ++i) acc[static_cast<size_t>(i)] += y.e[static_cast<size_t>(i)];

            if ((step & 63) == 0 || step == n_steps) {
                double trace = 0;
                for (double g : y.g) trace += g;
                for (int i = 0; i < as.n_exc; ++i) {
                    const double e = y.e[static_cast<size_t>(i)];
                    trace += e;
                    if (!std::isfinite(e)) numeric_abort(v_m_s, delta_mhz, t0, "hit non-finite state");
                    if (e < -1e-9 || e > 1.0 + 1e-9)
                        numeric_abort(v_m_s, delta_mhz, t0, "left the [0,1] population bounds");
                }
                for (double g : y.g)
                    if (g < -1e-9 || g > 1.0 + 1e-9)
                        numeric_abort(v_m_s, delta_mhz, t0, "left the [0,1] population bounds");
                if (std::abs(trace - init_trace_active) > 1e-9)
                    numeric_abort(v_m_s, delta_mhz, t0, "lost trace conservation");
            }
        }
        for (int i = 0; i < as.n_exc; ++i)
            avg[static_cast<size_t>(as.exc_eigen[static_cast<size_t>(i)])] +=
                acc[static_cast<size_t>(i)] / static_cast<double>(n_avg);
    }

    for (double& a : avg) a /= static_cast<double>(n_phases);
    return avg;
}

} // namespace hfsas
