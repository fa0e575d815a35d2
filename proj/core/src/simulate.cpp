#include "hfsas/simulate.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "hfsas/errors.hpp"
#include "hfsas/phys.hpp"

namespace hfsas {

std::vector<double> velocity_grid(double temperature_k, int n, double span_vp,
                                  const AtomicConstants& constants) {
    if (!(temperature_k > 0)) throw ConfigError("velocity_grid: temperature must be positive");
    if (n < 3 || n % 2 == 0) throw ConfigError("velocity_grid: n must be odd and >= 3");
    const double vp = std::sqrt(2.0 * phys::k_B * temperature_k / constants.mass_kg);
    const double vmax = span_vp * vp;
    std::vector<double> v(static_cast<size_t>(n));
    const double step = 2.0 * vmax / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = -vmax + step * i;
    v[static_cast<size_t>(n / 2)] = 0.0;  // exact center
    return v;
}

std::vector<double> maxwell_weights(double temperature_k,
                                    const std::vector<double>& velocities_m_s,
                                    const AtomicConstants& constants) {
    if (!(temperature_k > 0)) throw ConfigError("maxwell_weights: temperature must be positive");
    std::vector<double> w(velocities_m_s.size());
    const double inv_2kt_m = constants.mass_kg / (2.0 * phys::k_B * temperature_k);
    double sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(-velocities_m_s[i] * velocities_m_s[i] * inv_2kt_m);
        sum += w[i];
    }
    for (double& x : w) x /= sum;
    return w;
}

Spectrum simulate_spectrum(double field_tesla, const ObeParams& params,
                           const AtomicConstants& constants, int n_jobs) {
    params.validate();
    const ObeSystem sys = build_obe_system(field_tesla, constants, params);
    const std::vector<double> grid = params.detuning_grid();
    const std::vector<double> velocities =
        velocity_grid(params.temperature_k, params.n_velocity, params.velocity_span_vp, constants);
    const std::vector<double> weights = maxwell_weights(params.temperature_k, velocities, constants);
    const ObeState initial = ObeState::thermal();

    // One independent job per detuning point; each loops its velocity classes
    // in a fixed order, so the result is identical for any thread count.
    const std::size_t n_delta = grid.size();
    std::vector<double> signal(n_delta, 0.0);
    std::vector<std::string> errors(n_delta);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= n_delta) return;
            try {
                // F(delta) = sum_beta sum_alpha C^2 sum_i f(v_i) rho_avg
                double f = 0.0;
                for (std::size_t i = 0; i < velocities.size(); ++i) {
                    const std::array<double, 16> rho_avg =
                        integrate(initial, velocities[i], grid[j], sys, params);
                    double per_beta = 0.0;
                    for (int b = 0; b < 16; ++b) {
                        double cc = 0.0;
                        for (int a = 0; a < 8; ++a) cc += sys.couplings.branching(b, a);
                        per_beta += cc * rho_avg[static_cast<size_t>(b)];
                    }
                    f += weights[i] * per_beta;
                }
                signal[j] = f;
            } catch (const std::exception& e) {
                errors[j] = std::string(e.what()) + " (grid point " + std::to_string(j) + ")";
            }
        }
    };

    int threads = n_jobs > 0 ? n_jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(n_delta));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (!err.empty()) throw ComputeError(err);

    Spectrum spec;
    spec.detuning_mhz = grid;
    spec.signal = std::move(signal);
    double peak = 0.0;
    for (double v : spec.signal) peak = std::max(peak, v);
    spec.meta.field_tesla = field_tesla;
    spec.meta.params_digest = params.digest();
    spec.meta.constants_version =
        constants.isotope + "/v" + std::to_string(constants.schema_version);
    spec.meta.constants_digest = constants.source_digest;
    spec.meta.raw_peak_signal = peak;
    spec.meta.normalized = peak > 0.0;
    if (peak > 0.0)
        for (double& v : spec.signal) v /= peak;
    return spec;
}

} // namespace hfsas
