#include "hfsas/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hfsas/errors.hpp"

namespace hfsas {

namespace {

// Exact-enough factorials for j <= 5 arguments (largest index 3j+1 = 31).
// long double keeps the alternating Racah sum accurate to ~1e-16.
constexpr int kMaxFact = 40;

const std::array<long double, kMaxFact + 1>& factorials() {
    static const auto table = [] {
        std::array<long double, kMaxFact + 1> f{};
        f[0] = 1.0L;
        for (int n = 1; n <= kMaxFact; ++n) f[n] = f[n - 1] * n;
        return f;
    }();
    return table;
}

long double fact2(int twice) {
    // factorial of a value stored as twice itself; must be an even, >= 0
    return factorials()[static_cast<size_t>(twice / 2)];
}

bool nonneg_even(int twice) { return twice >= 0 && twice % 2 == 0; }

} // namespace

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3) {
    // projection validity: |m| <= j and j - m integral
    for (auto [j, m] : {std::pair{j1, m1}, {j2, m2}, {j3, m3}}) {
        if ((j.twice - m.twice) % 2 != 0)
            throw ConfigError("wigner_3j: m=" + m.str() + " is not a valid projection of j=" + j.str());
        if (std::abs(m.twice) > j.twice) return 0.0;
    }
    if (m1.twice + m2.twice + m3.twice != 0) return 0.0;
    // triangle rule
    if (!nonneg_even(j1.twice + j2.twice - j3.twice + 0) ||
        j1.twice + j2.twice - j3.twice < 0 ||
        j1.twice - j2.twice + j3.twice < 0 ||
        -j1.twice + j2.twice + j3.twice < 0)
        return 0.0;
    // (j1+j2-j3) etc. must be integers
    if ((j1.twice + j2.twice + j3.twice) % 2 != 0) return 0.0;

    const auto& f = factorials();
    const int t_j123 = j1.twice + j2.twice + j3.twice;

    const long double delta =
        fact2(j1.twice + j2.twice - j3.twice) *
        fact2(j1.twice - j2.twice + j3.twice) *
        fact2(-j1.twice + j2.twice + j3.twice) /
        f[static_cast<size_t>(t_j123 / 2 + 1)];

    const long double norm =
        fact2(j1.twice + m1.twice) * fact2(j1.twice - m1.twice) *
        fact2(j2.twice + m2.twice) * fact2(j2.twice - m2.twice) *
        fact2(j3.twice + m3.twice) * fact2(j3.twice - m3.twice);

    // Racah sum over k with all factorial arguments non-negative.
    const int a1 = (j1.twice + j2.twice - j3.twice) / 2;  // j1+j2-j3
    const int a2 = (j1.twice - m1.twice) / 2;             // j1-m1
    const int a3 = (j2.twice + m2.twice) / 2;             // j2+m2
    const int b1 = (j3.twice - j2.twice + m1.twice) / 2;  // j3-j2+m1
    const int b2 = (j3.twice - j1.twice - m2.twice) / 2;  // j3-j1-m2
    const int k_min = std::max({0, -b1, -b2});
    const int k_max = std::min({a1, a2, a3});

    long double sum = 0.0L;
    for (int k = k_min; k <= k_max; ++k) {
        long double term = f[static_cast<size_t>(k)] *
                           f[static_cast<size_t>(a1 - k)] *
                           f[static_cast<size_t>(a2 - k)] *
                           f[static_cast<size_t>(a3 - k)] *
                           f[static_cast<size_t>(b1 + k)] *
                           f[static_cast<size_t>(b2 + k)];
        sum += (k % 2 == 0 ? 1.0L : -1.0L) / term;
    }

    const int phase_twice = j1.twice - j2.twice - m3.twice;  // even by selection rules
    const long double phase = (phase_twice / 2) % 2 == 0 ? 1.0L : -1.0L;
    return static_cast<double>(phase * std::sqrt(delta * norm) * sum);
}

double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    return wigner_3j(HalfInt::from_double(j1), HalfInt::from_double(j2), HalfInt::from_double(j3),
                     HalfInt::from_double(m1), HalfInt::from_double(m2), HalfInt::from_double(m3));
}

} // namespace hfsas
