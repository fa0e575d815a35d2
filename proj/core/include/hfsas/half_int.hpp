#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <string>

#include "hfsas/errors.hpp"

namespace hfsas {

/// Exact half-integer angular-momentum quantum number, stored as twice its
/// value. Keeps m_F bookkeeping and state labels free of float comparisons.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static HalfInt from_double(double v) {
        const double t = 2.0 * v;
        const double r = std::round(t);
        if (std::abs(t - r) > 1e-9)
            throw ConfigError("not a half-integer: " + std::to_string(v));
        return HalfInt{static_cast<int>(r)};
    }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
    /// Signed form used in transition labels, e.g. "+3/2", "-1/2".
    std::string signed_str() const {
        std::string s = str();
        if (twice >= 0) s.insert(s.begin(), '+');
        return s;
    }
};

inline HalfInt half(int twice) { return HalfInt{twice}; }

} // namespace hfsas
