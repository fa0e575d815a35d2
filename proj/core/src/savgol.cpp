#include "hfsas/savgol.hpp"

#include <Eigen/Dense>

#include "hfsas/errors.hpp"

namespace hfsas {

namespace {

// Row of the least-squares smoothing operator for evaluating the polynomial
// fit over offsets [lo, hi] at offset `at`.
Eigen::VectorXd projection_row(int lo, int hi, int at, int order) {
    const int n = hi - lo + 1;
    Eigen::MatrixXd v(n, order + 1);
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int c = 0; c <= order; ++c) {
            v(i, c) = p;
            p *= static_cast<double>(lo + i);
        }
    }
    Eigen::VectorXd e(order + 1);
    double p = 1.0;
    for (int c = 0; c <= order; ++c) {
        e(c) = p;
        p *= static_cast<double>(at);
    }
    // row = e^T (V^T V)^-1 V^T
    return v * (v.transpose() * v).ldlt().solve(e);
}

} // namespace

std::vector<double> savitzky_golay(std::span<const double> signal, int window, int order) {
    if (window % 2 == 0 || window < 3)
        throw ConfigError("savitzky_golay: window must be odd and >= 3");
    if (order < 1 || order >= window)
        throw ConfigError("savitzky_golay: need window > order >= 1");
    const int n = static_cast<int>(signal.size());
    if (window > n)
        throw ConfigError("savitzky_golay: window exceeds signal length");

    const int hw = window / 2;
    const Eigen::VectorXd center = projection_row(-hw, hw, 0, order);

    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int lo = -hw, hi = hw;
        if (i - hw < 0) lo = -i;
        if (i + hw > n - 1) hi = n - 1 - i;
        // keep the truncated fit overdetermined
        while (hi - lo + 1 <= order) {
            if (i + hi < n - 1) ++hi;
            else --lo;
        }
        double acc = 0.0;
        if (lo == -hw && hi == hw) {
            for (int k = -hw; k <= hw; ++k)
                acc += center(k + hw) * signal[static_cast<size_t>(i + k)];
        } else {
            // edge: refit the polynomial on the truncated window
            const Eigen::VectorXd row = projection_row(lo, hi, 0, order);
            for (int k = lo; k <= hi; ++k)
                acc += row(k - lo) * signal[static_cast<size_t>(i + k)];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

} // namespace hfsas
