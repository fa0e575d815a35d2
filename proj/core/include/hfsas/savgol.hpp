#pragma once

#include <span>
#include <vector>

namespace hfsas {

/// Savitzky-Golay smoothing: local least-squares polynomial of the given
/// order over an odd window. Edges are handled by refitting the polynomial
/// on the truncated window, so polynomials of degree <= order are fixed
/// points everywhere. Throws ConfigError on invalid window/order.
std::vector<double> savitzky_golay(std::span<const double> signal,
                                   int window, int order);

} // namespace hfsas
