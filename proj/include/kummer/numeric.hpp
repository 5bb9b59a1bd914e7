#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>

namespace kummer {

using Cpx = std::complex<double>;

// Residual of a sum that ought to vanish, scaled by its largest term.
// A sum of terms that are all tiny counts as zero.
inline double scaled_residual(Cpx sum, std::initializer_list<Cpx> terms) {
    double scale = 0.0;
    for (const Cpx& t : terms) scale = std::max(scale, std::abs(t));
    if (scale < 1e-300) return std::abs(sum);
    return std::abs(sum) / scale;
}

inline double rel_diff(Cpx lhs, Cpx rhs) {
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale < 1e-300) return std::abs(lhs - rhs);
    return std::abs(lhs - rhs) / scale;
}

}  // namespace kummer
