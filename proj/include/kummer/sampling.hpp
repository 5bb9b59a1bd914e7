#pragma once

#include "kummer/rng.hpp"
#include "kummer/theta.hpp"

namespace kummer {

inline double uniform_pm1(Rng& rng) {
    return 2.0 * (static_cast<double>(rng.eng() >> 11) * 0x1.0p-53) - 1.0;
}

// Random period matrix with Im(tau) = L^T L + I/2 (always positive definite)
// and uniform Re(tau) entries in [-1, 1].
inline Tau random_tau(Rng& rng) {
    double l11 = uniform_pm1(rng), l12 = uniform_pm1(rng);
    double l21 = uniform_pm1(rng), l22 = uniform_pm1(rng);
    double i11 = l11 * l11 + l21 * l21 + 0.5;
    double i12 = l11 * l12 + l21 * l22;
    double i22 = l12 * l12 + l22 * l22 + 0.5;
    return Tau{Cpx(uniform_pm1(rng), i11), Cpx(uniform_pm1(rng), i12), Cpx(uniform_pm1(rng), i22)};
}

inline std::array<Cpx, 2> random_z(Rng& rng) {
    return {Cpx(0.5 * uniform_pm1(rng), 0.5 * uniform_pm1(rng)),
            Cpx(0.5 * uniform_pm1(rng), 0.5 * uniform_pm1(rng))};
}

}  // namespace kummer
