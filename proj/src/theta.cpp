#include "kummer/theta.hpp"

#include <cmath>
#include <numbers>

namespace kummer {

const std::array<ThetaChar, 16> theta_characteristics = {{
    {0, 0, 0, 0},  // 1
    {0, 0, 1, 1},  // 2
    {0, 0, 1, 0},  // 3
    {0, 0, 0, 1},  // 4
    {1, 0, 0, 0},  // 5
    {1, 0, 0, 1},  // 6
    {0, 1, 0, 0},  // 7
    {1, 1, 0, 0},  // 8
    {0, 1, 1, 0},  // 9
    {1, 1, 1, 1},  // 10
    {0, 1, 0, 1},  // 11
    {0, 1, 1, 1},  // 12
    {1, 1, 0, 1},  // 13
    {1, 0, 1, 0},  // 14
    {1, 0, 1, 1},  // 15
    {1, 1, 1, 0},  // 16
}};

bool theta_is_even(int i) { return i >= 1 && i <= 10; }

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest eigenvalue of Im(tau); also validates positive definiteness.
double im_tau_lambda_min(const Tau& tau) {
    const double a = tau.t11.imag(), b = tau.t12.imag(), c = tau.t22.imag();
    const double tr = a + c, det = a * c - b * b;
    if (!(a > 0.0) || !(det > 0.0)) throw DomainError("Im(tau) is not positive definite");
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return tr / 2.0 - disc;
}

}  // namespace

int truncation_radius(const Tau& tau, double tol, const std::array<Cpx, 2>& z) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    const double lam = im_tau_lambda_min(tau);
    const double y = std::hypot(z[0].imag(), z[1].imag());

    // Lattice points u with |u|_inf = k contribute terms bounded by
    // exp(-pi*lam*r^2 + 2*pi*y*(sqrt(2)*(k+1/2))) with r = k - 1/2 (the
    // half-integer shift can pull |u + a/2| down by 1/2), and there are at
    // most 8k+4 of them per characteristic. Find the first shell where the
    // remaining tail is below tol.
    auto shell_bound = [&](int k) {
        const double r = k - 0.5;
        const double mag = std::exp(-kPi * lam * r * r + 2.0 * kPi * y * std::sqrt(2.0) * (k + 0.5));
        return (8.0 * k + 4.0) * mag;
    };
    for (int R = 1; R <= 64; ++R) {
        double tail = 0.0;
        for (int k = R; k <= R + 256; ++k) {
            tail += shell_bound(k);
            if (tail > tol) break;
        }
        // the summand decays superexponentially once pi*lam*k dominates, so a
        // 256-shell window is a safe stand-in for the full tail
        if (tail < tol && shell_bound(R + 256) < tol * 1e-6) return R;
    }
    throw DomainError("theta series does not reach requested tolerance (Im(tau) too small)");
}

std::array<Cpx, 16> eval_all_theta(const std::array<Cpx, 2>& z, const Tau& tau, double tol) {
    const int R = truncation_radius(tau, tol, z);
    std::array<Cpx, 16> acc{};

    const Cpx i2pi(0.0, 2.0 * kPi);
    const Cpx ipi(0.0, kPi);
    for (int u1 = -R; u1 <= R; ++u1) {
        for (int u2 = -R; u2 <= R; ++u2) {
            // group by the a-characteristic: m = u + a/2
            for (int a1 = 0; a1 <= 1; ++a1) {
                for (int a2 = 0; a2 <= 1; ++a2) {
                    const double m1 = u1 + 0.5 * a1, m2 = u2 + 0.5 * a2;
                    const Cpx quad = m1 * m1 * tau.t11 + 2.0 * m1 * m2 * tau.t12 + m2 * m2 * tau.t22;
                    const Cpx base = std::exp(ipi * quad + i2pi * (m1 * z[0] + m2 * z[1]));
                    for (int idx = 0; idx < 16; ++idx) {
                        const ThetaChar& ch = theta_characteristics[idx];
                        if (ch.a1 != a1 || ch.a2 != a2) continue;
                        // b-phase: exp(pi*i*(m1*b1 + m2*b2)); m half-integer
                        const double phase = m1 * ch.b1 + m2 * ch.b2;
                        acc[idx] += base * std::exp(ipi * phase);
                    }
                }
            }
        }
    }
    return acc;
}

Cpx eval_theta(int i, const std::array<Cpx, 2>& z, const Tau& tau, double tol) {
    if (i < 1 || i > 16) throw DomainError("theta index out of range");
    return eval_all_theta(z, tau, tol)[i - 1];
}

std::array<Cpx, 16> theta_constants(const Tau& tau, double tol) {
    std::array<Cpx, 16> v = eval_all_theta({Cpx(0), Cpx(0)}, tau, tol);
    for (int i = 11; i <= 16; ++i) v[i - 1] = Cpx(0);  // odd functions vanish identically at z=0
    return v;
}

std::array<Cpx, 16> eval_all_doubled(const std::array<Cpx, 2>& z, const Tau& tau, double tol) {
    const Tau tau2{2.0 * tau.t11, 2.0 * tau.t12, 2.0 * tau.t22};
    // swapped characteristics: doubled index i evaluates [b^(i); a^(i)] at 2*tau
    std::array<Cpx, 16> raw = eval_all_theta(z, tau2, tol);
    std::array<Cpx, 16> out{};
    for (int i = 0; i < 16; ++i) {
        const ThetaChar& ch = theta_characteristics[i];
        for (int j = 0; j < 16; ++j) {
            const ThetaChar& cj = theta_characteristics[j];
            if (cj.a1 == ch.b1 && cj.a2 == ch.b2 && cj.b1 == ch.a1 && cj.b2 == ch.a2) {
                out[i] = raw[j];
                break;
            }
        }
    }
    return out;
}

std::array<Cpx, 16> doubled_constants(const Tau& tau, double tol) {
    std::array<Cpx, 16> v = eval_all_doubled({Cpx(0), Cpx(0)}, tau, tol);
    // swapping [a;b] -> [b;a] preserves parity, so the odd slots again vanish
    for (int i = 0; i < 16; ++i)
        if (!theta_is_even(i + 1)) v[i] = Cpx(0);
    return v;
}

}  // namespace kummer
