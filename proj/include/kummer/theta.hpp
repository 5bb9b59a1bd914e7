#pragma once

#include <array>
#include <stdexcept>

#include "kummer/numeric.hpp"

namespace kummer {

// Symmetric 2x2 period matrix; Im(tau) must be positive definite.
struct Tau {
    Cpx t11, t12, t22;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Half-integer characteristic [a1 a2; b1 b2] of theta_i, 1-indexed lookup.
struct ThetaChar {
    int a1, a2, b1, b2;
};
extern const std::array<ThetaChar, 16> theta_characteristics;

// theta_1..theta_10 are the even functions, theta_11..theta_16 the odd ones.
bool theta_is_even(int i);

// Smallest lattice cutoff R so that the discarded tail of the theta series is
// below tol for every characteristic, at elliptic argument z.
int truncation_radius(const Tau& tau, double tol, const std::array<Cpx, 2>& z = {Cpx(0), Cpx(0)});

std::array<Cpx, 16> eval_all_theta(const std::array<Cpx, 2>& z, const Tau& tau, double tol = 1e-12);
Cpx eval_theta(int i, const std::array<Cpx, 2>& z, const Tau& tau, double tol = 1e-12);

// Theta constants: z = 0, with the six odd entries pinned to exactly zero.
std::array<Cpx, 16> theta_constants(const Tau& tau, double tol = 1e-12);

// Doubled functions: index i evaluates the swapped characteristic [b; a] at 2*tau.
std::array<Cpx, 16> eval_all_doubled(const std::array<Cpx, 2>& z, const Tau& tau, double tol = 1e-12);
std::array<Cpx, 16> doubled_constants(const Tau& tau, double tol = 1e-12);

// Shift into the 1-indexed layout used by the printed relation tables
// (slot 0 unused).
template <class T>
std::array<T, 17> one_indexed(const std::array<T, 16>& v) {
    std::array<T, 17> out{};
    for (int i = 0; i < 16; ++i) out[i + 1] = v[i];
    return out;
}

}  // namespace kummer
