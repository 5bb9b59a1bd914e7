#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kummer/numeric.hpp"
#include "kummer/rational.hpp"
#include "kummer/theta.hpp"

namespace kummer {

struct NotAJacobianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point of P^1, v = 0 encoding infinity.
template <class F>
struct ProjRoot {
    F u, v;
};

// Genus-2 sextic y^2 = lead * prod (v_i x - u_i), with degree-drop at infinite
// roots; six projective roots.
template <class F>
struct SexticModel {
    F lead;
    std::vector<ProjRoot<F>> roots;
};

// ---------------------------------------------------------------------------
// Rosenhain roots from theta constants.
// Input arrays are 1-indexed squares of the constants (slot 0 unused).

template <class F>
std::array<F, 3> rosenhain_from_theta_squares(const std::array<F, 17>& t2) {
    return {t2[1] * t2[3] / (t2[2] * t2[4]), t2[3] * t2[8] / (t2[4] * t2[10]),
            t2[1] * t2[8] / (t2[2] * t2[10])};
}

std::array<Cpx, 3> rosenhain_from_tau(const Tau& tau, double tol = 1e-12);

// Rosenhain roots of the curve attached to 2*tau: the closed forms in the
// theta constants at tau (including the theta_1..theta_4 product cross term),
// and the direct ratio of second-order constants. The two agree.
std::array<Cpx, 3> isogenous_rosenhain_from_theta(const std::array<Cpx, 17>& theta);
std::array<Cpx, 3> isogenous_rosenhain_from_tau(const Tau& tau, double tol = 1e-12);
std::array<Cpx, 3> isogenous_rosenhain_doubled(const Tau& tau, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Thomae fourth powers, scale R, with the corrected third row; the misprinted
// variant is kept for the failing-literal evidence.

template <class F>
std::array<F, 10> thomae_fourth_powers(const F& l1, const F& l2, const F& l3,
                                       const F& R) {
    F one(1);
    return {
        R * l3 * l1 * (l2 - one) * (l3 - l1),
        R * l2 * (l2 - one) * (l3 - l1),
        R * l2 * l1 * (l2 - l1) * (l3 - one),
        R * l3 * (l3 - one) * (l2 - l1),
        R * l1 * (l2 - one) * (l3 - one) * (l3 - l2),
        R * (l3 - l2) * (l3 - l1) * (l2 - l1),
        R * l2 * (l3 - one) * (l1 - one) * (l3 - l1),
        R * l2 * l3 * (l3 - l2) * (l1 - one),
        R * l3 * (l2 - one) * (l1 - one) * (l2 - l1),
        R * l1 * (l1 - one) * (l3 - l2),
    };
}

template <class F>
F thomae_row3_misprint(const F& l1, const F& l2, const F& l3, const F& R) {
    return R * l2 * l1 * (l2 - l1) * (l3 - l1);
}

// Inverse direction on fourth powers: the pair ratios are exact squares of
// the roots; takes the positive branch (valid for positive lambda).
std::array<Rat, 3> rosenhain_from_fourth_powers(const std::array<Rat, 10>& t4);

// ---------------------------------------------------------------------------
// l with l^2 = l1*l2*l3, and the primed isogeny coordinates.

// Product form theta1^2 theta3^2 theta8^2 / (theta2^2 theta4^2 theta10^2).
template <class F>
F l_function(const std::array<F, 17>& t2) {
    return t2[1] * t2[3] * t2[8] / (t2[2] * t2[4] * t2[10]);
}

// Closed form in the second-order constants (unsquared, 1-indexed).
// variant 0: as printed; 1: bilinear index fixed only; 2: index fixed and the
// two bilinear factors swapped between numerator and denominator. Variant 2
// is the one satisfying l^2 = l1*l2*l3.
Cpx l_closed_form(const std::array<Cpx, 17>& doubled, int variant);

template <class F>
std::array<F, 3> moduli_prime_coords(const std::array<F, 3>& l, const F& lroot) {
    return {(l[0] + l[1] * l[2]) / lroot, (l[1] + l[0] * l[2]) / lroot,
            (l[2] + l[0] * l[1]) / lroot};
}

// Exact-mode helper: square root of l1*l2*l3 if it exists.
std::optional<Rat> l_value_exact(const std::array<Rat, 3>& l);

// The relations between primed coordinates on the two sides of the isogeny.
// The same map in both directions; exactly self-inverse.
template <class F>
std::array<F, 3> isogeny_moduli_map(const std::array<F, 3>& p) {
    F two(2), four(4);
    F d = p[1] - p[2];
    F w0 = two * (two * p[0] - p[1] - p[2]) / d;
    F num = four * (p[0] - p[1]) * (p[0] - p[2]);
    return {w0, w0 - num / ((p[0] + two) * d), w0 - num / ((p[0] - two) * d)};
}

// ---------------------------------------------------------------------------
// Richelot isogeny. Quadratics are coefficient triples [c2, c1, c0].

template <class F>
using Quadratic = std::array<F, 3>;

struct IsogenyPairing {
    // partition of slots 1..6 into pairs; slots map to roots
    // (l1, l2, l3, 0, 1, infinity)
    std::array<std::array<int, 2>, 3> pairs;
};

template <class F>
struct RichelotData {
    std::array<Quadratic<F>, 3> factors;   // A, B, C from the pairing
    std::array<Quadratic<F>, 3> brackets;  // [B,C], [C,A], [A,B]
    F delta;                               // det of (A,B,C) coefficients
};

template <class F>
Quadratic<F> derivative_bracket(const Quadratic<F>& f, const Quadratic<F>& g) {
    return {f[0] * g[1] - f[1] * g[0], (f[0] * g[2] - f[2] * g[0]) * F(2),
            f[1] * g[2] - f[2] * g[1]};
}

template <class F>
RichelotData<F> richelot(const std::array<F, 3>& l, const IsogenyPairing& pairing) {
    std::array<ProjRoot<F>, 7> slot{};  // 1-indexed
    slot[1] = {l[0], F(1)};
    slot[2] = {l[1], F(1)};
    slot[3] = {l[2], F(1)};
    slot[4] = {F(0), F(1)};
    slot[5] = {F(1), F(1)};
    slot[6] = {F(1), F(0)};

    bool used[7] = {};
    RichelotData<F> out;
    for (int k = 0; k < 3; ++k) {
        auto [i, j] = pairing.pairs[k];
        if (i < 1 || i > 6 || j < 1 || j > 6 || i == j || used[i] || used[j])
            throw std::invalid_argument("pairing must partition the six root slots");
        used[i] = used[j] = true;
        // (v_i x - u_i)(v_j x - u_j)
        const auto &a = slot[i], &b = slot[j];
        out.factors[k] = {a.v * b.v, F(0) - (a.v * b.u + a.u * b.v), a.u * b.u};
    }
    const auto &A = out.factors[0], &B = out.factors[1], &C = out.factors[2];
    out.brackets = {derivative_bracket(B, C), derivative_bracket(C, A),
                    derivative_bracket(A, B)};
    out.delta = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                A[2] * (B[0] * C[1] - B[1] * C[0]);
    return out;
}

// Numeric root extraction for a product of three quadratics.
SexticModel<Cpx> sextic_from_quadratics(const std::array<Quadratic<Cpx>, 3>&);
// Numeric image curve: roots of the three brackets.
SexticModel<Cpx> richelot_image(const std::array<Cpx, 3>& l, const IsogenyPairing&);
// Exact image: every bracket must split over the rationals.
SexticModel<Rat> richelot_image_exact(const std::array<Rat, 3>& l, const IsogenyPairing&);

// ---------------------------------------------------------------------------
// Curve-class comparison: does some Moebius transformation sending three of
// the model's roots to (0, 1, infinity) carry the remaining three onto the
// given Rosenhain triple? Tries all orderings.
bool matches_rosenhain(const SexticModel<Cpx>& model, const std::array<Cpx, 3>& l,
                       double tol);
bool matches_rosenhain_exact(const SexticModel<Rat>& model, const std::array<Rat, 3>& l);

}  // namespace kummer
