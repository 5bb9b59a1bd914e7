#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/numeric.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// Tropes of the nodal quartic in Rosenhain parameters: the six odd ones
// T_1..T_6, then the ten even ones T_ij6 in lexicographic order. Nodes are
// p_0, then p_ij in lexicographic order (the all_points order of f2geom).
inline constexpr std::array<std::string_view, 16> trope_names = {
    "1", "2", "3", "4", "5", "6", "126", "136", "146", "156",
    "236", "246", "256", "346", "356", "456"};
inline constexpr std::array<std::string_view, 16> node_names = {
    "0", "12", "13", "14", "15", "16", "23", "24", "25", "26",
    "34", "35", "36", "45", "46", "56"};

// Accept digits in any order and an optional leading 'T' / 'p'.
int trope_index(std::string_view name);
int node_index(std::string_view name);

// The six nodes on each trope (16_6 configuration), trope-major, ascending.
std::span<const std::array<int, 6>> trope_node_incidence();

// ---------------------------------------------------------------------------
// Coordinate tables and the quartic surface. The quartic is quadratic in z4:
// K2(z1,z2,z3) z4^2 + K1(z1,z2,z3) z4 + K0(z1,z2,z3) = 0.

template <class F>
std::array<std::array<F, 4>, 16> node_table(const std::array<F, 3>& lam) {
    const F &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    F zero(0), one(1);
    return {{
        {zero, zero, zero, one},
        {one, l1 + l2, l1 * l2, (l3 + one) * l1 * l2},
        {one, l1 + l3, l1 * l3, (l2 + one) * l1 * l3},
        {one, l1, zero, l2 * l3},
        {one, l1 + one, l1, l1 * (l2 + l3)},
        {zero, one, l1, l1 * l1},
        {one, l2 + l3, l2 * l3, (l1 + one) * l2 * l3},
        {one, l2, zero, l1 * l3},
        {one, l2 + one, l2, l2 * (l1 + l3)},
        {zero, one, l2, l2 * l2},
        {one, l3, zero, l1 * l2},
        {one, l3 + one, l3, l3 * (l1 + l2)},
        {zero, one, l3, l3 * l3},
        {one, one, zero, l1 * l2 * l3},
        {zero, one, zero, zero},
        {zero, one, one, one},
    }};
}

// The p_23 row with the repeated-lambda misprint in its last coordinate; it
// fails quartic membership and the incidence counts.
template <class F>
std::array<F, 4> node_p23_misprint(const std::array<F, 3>& lam) {
    const F &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    F one(1);
    return {one, l2 + l3, l2 * l3, (l1 + one) * l1 * l2};
}

template <class F>
std::array<std::array<F, 4>, 16> trope_table(const std::array<F, 3>& lam) {
    const F &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    F zero(0), one(1);
    return {{
        {l1 * l1, -l1, one, zero},
        {l2 * l2, -l2, one, zero},
        {l3 * l3, -l3, one, zero},
        {zero, zero, one, zero},
        {one, -one, one, zero},
        {one, zero, zero, zero},
        {-(l3 + one) * l1 * l2, l1 * l2, -(l1 + l2), one},
        {-(l2 + one) * l1 * l3, l1 * l3, -(l1 + l3), one},
        {-(l2 * l3), zero, -l1, one},
        {-(l1 * (l2 + l3)), l1, -(l1 + one), one},
        {-(l1 + one) * l2 * l3, l2 * l3, -(l2 + l3), one},
        {-(l1 * l3), zero, -l2, one},
        {-(l2 * (l1 + l3)), l2, -(l2 + one), one},
        {-(l1 * l2), zero, -l3, one},
        {-(l3 * (l1 + l2)), l3, -(l3 + one), one},
        {-(l1 * l2 * l3), zero, -one, one},
    }};
}

template <class F>
F plane_at(const std::array<F, 4>& plane, const std::array<F, 4>& z) {
    return plane[0] * z[0] + plane[1] * z[1] + plane[2] * z[2] + plane[3] * z[3];
}

template <class F>
F cf_k2(const std::array<F, 3>&, const F& z1, const F& z2, const F& z3) {
    return z2 * z2 - F(4) * z1 * z3;
}

template <class F>
F cf_k1(const std::array<F, 3>& lam, const F& z1, const F& z2, const F& z3) {
    const F &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    F e1 = l1 + l2 + l3, e2 = l1 * l2 + l1 * l3 + l2 * l3, e3 = l1 * l2 * l3;
    return (F(4) * (e1 + F(1)) * z1 - F(2) * z2) * z3 * z3
           + (F(4) * (e3 + e2) * z1 * z1 - F(2) * (e2 + e1) * z2 * z1) * z3
           - F(2) * e3 * z1 * z1 * z2;
}

template <class F>
F cf_k0(const std::array<F, 3>& lam, const F& z1, const F& z2, const F& z3) {
    const F &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    F e1 = l1 + l2 + l3, e2 = l1 * l2 + l1 * l3 + l2 * l3, e3 = l1 * l2 * l3;
    F c2 = e2 * e2 - F(4) * e1 * e3 - F(2) * e1 * e2 - F(2) * e3 + e1 * e1 - F(4) * e2;
    F z3sq = z3 * z3;
    return z3sq * z3sq - F(2) * (e2 + e1) * z1 * z3 * z3sq
           + (c2 * z1 * z1 + F(4) * (e3 + e2) * z1 * z2) * z3sq
           + (F(4) * e3 * (e1 + F(1)) * z1 * z1 * z2 - F(4) * e3 * z1 * z2 * z2
              - F(2) * e3 * (e2 + e1) * z1 * z1 * z1) * z3
           + e3 * e3 * z1 * z1 * z1 * z1;
}

template <class F>
F cf_quartic(const std::array<F, 3>& lam, const std::array<F, 4>& z) {
    return cf_k2(lam, z[0], z[1], z[2]) * z[3] * z[3]
           + cf_k1(lam, z[0], z[1], z[2]) * z[3] + cf_k0(lam, z[0], z[1], z[2]);
}

// Product of the six odd trope lines; 16 times it is the z4-discriminant
// K1^2 - 4 K0 K2, and it is the square of the shifted coordinate
// (2 K2 z4 + K1) / 4.
template <class F>
F branch_sextic(const std::array<F, 3>& lam, const F& z1, const F& z2, const F& z3) {
    F s = z1 * z3 * (z1 - z2 + z3);
    for (const F& li : lam) s = s * (li * li * z1 - li * z2 + z3);
    return s;
}

// z4 of a surface point over Q(sqrt(S)) above rational (z1, z2, z3), with
// S the branch sextic value there; requires K2 != 0.
QuadExt cf_surface_z4(const std::array<Rat, 3>& lam, const Rat& z1, const Rat& z2,
                      const Rat& z3);

// All sixteen trope planes evaluated at that surface point.
std::array<QuadExt, 16> trope_values_at(const std::array<Rat, 3>& lam, const Rat& z1,
                                        const Rat& z2, const Rat& z3);

// ---------------------------------------------------------------------------
// Relation catalog. Coefficients are signed products of differences
// (lambda_i - lambda_j) under the conventions lambda_4 = 0, lambda_5 = 1.

struct LambdaFactor {
    int i, j;
};

template <class F>
F lambda_factor_value(LambdaFactor f, const std::array<F, 3>& lam) {
    auto at = [&](int k) { return k <= 3 ? lam[k - 1] : (k == 4 ? F(0) : F(1)); };
    return at(f.i) - at(f.j);
}

template <class F>
F coeff_product(std::span<const LambdaFactor> fs, const std::array<F, 3>& lam) {
    F c(1);
    for (const LambdaFactor& f : fs) c = c * lambda_factor_value(f, lam);
    return c;
}

// One term: sign * prod factors * X_a (* X_b). b < 0 on linear terms; on
// section rows (a, b) names the paired square root t_{a,b}, on quadratic rows
// the product T_a T_b.
struct TropeTerm {
    int sign;
    int nfactors;
    std::array<LambdaFactor, 6> factors;
    int a, b;
};

struct TropeRelation {
    std::string id;
    std::string text;  // catalog source row, byte-exact
    int nterms;
    std::array<TropeTerm, 4> terms;
};

template <class F>
F term_coefficient(const TropeTerm& t, const std::array<F, 3>& lam) {
    F c(t.sign);
    for (int k = 0; k < t.nfactors; ++k) c = c * lambda_factor_value(t.factors[k], lam);
    return c;
}

// Plugs per-trope values in: X_p = values[p]. For section rows this treats
// the pair monomial as values[a] * values[b], which is NOT the signed square
// root; use section_residual for those.
template <class F>
F evaluate(const TropeRelation& rel, const std::array<F, 3>& lam,
           const std::array<F, 16>& values) {
    F sum(0);
    for (int k = 0; k < rel.nterms; ++k) {
        const TropeTerm& t = rel.terms[k];
        F v = term_coefficient(t, lam) * values[t.a];
        if (t.b >= 0) v = v * values[t.b];
        sum = sum + v;
    }
    return sum;
}

// Twelve generating linear relations (three odd rows, nine mixed rows).
std::span<const TropeRelation> trope_linear_relations();
// Fifteen four-term linear relations among the odd tropes and T_6 (rank 3).
std::span<const TropeRelation> trope_four_term_relations();
// Sixty three-term relations between the paired square-root sections.
std::span<const TropeRelation> trope_bimonomial_relations();
// The repeated-trope row and the two completions of the dropped factor index,
// as printed before correction; all three fail.
std::span<const TropeRelation> trope_linear_misprints();

// Thirty relations between products of disjoint trope pairs. Term
// coefficients are mu nu rho, gamma delta mu, beta delta nu, beta gamma rho
// with mu + nu + rho = 0 and beta mu + gamma nu + delta rho = 0.
struct TropeQuadratic {
    TropeRelation rel;
    std::array<std::vector<LambdaFactor>, 6> coeff;  // mu..delta; empty = 1
};
std::span<const TropeQuadratic> trope_quadratic_relations();

// Exact on-surface certificate for a three-term section row: with
// X_k = c_k^2 T_{a_k} T_{b_k} at a point over Q(sqrt(S)), the row holds iff
// X1^2 + X2^2 + X3^2 - 2(X1 X2 + X1 X3 + X2 X3) vanishes.
QuadExt bimonomial_certificate(const TropeRelation& rel, const std::array<Rat, 3>& lam,
                               const Rat& z1, const Rat& z2, const Rat& z3);

// One row per line, "id text", linear + four-term + section + quadratic.
std::string canonical_trope_catalog_text();
std::uint64_t trope_catalog_checksum();

// Parse a row of the catalog DSL ("sign factors:monomial" tokens, factors
// "ij" for lambda_i - lambda_j joined by '.', monomial a trope name or pair).
TropeRelation parse_trope_relation(std::string id, std::string text);

// ---------------------------------------------------------------------------
// Theta dictionary. T_a = sign * prod theta_i^{2 e_i} * theta_m(z)^2 in the
// normalization (overall constant 1) under which every lambda-coefficient
// relation holds with lambda the squared theta-constant ratios.

struct TropeSection {
    int sign;                  // -1 on the six odd tropes, +1 on the even ones
    std::array<int, 10> expo;  // square-root-level exponents e_1..e_10
    int m;                     // index of the z-dependent factor
};
std::span<const TropeSection> trope_theta_dictionary();  // trope_names order

// Signed square roots t_{a,b} of T_a T_b: a unit i on mixed-parity pairs and
// a sign that is -1 exactly on the ten pairs {T_6, even trope}. The sign
// table was pinned by requiring each catalog section row to vanish on theta
// values and checking global consistency over all sixty rows.
struct PairSection {
    int a, b;  // trope indices, a < b
    int sign;
    bool imaginary;
    std::array<int, 10> expo;  // sums of the two square-root exponent vectors
    int ma, mb;                // z-dependent factors
};
std::span<const PairSection> trope_pair_sections();  // 120, lexicographic
int pair_index(int a, int b);

// Numeric values; 1-indexed inputs as produced by theta_constants and
// eval_all_theta via one_indexed.
Cpx trope_value(const TropeSection& s, const std::array<Cpx, 17>& consts,
                const std::array<Cpx, 17>& at_z);
std::array<Cpx, 16> trope_values(const std::array<Cpx, 17>& consts,
                                 const std::array<Cpx, 17>& at_z);
Cpx pair_section_value(const PairSection& s, const std::array<Cpx, 17>& consts,
                       const std::array<Cpx, 17>& at_z);

// Scaled residuals |sum| / max |term| on theta values: per-trope values for
// linear and quadratic rows, signed pair sections for section rows.
double relation_residual(const TropeRelation& rel, const std::array<Cpx, 3>& lam,
                         const std::array<Cpx, 16>& values);
double section_residual(const TropeRelation& rel, const std::array<Cpx, 3>& lam,
                        const std::array<Cpx, 17>& consts, const std::array<Cpx, 17>& at_z);

// "+"/"-" per pair in pair order, and its checksum lock.
std::string section_sign_table();
std::uint64_t sign_table_checksum();

}  // namespace kummer
