#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "kummer/numeric.hpp"
#include "kummer/theta.hpp"

namespace kummer {

// One term of a quadratic theta relation:
//   sign * theta_{c1} theta_{c2} * theta_{m1}(z) theta_{m2}(z),
// with c1 == c2 (resp. m1 == m2) denoting a squared constant (resp. a
// squared function value). Indices are the fixed 1..16 theta numbering.
struct ThetaTerm {
    int sign;
    int c1, c2;
    int m1, m2;
};

struct ThetaRelation {
    std::string_view id;
    int nterms;
    std::array<ThetaTerm, 4> terms;
};

// The twelve four-term relations between squares of theta functions.
std::span<const ThetaRelation> mumford_square_relations();

// The sixty three-term relations between bimonomials theta_i(z)theta_j(z).
// Three catalog rows carry a corrected third-term sign; the literal variants
// are available via mumford_bimonomial_misprints().
std::span<const ThetaRelation> mumford_bimonomial_relations();

// All 72 relations, squares first.
std::span<const ThetaRelation> mumford_relations();

// The three bimonomial rows as printed before sign correction; these fail.
std::span<const ThetaRelation> mumford_bimonomial_misprints();

template <class F>
F evaluate(const ThetaRelation& rel, const std::array<F, 17>& consts,
           const std::array<F, 17>& at_z) {
    F sum{};
    for (int t = 0; t < rel.nterms; ++t) {
        const ThetaTerm& term = rel.terms[t];
        F val = consts[term.c1] * consts[term.c2] * at_z[term.m1] * at_z[term.m2];
        sum += term.sign > 0 ? val : -val;
    }
    return sum;
}

// |sum| / max |term|; independent of the projective scaling of either input.
double relative_residual(const ThetaRelation& rel, const std::array<Cpx, 17>& consts,
                         const std::array<Cpx, 17>& at_z);

// One relation per line, "id s(c1,c2)(m1,m2) ..." tokens in catalog order.
std::string canonical_catalog_text();

// FNV-1a-64 of canonical_catalog_text(); locks the transcription.
std::uint64_t catalog_checksum();

std::uint64_t fnv1a64(std::string_view text);

}  // namespace kummer
