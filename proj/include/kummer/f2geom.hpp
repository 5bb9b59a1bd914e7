#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kummer {

// Order-two point on the Jacobian, stored as a subset of {1..6} of size 0 or 2
// (p_0 is the empty set, p_ij the pair {i,j}). Bit k set means index k.
struct TwoTorsion {
    std::uint8_t set = 0;
    friend bool operator==(TwoTorsion a, TwoTorsion b) { return a.set == b.set; }
    friend auto operator<=>(TwoTorsion a, TwoTorsion b) { return a.set <=> b.set; }
};

// Theta divisor / trope label: {i} for the six odd ones, {i,j,6} for the ten
// even ones.
struct DivisorLabel {
    std::uint8_t set = 0;
    friend bool operator==(DivisorLabel a, DivisorLabel b) { return a.set == b.set; }
    friend auto operator<=>(DivisorLabel a, DivisorLabel b) { return a.set <=> b.set; }
};

TwoTorsion torsion_point(std::initializer_list<int> ij);  // {} or {i,j}
DivisorLabel divisor(std::initializer_list<int> ids);     // {i} or {i,j,6}

const std::array<TwoTorsion, 16>& all_points();    // p0, then p_ij lexicographic
const std::array<DivisorLabel, 16>& all_divisors();  // T1..T6, then T_ij6 lexicographic

std::string point_name(TwoTorsion p);    // "p0", "p12", ...
std::string divisor_name(DivisorLabel d);  // "T1", "T126", ...
TwoTorsion point_by_name(const std::string&);
DivisorLabel divisor_by_name(const std::string&);

TwoTorsion tt_add(TwoTorsion a, TwoTorsion b);
int weil_pairing(TwoTorsion a, TwoTorsion b);  // |S_a cap S_b| mod 2

// F_2^4 matrix (a1, a2, a3, a4) attached to each order-two point.
std::array<int, 4> point_matrix(TwoTorsion p);
int symplectic_form(const std::array<int, 4>& A, const std::array<int, 4>& B);

// Theta function index (1..16) attached to each divisor, and the induced
// plane index in F_2^4 (characteristic matrix plus the all-ones matrix).
int divisor_theta_index(DivisorLabel d);
DivisorLabel divisor_by_theta_index(int i);
std::array<int, 4> plane_matrix(DivisorLabel d);

// 16_6 incidence: a plane contains the points agreeing with its index matrix
// in exactly one column.
bool divisor_contains(DivisorLabel d, TwoTorsion p);
std::vector<TwoTorsion> divisor_points(DivisorLabel d);

using Subgroup = std::array<TwoTorsion, 4>;  // sorted, includes p0
std::vector<Subgroup> goepel_groups();       // 15 isotropic planes
std::vector<Subgroup> rosenhain_groups();    // 20 non-isotropic subgroups
// Cosets (including the subgroups themselves), each sorted; 60 and 80 total.
std::vector<Subgroup> goepel_translates();
std::vector<Subgroup> rosenhain_translates();

// Mehran even eights: points (or tropes) meeting {i,j} in exactly one index.
std::vector<TwoTorsion> even_eight_points(int i, int j);
std::vector<DivisorLabel> even_eight_tropes(int i, int j);

}  // namespace kummer
