#include "kummer/f2geom.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace kummer {
namespace {

constexpr std::uint8_t kFullSet = 0b0111'1110;  // indices 1..6

std::uint8_t bits_of(std::initializer_list<int> ids) {
    std::uint8_t s = 0;
    for (int i : ids) {
        if (i < 1 || i > 6) throw std::invalid_argument("index out of range");
        s |= std::uint8_t(1u << i);
    }
    return s;
}

// Order-two points in canonical order with their F_2^4 matrices (a1,a2,a3,a4).
struct PointRow {
    std::uint8_t set;
    std::array<int, 4> mat;
};
constexpr PointRow kPointTable[16] = {
    {0, {0, 0, 0, 0}},                   // p0
    {0b0000'0110, {1, 1, 0, 0}},         // p12
    {0b0000'1010, {1, 1, 1, 0}},         // p13
    {0b0001'0010, {0, 1, 0, 1}},         // p14
    {0b0010'0010, {0, 0, 0, 1}},         // p15
    {0b0100'0010, {0, 1, 1, 0}},         // p16
    {0b0000'1100, {0, 0, 1, 0}},         // p23
    {0b0001'0100, {1, 0, 0, 1}},         // p24
    {0b0010'0100, {1, 1, 0, 1}},         // p25
    {0b0100'0100, {1, 0, 1, 0}},         // p26
    {0b0001'1000, {1, 0, 1, 1}},         // p34
    {0b0010'1000, {1, 1, 1, 1}},         // p35
    {0b0100'1000, {1, 0, 0, 0}},         // p36
    {0b0011'0000, {0, 1, 0, 0}},         // p45
    {0b0101'0000, {0, 0, 1, 1}},         // p46
    {0b0110'0000, {0, 1, 1, 1}},         // p56
};

// Divisors in canonical order with theta index and the six contained points
// (as indices into kPointTable).
struct DivisorRow {
    std::uint8_t set;
    int theta;
    std::array<int, 6> inc;
};
constexpr DivisorRow kDivisorTable[16] = {
    {0b0000'0010, 15, {0, 1, 2, 3, 4, 5}},     // T1: p0 p12 p13 p14 p15 p16
    {0b0000'0100, 12, {0, 1, 6, 7, 8, 9}},     // T2: p0 p12 p23 p24 p25 p26
    {0b0000'1000, 11, {0, 2, 6, 10, 11, 12}},  // T3: p0 p13 p23 p34 p35 p36
    {0b0001'0000, 16, {0, 3, 7, 10, 13, 14}},  // T4: p0 p14 p24 p34 p45 p46
    {0b0010'0000, 14, {0, 4, 8, 11, 13, 15}},  // T5: p0 p15 p25 p35 p45 p56
    {0b0100'0000, 13, {0, 5, 9, 12, 14, 15}},  // T6: p0 p16 p26 p36 p46 p56
    {0b0100'0110, 4, {1, 5, 9, 10, 11, 13}},   // T126: p12 p16 p26 p34 p35 p45
    {0b0100'1010, 2, {2, 5, 7, 8, 12, 13}},    // T136: p13 p16 p24 p25 p36 p45
    {0b0101'0010, 5, {3, 5, 6, 8, 11, 14}},    // T146: p14 p16 p23 p25 p35 p46
    {0b0110'0010, 8, {4, 5, 6, 7, 10, 15}},    // T156: p15 p16 p23 p24 p34 p56
    {0b0100'1100, 10, {3, 4, 6, 9, 12, 13}},   // T236: p14 p15 p23 p26 p36 p45
    {0b0101'0100, 7, {2, 4, 7, 9, 11, 14}},    // T246: p13 p15 p24 p26 p35 p46
    {0b0110'0100, 1, {2, 3, 8, 9, 10, 15}},    // T256: p13 p14 p25 p26 p34 p56
    {0b0101'1000, 9, {1, 4, 8, 10, 12, 14}},   // T346: p12 p15 p25 p34 p36 p46
    {0b0110'1000, 3, {1, 3, 7, 11, 12, 15}},   // T356: p12 p14 p24 p35 p36 p56
    {0b0111'0000, 6, {1, 2, 6, 13, 14, 15}},   // T456: p12 p13 p23 p45 p46 p56
};

// Characteristics in the fixed numbering, as (a1,a2,b1,b2).
constexpr std::array<int, 4> kThetaChar[17] = {
    {},
    {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1},
    {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}, {1, 1, 0, 0},
    {0, 1, 1, 0}, {1, 1, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1},
    {1, 1, 0, 1}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 0},
};

int point_slot(TwoTorsion p) {
    for (int i = 0; i < 16; ++i)
        if (kPointTable[i].set == p.set) return i;
    throw std::invalid_argument("not an order-two point label");
}

int divisor_slot(DivisorLabel d) {
    for (int i = 0; i < 16; ++i)
        if (kDivisorTable[i].set == d.set) return i;
    throw std::invalid_argument("not a divisor label");
}

std::vector<Subgroup> two_dim_subgroups(bool isotropic) {
    const auto& pts = all_points();
    std::set<Subgroup> out;
    for (int i = 1; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            TwoTorsion a = pts[i], b = pts[j];
            if (weil_pairing(a, b) != (isotropic ? 0 : 1)) continue;
            Subgroup g{TwoTorsion{}, a, b, tt_add(a, b)};
            std::sort(g.begin(), g.end());
            out.insert(g);
        }
    return {out.begin(), out.end()};
}

std::vector<Subgroup> cosets_of(const std::vector<Subgroup>& groups) {
    const auto& pts = all_points();
    std::set<Subgroup> out;
    for (const auto& g : groups)
        for (TwoTorsion t : pts) {
            Subgroup c;
            for (int k = 0; k < 4; ++k) c[k] = tt_add(t, g[k]);
            std::sort(c.begin(), c.end());
            out.insert(c);
        }
    return {out.begin(), out.end()};
}

}  // namespace

TwoTorsion torsion_point(std::initializer_list<int> ij) {
    if (ij.size() != 0 && ij.size() != 2)
        throw std::invalid_argument("order-two point needs zero or two indices");
    TwoTorsion p{bits_of(ij)};
    if (std::popcount(p.set) != int(ij.size()))
        throw std::invalid_argument("repeated index");
    point_slot(p);
    return p;
}

DivisorLabel divisor(std::initializer_list<int> ids) {
    DivisorLabel d{bits_of(ids)};
    divisor_slot(d);
    return d;
}

const std::array<TwoTorsion, 16>& all_points() {
    static const std::array<TwoTorsion, 16> pts = [] {
        std::array<TwoTorsion, 16> a;
        for (int i = 0; i < 16; ++i) a[i] = TwoTorsion{kPointTable[i].set};
        return a;
    }();
    return pts;
}

const std::array<DivisorLabel, 16>& all_divisors() {
    static const std::array<DivisorLabel, 16> ds = [] {
        std::array<DivisorLabel, 16> a;
        for (int i = 0; i < 16; ++i) a[i] = DivisorLabel{kDivisorTable[i].set};
        return a;
    }();
    return ds;
}

std::string point_name(TwoTorsion p) {
    point_slot(p);
    if (p.set == 0) return "p0";
    std::string s = "p";
    for (int i = 1; i <= 6; ++i)
        if (p.set & (1u << i)) s += char('0' + i);
    return s;
}

std::string divisor_name(DivisorLabel d) {
    divisor_slot(d);
    std::string s = "T";
    for (int i = 1; i <= 6; ++i)
        if (d.set & (1u << i)) s += char('0' + i);
    return s;
}

TwoTorsion point_by_name(const std::string& name) {
    if (name == "p0") return TwoTorsion{};
    if (name.size() == 3 && name[0] == 'p')
        return torsion_point({name[1] - '0', name[2] - '0'});
    throw std::invalid_argument("bad point name: " + name);
}

DivisorLabel divisor_by_name(const std::string& name) {
    if (name.size() == 2 && name[0] == 'T') return divisor({name[1] - '0'});
    if (name.size() == 4 && name[0] == 'T')
        return divisor({name[1] - '0', name[2] - '0', name[3] - '0'});
    throw std::invalid_argument("bad divisor name: " + name);
}

TwoTorsion tt_add(TwoTorsion a, TwoTorsion b) {
    std::uint8_t s = a.set ^ b.set;
    if (std::popcount(s) == 4) s = std::uint8_t(kFullSet & ~s);
    return TwoTorsion{s};
}

int weil_pairing(TwoTorsion a, TwoTorsion b) {
    point_slot(a);
    point_slot(b);
    return std::popcount(std::uint8_t(a.set & b.set)) & 1;
}

std::array<int, 4> point_matrix(TwoTorsion p) { return kPointTable[point_slot(p)].mat; }

int symplectic_form(const std::array<int, 4>& A, const std::array<int, 4>& B) {
    // Tr(A^t J B) with J the standard symplectic matrix, over F_2.
    return (A[0] * B[2] + A[2] * B[0] + A[1] * B[3] + A[3] * B[1]) & 1;
}

int divisor_theta_index(DivisorLabel d) { return kDivisorTable[divisor_slot(d)].theta; }

DivisorLabel divisor_by_theta_index(int i) {
    for (const auto& row : kDivisorTable)
        if (row.theta == i) return DivisorLabel{row.set};
    throw std::invalid_argument("theta index out of range");
}

std::array<int, 4> plane_matrix(DivisorLabel d) {
    auto c = kThetaChar[divisor_theta_index(d)];
    for (int& v : c) v ^= 1;
    return c;
}

bool divisor_contains(DivisorLabel d, TwoTorsion p) {
    auto B = plane_matrix(d);
    auto A = point_matrix(p);
    int matches = int(A[0] == B[0] && A[2] == B[2]) + int(A[1] == B[1] && A[3] == B[3]);
    return matches == 1;
}

std::vector<TwoTorsion> divisor_points(DivisorLabel d) {
    const auto& row = kDivisorTable[divisor_slot(d)];
    std::vector<TwoTorsion> pts;
    for (int i : row.inc) pts.push_back(all_points()[i]);
    return pts;
}

std::vector<Subgroup> goepel_groups() { return two_dim_subgroups(true); }
std::vector<Subgroup> rosenhain_groups() { return two_dim_subgroups(false); }
std::vector<Subgroup> goepel_translates() { return cosets_of(goepel_groups()); }
std::vector<Subgroup> rosenhain_translates() { return cosets_of(rosenhain_groups()); }

std::vector<TwoTorsion> even_eight_points(int i, int j) {
    std::uint8_t mask = bits_of({i, j});
    std::vector<TwoTorsion> out;
    for (TwoTorsion p : all_points())
        if (std::popcount(std::uint8_t(p.set & mask)) == 1) out.push_back(p);
    return out;
}

std::vector<DivisorLabel> even_eight_tropes(int i, int j) {
    std::uint8_t mask = bits_of({i, j});
    std::vector<DivisorLabel> out;
    for (DivisorLabel d : all_divisors())
        if (std::popcount(std::uint8_t(d.set & mask)) == 1) out.push_back(d);
    return out;
}

}  // namespace kummer
