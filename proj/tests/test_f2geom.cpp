#include "kummer/f2geom.hpp"

#include <bit>
#include <set>

#include "doctest.h"

using namespace kummer;

TEST_CASE("point and divisor labels round-trip") {
    CHECK(point_name(torsion_point({})) == "p0");
    CHECK(point_name(torsion_point({4, 5})) == "p45");
    CHECK(point_name(torsion_point({5, 4})) == "p45");
    CHECK(point_by_name("p36") == torsion_point({3, 6}));
    CHECK(divisor_name(divisor({3})) == "T3");
    CHECK(divisor_name(divisor({2, 3, 6})) == "T236");
    CHECK(divisor_by_name("T146") == divisor({1, 4, 6}));
    CHECK_THROWS(torsion_point({1, 1}));
    CHECK_THROWS(divisor({1, 2}));       // even label must contain 6
    CHECK_THROWS(divisor({1, 2, 3}));
    CHECK_THROWS(point_by_name("q12"));
}

TEST_CASE("group law on order-two points") {
    auto p = [](std::initializer_list<int> ij) { return torsion_point(ij); };
    CHECK(tt_add(p({1, 2}), p({3, 4})) == p({5, 6}));
    CHECK(tt_add(p({1, 2}), p({2, 3})) == p({1, 3}));
    CHECK(tt_add(p({1, 2}), p({1, 2})) == p({}));
    CHECK(tt_add(p({}), p({2, 5})) == p({2, 5}));
    for (TwoTorsion a : all_points())
        for (TwoTorsion b : all_points()) {
            // Table 1 identifies the group with F_2^4: addition must agree.
            auto lhs = point_matrix(tt_add(a, b));
            auto ma = point_matrix(a), mb = point_matrix(b);
            for (int k = 0; k < 4; ++k) CHECK(lhs[k] == (ma[k] ^ mb[k]));
        }
}

TEST_CASE("Weil pairing values and symplectic comparison") {
    CHECK(weil_pairing(torsion_point({}), torsion_point({1, 2})) == 0);
    CHECK(weil_pairing(torsion_point({1, 6}), torsion_point({2, 6})) == 1);
    CHECK(weil_pairing(torsion_point({1, 6}), torsion_point({2, 3})) == 0);
    for (TwoTorsion a : all_points())
        for (TwoTorsion b : all_points())
            CHECK(weil_pairing(a, b) ==
                  symplectic_form(point_matrix(a), point_matrix(b)));
}

TEST_CASE("point matrices from the correspondence table") {
    CHECK(point_matrix(torsion_point({4, 5})) == std::array<int, 4>{0, 1, 0, 0});
    CHECK(point_matrix(torsion_point({})) == std::array<int, 4>{0, 0, 0, 0});
    CHECK(point_matrix(torsion_point({3, 5})) == std::array<int, 4>{1, 1, 1, 1});
    std::set<std::array<int, 4>> seen;
    for (TwoTorsion a : all_points()) seen.insert(point_matrix(a));
    CHECK(seen.size() == 16);
}

TEST_CASE("divisor theta dictionary") {
    CHECK(divisor_theta_index(divisor({6})) == 13);
    CHECK(divisor_theta_index(divisor({2, 5, 6})) == 1);
    CHECK(divisor_theta_index(divisor({1})) == 15);
    CHECK(divisor_by_theta_index(10) == divisor({2, 3, 6}));
    std::set<int> seen;
    for (DivisorLabel d : all_divisors()) seen.insert(divisor_theta_index(d));
    CHECK(seen.size() == 16);
    // Odd labels carry odd theta functions, even labels even ones.
    for (DivisorLabel d : all_divisors()) {
        bool odd_label = std::popcount(d.set) == 1;
        CHECK((divisor_theta_index(d) >= 11) == odd_label);
    }
}

TEST_CASE("16_6 incidence matches the tabulated sextuples") {
    auto T236 = divisor({2, 3, 6});
    for (const char* n : {"p14", "p15", "p23", "p26", "p36", "p45"})
        CHECK(divisor_contains(T236, point_by_name(n)));
    CHECK_FALSE(divisor_contains(T236, point_by_name("p0")));
    CHECK_FALSE(divisor_contains(T236, point_by_name("p12")));

    for (DivisorLabel d : all_divisors()) {
        auto listed = divisor_points(d);
        CHECK(listed.size() == 6);
        std::set<TwoTorsion> from_rule;
        for (TwoTorsion p : all_points())
            if (divisor_contains(d, p)) from_rule.insert(p);
        CHECK(from_rule == std::set<TwoTorsion>(listed.begin(), listed.end()));
    }
    for (TwoTorsion p : all_points()) {
        int planes = 0;
        for (DivisorLabel d : all_divisors()) planes += divisor_contains(d, p);
        CHECK(planes == 6);
    }
}

TEST_CASE("Goepel groups are the fifteen isotropic planes") {
    auto gs = goepel_groups();
    CHECK(gs.size() == 15);
    Subgroup probe{torsion_point({}), torsion_point({1, 5}), torsion_point({2, 3}),
                   torsion_point({4, 6})};
    std::sort(probe.begin(), probe.end());
    CHECK(std::count(gs.begin(), gs.end(), probe) == 1);
    for (const auto& g : gs) {
        CHECK(g[0] == TwoTorsion{});
        std::uint8_t covered = 0;
        for (const auto& p : g) covered |= p.set;
        CHECK(covered == 0b0111'1110);  // p0 plus a perfect matching of {1..6}
        for (const auto& a : g)
            for (const auto& b : g) CHECK(weil_pairing(a, b) == 0);
    }
    CHECK(goepel_translates().size() == 60);
}

TEST_CASE("Rosenhain groups are the twenty non-isotropic subgroups") {
    auto rs = rosenhain_groups();
    CHECK(rs.size() == 20);
    Subgroup probe{torsion_point({}), torsion_point({1, 2}), torsion_point({1, 3}),
                   torsion_point({2, 3})};
    std::sort(probe.begin(), probe.end());
    CHECK(std::count(rs.begin(), rs.end(), probe) == 1);
    for (const auto& g : rs) {
        CHECK(g[0] == TwoTorsion{});
        // Each is {p0, p_ij, p_ik, p_jk} for a 3-subset {i,j,k} of {1..6}.
        std::uint8_t covered = 0;
        for (const auto& p : g) covered |= p.set;
        CHECK(std::popcount(covered) == 3);
    }
    CHECK(rosenhain_translates().size() == 80);
}

TEST_CASE("translates are closed under the subgroup action") {
    auto ts = goepel_translates();
    auto gs = goepel_groups();
    std::set<Subgroup> seen(ts.begin(), ts.end());
    CHECK(seen.size() == ts.size());
    for (const auto& c : ts) {
        TwoTorsion t = c[0];
        Subgroup g;
        for (int k = 0; k < 4; ++k) g[k] = tt_add(t, c[k]);
        std::sort(g.begin(), g.end());
        CHECK(std::count(gs.begin(), gs.end(), g) == 1);
    }
}

TEST_CASE("even eights") {
    auto pts = even_eight_points(1, 2);
    CHECK(pts.size() == 8);
    for (TwoTorsion p : pts)
        CHECK(std::popcount(std::uint8_t(p.set & 0b0000'0110)) == 1);

    auto tr = even_eight_tropes(1, 2);
    REQUIRE(tr.size() == 8);
    std::set<std::string> names;
    for (DivisorLabel d : tr) names.insert(divisor_name(d));
    CHECK(names == std::set<std::string>{"T1", "T2", "T136", "T146", "T156",
                                         "T236", "T246", "T256"});
    // The 15 index pairs give pairwise distinct eights; with their
    // complements that makes 30 sets in total.
    std::set<std::set<std::string>> eights;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            std::set<std::string> s, c;
            for (DivisorLabel d : even_eight_tropes(i, j)) s.insert(divisor_name(d));
            CHECK(s.size() == 8);
            for (DivisorLabel d : all_divisors())
                if (!s.count(divisor_name(d))) c.insert(divisor_name(d));
            eights.insert(s);
            eights.insert(c);
        }
    CHECK(eights.size() == 30);
}
