#include <set>

#include "doctest.h"
#include "kummer/rng.hpp"

using namespace kummer;

TEST_CASE("random rational points are deterministic in the seed") {
    auto a = random_rational_point(42, 3, 100);
    auto b = random_rational_point(42, 3, 100);
    CHECK(a == b);
    auto c = random_rational_point(43, 3, 100);
    CHECK(a != c);
}

TEST_CASE("random rational points avoid 0, 1 and collisions") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto pt = random_rational_point(seed, 6, 7);
        std::set<Rat> uniq(pt.begin(), pt.end());
        CHECK(uniq.size() == pt.size());
        for (const Rat& r : pt) {
            CHECK(r != 0);
            CHECK(r != 1);
            CHECK(abs(r.get_num()) <= 7);
            CHECK(r.get_den() <= 7);
        }
    }
}

TEST_CASE("height bound is enforced and defaulted") {
    auto pt = random_rational_point(7, 4, 2);  // requests below 7 are raised to 7
    for (const Rat& r : pt) {
        CHECK(abs(r.get_num()) <= 7);
        CHECK(r.get_den() <= 7);
    }
}

TEST_CASE("bounded draws cover their range") {
    Rng rng(123);
    std::set<long> seen;
    for (int i = 0; i < 200; ++i) seen.insert(rng.int_in(-2, 2));
    CHECK(seen.size() == 5);
    CHECK(*seen.begin() == -2);
    CHECK(*seen.rbegin() == 2);
}
