#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// Deterministic RNG wrapper. std::uniform_int_distribution is not portable
// across standard libraries, so bounded draws are done by rejection.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng();
        } while (v >= limit);
        return v % n;
    }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rat rational(long height) {
        Rat r(int_in(-height, height), int_in(1, height));
        r.canonicalize();
        return r;
    }
};

// Pairwise distinct rationals, none equal to 0 or 1, with numerator and
// denominator bounded by `height`. Deterministic in the seed.
inline std::vector<Rat> random_rational_point(std::uint64_t seed, int arity, long height = 7) {
    if (height < 7) height = 7;
    Rng rng(seed);
    std::vector<Rat> out;
    std::set<Rat> seen;
    while (static_cast<int>(out.size()) < arity) {
        Rat r = rng.rational(height);
        if (r == 0 || r == 1) continue;
        if (!seen.insert(r).second) continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace kummer
