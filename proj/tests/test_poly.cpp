#include "doctest.h"
#include "kummer/poly.hpp"

using namespace kummer;

using P = Poly<Rat, 3>;

TEST_CASE("polynomial ring basics") {
    P x = P::var(0), y = P::var(1), z = P::var(2);
    P f = x * x - Rat(2) * (x * y) + y * y;
    P g = (x - y) * (x - y);
    CHECK(f == g);
    CHECK((f - g).is_zero());
    CHECK(f.total_degree() == 2);
    CHECK(f.eval({Rat(5), Rat(2), Rat(0)}) == 9);
    CHECK((x * y * z).pow(3).eval({Rat(1, 2), Rat(2), Rat(3)}) == 27);
}

TEST_CASE("derivatives") {
    P x = P::var(0), y = P::var(1);
    P f = x.pow(3) * y - Rat(7) * y;
    CHECK(f.deriv(0) == Rat(3) * (x * x * y));
    CHECK(f.deriv(1) == x.pow(3) - P::constant(Rat(7)));
    CHECK(f.deriv(2).is_zero());
}

TEST_CASE("substitution composes linear forms") {
    using L = Poly<Rat, 2>;
    P x = P::var(0), y = P::var(1), z = P::var(2);
    P f = x * y + z * z;
    // x -> u+v, y -> u-v, z -> v : f -> u^2 - v^2 + v^2 = u^2
    std::array<L, 3> im = {L::var(0) + L::var(1), L::var(0) - L::var(1), L::var(1)};
    CHECK(f.subst(im) == L::var(0) * L::var(0));
}

TEST_CASE("polynomials over a quadratic extension") {
    using Q = Poly<QuadExt, 2>;
    Rat s(3);
    Q u = Q::var(0), v = Q::var(1);
    Q f = QuadExt::root(s) * u + v;  // sqrt(3) u + v
    Q g = QuadExt::root(s) * u - v;
    Q prod = f * g;  // 3u^2 - v^2
    CHECK(prod == QuadExt::rational(Rat(3), s) * (u * u) - v * v);
}
