#include "doctest.h"
#include "kummer/rational.hpp"

using namespace kummer;

TEST_CASE("exact rational arithmetic does not drift") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    Rat big("123456789123456789/987654321");
    CHECK(big * Rat(0) == 0);
    CHECK((big / big) == 1);
}

TEST_CASE("perfect-square detection") {
    CHECK(rat_sqrt_exact(Rat(49, 64)).value() == Rat(7, 8));
    CHECK(rat_sqrt_exact(Rat(0)).value() == 0);
    CHECK(!rat_sqrt_exact(Rat(2)).has_value());
    CHECK(!rat_sqrt_exact(Rat(-4)).has_value());
    Rat q(144, 169);
    CHECK(rat_sqrt_exact(q * q).value() == q);
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("-3/9") == Rat(-1, 3));
    CHECK(parse_rational("17") == 17);
    CHECK(to_string(parse_rational("-5/10")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("x/3"), std::invalid_argument);
}

TEST_CASE("quadratic extension arithmetic") {
    Rat s(5);
    QuadExt x(Rat(1), Rat(2), s);   // 1 + 2*sqrt(5)
    QuadExt y(Rat(-3), Rat(1), s);  // -3 + sqrt(5)
    QuadExt p = x * y;              // -3 + sqrt5 - 6 sqrt5 + 2*5 = 7 - 5 sqrt5
    CHECK(p.a == 7);
    CHECK(p.b == -5);
    CHECK((x * x.inv()).a == 1);
    CHECK((x * x.inv()).b == 0);
    CHECK((x - x).is_zero());
    // rational elements are compatible with any extension
    QuadExt r = QuadExt::rational(Rat(2), Rat(0));
    CHECK((r * x).a == 2);
    CHECK((r * x).b == 4);
    QuadExt other(Rat(1), Rat(1), Rat(7));
    CHECK_THROWS_AS((void)(x + other), std::logic_error);
    // sqrt(s)^2 = s
    QuadExt root = QuadExt::root(s);
    CHECK((root * root).a == 5);
    CHECK((root * root).b == 0);
}
