#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

using Rat = mpq_class;

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<Rat> rat_sqrt_exact(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (sgn(x) == 0) return Rat(0);
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn) / Rat(rd);
}

inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Elements a + b*sqrt(s) of a fixed quadratic extension Q(sqrt(s)).
// The radicand travels with each value; mixing extensions is a logic error.
struct QuadExt {
    Rat a, b, s;

    QuadExt() : a(0), b(0), s(0) {}
    QuadExt(int v) : a(v), b(0), s(0) {}  // rational constants live in every extension
    QuadExt(Rat a_, Rat b_, Rat s_) : a(std::move(a_)), b(std::move(b_)), s(std::move(s_)) {}
    static QuadExt rational(Rat v, Rat s_) { return {std::move(v), Rat(0), std::move(s_)}; }
    static QuadExt root(Rat s_) { return {Rat(0), Rat(1), std::move(s_)}; }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    QuadExt operator-() const { return {-a, -b, s}; }

    friend void check_same(const QuadExt& x, const QuadExt& y) {
        // a purely rational value is compatible with any extension
        if (sgn(x.b) != 0 && sgn(y.b) != 0 && x.s != y.s)
            throw std::logic_error("mixed quadratic extensions");
    }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return {x.a + y.a, x.b + y.b, sgn(x.b) != 0 ? x.s : y.s};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        const Rat& s = sgn(x.b) != 0 ? x.s : y.s;
        return {x.a * y.a + x.b * y.b * s, x.a * y.b + x.b * y.a, s};
    }
    friend QuadExt operator*(const Rat& c, const QuadExt& y) { return {c * y.a, c * y.b, y.s}; }
    QuadExt inv() const {
        Rat n = a * a - b * b * s;
        if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt(s))");
        return {a / n, -b / n, s};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
};

}  // namespace kummer
