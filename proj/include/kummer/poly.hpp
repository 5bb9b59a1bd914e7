#pragma once

#include <array>
#include <complex>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "kummer/rational.hpp"

namespace kummer {

inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const QuadExt& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }

// Sparse multivariate polynomial over F in N variables. Exponent vectors are
// kept small (nothing here exceeds total degree ~16), so a std::map is fine.
template <class F, int N>
struct Poly {
    using Key = std::array<int, N>;
    std::map<Key, F> t;

    static Poly zero() { return {}; }
    static Poly constant(F c) {
        Poly p;
        if (!coeff_is_zero(c)) p.t[Key{}] = std::move(c);
        return p;
    }
    static Poly var(int i, int pow = 1) {
        Poly p;
        Key k{};
        k[i] = pow;
        p.t[k] = F(1);
        return p;
    }

    bool is_zero() const { return t.empty(); }

    void add_term(const Key& k, const F& c) {
        auto it = t.find(k);
        if (it == t.end()) {
            if (!coeff_is_zero(c)) t[k] = c;
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) t.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [k, c] : o.t) add_term(k, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [k, c] : o.t) add_term(k, F(0) - c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [k, c] : t) r.t[k] = F(0) - c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ka, ca] : a.t)
            for (const auto& [kb, cb] : b.t) {
                Key k;
                for (int i = 0; i < N; ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const F& c, const Poly& p) {
        Poly r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [k, pc] : p.t) {
            F v = c * pc;
            if (!coeff_is_zero(v)) r.t[k] = v;
        }
        return r;
    }

    Poly pow(int e) const {
        Poly r = constant(F(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    F eval(const std::array<F, N>& x) const {
        F acc(0);
        for (const auto& [k, c] : t) {
            F term = c;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < k[i]; ++j) term = term * x[i];
            acc = acc + term;
        }
        return acc;
    }

    // Compose: substitute images[i] for variable i.
    template <int M>
    Poly<F, M> subst(const std::array<Poly<F, M>, N>& images) const {
        Poly<F, M> acc;
        for (const auto& [k, c] : t) {
            Poly<F, M> term = Poly<F, M>::constant(c);
            for (int i = 0; i < N; ++i)
                if (k[i] > 0) term = term * images[i].pow(k[i]);
            acc += term;
        }
        return acc;
    }

    Poly deriv(int i) const {
        Poly r;
        for (const auto& [k, c] : t) {
            if (k[i] == 0) continue;
            Key nk = k;
            nk[i] -= 1;
            r.add_term(nk, F(k[i]) * c);
        }
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : t) {
            int s = 0;
            for (int i = 0; i < N; ++i) s += k[i];
            d = std::max(d, s);
        }
        return d;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
};

// Numeric cleanup: drop coefficients below `eps` times the largest magnitude.
template <int N>
inline Poly<std::complex<double>, N> cleaned(const Poly<std::complex<double>, N>& p, double eps) {
    double top = 0;
    for (const auto& [k, c] : p.t) top = std::max(top, std::abs(c));
    Poly<std::complex<double>, N> r;
    for (const auto& [k, c] : p.t)
        if (std::abs(c) > eps * top) r.t[k] = c;
    return r;
}

}  // namespace kummer
