#include "kummer/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace kummer {
namespace {

std::array<Cpx, 17> squares(const std::array<Cpx, 17>& v) {
    std::array<Cpx, 17> s{};
    for (int i = 1; i <= 16; ++i) s[i] = v[i] * v[i];
    return s;
}

void require_jacobian(const std::array<Cpx, 17>& t2, double tol) {
    double scale = 0;
    for (int i = 1; i <= 10; ++i) scale = std::max(scale, std::abs(t2[i]));
    for (int i : {2, 4, 10})
        if (std::abs(t2[i]) < tol * scale)
            throw NotAJacobianError(
                "theta constant vanishes: period matrix lies on the reducible locus");
}

}  // namespace

std::array<Cpx, 3> rosenhain_from_tau(const Tau& tau, double tol) {
    auto t2 = squares(one_indexed(theta_constants(tau, tol)));
    require_jacobian(t2, 1e-10);
    return rosenhain_from_theta_squares(t2);
}

std::array<Cpx, 3> isogenous_rosenhain_from_theta(const std::array<Cpx, 17>& th) {
    auto t2 = squares(th);
    Cpx s1 = t2[1] + t2[2] + t2[3] + t2[4];
    Cpx s2 = t2[1] + t2[2] - t2[3] - t2[4];
    Cpx s3 = t2[1] - t2[2] - t2[3] + t2[4];
    Cpx s4 = t2[1] - t2[2] + t2[3] - t2[4];
    Cpx cross = 2.0 * th[1] * th[2] * th[3] * th[4];
    Cpx e12 = t2[1] * t2[2] + t2[3] * t2[4];
    Cpx o12 = t2[1] * t2[2] - t2[3] * t2[4];
    return {s1 * s3 / (s2 * s4), s3 * (e12 + cross) / (s4 * o12),
            s1 * (e12 + cross) / (s2 * o12)};
}

std::array<Cpx, 3> isogenous_rosenhain_from_tau(const Tau& tau, double tol) {
    return isogenous_rosenhain_from_theta(one_indexed(theta_constants(tau, tol)));
}

std::array<Cpx, 3> isogenous_rosenhain_doubled(const Tau& tau, double tol) {
    auto T2 = squares(one_indexed(doubled_constants(tau, tol)));
    require_jacobian(T2, 1e-10);
    return rosenhain_from_theta_squares(T2);
}

std::array<Rat, 3> rosenhain_from_fourth_powers(const std::array<Rat, 10>& t4) {
    auto root_of = [](const Rat& num, const Rat& den) {
        auto r = rat_sqrt_exact(num / den);
        if (!r) throw std::domain_error("fourth-power ratio is not a rational square");
        return *r;
    };
    return {root_of(t4[0] * t4[2], t4[1] * t4[3]),
            root_of(t4[2] * t4[7], t4[3] * t4[9]),
            root_of(t4[0] * t4[7], t4[1] * t4[9])};
}

Cpx l_closed_form(const std::array<Cpx, 17>& TH, int variant) {
    auto T2 = squares(TH);
    Cpx s1 = T2[1] + T2[2] + T2[3] + T2[4];
    Cpx s2 = T2[1] + T2[2] - T2[3] - T2[4];
    Cpx s3 = T2[1] - T2[2] - T2[3] + T2[4];
    Cpx s4 = T2[1] - T2[2] + T2[3] - T2[4];
    Cpx bp = TH[1] * TH[2] + TH[3] * TH[4];
    Cpx bm = TH[1] * TH[2] - TH[3] * TH[4];
    Cpx btypo = TH[1] * TH[2] + TH[2] * TH[4];
    switch (variant) {
        case 0: return bm * s1 * s3 / (btypo * s4 * s2);
        case 1: return bm * s1 * s3 / (bp * s4 * s2);
        case 2: return bp * s1 * s3 / (bm * s4 * s2);
        default: throw std::invalid_argument("variant must be 0, 1 or 2");
    }
}

std::optional<Rat> l_value_exact(const std::array<Rat, 3>& l) {
    return rat_sqrt_exact(l[0] * l[1] * l[2]);
}

namespace {

void append_roots(SexticModel<Cpx>& out, const Quadratic<Cpx>& q) {
    double scale = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    if (std::abs(q[0]) < 1e-14 * scale) {
        out.roots.push_back({Cpx(1), Cpx(0)});
        out.roots.push_back({-q[2] / q[1], Cpx(1)});
        out.lead *= q[1];
        return;
    }
    Cpx d = std::sqrt(q[1] * q[1] - 4.0 * q[0] * q[2]);
    out.roots.push_back({(-q[1] + d) / (2.0 * q[0]), Cpx(1)});
    out.roots.push_back({(-q[1] - d) / (2.0 * q[0]), Cpx(1)});
    out.lead *= q[0];
}

}  // namespace

SexticModel<Cpx> sextic_from_quadratics(const std::array<Quadratic<Cpx>, 3>& qs) {
    SexticModel<Cpx> out{Cpx(1), {}};
    for (const auto& q : qs) append_roots(out, q);
    return out;
}

SexticModel<Cpx> richelot_image(const std::array<Cpx, 3>& l, const IsogenyPairing& p) {
    auto data = richelot(l, p);
    if (std::abs(data.delta) < 1e-13)
        throw std::domain_error("degenerate pairing: factor determinant vanishes");
    return sextic_from_quadratics(data.brackets);
}

SexticModel<Rat> richelot_image_exact(const std::array<Rat, 3>& l,
                                      const IsogenyPairing& p) {
    auto data = richelot(l, p);
    if (data.delta == 0)
        throw std::domain_error("degenerate pairing: factor determinant vanishes");
    SexticModel<Rat> out{Rat(1), {}};
    for (const auto& q : data.brackets) {
        if (q[0] == 0) {
            if (q[1] == 0) throw std::domain_error("bracket degenerated to a constant");
            out.roots.push_back({Rat(1), Rat(0)});
            out.roots.push_back({-q[2] / q[1], Rat(1)});
            out.lead *= q[1];
            continue;
        }
        auto d = rat_sqrt_exact(q[1] * q[1] - Rat(4) * q[0] * q[2]);
        if (!d)
            throw std::domain_error(
                "bracket discriminant is not a rational square; no exact image");
        out.roots.push_back({(-q[1] + *d) / (Rat(2) * q[0]), Rat(1)});
        out.roots.push_back({(-q[1] - *d) / (Rat(2) * q[0]), Rat(1)});
        out.lead *= q[0];
    }
    return out;
}

namespace {

// det of the projective pair, the Moebius building block "x - p"
template <class F>
F pdet(const ProjRoot<F>& x, const ProjRoot<F>& p) {
    return x.u * p.v - p.u * x.v;
}

template <class F, class Eq, class IsZero>
bool triple_matches(const std::vector<ProjRoot<F>>& roots, int a, int b, int c,
                    const std::array<F, 3>& target, Eq&& eq, IsZero&& is_zero) {
    // Moebius map sending roots[a], roots[b], roots[c] to 0, 1, infinity.
    std::array<F, 3> img;
    int n = 0;
    for (int k = 0; k < 6; ++k) {
        if (k == a || k == b || k == c) continue;
        F num = pdet(roots[k], roots[a]) * pdet(roots[b], roots[c]);
        F den = pdet(roots[k], roots[c]) * pdet(roots[b], roots[a]);
        if (is_zero(den)) return false;  // image at infinity or repeated roots
        img[n++] = num / den;
    }
    std::array<int, 3> perm{0, 1, 2};
    do {
        if (eq(img[0], target[perm[0]]) && eq(img[1], target[perm[1]]) &&
            eq(img[2], target[perm[2]]))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

template <class F, class Eq, class IsZero>
bool matches_impl(const SexticModel<F>& m, const std::array<F, 3>& l, Eq&& eq,
                  IsZero&& is_zero) {
    if (m.roots.size() != 6) throw std::invalid_argument("need six roots");
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) {
                if (a == b || b == c || a == c) continue;
                if (triple_matches(m.roots, a, b, c, l, eq, is_zero)) return true;
            }
    return false;
}

}  // namespace

bool matches_rosenhain(const SexticModel<Cpx>& m, const std::array<Cpx, 3>& l,
                       double tol) {
    return matches_impl(
        m, l, [tol](const Cpx& x, const Cpx& y) { return rel_diff(x, y) < tol; },
        [](const Cpx& x) { return std::abs(x) == 0.0; });
}

bool matches_rosenhain_exact(const SexticModel<Rat>& m, const std::array<Rat, 3>& l) {
    return matches_impl(
        m, l, [](const Rat& x, const Rat& y) { return x == y; },
        [](const Rat& x) { return x == 0; });
}

}  // namespace kummer
