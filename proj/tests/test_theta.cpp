#include <cmath>
#include <complex>

#include "doctest.h"
#include "kummer/sampling.hpp"
#include "kummer/theta.hpp"

using namespace kummer;

namespace {

const Tau kTauId{Cpx(0, 1), Cpx(0, 0), Cpx(0, 1)};
const Tau kTau1{Cpx(0.25, 1.1), Cpx(0.3, 0.1), Cpx(-0.15, 0.95)};
const std::array<Cpx, 2> kZ1{Cpx(0.21, 0.05), Cpx(-0.17, 0.13)};

// Frozen reference values (40-digit working precision, radius-14 sums).
const std::array<Cpx, 16> kOracleTau1Z1 = {{
    {1.1218110392218843523, 0.047400712617811215356},
    {0.88018361139546973067, -0.032275867616285856106},
    {1.0689628458673195178, 0.036609801071454940252},
    {0.92917735779090571768, -0.051694839794100791024},
    {0.73741030285754088314, 0.11386278929237904925},
    {0.61805691852127491122, -0.011203270640218307051},
    {0.90781621721495816442, 0.12601160765520959893},
    {0.55817787736940644348, 0.22005589840440593152},
    {0.9047125213116123964, 0.072371187339123269405},
    {-0.1450688425635252625, -0.14896243678115547793},
    {0.52870007247976731478, -0.42678881372516842781},
    {0.42608423545580566508, -0.36931655069909947319},
    {0.46061762955336613296, -0.4079163603385539069},
    {-0.48821135398733733805, -0.15409250828772856011},
    {-0.49679357579810062171, -0.25430499761667163155},
    {-0.33310781857820456414, 0.016246345981982279925},
}};

const std::array<Cpx, 10> kOracleTau1Z0 = {{
    {1.1337369013052940943, -0.0058904487246682396176},
    {0.86424919726765888035, -0.0033455127352545085445},
    {1.0464632731198729999, -0.085957561174615332309},
    {0.95552652866559323237, 0.095143787173701956192},
    {0.87127356020813042767, 0.12968965833975755458},
    {0.78198570412038306958, 0.20088905088582998969},
    {0.98137551850567267129, -0.10285498290851863204},
    {0.72328189707996974385, -0.0012325434067723439011},
    {0.90464391006312763029, -0.12431849867797361225},
    {0.14157631721165332399, -0.35605238250675573438},
}};

// genus-1 reference series, written independently of the library code
Cpx theta1d(int a, int b, Cpx z, Cpx tau) {
    Cpx s(0);
    for (int n = -30; n <= 30; ++n) {
        double m = n + 0.5 * a;
        Cpx e = Cpx(0, M_PI) * (m * m * tau) + Cpx(0, 2 * M_PI) * (m * (z + Cpx(0.5 * b, 0)));
        s += std::exp(e);
    }
    return s;
}

}  // namespace

TEST_CASE("truncation radius: pinned case and monotonicity") {
    CHECK(truncation_radius(kTauId, 1e-14) <= 8);
    int prev = 0;
    for (double tol : {1e-6, 1e-9, 1e-12, 1e-15}) {
        int r = truncation_radius(kTau1, tol);
        CHECK(r >= prev);
        prev = r;
    }
    // larger imaginary part of z needs more terms
    CHECK(truncation_radius(kTau1, 1e-10, {Cpx(0, 0.8), Cpx(0, -0.6)}) >=
          truncation_radius(kTau1, 1e-10));
}

TEST_CASE("rejects degenerate period matrices") {
    CHECK_THROWS_AS(truncation_radius(Tau{Cpx(0, -1), Cpx(0, 0), Cpx(0, 1)}, 1e-10), DomainError);
    CHECK_THROWS_AS(eval_all_theta({Cpx(0), Cpx(0)}, Tau{Cpx(1, 0), Cpx(0, 0), Cpx(1, 0)}), DomainError);
}

TEST_CASE("pinned value at tau = i*Id") {
    auto v = theta_constants(kTauId, 1e-12);
    CHECK(std::abs(v[0] - Cpx(1.1803406, 0)) < 1e-6);
    CHECK(std::abs(v[0] - Cpx(1.180340599016096226, 0)) < 1e-12);
    CHECK(std::abs(v[1] - Cpx(0.83462684167407318628, 0)) < 1e-12);
    CHECK(std::abs(v[9]) < 1e-12);  // theta_10 vanishes at this reducible point
}

TEST_CASE("frozen oracle table, z = 0") {
    auto v = eval_all_theta({Cpx(0), Cpx(0)}, kTau1, 1e-13);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(v[i] - kOracleTau1Z0[i]) < 1e-12);
    for (int i = 10; i < 16; ++i) CHECK(std::abs(v[i]) < 1e-12);  // odd thetas
    auto c = theta_constants(kTau1, 1e-13);
    for (int i = 10; i < 16; ++i) CHECK(c[i] == Cpx(0));  // pinned exactly
}

TEST_CASE("frozen oracle table, generic z") {
    auto v = eval_all_theta(kZ1, kTau1, 1e-13);
    for (int i = 0; i < 16; ++i) CHECK(std::abs(v[i] - kOracleTau1Z1[i]) < 1e-12);
}

TEST_CASE("parity under z -> -z") {
    auto plus = eval_all_theta(kZ1, kTau1, 1e-12);
    auto minus = eval_all_theta({-kZ1[0], -kZ1[1]}, kTau1, 1e-12);
    for (int i = 0; i < 16; ++i) {
        const auto& ch = theta_characteristics[i];
        double sign = (ch.a1 * ch.b1 + ch.a2 * ch.b2) % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(plus[i] - sign * minus[i]) < 1e-10);
        CHECK(theta_is_even(i + 1) == (sign > 0));
    }
}

TEST_CASE("quasi-periodicity in both lattice directions") {
    auto base = eval_all_theta(kZ1, kTau1, 1e-12);
    // integer shift e_1: factor exp(pi*i*a1)
    auto shifted = eval_all_theta({kZ1[0] + 1.0, kZ1[1]}, kTau1, 1e-12);
    for (int i = 0; i < 16; ++i) {
        const auto& ch = theta_characteristics[i];
        Cpx f = std::exp(Cpx(0, M_PI) * Cpx(ch.a1, 0));
        CHECK(std::abs(shifted[i] - f * base[i]) < 1e-10);
    }
    // tau-shift by n = e_2
    auto tshift = eval_all_theta({kZ1[0] + kTau1.t12, kZ1[1] + kTau1.t22}, kTau1, 1e-12);
    for (int i = 0; i < 16; ++i) {
        const auto& ch = theta_characteristics[i];
        Cpx f = std::exp(Cpx(0, -M_PI) * kTau1.t22 + Cpx(0, -2 * M_PI) * kZ1[1] +
                         Cpx(0, -M_PI) * Cpx(ch.b2, 0));
        CHECK(std::abs(tshift[i] - f * base[i]) < 1e-9);
    }
}

TEST_CASE("diagonal period matrices factor through genus one") {
    const Tau diag{Cpx(0.1, 0.8), Cpx(0, 0), Cpx(-0.3, 1.3)};
    const std::array<Cpx, 2> z{Cpx(0.17, -0.04), Cpx(-0.06, 0.09)};
    auto v = eval_all_theta(z, diag, 1e-12);
    for (int i = 0; i < 16; ++i) {
        const auto& ch = theta_characteristics[i];
        Cpx want = theta1d(ch.a1, ch.b1, z[0], diag.t11) * theta1d(ch.a2, ch.b2, z[1], diag.t22);
        CHECK(std::abs(v[i] - want) < 1e-10);
    }
}

TEST_CASE("doubled functions match swapped characteristics at 2*tau") {
    const Tau twice{2.0 * kTau1.t11, 2.0 * kTau1.t12, 2.0 * kTau1.t22};
    auto doubled = eval_all_doubled(kZ1, kTau1, 1e-12);
    auto direct = eval_all_theta(kZ1, twice, 1e-12);
    // doubled index 2 has characteristic [11;00] at 2*tau, which is theta_8
    CHECK(std::abs(doubled[1] - direct[7]) < 1e-13);
    CHECK(std::abs(doubled[1] - Cpx(0.082129964356706179439, 0.046965004979038849861)) < 1e-12);
    // doubled index 3 -> [10;00] = theta_5; index 4 -> [01;00] = theta_7
    CHECK(std::abs(doubled[2] - Cpx(0.27670718091379076778, 0.077046841155172468066)) < 1e-12);
    CHECK(std::abs(doubled[3] - Cpx(0.43029206878599984657, -0.0042451584574875249873)) < 1e-12);
    CHECK(std::abs(doubled[0] - Cpx(1.005889814220853644, 0.00021472822517938428847)) < 1e-12);
    // odd slots of the doubled constants are pinned to zero
    auto dc = doubled_constants(kTau1, 1e-12);
    for (int i = 10; i < 16; ++i) CHECK(dc[i] == Cpx(0));
}

TEST_CASE("duplication identities tie theta to doubled constants") {
    Rng rng(2026);
    for (int trial = 0; trial < 20; ++trial) {
        Tau tau = random_tau(rng);
        auto th = theta_constants(tau, 1e-12);
        auto TH = doubled_constants(tau, 1e-12);
        auto T = [&](int i) { return TH[i - 1]; };
        auto t2 = [&](int i) { return th[i - 1] * th[i - 1]; };

        // squares of theta constants from doubled constants
        CHECK(rel_diff(t2(1), T(1) * T(1) + T(2) * T(2) + T(3) * T(3) + T(4) * T(4)) < 1e-9);
        CHECK(rel_diff(t2(2), T(1) * T(1) + T(2) * T(2) - T(3) * T(3) - T(4) * T(4)) < 1e-9);
        CHECK(rel_diff(t2(3), T(1) * T(1) - T(2) * T(2) - T(3) * T(3) + T(4) * T(4)) < 1e-9);
        CHECK(rel_diff(t2(4), T(1) * T(1) - T(2) * T(2) + T(3) * T(3) - T(4) * T(4)) < 1e-9);
        // bilinear layer
        CHECK(rel_diff(t2(5), 2.0 * (T(1) * T(3) + T(2) * T(4))) < 1e-9);
        CHECK(rel_diff(t2(6), 2.0 * (T(1) * T(3) - T(2) * T(4))) < 1e-9);
        CHECK(rel_diff(t2(7), 2.0 * (T(1) * T(4) + T(2) * T(3))) < 1e-9);
        CHECK(rel_diff(t2(8), 2.0 * (T(1) * T(2) + T(3) * T(4))) < 1e-9);
        CHECK(rel_diff(t2(9), 2.0 * (T(1) * T(4) - T(2) * T(3))) < 1e-9);
        CHECK(rel_diff(t2(10), 2.0 * (T(1) * T(2) - T(3) * T(4))) < 1e-9);
    }
}

TEST_CASE("refinement: tightening the tolerance moves values less than tol") {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        Tau tau = random_tau(rng);
        for (double tol : {1e-6, 1e-8, 1e-10}) {
            auto coarse = theta_constants(tau, tol);
            auto fine = theta_constants(tau, tol / 2);
            for (int i = 0; i < 10; ++i) CHECK(std::abs(coarse[i] - fine[i]) <= tol);
        }
    }
}
