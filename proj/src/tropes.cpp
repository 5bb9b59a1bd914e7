#include "kummer/tropes.hpp"

#include <algorithm>
#include <stdexcept>

#include "kummer/mumford.hpp"  // fnv1a64

namespace kummer {

namespace {

// Catalog DSL, byte-identical to the review oracle: one term per token,
// "sign factors:monomial" with factors "ij" meaning lambda_i - lambda_j
// (lambda_4 = 0, lambda_5 = 1) joined by '.', and the monomial one trope name
// or a comma-separated pair.
constexpr const char* kLinearRows[] = {
    "-:1 +51:4 +14:5 +14.15:6",
    "-:2 +52:4 +24:5 +24.25:6",
    "-:3 +53:4 +34:5 +34.35:6",
    "-:126 +15.25:4 -14.24:5 +:456",
    "-:136 +15.35:4 -14.34:5 +:456",
    "-:146 +51:4 +24.34.15:6 +:456",
    "-:156 -14:5 +14.25.35:6 +:456",
    "-:236 +52.53:4 -24.34:5 +:456",
    "-:246 +52:4 +14.34.25:6 +:456",
    "-:256 -24:5 +24.15.35:6 +:456",
    "-:346 +53:4 +14.24.35:6 +:456",
    "-:356 -34:5 +34.15.25:6 +:456",
};

// The odd row with its middle trope repeated, and both wrong completions of
// the factor whose index the source text drops.
constexpr const char* kMisprintRows[] = {
    "-:3 +53:4 +34:4 +34.35:6",
    "-:156 -14:5 +14.25.15:6 +:456",
    "-:156 -14:5 +14.25.25:6 +:456",
};
constexpr const char* kMisprintIds[] = {"l-3-misprint", "l-7-misprint-a",
                                        "l-7-misprint-b"};

constexpr const char* kSectionRows[] = {
    "+:1,2 -:156,256 +:146,246",
    "+34:1,2 -:136,236 +:146,246",
    "+:1,3 -:156,356 +:146,346",
    "+24:1,3 -:126,236 +:146,346",
    "+25:1,4 -:126,246 +:156,456",
    "+23:1,4 -:126,246 +:136,346",
    "+24:1,5 -:126,256 +:146,456",
    "+34:1,5 -:136,356 +:146,456",
    "+32:1,6 +:256,346 -:246,356",
    "+24.35:1,6 +:256,346 -:236,456",
    "+:2,3 -:256,356 +:246,346",
    "+14:2,3 -:126,136 +:246,346",
    "+15:2,4 -:126,146 +:256,456",
    "+35:2,4 +:256,456 -:236,346",
    "+14:2,5 -:126,156 +:246,456",
    "+34:2,5 -:236,356 +:246,456",
    "+13:2,6 +:146,356 -:156,346",
    "+14.35:2,6 +:156,346 -:136,456",
    "+15:3,4 -:136,146 +:356,456",
    "+25:3,4 +:356,456 -:236,246",
    "+14:3,5 -:136,156 +:346,456",
    "+24:3,5 -:236,256 +:346,456",
    "+12:3,6 +:146,256 -:156,246",
    "+14.25:3,6 +:156,246 -:126,456",
    "+12:4,5 -:146,156 +:246,256",
    "+13:4,5 -:146,156 +:346,356",
    "+25.13:4,6 +:156,236 -:126,356",
    "+23.15:4,6 +:136,256 -:126,356",
    "+24.13:5,6 +:146,236 -:126,346",
    "+23.14:5,6 +:136,246 -:126,346",
    "+:1,126 -14:5,256 +15:4,246",
    "+:3,236 -34:5,256 +35:4,246",
    "+:1,136 -14:5,356 +15:4,346",
    "+:2,236 -24:5,356 +25:4,346",
    "+25:1,146 -15:2,246 +12:5,456",
    "+23:1,146 +31:2,246 +12:3,346",
    "+:2,126 -24:5,156 +25:4,146",
    "+:3,136 -34:5,156 +35:4,146",
    "+:6,126 +:5,346 -:4,356",
    "+34:6,126 +:3,456 -:4,356",
    "+:6,136 +:5,246 -:4,256",
    "+24:6,136 +:2,456 -:4,256",
    "+25:6,146 +:2,356 -:5,236",
    "+35:6,146 +:3,256 -:5,236",
    "+:6,236 +:5,146 -:4,156",
    "+14:6,236 +:1,456 -:4,156",
    "+15:6,246 +:1,356 -:5,136",
    "+35:6,246 +:3,156 -:5,136",
    "+15:6,346 +:1,256 -:5,126",
    "+25:6,346 +:2,156 -:5,126",
    "+24:6,156 +:2,346 -:4,236",
    "+34:6,156 +:3,246 -:4,236",
    "+14:6,256 +:1,346 -:4,136",
    "+34:6,256 +:3,146 -:4,136",
    "+14:6,356 +:1,246 -:4,126",
    "+24:6,356 +:2,146 -:4,126",
    "+12:6,456 +:1,236 -:2,136",
    "+13:6,456 +:1,236 -:3,126",
    "+24:1,156 -14:2,256 +12:4,456",
    "+34:1,156 -14:3,356 +13:4,456",
};

constexpr std::array<int, 6> kIncidence[16] = {
    {0, 1, 2, 3, 4, 5},   {0, 1, 6, 7, 8, 9},   {0, 2, 6, 10, 11, 12},
    {0, 3, 7, 10, 13, 14}, {0, 4, 8, 11, 13, 15}, {0, 5, 9, 12, 14, 15},
    {1, 5, 9, 10, 11, 13}, {2, 5, 7, 8, 12, 13}, {3, 5, 6, 8, 11, 14},
    {4, 5, 6, 7, 10, 15},  {3, 4, 6, 9, 12, 13}, {2, 4, 7, 9, 11, 14},
    {2, 3, 8, 9, 10, 15},  {1, 4, 8, 10, 12, 14}, {1, 3, 7, 11, 12, 15},
    {1, 2, 6, 13, 14, 15},
};

// Odd-trope dictionary data: square-root exponents of theta_1..theta_10 and
// the z-dependent theta index. Even tropes use the all-ones vector with a
// zero at their own index.
constexpr int kOddExpo[6][10] = {
    {1, 1, 1, 1, 0, 1, 1, 0, 1, 2}, {0, 2, 1, 1, 1, 1, 0, 1, 1, 1},
    {1, 1, 0, 2, 1, 1, 1, 1, 0, 1}, {1, 2, 1, 2, 0, 0, 0, 1, 0, 2},
    {0, 2, 0, 2, 1, 0, 1, 0, 1, 2}, {0, 3, 0, 3, 0, 0, 0, 0, 0, 3},
};
constexpr int kOddM[6] = {15, 12, 11, 16, 14, 13};
constexpr int kEvenM[10] = {4, 2, 5, 8, 10, 7, 1, 9, 3, 6};

LambdaFactor parse_factor(std::string_view s) {
    if (s.size() != 2 || s[0] < '1' || s[0] > '5' || s[1] < '1' || s[1] > '5')
        throw std::logic_error("bad lambda factor: " + std::string(s));
    return {s[0] - '0', s[1] - '0'};
}

std::vector<LambdaFactor> parse_factor_list(std::string_view s) {
    std::vector<LambdaFactor> out;
    while (!s.empty()) {
        std::size_t dot = s.find('.');
        out.push_back(parse_factor(s.substr(0, dot)));
        if (dot == std::string_view::npos) break;
        s.remove_prefix(dot + 1);
    }
    return out;
}

TropeRelation parse_trope_row(std::string id, std::string text) {
    TropeRelation rel{std::move(id), std::move(text), 0, {}};
    std::string_view row = rel.text;
    std::size_t pos = 0;
    while (pos < row.size()) {
        while (pos < row.size() && row[pos] == ' ') ++pos;
        if (pos >= row.size()) break;
        std::size_t end = row.find(' ', pos);
        if (end == std::string_view::npos) end = row.size();
        std::string_view tok = row.substr(pos, end - pos);
        pos = end;
        if (rel.nterms >= 4 || tok.size() < 3 || (tok[0] != '+' && tok[0] != '-'))
            throw std::logic_error("bad relation row: " + rel.text);
        TropeTerm term{};
        term.sign = tok[0] == '-' ? -1 : 1;
        tok.remove_prefix(1);
        std::size_t colon = tok.find(':');
        for (const LambdaFactor& f : parse_factor_list(tok.substr(0, colon))) {
            if (term.nfactors >= 6) throw std::logic_error("too many factors");
            term.factors[term.nfactors++] = f;
        }
        std::string_view mono = tok.substr(colon + 1);
        std::size_t comma = mono.find(',');
        term.a = trope_index(mono.substr(0, comma));
        term.b = comma == std::string_view::npos
                     ? -1
                     : trope_index(mono.substr(comma + 1));
        rel.terms[rel.nterms++] = term;
    }
    return rel;
}

char dg(int x) { return static_cast<char>('0' + x); }
std::string d2(int x, int y) { return {dg(x), dg(y)}; }
std::string ev(int x, int y) { return {dg(x), dg(y), '6'}; }

std::vector<TropeRelation> gen_four_term() {
    std::vector<TropeRelation> rows;
    int n = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k)
                for (int l = k + 1; l <= 5; ++l) {
                    std::string text = "-" + d2(j, k) + "." + d2(j, l) + "." + d2(k, l) +
                                       ":" + dg(i) + " +" + d2(i, k) + "." + d2(i, l) +
                                       "." + d2(k, l) + ":" + dg(j) + " -" + d2(i, j) +
                                       "." + d2(i, l) + "." + d2(j, l) + ":" + dg(k) +
                                       " +" + d2(i, j) + "." + d2(i, k) + "." + d2(j, k) +
                                       ":" + dg(l);
                    rows.push_back(parse_trope_row("f-" + std::to_string(++n), text));
                }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                std::string text = "-" + d2(j, k) + ":" + dg(i) + " +" + d2(i, k) + ":" +
                                   dg(j) + " -" + d2(i, j) + ":" + dg(k) + " +" +
                                   d2(i, j) + "." + d2(i, k) + "." + d2(j, k) + ":6";
                rows.push_back(parse_trope_row("f-" + std::to_string(++n), text));
            }
    return rows;
}

std::array<int, 2> complement2(std::initializer_list<int> used) {
    std::array<int, 2> out{};
    int n = 0;
    for (int x = 1; x <= 5; ++x)
        if (std::find(used.begin(), used.end(), x) == used.end()) out[n++] = x;
    return out;
}

std::vector<TropeQuadratic> gen_quadratic() {
    std::vector<TropeQuadratic> rows;
    int n = 0;
    auto push = [&](const std::string& text, std::array<std::string, 6> meta) {
        TropeQuadratic q;
        q.rel = parse_trope_row("q-" + std::to_string(++n), text);
        for (int t = 0; t < 6; ++t) q.coeff[t] = parse_factor_list(meta[t]);
        rows.push_back(std::move(q));
    };
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                auto [l, m] = complement2({i, j, k});
                push("+" + d2(j, k) + "." + d2(k, i) + "." + d2(i, j) + ":6," + ev(l, m) +
                         " +" + d2(j, k) + ":" + dg(i) + "," + ev(j, k) + " +" + d2(k, i) +
                         ":" + dg(j) + "," + ev(i, k) + " +" + d2(i, j) + ":" + ev(i, j) +
                         "," + dg(k),
                     {d2(j, k), d2(k, i), d2(i, j), "", "", ""});
            }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            int rest[3], rn = 0;
            for (int x = 1; x <= 5; ++x)
                if (x != i && x != j) rest[rn++] = x;
            int k = rest[0], l = rest[1], m = rest[2];
            push("+" + d2(l, k) + "." + d2(m, l) + "." + d2(k, m) + ":" + dg(i) + "," +
                     dg(j) + " +" + d2(l, k) + ":" + ev(j, m) + "," + ev(i, m) + " +" +
                     d2(m, l) + ":" + ev(i, k) + "," + ev(j, k) + " +" + d2(k, m) + ":" +
                     ev(i, l) + "," + ev(j, l),
                 {d2(l, k), d2(m, l), d2(k, m), "", "", ""});
        }
    for (int m = 1; m <= 5; ++m) {
        int rest[4], rn = 0;
        for (int x = 1; x <= 5; ++x)
            if (x != m) rest[rn++] = x;
        int l = rest[0], i = rest[1], j = rest[2], k = rest[3];
        push("+" + d2(j, k) + "." + d2(k, i) + "." + d2(i, j) + ":" + ev(l, m) + "," +
                 dg(l) + " +" + d2(j, l) + "." + d2(k, l) + "." + d2(j, k) + ":" + dg(i) +
                 "," + ev(i, m) + " +" + d2(i, l) + "." + d2(k, l) + "." + d2(k, i) + ":" +
                 dg(j) + "," + ev(j, m) + " +" + d2(i, l) + "." + d2(j, l) + "." +
                 d2(i, j) + ":" + dg(k) + "," + ev(k, m),
             {d2(j, k), d2(k, i), d2(i, j), d2(i, l), d2(j, l), d2(k, l)});
    }
    for (int m = 1; m <= 5; ++m) {
        int rest[4], rn = 0;
        for (int x = 1; x <= 5; ++x)
            if (x != m) rest[rn++] = x;
        int l = rest[0], i = rest[1], j = rest[2], k = rest[3];
        push("+" + d2(j, k) + "." + d2(i, l) + "." + d2(k, i) + "." + d2(j, l) + "." +
                 d2(i, j) + "." + d2(k, l) + ":6," + dg(m) + " +" + d2(j, k) + "." +
                 d2(i, l) + ":" + ev(j, k) + "," + ev(i, l) + " +" + d2(k, i) + "." +
                 d2(j, l) + ":" + ev(i, k) + "," + ev(j, l) + " +" + d2(i, j) + "." +
                 d2(k, l) + ":" + ev(i, j) + "," + ev(k, l),
             {d2(j, k) + "." + d2(i, l), d2(k, i) + "." + d2(j, l),
              d2(i, j) + "." + d2(k, l), "", "", ""});
    }
    return rows;
}

struct Catalog {
    std::vector<TropeRelation> linear, four_term, sections, misprints;
    std::vector<TropeQuadratic> quadratic;
};

const Catalog& catalog() {
    static const Catalog cat = [] {
        Catalog c;
        for (std::size_t k = 0; k < std::size(kLinearRows); ++k)
            c.linear.push_back(
                parse_trope_row("l-" + std::to_string(k + 1), kLinearRows[k]));
        c.four_term = gen_four_term();
        for (std::size_t k = 0; k < std::size(kSectionRows); ++k)
            c.sections.push_back(
                parse_trope_row("bi-" + std::to_string(k + 1), kSectionRows[k]));
        c.quadratic = gen_quadratic();
        for (std::size_t k = 0; k < std::size(kMisprintRows); ++k)
            c.misprints.push_back(parse_trope_row(kMisprintIds[k], kMisprintRows[k]));
        return c;
    }();
    return cat;
}

Cpx ipow(Cpx base, int e) {
    Cpx r(1);
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

int trope_index(std::string_view name) {
    if (!name.empty() && (name[0] == 'T' || name[0] == 't')) name.remove_prefix(1);
    std::string key(name);
    std::sort(key.begin(), key.end());
    for (int t = 0; t < 16; ++t) {
        std::string cand(trope_names[t]);
        std::sort(cand.begin(), cand.end());
        if (cand == key) return t;
    }
    throw std::invalid_argument("unknown trope: " + std::string(name));
}

int node_index(std::string_view name) {
    if (!name.empty() && (name[0] == 'p' || name[0] == 'P')) name.remove_prefix(1);
    std::string key(name);
    std::sort(key.begin(), key.end());
    for (int n = 0; n < 16; ++n) {
        std::string cand(node_names[n]);
        std::sort(cand.begin(), cand.end());
        if (cand == key) return n;
    }
    throw std::invalid_argument("unknown node: " + std::string(name));
}

std::span<const std::array<int, 6>> trope_node_incidence() { return kIncidence; }

QuadExt cf_surface_z4(const std::array<Rat, 3>& lam, const Rat& z1, const Rat& z2,
                      const Rat& z3) {
    Rat k2 = cf_k2(lam, z1, z2, z3);
    if (sgn(k2) == 0)
        throw std::domain_error("z4 coefficient vanishes at this base point");
    Rat s = branch_sextic(lam, z1, z2, z3);
    return QuadExt(-cf_k1(lam, z1, z2, z3) / (Rat(2) * k2), Rat(2) / k2, s);
}

std::array<QuadExt, 16> trope_values_at(const std::array<Rat, 3>& lam, const Rat& z1,
                                        const Rat& z2, const Rat& z3) {
    QuadExt z4 = cf_surface_z4(lam, z1, z2, z3);
    auto planes = trope_table(lam);
    std::array<QuadExt, 16> out;
    for (int t = 0; t < 16; ++t)
        out[t] = QuadExt::rational(
                     planes[t][0] * z1 + planes[t][1] * z2 + planes[t][2] * z3, z4.s) +
                 planes[t][3] * z4;
    return out;
}

std::span<const TropeRelation> trope_linear_relations() { return catalog().linear; }
std::span<const TropeRelation> trope_four_term_relations() { return catalog().four_term; }
std::span<const TropeRelation> trope_bimonomial_relations() { return catalog().sections; }
std::span<const TropeRelation> trope_linear_misprints() { return catalog().misprints; }
std::span<const TropeQuadratic> trope_quadratic_relations() { return catalog().quadratic; }

QuadExt bimonomial_certificate(const TropeRelation& rel, const std::array<Rat, 3>& lam,
                               const Rat& z1, const Rat& z2, const Rat& z3) {
    if (rel.nterms != 3) throw std::invalid_argument("certificate needs a 3-term row");
    auto tv = trope_values_at(lam, z1, z2, z3);
    std::array<QuadExt, 3> x;
    for (int k = 0; k < 3; ++k) {
        const TropeTerm& t = rel.terms[k];
        Rat c = term_coefficient(t, lam);  // sign squared away below
        x[k] = QuadExt::rational(c * c, tv[0].s) * tv[t.a] * tv[t.b];
    }
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] -
           Rat(2) * (x[0] * x[1] + x[0] * x[2] + x[1] * x[2]);
}

std::string canonical_trope_catalog_text() {
    const Catalog& c = catalog();
    std::string text;
    auto emit = [&](const TropeRelation& rel) { text += rel.id + " " + rel.text + "\n"; };
    for (const TropeRelation& rel : c.linear) emit(rel);
    for (const TropeRelation& rel : c.four_term) emit(rel);
    for (const TropeRelation& rel : c.sections) emit(rel);
    for (const TropeQuadratic& q : c.quadratic) emit(q.rel);
    return text;
}

std::uint64_t trope_catalog_checksum() { return fnv1a64(canonical_trope_catalog_text()); }

TropeRelation parse_trope_relation(std::string id, std::string text) {
    return parse_trope_row(std::move(id), std::move(text));
}

std::span<const TropeSection> trope_theta_dictionary() {
    static const std::vector<TropeSection> dict = [] {
        std::vector<TropeSection> out(16);
        for (int t = 0; t < 6; ++t) {
            out[t].sign = -1;
            std::copy(std::begin(kOddExpo[t]), std::end(kOddExpo[t]),
                      out[t].expo.begin());
            out[t].m = kOddM[t];
        }
        for (int t = 6; t < 16; ++t) {
            out[t].sign = 1;
            out[t].expo.fill(1);
            out[t].expo[kEvenM[t - 6] - 1] = 0;
            out[t].m = kEvenM[t - 6];
        }
        return out;
    }();
    return dict;
}

std::span<const PairSection> trope_pair_sections() {
    static const std::vector<PairSection> pairs = [] {
        auto dict = trope_theta_dictionary();
        std::vector<PairSection> out;
        for (int a = 0; a < 16; ++a)
            for (int b = a + 1; b < 16; ++b) {
                PairSection p{};
                p.a = a;
                p.b = b;
                p.imaginary = (a <= 5) != (b <= 5);
                p.sign = (a == 5 && b >= 6) ? -1 : 1;
                for (int i = 0; i < 10; ++i)
                    p.expo[i] = dict[a].expo[i] + dict[b].expo[i];
                p.ma = dict[a].m;
                p.mb = dict[b].m;
                out.push_back(p);
            }
        return out;
    }();
    return pairs;
}

int pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 0 || a == b || b > 15) throw std::invalid_argument("bad trope pair");
    return a * 15 - a * (a - 1) / 2 + (b - a - 1);
}

Cpx trope_value(const TropeSection& s, const std::array<Cpx, 17>& consts,
                const std::array<Cpx, 17>& at_z) {
    Cpx v(s.sign);
    for (int i = 0; i < 10; ++i) v *= ipow(consts[i + 1], 2 * s.expo[i]);
    return v * at_z[s.m] * at_z[s.m];
}

std::array<Cpx, 16> trope_values(const std::array<Cpx, 17>& consts,
                                 const std::array<Cpx, 17>& at_z) {
    auto dict = trope_theta_dictionary();
    std::array<Cpx, 16> out;
    for (int t = 0; t < 16; ++t) out[t] = trope_value(dict[t], consts, at_z);
    return out;
}

Cpx pair_section_value(const PairSection& s, const std::array<Cpx, 17>& consts,
                       const std::array<Cpx, 17>& at_z) {
    Cpx v = s.imaginary ? Cpx(0, s.sign) : Cpx(s.sign, 0);
    for (int i = 0; i < 10; ++i) v *= ipow(consts[i + 1], s.expo[i]);
    return v * at_z[s.ma] * at_z[s.mb];
}

double relation_residual(const TropeRelation& rel, const std::array<Cpx, 3>& lam,
                         const std::array<Cpx, 16>& values) {
    Cpx sum(0);
    double scale = 0.0;
    for (int k = 0; k < rel.nterms; ++k) {
        const TropeTerm& t = rel.terms[k];
        Cpx v = term_coefficient(t, lam) * values[t.a];
        if (t.b >= 0) v *= values[t.b];
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    if (scale < 1e-300) return std::abs(sum);
    return std::abs(sum) / scale;
}

double section_residual(const TropeRelation& rel, const std::array<Cpx, 3>& lam,
                        const std::array<Cpx, 17>& consts,
                        const std::array<Cpx, 17>& at_z) {
    auto pairs = trope_pair_sections();
    Cpx sum(0);
    double scale = 0.0;
    for (int k = 0; k < rel.nterms; ++k) {
        const TropeTerm& t = rel.terms[k];
        Cpx v = term_coefficient(t, lam) *
                pair_section_value(pairs[pair_index(t.a, t.b)], consts, at_z);
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    if (scale < 1e-300) return std::abs(sum);
    return std::abs(sum) / scale;
}

std::string section_sign_table() {
    std::string s;
    for (const PairSection& p : trope_pair_sections()) s += p.sign > 0 ? '+' : '-';
    return s;
}

std::uint64_t sign_table_checksum() { return fnv1a64(section_sign_table()); }

}  // namespace kummer
