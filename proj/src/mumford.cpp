#include "kummer/mumford.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace kummer {

namespace {

// Rows in the shared catalog DSL: "sign(c1,c2)(m1,m2)" per term. The strings
// are kept byte-identical to the review oracle so the checksum covers both.
constexpr const char* kSquareRows[] = {
    "+(6,6)(11,11) -(4,4)(13,13) -(9,9)(14,14) +(3,3)(16,16)",
    "+(6,6)(12,12) -(2,2)(13,13) -(7,7)(14,14) +(1,1)(16,16)",
    "+(10,10)(13,13) +(5,5)(14,14) -(6,6)(15,15) -(8,8)(16,16)",
    "+(6,6)(1,1) -(1,1)(6,6) +(7,7)(13,13) -(2,2)(14,14)",
    "+(6,6)(2,2) -(2,2)(6,6) -(1,1)(14,14) +(7,7)(16,16)",
    "+(6,6)(3,3) -(3,3)(6,6) +(9,9)(13,13) -(4,4)(14,14)",
    "+(6,6)(4,4) -(4,4)(6,6) -(3,3)(14,14) +(9,9)(16,16)",
    "+(6,6)(5,5) -(5,5)(6,6) +(8,8)(13,13) -(10,10)(16,16)",
    "+(7,7)(6,6) -(6,6)(7,7) -(1,1)(13,13) +(2,2)(16,16)",
    "+(8,8)(6,6) -(6,6)(8,8) -(5,5)(13,13) +(10,10)(14,14)",
    "+(9,9)(6,6) -(6,6)(9,9) -(3,3)(13,13) +(4,4)(16,16)",
    "+(10,10)(6,6) -(6,6)(10,10) +(8,8)(14,14) -(5,5)(16,16)",
};

constexpr const char* kSquareIds[] = {
    "sq-odd-1", "sq-odd-2", "sq-odd-3", "sq-mix-1", "sq-mix-2", "sq-mix-3",
    "sq-mix-4", "sq-mix-5", "sq-mix-6", "sq-mix-7", "sq-mix-8", "sq-mix-9",
};

constexpr const char* kBimonomialRows[] = {
    "+(1,2)(3,4) -(3,4)(1,2) +(8,10)(13,16)",
    "+(1,2)(13,16) -(3,4)(8,10) +(8,10)(3,4)",
    "+(1,3)(7,9) +(2,4)(11,12) -(7,9)(1,3)",
    "+(1,3)(11,12) +(2,4)(7,9) -(7,9)(2,4)",
    "+(1,4)(5,6) +(2,3)(14,15) -(5,6)(1,4)",
    "+(1,4)(14,15) +(2,3)(5,6) -(5,6)(2,3)",
    "+(1,5)(7,8) +(4,6)(11,13) -(7,8)(1,5)",
    "+(1,5)(11,13) +(4,6)(7,8) -(7,8)(4,6)",
    "+(1,6)(4,5) -(4,5)(1,6) -(9,10)(12,16)",
    "+(1,6)(9,10) -(4,5)(12,16) -(9,10)(1,6)",
    "+(1,7)(5,8) +(3,9)(14,16) -(5,8)(1,7)",
    "+(1,7)(14,16) +(3,9)(5,8) -(5,8)(3,9)",
    "+(1,8)(5,7) +(2,10)(12,15) -(5,7)(1,8)",
    "+(1,8)(12,15) +(2,10)(5,7) -(5,7)(2,10)",
    "+(1,9)(3,7) -(3,7)(1,9) -(6,10)(13,15)",
    "+(1,9)(6,10) -(3,7)(13,15) -(6,10)(1,9)",
    "+(1,10)(6,9) +(2,8)(11,14) -(6,9)(1,10)",
    "+(1,10)(11,14) +(2,8)(6,9) -(6,9)(2,8)",
    "+(2,9)(10,14) +(4,7)(5,13) -(6,8)(1,11)",
    "+(2,9)(5,13) +(4,7)(10,14) -(6,8)(3,12)",
    "+(2,7)(8,15) -(4,9)(6,16) -(5,10)(1,12)",
    "+(2,7)(6,16) -(4,9)(8,15) +(5,10)(3,11)",
    "+(3,10)(2,16) +(4,8)(1,13) -(6,7)(5,11)",
    "+(3,10)(1,13) +(4,8)(2,16) -(6,7)(9,15)",
    "+(2,6)(4,15) -(3,5)(1,14) +(8,9)(7,16)",
    "+(2,6)(10,11) +(3,5)(7,16) -(8,9)(1,14)",
    "+(2,5)(4,14) -(3,6)(1,15) +(7,10)(9,13)",
    "+(2,5)(9,13) -(3,6)(8,12) +(7,10)(4,14)",
    "+(3,8)(2,13) +(4,10)(1,16) -(5,9)(6,12)",
    "+(3,8)(1,16) +(4,10)(2,13) -(5,9)(7,14)",
    "+(2,5)(3,6) -(3,6)(2,5) +(7,10)(11,16)",
    "+(2,5)(11,16) -(3,6)(7,10) +(7,10)(3,6)",
    "+(2,6)(8,9) +(3,5)(12,13) -(8,9)(2,6)",
    "+(2,6)(12,13) +(3,5)(8,9) -(8,9)(3,5)",
    "+(2,7)(4,9) -(4,9)(2,7) +(5,10)(13,14)",
    "+(2,7)(13,14) -(4,9)(5,10) +(5,10)(4,9)",
    "+(2,9)(4,7) -(4,7)(2,9) +(6,8)(15,16)",
    "+(2,9)(15,16) +(4,7)(6,8) -(6,8)(4,7)",
    "+(1,9)(8,14) -(3,7)(5,16) -(6,10)(2,11)",
    "+(1,9)(5,16) -(3,7)(8,14) +(6,10)(4,12)",
    "+(1,7)(10,15) +(3,9)(6,13) -(5,8)(2,12)",
    "+(1,7)(6,13) +(3,9)(10,15) -(5,8)(4,11)",
    "+(1,6)(3,15) -(4,5)(2,14) -(9,10)(7,13)",
    "+(1,6)(8,11) -(4,5)(7,13) -(9,10)(2,14)",
    "+(1,5)(3,14) -(4,6)(2,15) -(7,8)(9,16)",
    "+(1,5)(9,16) +(4,6)(10,12) -(7,8)(3,14)",
    "+(3,8)(5,9) +(4,10)(11,15) -(5,9)(3,8)",
    "+(3,8)(11,15) +(4,10)(5,9) -(5,9)(4,10)",
    "+(3,10)(6,7) +(4,8)(12,14) -(6,7)(3,10)",
    "+(3,10)(12,14) +(4,8)(6,7) -(6,7)(4,8)",
    "+(1,10)(4,16) +(2,8)(3,13) -(6,9)(5,12)",
    "+(1,10)(3,13) +(2,8)(4,16) -(6,9)(7,15)",
    "+(1,8)(4,13) +(2,10)(3,16) -(5,7)(6,11)",
    "+(1,8)(3,16) +(2,10)(4,13) -(5,7)(9,14)",
    "+(1,3)(8,16) +(2,4)(10,13) -(7,9)(5,14)",
    "+(1,3)(10,13) +(2,4)(8,16) -(7,9)(6,15)",
    "+(1,2)(5,15) -(3,4)(6,14) -(8,10)(7,12)",
    "+(1,2)(7,12) -(3,4)(9,11) -(8,10)(5,15)",
    "+(1,4)(8,13) +(2,3)(10,16) -(5,6)(7,11)",
    "+(1,4)(10,16) +(2,3)(8,13) -(5,6)(9,12)",
};

// Rows 15, 31 and 35 as printed before the sign correction.
constexpr const char* kMisprintRows[] = {
    "+(1,9)(3,7) -(3,7)(1,9) +(6,10)(13,15)",
    "+(2,5)(3,6) -(3,6)(2,5) -(7,10)(11,16)",
    "+(2,7)(4,9) -(4,9)(2,7) -(5,10)(13,14)",
};

constexpr const char* kMisprintIds[] = {
    "bi-15-misprint", "bi-31-misprint", "bi-35-misprint"};

ThetaRelation parse_row(std::string_view id, std::string_view row) {
    ThetaRelation rel{id, 0, {}};
    std::size_t pos = 0;
    while (pos < row.size()) {
        while (pos < row.size() && row[pos] == ' ') ++pos;
        if (pos >= row.size()) break;
        ThetaTerm term{};
        term.sign = row[pos] == '-' ? -1 : 1;
        int vals[4];
        int got = std::sscanf(row.data() + pos + 1, "(%d,%d)(%d,%d)", &vals[0],
                              &vals[1], &vals[2], &vals[3]);
        if (got != 4 || rel.nterms >= 4)
            throw std::logic_error("bad relation row: " + std::string(row));
        term.c1 = vals[0];
        term.c2 = vals[1];
        term.m1 = vals[2];
        term.m2 = vals[3];
        rel.terms[rel.nterms++] = term;
        pos = row.find(' ', pos);
        if (pos == std::string_view::npos) break;
    }
    return rel;
}

std::vector<ThetaRelation> parse_rows(std::span<const char* const> ids,
                                      std::span<const char* const> rows) {
    std::vector<ThetaRelation> out;
    out.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        out.push_back(parse_row(ids[k], rows[k]));
    return out;
}

const std::vector<ThetaRelation>& full_catalog() {
    static const std::vector<ThetaRelation> cat = [] {
        auto sq = parse_rows(kSquareIds, kSquareRows);
        static std::vector<std::string> bi_ids;
        for (std::size_t k = 1; k <= std::size(kBimonomialRows); ++k)
            bi_ids.push_back("bi-" + std::to_string(k));
        std::vector<ThetaRelation> all = std::move(sq);
        for (std::size_t k = 0; k < std::size(kBimonomialRows); ++k)
            all.push_back(parse_row(bi_ids[k], kBimonomialRows[k]));
        return all;
    }();
    return cat;
}

}  // namespace

std::span<const ThetaRelation> mumford_relations() { return full_catalog(); }

std::span<const ThetaRelation> mumford_square_relations() {
    return mumford_relations().subspan(0, 12);
}

std::span<const ThetaRelation> mumford_bimonomial_relations() {
    return mumford_relations().subspan(12);
}

std::span<const ThetaRelation> mumford_bimonomial_misprints() {
    static const std::vector<ThetaRelation> rows =
        parse_rows(kMisprintIds, kMisprintRows);
    return rows;
}

double relative_residual(const ThetaRelation& rel, const std::array<Cpx, 17>& consts,
                         const std::array<Cpx, 17>& at_z) {
    Cpx sum{};
    double scale = 0.0;
    for (int t = 0; t < rel.nterms; ++t) {
        const ThetaTerm& term = rel.terms[t];
        Cpx val = consts[term.c1] * consts[term.c2] * at_z[term.m1] * at_z[term.m2];
        sum += term.sign > 0 ? val : -val;
        scale = std::max(scale, std::abs(val));
    }
    if (scale < 1e-300) return std::abs(sum);
    return std::abs(sum) / scale;
}

std::string canonical_catalog_text() {
    std::string text;
    for (const ThetaRelation& rel : mumford_relations()) {
        text += rel.id;
        for (int t = 0; t < rel.nterms; ++t) {
            const ThetaTerm& term = rel.terms[t];
            text += term.sign > 0 ? " +(" : " -(";
            text += std::to_string(term.c1) + "," + std::to_string(term.c2) + ")(" +
                    std::to_string(term.m1) + "," + std::to_string(term.m2) + ")";
        }
        text += "\n";
    }
    return text;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char byte : text) {
        h ^= byte;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t catalog_checksum() { return fnv1a64(canonical_catalog_text()); }

}  // namespace kummer
