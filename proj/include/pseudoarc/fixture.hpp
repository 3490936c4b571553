/**************************************************************************
 * fixture.hpp
 *
 * Copyright 2026 The pseudoarc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "nrc.hpp"
#include "projgeo.hpp"
#include "pseudoarc.hpp"

namespace pseudoarc::fixture {

// The unique non-linear (11, 4^6, 9) additive MDS code over F_16 seen as a
// pseudo-arc of 11 lines of PG(5,4), together with a 17-point normal
// rational curve N of PG(5,16) and a projectivity taking N to NRC_{6,16}.
//
// Encoding: F_16 = F_2[w]/(w^4 + w + 1) and F_4 = {0, 1, e, e^2} with
// e = w^5. In FieldCtx(2, 2, 2) these are exactly the top field and the base
// field (base code 2 is e, base code 3 is e^2 = e + 1).
//
// Two entries of the published table are inconsistent with the rest of the
// data. The line l_8 was printed identical to l_10; the correct l_8 is
// <L_8, L_8^Psi> meet PG(5,4). The point L_6 was printed with a w^4 entry whose
// Frobenius image is w, not the printed w^6 of L_6^Psi; w^9 is the entry that
// fits. Both the printed and the corrected versions are kept.

inline FieldCtx context() { return FieldCtx(2, 2, 2); }

namespace detail {

constexpr std::uint32_t E = 2;    // e
constexpr std::uint32_t E2 = 3;   // e^2

using Row = std::array<std::uint32_t, 6>;

inline Subspace line(const FieldCtx& ctx, Row a, Row b) {
    Matrix m(2, 6);
    for (int i = 0; i < 6; ++i) {
        m(0, i) = {a[i]};
        m(1, i) = {b[i]};
    }
    return Subspace::from_rows(ctx, Level::Base, m);
}

// Entries given as powers of w, -1 for zero.
inline Vec wpoint(const FieldCtx& ctx, std::array<int, 6> exps) {
    Vec v(6);
    const Elem w = ctx.top().generator();
    for (int i = 0; i < 6; ++i) v[i] = exps[i] < 0 ? ctx.top().zero() : ctx.top().pow(w, static_cast<std::uint64_t>(exps[i]));
    return v;
}

}  // namespace detail

/// l_1 .. l_11 as printed (l_8 equal to l_10).
inline std::vector<Subspace> lines_as_printed(const FieldCtx& ctx) {
    using detail::E;
    using detail::E2;
    using detail::line;
    return {
        line(ctx, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}),
        line(ctx, {1, 0, E, E, E, 1}, {0, 1, E, 1, 1, 1}),
        line(ctx, {1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}),
        line(ctx, {1, 0, 0, E, 1, E}, {0, 1, E, E2, E, 0}),
        line(ctx, {1, 0, E, E2, 0, 1}, {0, 1, E2, E2, 1, E2}),
        line(ctx, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}),
        line(ctx, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}),
        line(ctx, {1, 0, 0, 1, 0, E}, {0, 1, 1, E2, E, E2}),
        line(ctx, {1, 0, 1, E2, E2, 1}, {0, 1, 1, 1, 0, E}),
        line(ctx, {1, 0, 0, 1, 0, E}, {0, 1, 1, E2, E, E2}),
        line(ctx, {1, 0, E, 0, E, E}, {0, 1, 1, E, E2, E}),
    };
}

/// l_1 .. l_11 with l_8 = <(1,0,1,e,e,0), (0,1,e^2,0,e,e)>.
inline std::vector<Subspace> lines(const FieldCtx& ctx) {
    using detail::E;
    using detail::E2;
    auto out = lines_as_printed(ctx);
    out[7] = detail::line(ctx, {1, 0, 1, E, E, 0}, {0, 1, E2, 0, E, E});
    return out;
}

/// L_1..L_5, then L_i, L_i^Psi for i = 6..11, as printed.
inline std::vector<Vec> points_as_printed(const FieldCtx& ctx) {
    using detail::wpoint;
    // e = w^5, e^2 = w^10
    return {
        wpoint(ctx, {0, -1, -1, -1, -1, -1}),
        wpoint(ctx, {0, 0, -1, 10, 10, -1}),
        wpoint(ctx, {0, 5, 0, 5, 0, 5}),
        wpoint(ctx, {0, 10, 0, -1, -1, 5}),
        wpoint(ctx, {-1, 0, 10, 10, 0, 10}),
        wpoint(ctx, {-1, -1, 0, 4, -1, -1}),
        wpoint(ctx, {-1, -1, 0, 6, -1, -1}),
        wpoint(ctx, {-1, -1, -1, -1, 0, 3}),
        wpoint(ctx, {-1, -1, -1, -1, 0, 12}),
        wpoint(ctx, {0, 7, 8, 5, 14, 12}),
        wpoint(ctx, {0, 13, 2, 5, 11, 3}),
        wpoint(ctx, {0, 2, 8, 4, 10, 9}),
        wpoint(ctx, {0, 8, 2, 1, 10, 6}),
        wpoint(ctx, {0, 11, 11, 13, 1, 9}),
        wpoint(ctx, {0, 14, 14, 7, 4, 6}),
        wpoint(ctx, {0, 1, 2, 6, 3, 9}),
        wpoint(ctx, {0, 4, 8, 9, 12, 6}),
    };
}

/// Same with L_6 = (0,0,1,w^9,0,0).
inline std::vector<Vec> points(const FieldCtx& ctx) {
    auto out = points_as_printed(ctx);
    out[5] = detail::wpoint(ctx, {-1, -1, 0, 9, -1, -1});
    return out;
}

/// Index into points() of L_i (1-based i); L_i^Psi is the next entry for i >= 6.
inline std::size_t point_index(unsigned i) { return i <= 5 ? i - 1 : 5 + 2 * (i - 6); }

/// Base-level matrix acting on column vectors, taking N onto NRC_{6,16}.
inline Matrix projectivity() {
    using detail::E;
    using detail::E2;
    const std::uint32_t rows[6][6] = {
        {1, E, 0, 1, 1, E2}, {E, 1, 1, 1, E2, 0}, {E2, 1, E, 0, 1, 1},
        {1, E2, 1, E, 0, 1}, {E, E2, 1, E2, E, E2}, {E2, E, 0, E, E, 1},
    };
    Matrix m(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) m(r, c) = {rows[r][c]};
    return m;
}

inline constexpr unsigned k = 3;
inline constexpr std::size_t length = 11;
inline constexpr std::size_t distance = 9;

/// Parameter t with M*v proportional to nu(1, t), or infinity; nullopt when
/// M*v is not on NRC_{6,16}.
inline std::optional<CurveParam> curve_parameter(const FieldCtx& ctx, const Vec& v) {
    const Field& T = ctx.top();
    Matrix M = projectivity();
    Vec img(6, T.zero());
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) img[r] = T.add(img[r], T.mul(ctx.embed(M(r, c)), v[c]));
    img = normalize(T, img);
    const CurveParam p = img[0].code == 0 ? CurveParam::infinity() : CurveParam::finite(img[1]);
    if (veronese(T, p, 6).coords != img) return std::nullopt;
    return p;
}

/// <L, L^Psi> meet PG(5,4).
inline Subspace secant_line(const FieldCtx& ctx, const Vec& L) { return spread_element(ctx, L); }

/// Tangent line to N at L (N = M^{-1} NRC_{6,16}) meet PG(5,4).
inline std::optional<Subspace> tangent_line(const FieldCtx& ctx, const Vec& L) {
    const auto t = curve_parameter(ctx, L);
    if (!t) return std::nullopt;
    const Matrix tangent = osc_basis(ctx.top(), *t, 1, 6);
    const auto Minv = inverse(ctx.base(), projectivity());
    const Subspace pre = apply_projectivity(ctx, Level::Base, *Minv, Subspace::from_rows(ctx, Level::Top, tangent));
    if (!is_frobenius_invariant(ctx, pre)) return std::nullopt;
    return rationalize(ctx, pre);
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Every consistency check of the table, on the corrected data, plus two
/// informational checks on the printed entries.
inline std::vector<Check> run_checks(const FieldCtx& ctx, unsigned threads = 1) {
    std::vector<Check> out;
    const auto L = lines(ctx);
    const auto P = points(ctx);

    const auto arc = is_pseudo_arc(ctx, L, k, threads);
    out.push_back({"lines form a pseudo-arc (k = 3)", arc.holds, std::to_string(arc.subsets_checked) + " triples"});

    bool on_curve = true;
    std::vector<CurveParam> params;
    for (const auto& p : P) {
        const auto t = curve_parameter(ctx, p);
        on_curve = on_curve && t.has_value();
        if (t && std::find(params.begin(), params.end(), *t) == params.end()) params.push_back(*t);
    }
    out.push_back({"projectivity maps the 17 points onto NRC_{6,16}", on_curve && params.size() == 17,
                   std::to_string(params.size()) + " distinct curve points"});

    bool conj = true;
    for (unsigned i = 6; i <= 11; ++i) {
        const auto a = point_index(i);
        conj = conj && Subspace::from_rows(ctx, Level::Top, Matrix::from_rows({frobenius(ctx, P[a])})) ==
                           Subspace::from_rows(ctx, Level::Top, Matrix::from_rows({P[a + 1]}));
    }
    out.push_back({"L_i^Psi is the Frobenius image of L_i (i = 6..11)", conj, ""});

    bool sec = true;
    for (unsigned i = 6; i <= 11; ++i) sec = sec && secant_line(ctx, P[point_index(i)]) == L[i - 1];
    out.push_back({"l_i = <L_i, L_i^Psi> meet PG(5,4) (i = 6..11)", sec, ""});

    bool tan = true;
    for (unsigned i = 1; i <= 5; ++i) {
        const auto t = tangent_line(ctx, P[point_index(i)]);
        tan = tan && t && *t == L[i - 1];
    }
    out.push_back({"l_i = tangent to N at L_i meet PG(5,4) (i = 1..5)", tan, ""});

    const auto code = code_from_subspaces(ctx, k, L);
    const auto d = min_distance(ctx, code, default_codeword_budget, threads);
    const bool params_ok = code.length() == length && d.codewords == 4096 && d.distance == distance;
    out.push_back({"code parameters (11, 4^6, 9) over F_16", params_ok,
                   "n = " + std::to_string(code.length()) + ", |C| = " + std::to_string(d.codewords) + ", d = " + std::to_string(d.distance)});

    const auto printed = lines_as_printed(ctx);
    out.push_back({"[printed table] l_8 differs from l_10", printed[7] != printed[9], "informational"});
    const auto pp = points_as_printed(ctx);
    const bool l6 = Subspace::from_rows(ctx, Level::Top, Matrix::from_rows({frobenius(ctx, pp[5])})) ==
                    Subspace::from_rows(ctx, Level::Top, Matrix::from_rows({pp[6]}));
    out.push_back({"[printed table] L_6^Psi is the Frobenius image of L_6", l6, "informational"});
    return out;
}

/// Checks that decide the verdict (the informational ones are excluded).
inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (c.detail != "informational" && !c.pass) return false;
    return true;
}

}  // namespace pseudoarc::fixture
