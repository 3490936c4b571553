/**************************************************************************
 * codes.hpp
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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "matrix.hpp"
#include "nrc.hpp"
#include "projgeo.hpp"
#include "pseudoarc.hpp"
#include "tower.hpp"

namespace pseudoarc {

enum class CoordKind { Alpha, Deriv, Infty, External };

inline const char* to_string(CoordKind k) {
    switch (k) {
        case CoordKind::Alpha: return "alpha";
        case CoordKind::Deriv: return "deriv";
        case CoordKind::Infty: return "infinity";
        case CoordKind::External: return "external";
    }
    return "?";
}

/// What a coordinate evaluates: f(alpha) for Alpha, sum_i f^(i)(t) w^{q^i}
/// for Deriv(t), sum_i f_{hk-h+i} w^{q^i} for Infty.
struct Coord {
    CoordKind kind = CoordKind::External;
    Elem value{};

    friend bool operator==(const Coord&, const Coord&) = default;
};

/**
 * F_q-linear code in F_{q^h}^n with q^{hk} words: the F_q-span of the rows of
 * `gen` (hk x n over F_{q^h}). `omega` is the normal element behind Deriv and
 * Infty coordinates and behind folding.
 */
struct AdditiveCode {
    unsigned h = 1;
    unsigned k = 2;
    std::uint32_t q = 0;
    Elem omega{};
    Matrix gen;
    std::vector<Coord> coords;

    std::size_t length() const { return gen.cols(); }
    std::size_t dim() const { return std::size_t(h) * k; }
};

using Word = std::vector<Elem>;
using ReceivedWord = std::vector<std::optional<Elem>>;

namespace detail {

inline AdditiveCode empty_code(const FieldCtx& ctx, unsigned k) {
    if (k < 1) throw std::invalid_argument("code: k must be >= 1");
    AdditiveCode c;
    c.h = ctx.h();
    c.k = k;
    c.q = ctx.q();
    c.omega = ctx.normal_element();
    c.gen = Matrix(std::size_t(ctx.h()) * k, 0);
    return c;
}

inline void append_column(AdditiveCode& c, const Vec& col, Coord coord) {
    const std::size_t rows = c.dim();
    if (col.size() != rows) throw std::logic_error("append_column: wrong height");
    Matrix g(rows, c.gen.cols() + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < c.gen.cols(); ++j) g(r, j) = c.gen(r, j);
        g(r, c.gen.cols()) = col[r];
    }
    c.gen = std::move(g);
    c.coords.push_back(coord);
}

// Column j of the generator for a Deriv or Infty coordinate: entry r is
// sum_i A(i, r) w^{q^i}.
inline Vec omega_column(const FieldCtx& ctx, const Matrix& A, Elem omega) {
    const Field& T = ctx.top();
    const auto w = ctx.conjugates(omega);
    Vec col(A.cols(), T.zero());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t r = 0; r < A.cols(); ++r)
            if (A(i, r).code) col[r] = T.add(col[r], T.mul(ctx.embed(A(i, r)), w[i]));
    return col;
}

inline Matrix infty_selector(const FieldCtx& ctx, unsigned k) {
    const unsigned h = ctx.h();
    const std::size_t N = std::size_t(h) * k;
    Matrix A(h, N);
    for (unsigned i = 0; i < h; ++i) A(i, N - h + i) = ctx.base().one();
    return A;
}

}  // namespace detail

/// Vandermonde generator: column j is (1, a_j, ..., a_j^{hk-1}).
inline AdditiveCode gen_matrix_S(const FieldCtx& ctx, unsigned k, const std::vector<Elem>& alphas) {
    AdditiveCode c = detail::empty_code(ctx, k);
    if (alphas.size() <= k) throw std::invalid_argument("gen_matrix_S: need more than k evaluation points");
    std::vector<Elem> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("gen_matrix_S: repeated evaluation point");
    for (Elem a : alphas) {
        if (!is_imaginary(ctx, a)) throw std::invalid_argument("gen_matrix_S: " + std::to_string(a.code) + " does not generate F_{q^h}");
        detail::append_column(c, veronese(ctx.top(), CurveParam::finite(a), c.dim()).coords, {CoordKind::Alpha, a});
    }
    return c;
}

/// Append Deriv(t) columns for each t and optionally the Infty column.
inline AdditiveCode extend_code(const FieldCtx& ctx, const AdditiveCode& code, const std::vector<Elem>& ts, bool include_infty) {
    AdditiveCode c = code;
    if (ts.empty() && !include_infty) return c;
    require_characteristic_above(ctx.base(), ctx.h() - 1, "extend_code");
    std::vector<Elem> sorted = ts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("extend_code: repeated t");
    for (Elem t : ts) {
        if (!ctx.base().contains(t)) throw std::invalid_argument("extend_code: t outside F_q");
        for (const auto& cc : c.coords)
            if (cc.kind == CoordKind::Deriv && cc.value == t) throw std::invalid_argument("extend_code: t already present");
        const Matrix A = osc_basis(ctx.base(), t, ctx.h() - 1, c.dim());
        detail::append_column(c, detail::omega_column(ctx, A, c.omega), {CoordKind::Deriv, t});
    }
    if (include_infty) {
        for (const auto& cc : c.coords)
            if (cc.kind == CoordKind::Infty) throw std::invalid_argument("extend_code: infinity already present");
        detail::append_column(c, detail::omega_column(ctx, detail::infty_selector(ctx, c.k), c.omega), {CoordKind::Infty, {}});
    }
    return c;
}

/// Every t in F_q plus infinity.
inline AdditiveCode extend_code_fully(const FieldCtx& ctx, const AdditiveCode& code) {
    std::vector<Elem> ts;
    for (std::uint32_t t = 0; t < ctx.q(); ++t) ts.push_back({t});
    return extend_code(ctx, code, ts, true);
}

/// One External column per subspace; folding the code gives the subspaces back.
inline AdditiveCode code_from_subspaces(const FieldCtx& ctx, unsigned k, const std::vector<Subspace>& subspaces) {
    AdditiveCode c = detail::empty_code(ctx, k);
    for (const auto& s : subspaces) {
        if (s.level() != Level::Base || s.ambient_dim() != c.dim() || s.rank() != c.h)
            throw std::invalid_argument("code_from_subspaces: subspace of the wrong shape");
        detail::append_column(c, detail::omega_column(ctx, s.basis(), c.omega), {CoordKind::External, {}});
    }
    return c;
}

/// Coordinate-wise evaluation of f (coefficients in F_q, degree < hk).
inline Word encode(const FieldCtx& ctx, const AdditiveCode& code, const Poly& f) {
    if (f.level != Level::Base) throw std::invalid_argument("encode: coefficients must lie in F_q");
    for (Elem c : f.coeffs)
        if (!ctx.base().contains(c)) throw std::invalid_argument("encode: coefficient outside F_q");
    if (degree(f) >= static_cast<long>(code.dim())) throw std::invalid_argument("encode: degree must be < hk");
    const Field& T = ctx.top();
    const auto w = ctx.conjugates(code.omega);
    Word out(code.length(), T.zero());
    for (std::size_t j = 0; j < code.length(); ++j) {
        const Coord& cd = code.coords[j];
        switch (cd.kind) {
            case CoordKind::Alpha:
                out[j] = poly_eval(ctx, f, {Level::Top, cd.value}).value;
                break;
            case CoordKind::Deriv:
                for (unsigned i = 0; i < code.h; ++i) {
                    const Elem d = poly_eval(ctx, poly_derivative(ctx, f, i), {Level::Base, cd.value}).value;
                    out[j] = T.add(out[j], T.mul(ctx.embed(d), w[i]));
                }
                break;
            case CoordKind::Infty:
                for (unsigned i = 0; i < code.h; ++i) {
                    const std::size_t r = code.dim() - code.h + i;
                    if (r < f.coeffs.size()) out[j] = T.add(out[j], T.mul(ctx.embed(f.coeffs[r]), w[i]));
                }
                break;
            case CoordKind::External:
                for (std::size_t r = 0; r < f.coeffs.size(); ++r)
                    out[j] = T.add(out[j], T.mul(ctx.embed(f.coeffs[r]), code.gen(r, j)));
                break;
        }
    }
    return out;
}

/// sum_r m_r * gen_r for a message m in F_q^{hk}.
inline Word encode_message(const FieldCtx& ctx, const AdditiveCode& code, std::span<const Elem> msg) {
    if (msg.size() != code.dim()) throw std::invalid_argument("encode_message: message length must be hk");
    Vec lifted(msg.size());
    for (std::size_t r = 0; r < msg.size(); ++r) {
        if (!ctx.base().contains(msg[r])) throw std::invalid_argument("encode_message: symbol outside F_q");
        lifted[r] = ctx.embed(msg[r]);
    }
    return row_times(ctx.top(), lifted, code.gen);
}

inline std::size_t weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x.code != 0; }));
}

inline std::size_t distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline constexpr std::uint64_t default_codeword_budget = 1u << 20;

struct DistanceReport {
    std::size_t distance = 0;
    std::vector<Elem> witness;   ///< a message of minimum nonzero weight (first in enumeration order)
    std::uint64_t codewords = 0;
};

/**
 * Minimum nonzero weight over all q^{hk} - 1 nonzero messages. Messages are
 * enumerated as base-q counters with the first coordinate fastest; shards on
 * the last coordinate go to separate threads.
 */
inline DistanceReport min_distance(const FieldCtx& ctx, const AdditiveCode& code,
                                   std::uint64_t budget = default_codeword_budget, unsigned threads = 1) {
    const std::size_t dim = code.dim();
    const std::uint32_t q = ctx.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= q;
        if (total > budget) throw std::length_error("min_distance: codeword count exceeds the enumeration budget");
    }
    const Field& T = ctx.top();
    const std::size_t n = code.length();
    // scaled[r][c] = embed(c) * gen row r
    std::vector<std::vector<Word>> scaled(dim, std::vector<Word>(q));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::uint32_t c = 0; c < q; ++c) {
            Word w(n);
            const Elem e = ctx.embed({c});
            for (std::size_t j = 0; j < n; ++j) w[j] = T.mul(e, code.gen(r, j));
            scaled[r][c] = std::move(w);
        }

    struct Best {
        std::size_t d = std::numeric_limits<std::size_t>::max();
        std::uint64_t index = 0;
    };
    const std::uint32_t shards = dim == 0 ? 1 : q;
    const std::uint64_t per_shard = total / shards;
    std::vector<Best> best(shards);

    auto run_shard = [&](std::uint32_t top) {
        std::vector<std::uint32_t> digits(dim, 0);
        Word cw(n, T.zero());
        if (dim) {
            digits[dim - 1] = top;
            cw = scaled[dim - 1][top];
        }
        for (std::uint64_t i = 0; i < per_shard; ++i) {
            const std::uint64_t index = std::uint64_t(top) * per_shard + i;
            if (index != 0) {
                const std::size_t wt = weight(cw);
                if (wt < best[top].d) best[top] = {wt, index};
            }
            // advance the low dim-1 digits
            for (std::size_t r = 0; r + 1 < dim; ++r) {
                const std::uint32_t old = digits[r];
                digits[r] = (old + 1 == q) ? 0 : old + 1;
                for (std::size_t j = 0; j < n; ++j) cw[j] = T.add(T.sub(cw[j], scaled[r][old][j]), scaled[r][digits[r]][j]);
                if (digits[r] != 0) break;
            }
        }
    };

    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::uint32_t s = 0; s < shards; ++s) run_shard(s);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint32_t s = t; s < shards; s += threads) run_shard(s);
            });
        for (auto& th : pool) th.join();
    }

    Best b;
    for (const auto& x : best)
        if (x.d < b.d || (x.d == b.d && x.index < b.index)) b = x;
    DistanceReport rep;
    rep.codewords = total;
    if (b.d == std::numeric_limits<std::size_t>::max()) return rep;
    rep.distance = b.d;
    std::uint64_t idx = b.index;
    for (std::size_t r = 0; r < dim; ++r) {
        rep.witness.push_back({static_cast<std::uint32_t>(idx % q)});
        idx /= q;
    }
    return rep;
}

/// F_q-column spaces of the h-column blocks G_j, where G_j[r][i] is the i-th
/// coordinate of gen(r, j) in the normal basis (w, w^q, ...).
inline std::vector<Subspace> fold_columns(const FieldCtx& ctx, const AdditiveCode& code) {
    const auto dual = dual_basis(ctx, ctx.conjugates(code.omega));
    std::vector<Subspace> out;
    for (std::size_t j = 0; j < code.length(); ++j) {
        Matrix Gt(code.h, code.dim());
        for (std::size_t r = 0; r < code.dim(); ++r) {
            const auto c = basis_coordinates(ctx, dual, code.gen(r, j));
            for (unsigned i = 0; i < code.h; ++i) Gt(i, r) = c[i];
        }
        out.push_back(Subspace::from_rows(ctx, Level::Base, Gt));
    }
    return out;
}

struct MdsVerdict {
    bool mds = false;                      ///< geometric verdict
    ArcVerdict arc;                        ///< witness when the fold is not a pseudo-arc
    std::optional<std::size_t> degenerate; ///< column whose fold has rank < h
    std::optional<std::size_t> distance;   ///< exhaustive cross-check when affordable
};

inline MdsVerdict is_mds(const FieldCtx& ctx, const AdditiveCode& code, std::uint64_t budget = default_codeword_budget,
                         unsigned threads = 1) {
    MdsVerdict v;
    const auto folded = fold_columns(ctx, code);
    for (std::size_t j = 0; j < folded.size(); ++j)
        if (folded[j].rank() != code.h) {
            v.degenerate = j;
            break;
        }
    if (!v.degenerate) {
        v.arc = is_pseudo_arc(ctx, folded, code.k, threads);
        v.mds = v.arc.holds;
    }
    std::uint64_t total = 1;
    bool affordable = true;
    for (std::size_t i = 0; i < code.dim() && affordable; ++i) {
        total *= code.q;
        affordable = total <= budget;
    }
    if (affordable && code.length() >= code.k) {
        const auto rep = min_distance(ctx, code, budget, threads);
        v.distance = rep.distance;
        const bool by_distance = rep.distance == code.length() - code.k + 1;
        if (by_distance != v.mds) throw std::logic_error("is_mds: geometric and exhaustive verdicts disagree");
    }
    return v;
}

/**
 * Recover f from a word with erasures. Uses the first k surviving
 * coordinates: each contributes the h equations sum_r f_r G_j[r][i] = c_i,
 * where c_i are the normal-basis coordinates of the received symbol. The
 * result is re-encoded and checked against every surviving position.
 */
inline Poly erasure_decode(const FieldCtx& ctx, const AdditiveCode& code, const ReceivedWord& received) {
    if (received.size() != code.length()) throw std::invalid_argument("erasure_decode: word length mismatch");
    const auto dual = dual_basis(ctx, ctx.conjugates(code.omega));
    const std::size_t dim = code.dim();
    Matrix A(dim, dim);
    Vec b(dim);
    std::size_t used = 0;
    for (std::size_t j = 0; j < received.size() && used < code.k; ++j) {
        if (!received[j]) continue;
        if (!ctx.top().contains(*received[j])) throw std::invalid_argument("erasure_decode: symbol outside F_{q^h}");
        const auto c = basis_coordinates(ctx, dual, *received[j]);
        for (std::size_t r = 0; r < dim; ++r) {
            const auto g = basis_coordinates(ctx, dual, code.gen(r, j));
            for (unsigned i = 0; i < code.h; ++i) A(used * code.h + i, r) = g[i];
        }
        for (unsigned i = 0; i < code.h; ++i) b[used * code.h + i] = c[i];
        ++used;
    }
    if (used < code.k) throw std::invalid_argument("erasure_decode: fewer than k coordinates survive");
    const auto f = solve(ctx.base(), A, b);
    if (!f) throw std::runtime_error("erasure_decode: surviving coordinates do not determine the message");
    const Word re = encode_message(ctx, code, *f);
    for (std::size_t j = 0; j < received.size(); ++j)
        if (received[j] && *received[j] != re[j])
            throw std::runtime_error("erasure_decode: re-encoding disagrees at position " + std::to_string(j) + " (errors are not supported)");
    return make_poly(Level::Base, *f);
}

/// Per-spread test: the code is F_q-equivalent to a linear code over F_{q^h}
/// (through this spread) iff every folded column lies in it.
inline SpreadVerdict linear_equivalence_test(const FieldCtx& ctx, const AdditiveCode& code, const Spread& s) {
    if (s.h != code.h || s.k != code.k) throw std::invalid_argument("linear_equivalence_test: spread parameters differ from the code");
    const auto folded = fold_columns(ctx, code);
    for (std::size_t j = 0; j < folded.size(); ++j)
        if (folded[j].rank() != code.h || !spread_membership(ctx, folded[j], s).member) return {false, j};
    return {};
}

}  // namespace pseudoarc
