/**************************************************************************
 * nrc.hpp
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "projgeo.hpp"
#include "tower.hpp"

namespace pseudoarc {

/// A parameter of PG(1, F): either a field element t (the point (1, t)) or
/// the point at infinity (0, 1).
struct CurveParam {
    bool infinite = false;
    Elem t{};

    static CurveParam finite(Elem t) { return {false, t}; }
    static CurveParam infinity() { return {true, {}}; }

    friend bool operator==(const CurveParam&, const CurveParam&) = default;
};

struct NrcPoint {
    CurveParam param;
    Vec coords;
};

/// (u^{N-1}, u^{N-2} t, ..., t^{N-1}) with (u, t) normalized to (1, t) or (0, 1).
inline NrcPoint veronese(const Field& F, Elem u, Elem t, std::size_t N) {
    if (N == 0) throw std::invalid_argument("veronese: N must be >= 1");
    if (u.code == 0 && t.code == 0) throw std::invalid_argument("veronese: (0,0) is not a point of PG(1,q)");
    if (u.code == 0) {
        Vec v(N);
        v[N - 1] = F.one();
        return {CurveParam::infinity(), std::move(v)};
    }
    const Elem s = F.div(t, u);
    Vec v(N);
    Elem acc = F.one();
    for (std::size_t i = 0; i < N; ++i) {
        v[i] = acc;
        acc = F.mul(acc, s);
    }
    return {CurveParam::finite(s), std::move(v)};
}

inline NrcPoint veronese(const Field& F, CurveParam p, std::size_t N) {
    return p.infinite ? veronese(F, F.zero(), F.one(), N) : veronese(F, F.one(), p.t, N);
}

/// All |F|+1 points of NRC_{N,|F|}: t ascending by encoding, then infinity.
inline std::vector<NrcPoint> nrc_points(const Field& F, std::size_t N) {
    if (N < 2) throw std::invalid_argument("nrc_points: N must be >= 2");
    std::vector<NrcPoint> out;
    for (std::uint32_t t = 0; t < F.size(); ++t) out.push_back(veronese(F, CurveParam::finite({t}), N));
    out.push_back(veronese(F, CurveParam::infinity(), N));
    return out;
}

inline void require_characteristic_above(const Field& F, unsigned j, const char* what) {
    if (F.characteristic() <= j)
        throw std::domain_error(std::string(what) + ": characteristic " + std::to_string(F.characteristic()) +
                                " must exceed " + std::to_string(j));
}

/// Rows 0..j: the r-th derivative of (1, t, ..., t^{N-1}), i.e. entry (r, i)
/// is i(i-1)...(i-r+1) t^{i-r}.
inline Matrix osc_basis(const Field& F, Elem t, unsigned j, std::size_t N) {
    require_characteristic_above(F, j, "osc_basis");
    if (N < 2 || j + 1 > N) throw std::invalid_argument("osc_basis: need j < N");
    Matrix m(j + 1, N);
    for (unsigned r = 0; r <= j; ++r) {
        for (std::size_t i = r; i < N; ++i) {
            Elem c = F.one();
            for (unsigned l = 0; l < r; ++l) c = F.mul(c, F.from_int(static_cast<std::int64_t>(i - l)));
            m(r, i) = F.mul(c, F.pow(t, i - r));
        }
    }
    return m;
}

/// Osculating basis at infinity: row r is the unit vector e_{N-1-r}.
inline Matrix osc_basis_infty(const Field& F, unsigned j, std::size_t N) {
    require_characteristic_above(F, j, "osc_basis_infty");
    if (N < 2 || j + 1 > N) throw std::invalid_argument("osc_basis_infty: need j < N");
    Matrix m(j + 1, N);
    for (unsigned r = 0; r <= j; ++r) m(r, N - 1 - r) = F.one();
    return m;
}

inline Matrix osc_basis(const Field& F, CurveParam p, unsigned j, std::size_t N) {
    return p.infinite ? osc_basis_infty(F, j, N) : osc_basis(F, p.t, j, N);
}

/// Rows v, v^q, ..., v^{q^{rows-1}} for a top-level row vector v.
inline Matrix moore_matrix(const FieldCtx& ctx, std::span<const Elem> v, unsigned rows) {
    Matrix m;
    m.set_cols(v.size());
    for (unsigned i = 0; i < rows; ++i) m.append_row(frobenius(ctx, v, i));
    return m;
}

/// F_q(alpha) = F_{q^h}.
inline bool is_imaginary(const FieldCtx& ctx, Elem alpha) {
    if (!ctx.top().contains(alpha)) throw std::invalid_argument("is_imaginary: not a top-field element");
    if (alpha.code == 0) return ctx.h() == 1;
    return !ctx.in_proper_subfield(alpha);
}

/// Same predicate computed as rank(M_alpha) = h, M_alpha the h x N Moore
/// matrix of (1, alpha, ..., alpha^{N-1}).
inline bool is_imaginary_by_rank(const FieldCtx& ctx, Elem alpha, std::size_t N) {
    const auto p = veronese(ctx.top(), CurveParam::finite(alpha), N);
    return rank(ctx.top(), moore_matrix(ctx, p.coords, ctx.h())) == ctx.h();
}

inline int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// (1/h) sum_{d | h} mu(h/d) q^d.
inline std::uint64_t lambda_count(unsigned h, std::uint64_t q) {
    std::int64_t acc = 0;
    for (unsigned d = 1; d <= h; ++d) {
        if (h % d) continue;
        std::int64_t qd = 1;
        for (unsigned i = 0; i < d; ++i) qd *= static_cast<std::int64_t>(q);
        acc += mobius(h / d) * qd;
    }
    if (acc % h) throw std::logic_error("lambda_count: non-integral orbit count");
    return static_cast<std::uint64_t>(acc / h);
}

struct LambdaSet {
    unsigned h = 1;
    std::uint32_t q = 0;
    std::vector<Elem> reps;
};

/// One element of minimal encoding from each Frobenius orbit of size h,
/// ascending.
inline LambdaSet lambda_set(const FieldCtx& ctx) {
    LambdaSet out{ctx.h(), ctx.q(), {}};
    std::vector<bool> seen(ctx.order(), false);
    for (std::uint32_t c = 0; c < ctx.order(); ++c) {
        if (seen[c]) continue;
        const auto orbit = ctx.conjugates({c});
        for (Elem x : orbit) seen[x.code] = true;
        if (is_imaginary(ctx, {c})) out.reps.push_back({c});
    }
    if (out.reps.size() != lambda_count(ctx.h(), ctx.q())) throw std::logic_error("lambda_set: count disagrees with the Mobius formula");
    return out;
}

}  // namespace pseudoarc
