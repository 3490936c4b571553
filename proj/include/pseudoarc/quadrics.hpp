/**************************************************************************
 * quadrics.hpp
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
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "nrc.hpp"
#include "projgeo.hpp"
#include "tower.hpp"

namespace pseudoarc {

/**
 * Q(x) = sum_{i <= j} c_ij x_i x_j. Coefficients are stored row by row of the
 * upper triangle: (0,0), (0,1), ..., (0,n-1), (1,1), ...
 */
struct QuadraticForm {
    Level level = Level::Base;
    std::size_t n = 0;
    std::vector<Elem> coeffs;

    static std::size_t monomials(std::size_t n) { return n * (n + 1) / 2; }
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
    Elem coeff(std::size_t i, std::size_t j) const { return coeffs[index(i, j)]; }
    Elem& coeff(std::size_t i, std::size_t j) { return coeffs[index(i, j)]; }

    bool is_zero() const {
        for (Elem c : coeffs)
            if (c.code) return false;
        return true;
    }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

inline QuadraticForm zero_form(Level level, std::size_t n) { return {level, n, std::vector<Elem>(QuadraticForm::monomials(n))}; }

/// The monomials x_i x_j (i <= j) evaluated at v, in coefficient order.
inline Vec monomial_row(const Field& F, std::span<const Elem> v) {
    Vec row;
    row.reserve(QuadraticForm::monomials(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) row.push_back(F.mul(v[i], v[j]));
    return row;
}

inline Elem eval_form(const FieldCtx& ctx, const QuadraticForm& Q, std::span<const Elem> v) {
    if (v.size() != Q.n || Q.coeffs.size() != QuadraticForm::monomials(Q.n)) throw std::invalid_argument("eval_form: length mismatch");
    const Field& F = ctx.field(Q.level);
    Elem acc = F.zero();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < Q.n; ++i)
        for (std::size_t j = i; j < Q.n; ++j, ++idx)
            if (Q.coeffs[idx].code) acc = F.add(acc, F.mul(Q.coeffs[idx], F.mul(v[i], v[j])));
    return acc;
}

struct VanishingSpace {
    std::vector<QuadraticForm> basis;
    std::size_t conditions_rank = 0;
    std::size_t points = 0;
};

/// Quadrics containing every given point, as an RREF basis of the solution
/// space of the point conditions.
inline VanishingSpace vanishing_space_of_points(const FieldCtx& ctx, Level level, std::size_t n, const std::vector<Vec>& points) {
    const Field& F = ctx.field(level);
    const std::size_t m = QuadraticForm::monomials(n);
    Matrix cond;
    cond.set_cols(m);
    VanishingSpace out;
    for (const auto& p : points) {
        if (p.size() != n) throw std::invalid_argument("vanishing_space: point of the wrong length");
        cond.append_row(monomial_row(F, p));
        ++out.points;
        if (cond.rows() >= 2 * m) {
            cond = rref(F, cond).reduced;
            cond.set_cols(m);
        }
    }
    const Matrix ker = nullspace(F, cond);
    out.conditions_rank = m - ker.rows();
    for (std::size_t r = 0; r < ker.rows(); ++r) out.basis.push_back({level, n, ker.row_vector(r)});
    return out;
}

/// Quadrics of PG(n-1, q) containing all the given base-level subspaces.
inline VanishingSpace vanishing_space(const FieldCtx& ctx, std::size_t n, const std::vector<Subspace>& subspaces) {
    std::vector<Vec> pts;
    for (const auto& s : subspaces) {
        if (s.level() != Level::Base || s.ambient_dim() != n) throw std::invalid_argument("vanishing_space: subspace mismatch");
        for (auto& p : projective_points(ctx, s)) pts.push_back(std::move(p));
    }
    return vanishing_space_of_points(ctx, Level::Base, n, pts);
}

/// x_i x_j - x_{i+1} x_{j-1} for 1 <= i <= j-2, j <= k (variables x_1..x_k),
/// ordered by i then j.
inline std::vector<QuadraticForm> nrc_quadric_system(const Field& F, Level level, std::size_t k) {
    if (k < 3) throw std::invalid_argument("nrc_quadric_system: k must be >= 3");
    std::vector<QuadraticForm> out;
    for (std::size_t i = 1; i + 2 <= k; ++i)
        for (std::size_t j = i + 2; j <= k; ++j) {
            QuadraticForm Q = zero_form(level, k);
            Q.coeff(i - 1, j - 1) = F.add(Q.coeff(i - 1, j - 1), F.one());
            Q.coeff(i, j - 2) = F.sub(Q.coeff(i, j - 2), F.one());
            out.push_back(std::move(Q));
        }
    return out;
}

/// Map a in F_q^{hk} to v in F_{q^h}^k, v_m = sum_i a_{mh+i} b_i.
inline Vec field_reduction_point(const FieldCtx& ctx, const std::vector<Elem>& basis, std::span<const Elem> a) {
    const unsigned h = ctx.h();
    if (a.size() % h) throw std::invalid_argument("field_reduction_point: length not divisible by h");
    const Field& T = ctx.top();
    Vec v(a.size() / h, T.zero());
    for (std::size_t m = 0; m < v.size(); ++m)
        for (unsigned i = 0; i < h; ++i) v[m] = T.add(v[m], T.mul(ctx.embed(a[m * h + i]), basis[i]));
    return v;
}

/// The F_q-form a -> Tr(alpha Q(v(a))) in hk variables.
inline QuadraticForm trace_reduce(const FieldCtx& ctx, const QuadraticForm& Q, const std::vector<Elem>& basis, Elem alpha) {
    if (Q.level != Level::Top) throw std::invalid_argument("trace_reduce: form must be over F_{q^h}");
    if (basis.size() != ctx.h() || rank(ctx.top(), moore_matrix(ctx, basis, ctx.h())) != ctx.h())
        throw std::invalid_argument("trace_reduce: not an F_q-basis of F_{q^h}");
    const Field& B = ctx.base();
    const Field& T = ctx.top();
    const std::size_t n = Q.n * ctx.h();
    auto R = [&](const Vec& a) { return ctx.rel_trace(T.mul(alpha, eval_form(ctx, Q, field_reduction_point(ctx, basis, a)))); };
    std::vector<Elem> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = B.one();
        diag[i] = R(e);
    }
    QuadraticForm out = zero_form(Level::Base, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.coeff(i, i) = diag[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec e(n);
            e[i] = B.one();
            e[j] = B.one();
            out.coeff(i, j) = B.sub(B.sub(R(e), diag[i]), diag[j]);
        }
    }
    return out;
}

/// All reductions Tr(alpha Q) with alpha running over `alphas`.
inline std::vector<QuadraticForm> trace_reduce_system(const FieldCtx& ctx, const std::vector<QuadraticForm>& forms,
                                                      const std::vector<Elem>& basis, const std::vector<Elem>& alphas) {
    std::vector<QuadraticForm> out;
    for (const auto& Q : forms)
        for (Elem a : alphas) out.push_back(trace_reduce(ctx, Q, basis, a));
    return out;
}

/// Basis identifying F_q^{hk} with the canonical director space: block m of a
/// point of X(y * frame) holds the coordinates of a multiple of y_m in the
/// dual of the normal basis.
inline std::vector<Elem> canonical_reduction_basis(const FieldCtx& ctx) {
    return dual_basis(ctx, ctx.conjugates(ctx.normal_element()));
}

struct IntersectionVerdict {
    bool holds = true;
    std::optional<Vec> extra;    ///< zero of every form outside the union
    std::optional<Vec> missed;   ///< point of the union where some form is nonzero
    std::uint64_t points_checked = 0;
};

inline constexpr std::uint64_t default_point_limit = 1000000;

inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t n) {
    std::uint64_t c = 0, qp = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c += qp;
        qp *= q;
    }
    return c;
}

/// Compare the common zero set of `forms` in PG(n-1, q) with the union of the
/// subspaces by enumerating every point.
inline IntersectionVerdict is_complete_intersection(const FieldCtx& ctx, std::size_t n, const std::vector<Subspace>& subspaces,
                                                    const std::vector<QuadraticForm>& forms,
                                                    std::uint64_t limit = default_point_limit) {
    if (projective_point_count(ctx.q(), n) > limit)
        throw std::length_error("is_complete_intersection: PG(" + std::to_string(n - 1) + "," + std::to_string(ctx.q()) +
                                ") exceeds the point limit");
    for (const auto& f : forms)
        if (f.level != Level::Base || f.n != n) throw std::invalid_argument("is_complete_intersection: form mismatch");
    std::set<std::vector<std::uint32_t>> covered;
    auto key = [](const Vec& v) {
        std::vector<std::uint32_t> k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i].code;
        return k;
    };
    for (const auto& s : subspaces) {
        if (s.level() != Level::Base || s.ambient_dim() != n) throw std::invalid_argument("is_complete_intersection: subspace mismatch");
        for (const auto& p : projective_points(ctx, s)) covered.insert(key(p));
    }
    IntersectionVerdict v;
    const Subspace whole = Subspace::from_rows(ctx, Level::Base, Matrix::identity(ctx.base(), n));
    for (const auto& p : projective_points(ctx, whole)) {
        ++v.points_checked;
        bool zero = true;
        for (const auto& f : forms)
            if (eval_form(ctx, f, p).code) {
                zero = false;
                break;
            }
        const bool in_union = covered.count(key(p)) > 0;
        if (zero && !in_union && !v.extra) v.extra = p;
        if (!zero && in_union && !v.missed) v.missed = p;
    }
    v.holds = !v.extra && !v.missed;
    return v;
}

}  // namespace pseudoarc
