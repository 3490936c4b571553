/**************************************************************************
 * projgeo.hpp
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
#include <span>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "tower.hpp"

namespace pseudoarc {

using Vec = std::vector<Elem>;

/**
 * Projective subspace of PG(n-1, F) with F one level of the tower, stored as
 * the reduced row-echelon basis of the underlying vector subspace. Two
 * subspaces are equal iff their representations are equal.
 */
class Subspace {
public:
    Subspace() = default;
    Subspace(Level level, std::size_t ambient) : level_(level), ambient_(ambient) { basis_.set_cols(ambient); }

    /// Row space of `rows`, canonicalized.
    static Subspace from_rows(const FieldCtx& ctx, Level level, const Matrix& rows) {
        Subspace s(level, rows.cols());
        if (rows.rows() == 0) return s;
        s.basis_ = rref(ctx.field(level), rows).reduced;
        s.basis_.set_cols(rows.cols());
        return s;
    }

    Level level() const { return level_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    long projective_dim() const { return static_cast<long>(rank()) - 1; }
    const Matrix& basis() const { return basis_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Level level_ = Level::Base;
    std::size_t ambient_ = 0;
    Matrix basis_;
};

inline Subspace span(const FieldCtx& ctx, Level level, const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("span: empty input");
    const std::size_t n = vectors.front().size();
    Matrix m;
    m.set_cols(n);
    const Field& F = ctx.field(level);
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("span: vectors of different length");
        for (Elem x : v)
            if (!F.contains(x)) throw std::invalid_argument("span: entry outside the declared field");
        m.append_row(v);
    }
    return Subspace::from_rows(ctx, level, m);
}

inline void require_compatible(const Subspace& u, const Subspace& w, const char* what) {
    if (u.level() != w.level()) throw std::invalid_argument(std::string(what) + ": level mismatch");
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
}

inline Subspace join(const FieldCtx& ctx, const Subspace& u, const Subspace& w) {
    require_compatible(u, w, "join");
    Matrix m = vstack(u.basis(), w.basis());
    m.set_cols(u.ambient_dim());
    return Subspace::from_rows(ctx, u.level(), m);
}

/// U \cap W via the left kernel of the stacked bases.
inline Subspace intersect(const FieldCtx& ctx, const Subspace& u, const Subspace& w) {
    require_compatible(u, w, "intersect");
    const Field& F = ctx.field(u.level());
    const std::size_t n = u.ambient_dim();
    if (u.rank() == 0 || w.rank() == 0) return Subspace(u.level(), n);
    const Matrix stacked = vstack(u.basis(), w.basis());
    const Matrix kernel = nullspace(F, transpose(stacked));
    Matrix rows;
    rows.set_cols(n);
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        const auto a = kernel.row(i).subspan(0, u.rank());
        rows.append_row(row_times(F, a, u.basis()));
    }
    Subspace out = Subspace::from_rows(ctx, u.level(), rows);
    const std::size_t joined = join(ctx, u, w).rank();
    if (out.rank() + joined != u.rank() + w.rank()) throw std::logic_error("intersect: dimension formula violated");
    return out;
}

inline bool contains(const FieldCtx& ctx, const Subspace& w, std::span<const Elem> v) {
    if (v.size() != w.ambient_dim()) throw std::invalid_argument("contains: length mismatch");
    Matrix m = w.basis();
    m.set_cols(w.ambient_dim());
    m.append_row(v);
    return rank(ctx.field(w.level()), m) == w.rank();
}

/// Embed a base-level subspace into PG(n-1, q^h).
inline Subspace lift(const FieldCtx& ctx, const Subspace& w) {
    if (w.level() == Level::Top) return w;
    Matrix m(w.rank(), w.ambient_dim());
    for (std::size_t r = 0; r < w.rank(); ++r)
        for (std::size_t c = 0; c < w.ambient_dim(); ++c) m(r, c) = ctx.embed(w.basis()(r, c));
    m.set_cols(w.ambient_dim());
    return Subspace::from_rows(ctx, Level::Top, m);
}

/// Entrywise x -> x^{q^i}.
inline Vec frobenius(const FieldCtx& ctx, std::span<const Elem> v, unsigned i = 1) {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = ctx.frobenius(v[j], i);
    return out;
}

/// W^Psi for a top-level subspace.
inline Subspace frobenius_image(const FieldCtx& ctx, const Subspace& w) {
    if (w.level() != Level::Top) return w;
    Matrix m;
    m.set_cols(w.ambient_dim());
    for (std::size_t r = 0; r < w.rank(); ++r) m.append_row(frobenius(ctx, w.basis().row(r)));
    return Subspace::from_rows(ctx, Level::Top, m);
}

inline bool is_frobenius_invariant(const FieldCtx& ctx, const Subspace& w) { return frobenius_image(ctx, w) == w; }

/// <P, P^Psi, ..., P^{Psi^{h-1}}> over F_{q^h}.
inline Subspace conjugate_span(const FieldCtx& ctx, std::span<const Elem> point) {
    bool nonzero = false;
    for (Elem x : point) {
        if (!ctx.top().contains(x)) throw std::invalid_argument("conjugate_span: entry outside F_{q^h}");
        nonzero = nonzero || x.code != 0;
    }
    if (!nonzero) throw std::invalid_argument("conjugate_span: zero vector");
    Matrix m;
    m.set_cols(point.size());
    for (unsigned i = 0; i < ctx.h(); ++i) m.append_row(frobenius(ctx, point, i));
    return Subspace::from_rows(ctx, Level::Top, m);
}

/**
 * W \cap Sigma for a Psi-invariant subspace W of PG(n-1, q^h), returned as a
 * base-level subspace of the same rank. The F_q-points are produced as the
 * entrywise traces Tr(w^{q^i} v) over the basis rows v of W, with w the
 * context's normal element.
 */
inline Subspace rationalize(const FieldCtx& ctx, const Subspace& w) {
    if (w.level() == Level::Base) return w;
    if (!is_frobenius_invariant(ctx, w)) throw std::invalid_argument("rationalize: subspace is not Frobenius-invariant");
    const Field& T = ctx.top();
    const auto omegas = ctx.conjugates(ctx.normal_element());
    Matrix m;
    m.set_cols(w.ambient_dim());
    for (std::size_t r = 0; r < w.rank(); ++r) {
        for (Elem om : omegas) {
            Vec row(w.ambient_dim());
            for (std::size_t c = 0; c < row.size(); ++c) row[c] = ctx.rel_trace(T.mul(om, w.basis()(r, c)));
            m.append_row(row);
        }
    }
    Subspace out = Subspace::from_rows(ctx, Level::Base, m);
    if (out.rank() != w.rank()) throw std::logic_error("rationalize: rank not preserved");
    return out;
}

/// Image of W under the projectivity v -> M v^T (matrices act on column
/// vectors from the left). A base-level matrix acts on either level; a
/// top-level matrix lifts a base subspace first.
inline Subspace apply_projectivity(const FieldCtx& ctx, Level matrix_level, const Matrix& m, const Subspace& w) {
    const std::size_t n = w.ambient_dim();
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("apply_projectivity: matrix shape mismatch");
    if (rank(ctx.field(matrix_level), m) != n) throw std::invalid_argument("apply_projectivity: singular matrix");
    const Level out_level = (matrix_level == Level::Top) ? Level::Top : w.level();
    const Subspace src = (out_level == Level::Top) ? lift(ctx, w) : w;
    Matrix mt = transpose(m);
    if (matrix_level == Level::Base && out_level == Level::Top)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) mt(r, c) = ctx.embed(mt(r, c));
    Matrix img = multiply(ctx.field(out_level), src.basis(), mt);
    img.set_cols(n);
    return Subspace::from_rows(ctx, out_level, img);
}

/// Projective points of W, each normalized so its first nonzero entry is 1.
/// Enumerates (s^r - 1)/(s - 1) points for rank r over a field of size s.
inline std::vector<Vec> projective_points(const FieldCtx& ctx, const Subspace& w) {
    const Field& F = ctx.field(w.level());
    const std::size_t r = w.rank();
    const std::size_t n = w.ambient_dim();
    std::vector<Vec> out;
    const std::uint32_t s = F.size();
    for (std::size_t lead = 0; lead < r; ++lead) {
        // coefficients: 1 at `lead`, arbitrary after it
        const std::size_t free = r - lead - 1;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            Vec v = w.basis().row_vector(lead);
            for (std::size_t j = 0; j < free; ++j) {
                const Elem c{digits[j]};
                if (c.code == 0) continue;
                const auto row = w.basis().row(lead + 1 + j);
                for (std::size_t k = 0; k < n; ++k) v[k] = F.add(v[k], F.mul(c, row[k]));
            }
            out.push_back(std::move(v));
            std::size_t j = 0;
            while (j < free && ++digits[j] == s) digits[j++] = 0;
            if (j == free) break;
        }
    }
    return out;
}

/// Normalize a nonzero vector so its first nonzero entry is 1.
inline Vec normalize(const Field& F, Vec v) {
    for (Elem x : v)
        if (x.code != 0) {
            const Elem inv = F.inv(x);
            for (auto& y : v) y = F.mul(y, inv);
            return v;
        }
    throw std::invalid_argument("normalize: zero vector");
}

/**
 * Desarguesian (h-1)-spread of PG(hk-1, q) given by a director space Theta of
 * PG(hk-1, q^h). `frame` holds k top-level rows spanning Theta; a point of
 * Theta is written y * frame for y in F_{q^h}^k.
 */
struct Spread {
    unsigned h = 1;
    unsigned k = 1;
    Matrix frame;
    Subspace director;
};

inline Spread make_spread(const FieldCtx& ctx, const Matrix& frame) {
    const unsigned h = ctx.h();
    if (frame.rows() == 0 || frame.cols() % frame.rows() != 0 || frame.cols() / frame.rows() != h)
        throw std::invalid_argument("make_spread: frame must be k x hk");
    Spread s{h, static_cast<unsigned>(frame.rows()), frame, Subspace::from_rows(ctx, Level::Top, frame)};
    if (s.director.rank() != s.k) throw std::invalid_argument("make_spread: frame rows are dependent");
    Subspace all = s.director;
    Subspace cur = s.director;
    for (unsigned i = 1; i < h; ++i) {
        cur = frobenius_image(ctx, cur);
        all = join(ctx, all, cur);
    }
    if (all.rank() != h * s.k) throw std::invalid_argument("make_spread: conjugates of the director do not span");
    return s;
}

/// Director rows e_m (x) (w, w^q, ..., w^{q^{h-1}}), w the normal element.
/// Its spread elements are { (Tr(z_1 w^{q^i}))_i, ..., (Tr(z_k w^{q^i}))_i }
/// as z runs over F_{q^h}-multiples of a fixed vector.
inline Spread canonical_spread(const FieldCtx& ctx, unsigned k) {
    if (k == 0) throw std::invalid_argument("canonical_spread: k must be >= 1");
    const unsigned h = ctx.h();
    const auto omegas = ctx.conjugates(ctx.normal_element());
    Matrix frame(k, std::size_t(h) * k);
    for (unsigned m = 0; m < k; ++m)
        for (unsigned i = 0; i < h; ++i) frame(m, m * h + i) = omegas[i];
    return make_spread(ctx, frame);
}

/// The point y * frame of Theta.
inline Vec theta_point(const FieldCtx& ctx, const Spread& s, std::span<const Elem> y) {
    if (y.size() != s.k) throw std::invalid_argument("theta_point: coordinate count mismatch");
    return row_times(ctx.top(), y, s.frame);
}

/// X(P) = <P, P^Psi, ...> \cap Sigma.
inline Subspace spread_element(const FieldCtx& ctx, std::span<const Elem> point) {
    return rationalize(ctx, conjugate_span(ctx, point));
}

struct MembershipVerdict {
    bool member = false;
    Subspace meet;   ///< extension of W intersected with Theta (the certificate)
};

/// W belongs to D(Theta) iff its F_{q^h}-extension meets Theta.
inline MembershipVerdict spread_membership(const FieldCtx& ctx, const Subspace& w, const Spread& s) {
    if (w.level() != Level::Base) throw std::invalid_argument("spread_membership: expected a base-level subspace");
    if (w.ambient_dim() != std::size_t(s.h) * s.k) throw std::invalid_argument("spread_membership: ambient dimension mismatch");
    if (w.rank() != s.h) throw std::invalid_argument("spread_membership: subspace must have projective dimension h-1");
    Subspace meet = intersect(ctx, lift(ctx, w), s.director);
    const bool member = meet.rank() > 0;
    return {member, std::move(meet)};
}

}  // namespace pseudoarc
