/**************************************************************************
 * tower.hpp
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
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace pseudoarc {

/// Which field of the tower GF(q) < GF(q^h) a value lives in.
enum class Level { Base, Top };

inline const char* to_string(Level l) { return l == Level::Base ? "base" : "top"; }

/// An element tagged with its tower level. Used at API boundaries where the
/// level cannot be inferred from context.
struct FieldElement {
    Level level = Level::Base;
    Elem value{};

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/**
 * Two-level tower F_q < F_{q^h} with q = p^e.
 *
 * Both levels are built directly over F_p from the monic irreducible of
 * smallest integer encoding in degrees e and e*h. The base field is embedded
 * into the top field by sending the base generator x to the smallest-encoded
 * root of the base modulus in the top field. Frobenius, relative trace and
 * the canonical normal element are all taken relative to this embedding.
 */
class FieldCtx {
public:
    static constexpr std::uint32_t frob_table_limit = 1u << 20;

    FieldCtx(std::uint32_t p, unsigned e, unsigned h)
        : p_(p), e_(e), h_(h), base_(make_level(p, e, h, 1)), top_(make_level(p, e, h, h)) {
        q_ = base_.size();
        embedding_image_ = find_embedding_image();
        embed_.resize(q_);
        project_.assign(top_.size(), -1);
        for (std::uint32_t b = 0; b < q_; ++b) {
            Elem acc = top_.zero();
            const auto d = base_.digits({b});
            for (std::size_t i = d.size(); i-- > 0;) acc = top_.add(top_.mul(acc, embedding_image_), top_.from_int(d[i]));
            embed_[b] = acc;
            if (project_[acc.code] != -1) throw std::logic_error("FieldCtx: embedding is not injective");
            project_[acc.code] = static_cast<std::int32_t>(b);
        }
        if (top_.size() <= frob_table_limit) {
            frob_.resize(top_.size());
            for (std::uint32_t x = 0; x < top_.size(); ++x) frob_[x] = top_.pow({x}, q_).code;
        }
        normal_ = find_normal_element();
    }

    std::uint32_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned h() const { return h_; }
    /// Order of the base field.
    std::uint32_t q() const { return q_; }
    /// Order of the top field, q^h.
    std::uint32_t order() const { return top_.size(); }

    const Field& base() const { return base_; }
    const Field& top() const { return top_; }
    const Field& field(Level l) const { return l == Level::Base ? base_ : top_; }

    Elem embedding_image() const { return embedding_image_; }
    Elem normal_element() const { return normal_; }

    Elem embed(Elem b) const {
        if (b.code >= q_) throw std::invalid_argument("FieldCtx::embed: not a base-field element");
        return embed_[b.code];
    }

    std::optional<Elem> project(Elem t) const {
        if (t.code >= top_.size()) throw std::invalid_argument("FieldCtx::project: not a top-field element");
        const auto v = project_[t.code];
        if (v < 0) return std::nullopt;
        return Elem{static_cast<std::uint32_t>(v)};
    }

    bool in_base(Elem t) const { return project(t).has_value(); }

    /// Bring an element to the top level (embedding base elements).
    Elem lift(Level l, Elem x) const { return l == Level::Base ? embed(x) : x; }

    /// x -> x^{q^i}.
    Elem frobenius(Elem x, unsigned i = 1) const {
        i %= h_;
        while (i--) x = frob1(x);
        return x;
    }

    /// x, x^q, ..., x^{q^{h-1}}.
    std::vector<Elem> conjugates(Elem x) const {
        std::vector<Elem> out{x};
        for (unsigned i = 1; i < h_; ++i) out.push_back(frob1(out.back()));
        return out;
    }

    /// Tr_{q^h/q}(x) expressed as a base-field element.
    Elem rel_trace(Elem x) const {
        Elem acc = top_.zero();
        for (Elem c : conjugates(x)) acc = top_.add(acc, c);
        const auto b = project(acc);
        if (!b) throw std::logic_error("FieldCtx::rel_trace: trace left the base field");
        return *b;
    }

    /// True iff x^{q^d} = x for some proper divisor d of h.
    bool in_proper_subfield(Elem x) const {
        for (unsigned d = 1; d < h_; ++d)
            if (h_ % d == 0 && frobenius(x, d) == x) return true;
        return false;
    }

    /// h x h matrix with rows (x^{q^i}, (x^{q})^{q^i}, ...): the Moore matrix of
    /// the conjugates of x.
    Matrix moore_of_conjugates(Elem x) const {
        const auto c = conjugates(x);
        Matrix m(h_, h_);
        for (unsigned i = 0; i < h_; ++i)
            for (unsigned j = 0; j < h_; ++j) m(i, j) = frobenius(c[j], i);
        return m;
    }

    bool is_normal(Elem x) const { return x.code != 0 && pseudoarc::rank(top_, moore_of_conjugates(x)) == h_; }

    /// Smallest-encoded w whose conjugates form an F_q-basis of F_{q^h}.
    Elem find_normal_element() const {
        for (std::uint32_t c = 1; c < top_.size(); ++c)
            if (is_normal({c})) return {c};
        throw std::logic_error("FieldCtx: no normal element");
    }

    // Tagged arithmetic. Operands must share a level.
    FieldElement add(FieldElement a, FieldElement b) const { return {same(a, b), field(a.level).add(a.value, b.value)}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return {same(a, b), field(a.level).sub(a.value, b.value)}; }
    FieldElement mul(FieldElement a, FieldElement b) const { return {same(a, b), field(a.level).mul(a.value, b.value)}; }
    FieldElement neg(FieldElement a) const { return {a.level, field(a.level).neg(a.value)}; }
    FieldElement inv(FieldElement a) const { return {a.level, field(a.level).inv(a.value)}; }
    FieldElement pow(FieldElement a, std::uint64_t n) const { return {a.level, field(a.level).pow(a.value, n)}; }

private:
    static Field make_level(std::uint32_t p, unsigned e, unsigned h, unsigned mult) {
        if (!detail::is_prime(p)) throw std::invalid_argument("FieldCtx: p = " + std::to_string(p) + " is not prime");
        if (e == 0 || h == 0) throw std::invalid_argument("FieldCtx: degrees must be >= 1");
        return Field::with_smallest_modulus(p, e * mult);
    }

    Level same(FieldElement a, FieldElement b) const {
        if (a.level != b.level) throw std::invalid_argument("FieldCtx: level mismatch");
        return a.level;
    }

    Elem frob1(Elem x) const { return frob_.empty() ? top_.pow(x, q_) : Elem{frob_[x.code]}; }

    Elem find_embedding_image() const {
        const auto& f = base_.modulus();
        for (std::uint32_t c = 0; c < top_.size(); ++c) {
            Elem acc = top_.zero();
            for (std::size_t i = f.size(); i-- > 0;) acc = top_.add(top_.mul(acc, {c}), top_.from_int(f[i]));
            if (acc.code == 0) return {c};
        }
        throw std::logic_error("FieldCtx: base modulus has no root in the top field");
    }

    std::uint32_t p_;
    unsigned e_;
    unsigned h_;
    Field base_;
    Field top_;
    std::uint32_t q_ = 0;
    Elem embedding_image_{};
    Elem normal_{};
    std::vector<Elem> embed_;
    std::vector<std::int32_t> project_;
    std::vector<std::uint32_t> frob_;
};

inline FieldCtx make_field_ctx(std::uint32_t p, unsigned e, unsigned h) { return FieldCtx(p, e, h); }

/// Split a prime power q into (p, e). Throws if q is not a prime power.
inline std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    const auto f = detail::prime_factors(q);
    if (f.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    unsigned e = 0;
    while (q > 1) {
        q /= f[0];
        ++e;
    }
    return {static_cast<std::uint32_t>(f[0]), e};
}

/// The F_q-basis d with Tr(b_i d_j) = [i == j]. Throws if b is not a basis.
inline std::vector<Elem> dual_basis(const FieldCtx& ctx, const std::vector<Elem>& b) {
    const unsigned h = ctx.h();
    if (b.size() != h) throw std::invalid_argument("dual_basis: need exactly h elements");
    const Field& T = ctx.top();
    Matrix gram(h, h);
    for (unsigned i = 0; i < h; ++i)
        for (unsigned j = 0; j < h; ++j) gram(i, j) = ctx.rel_trace(T.mul(b[i], b[j]));
    const auto inv = inverse(ctx.base(), gram);
    if (!inv) throw std::invalid_argument("dual_basis: input is not an F_q-basis");
    std::vector<Elem> d(h, T.zero());
    for (unsigned j = 0; j < h; ++j)
        for (unsigned l = 0; l < h; ++l) d[j] = T.add(d[j], T.mul(ctx.embed((*inv)(j, l)), b[l]));
    return d;
}

/// Coordinates of x in the basis whose dual basis is `dual`.
inline std::vector<Elem> basis_coordinates(const FieldCtx& ctx, const std::vector<Elem>& dual, Elem x) {
    std::vector<Elem> c(dual.size());
    for (std::size_t i = 0; i < dual.size(); ++i) c[i] = ctx.rel_trace(ctx.top().mul(x, dual[i]));
    return c;
}

/// Polynomial with coefficients at one tower level, low degree first.
struct Poly {
    Level level = Level::Base;
    std::vector<Elem> coeffs;

    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Poly make_poly(Level level, std::vector<Elem> coeffs) {
    while (!coeffs.empty() && coeffs.back().code == 0) coeffs.pop_back();
    return {level, std::move(coeffs)};
}

/// Degree, or -1 for the zero polynomial.
inline long degree(const Poly& f) { return static_cast<long>(f.coeffs.size()) - 1; }

/// Horner evaluation. Base coefficients are embedded when evaluating at a
/// top-level point; the result is at the higher of the two levels.
inline FieldElement poly_eval(const FieldCtx& ctx, const Poly& f, FieldElement x) {
    if (f.level == Level::Top && x.level == Level::Base) x = {Level::Top, ctx.embed(x.value)};
    const Level out = x.level;
    const Field& F = ctx.field(out);
    Elem acc = F.zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        const Elem c = (f.level == out) ? f.coeffs[i] : ctx.embed(f.coeffs[i]);
        acc = F.add(F.mul(acc, x.value), c);
    }
    return {out, acc};
}

/// i-th formal derivative: c_n x^n -> n(n-1)...(n-i+1) c_n x^{n-i}, with the
/// falling factorial reduced mod p.
inline Poly poly_derivative(const FieldCtx& ctx, const Poly& f, unsigned i) {
    const Field& F = ctx.field(f.level);
    std::vector<Elem> out;
    for (std::size_t n = i; n < f.coeffs.size(); ++n) {
        Elem factor = F.one();
        for (std::size_t l = 0; l < i; ++l) factor = F.mul(factor, F.from_int(static_cast<std::int64_t>(n - l)));
        out.push_back(F.mul(factor, f.coeffs[n]));
    }
    return make_poly(f.level, std::move(out));
}

inline Poly poly_add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (a.level != b.level) throw std::invalid_argument("poly_add: level mismatch");
    const Field& F = ctx.field(a.level);
    std::vector<Elem> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Elem x = i < a.coeffs.size() ? a.coeffs[i] : F.zero();
        const Elem y = i < b.coeffs.size() ? b.coeffs[i] : F.zero();
        out[i] = F.add(x, y);
    }
    return make_poly(a.level, std::move(out));
}

inline Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (a.level != b.level) throw std::invalid_argument("poly_mul: level mismatch");
    if (a.coeffs.empty() || b.coeffs.empty()) return {a.level, {}};
    const Field& F = ctx.field(a.level);
    std::vector<Elem> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    return make_poly(a.level, std::move(out));
}

}  // namespace pseudoarc
