/**************************************************************************
 * test_tower.cpp
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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pseudoarc/tower.hpp"

using namespace pseudoarc;

namespace {

const std::vector<std::tuple<unsigned, unsigned, unsigned>> towers = {
    {2, 1, 2}, {2, 2, 2}, {2, 1, 4}, {3, 1, 2}, {5, 1, 2}, {7, 1, 2}, {7, 1, 3}, {2, 2, 3}, {3, 2, 2}};

}  // namespace

TEST(Tower, EmbeddingIsARingHomomorphism) {
    for (auto [p, e, h] : towers) {
        const FieldCtx ctx(p, e, h);
        const Field& B = ctx.base();
        const Field& T = ctx.top();
        for (std::uint32_t a = 0; a < B.size(); ++a)
            for (std::uint32_t b = 0; b < B.size(); ++b) {
                ASSERT_EQ(ctx.embed(B.add({a}, {b})), T.add(ctx.embed({a}), ctx.embed({b})));
                ASSERT_EQ(ctx.embed(B.mul({a}, {b})), T.mul(ctx.embed({a}), ctx.embed({b})));
            }
        std::size_t fixed = 0;
        for (std::uint32_t x = 0; x < T.size(); ++x) fixed += T.pow({x}, ctx.q()) == Elem{x};
        EXPECT_EQ(fixed, ctx.q());
        for (std::uint32_t x = 0; x < T.size(); ++x) EXPECT_EQ(ctx.in_base({x}), T.pow({x}, ctx.q()) == Elem{x});
    }
}

TEST(Tower, F16OverF4Embedding) {
    const FieldCtx ctx(2, 2, 2);
    const Elem w = ctx.top().generator();
    EXPECT_EQ(ctx.embedding_image(), ctx.top().pow(w, 5));
    const Elem e = ctx.embed({2});
    EXPECT_EQ(ctx.top().mul(e, e), ctx.top().add(e, ctx.top().one()));
}

TEST(Tower, FrobeniusAgreesWithOraclePower) {
    for (auto [p, e, h] : towers) {
        const FieldCtx ctx(p, e, h);
        const oracle::NaiveField N{int(p), oracle::Digits(ctx.top().modulus().begin(), ctx.top().modulus().end())};
        for (std::uint32_t x = 0; x < ctx.order(); ++x) {
            ASSERT_EQ(ctx.frobenius({x}).code, N.pow(x, ctx.q()));
            ASSERT_EQ(ctx.frobenius({x}, h), Elem{x});
        }
    }
}

TEST(Tower, TraceIsSurjectiveAndLinear) {
    for (auto [p, e, h] : towers) {
        const FieldCtx ctx(p, e, h);
        std::vector<std::size_t> fibre(ctx.q(), 0);
        for (std::uint32_t x = 0; x < ctx.order(); ++x) ++fibre[ctx.rel_trace({x}).code];
        for (auto f : fibre) EXPECT_EQ(f, ctx.order() / ctx.q());
        std::mt19937_64 rng(h * 100 + p);
        for (int i = 0; i < 50; ++i) {
            const Elem x = oracle::random_elem(rng, ctx.top()), y = oracle::random_elem(rng, ctx.top());
            const Elem c = oracle::random_elem(rng, ctx.base());
            const Elem lhs = ctx.rel_trace(ctx.top().add(ctx.top().mul(ctx.embed(c), x), y));
            const Elem rhs = ctx.base().add(ctx.base().mul(c, ctx.rel_trace(x)), ctx.rel_trace(y));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(Tower, NormalElementIsSmallestNormal) {
    for (auto [p, e, h] : towers) {
        const FieldCtx ctx(p, e, h);
        const Elem w = ctx.normal_element();
        EXPECT_TRUE(ctx.is_normal(w));
        for (std::uint32_t c = 1; c < w.code; ++c) EXPECT_FALSE(ctx.is_normal({c}));
        // the conjugates are F_q-independent: no nontrivial F_q-combination vanishes
        const auto conj = ctx.conjugates(w);
        std::vector<std::uint32_t> coef(h, 0);
        std::size_t zeros = 0;
        while (true) {
            Elem acc = ctx.top().zero();
            for (unsigned i = 0; i < h; ++i) acc = ctx.top().add(acc, ctx.top().mul(ctx.embed({coef[i]}), conj[i]));
            zeros += acc.code == 0;
            unsigned i = 0;
            while (i < h && ++coef[i] == ctx.q()) coef[i++] = 0;
            if (i == h) break;
        }
        EXPECT_EQ(zeros, 1u);
    }
}

TEST(Tower, ProperSubfieldMembership) {
    const FieldCtx ctx(2, 1, 4);   // F_16 over F_2: F_4 is a proper subfield
    std::size_t in_proper = 0;
    for (std::uint32_t x = 0; x < 16; ++x) in_proper += ctx.in_proper_subfield({x});
    EXPECT_EQ(in_proper, 4u);
    const FieldCtx c2(2, 1, 3);   // F_8 over F_2: only F_2
    in_proper = 0;
    for (std::uint32_t x = 0; x < 8; ++x) in_proper += c2.in_proper_subfield({x});
    EXPECT_EQ(in_proper, 2u);
}

TEST(Tower, DualBasisCoordinates) {
    for (auto [p, e, h] : towers) {
        const FieldCtx ctx(p, e, h);
        const auto b = ctx.conjugates(ctx.normal_element());
        const auto d = dual_basis(ctx, b);
        for (std::uint32_t x = 0; x < ctx.order(); ++x) {
            const auto c = basis_coordinates(ctx, d, {x});
            Elem acc = ctx.top().zero();
            for (unsigned i = 0; i < h; ++i) acc = ctx.top().add(acc, ctx.top().mul(ctx.embed(c[i]), b[i]));
            ASSERT_EQ(acc, Elem{x});
        }
    }
    const FieldCtx ctx(5, 1, 2);
    EXPECT_THROW(dual_basis(ctx, {ctx.top().one(), ctx.top().from_int(2)}), std::invalid_argument);
}

TEST(Tower, TaggedArithmeticRejectsMixedLevels) {
    const FieldCtx ctx(3, 1, 2);
    EXPECT_THROW(ctx.add({Level::Base, {1}}, {Level::Top, {1}}), std::invalid_argument);
    EXPECT_EQ(ctx.mul({Level::Top, {4}}, {Level::Top, {1}}), (FieldElement{Level::Top, {4}}));
    EXPECT_THROW(FieldCtx(4, 1, 2), std::invalid_argument);
    EXPECT_THROW(ctx.embed({3}), std::invalid_argument);
}

TEST(Tower, SplitPrimePower) {
    EXPECT_EQ(split_prime_power(4), (std::pair<std::uint32_t, unsigned>{2, 2}));
    EXPECT_EQ(split_prime_power(125), (std::pair<std::uint32_t, unsigned>{5, 3}));
    EXPECT_THROW(split_prime_power(12), std::invalid_argument);
    EXPECT_THROW(split_prime_power(1), std::invalid_argument);
}

TEST(Tower, PolynomialDerivativeReducesFactorials) {
    const FieldCtx ctx(3, 1, 2);
    // f = x^4 + x^3 over F_3: f' = 4x^3 + 3x^2 = x^3, f'' = 3x^2 = 0
    const Poly f = make_poly(Level::Base, {{0}, {0}, {0}, {1}, {1}});
    EXPECT_EQ(poly_derivative(ctx, f, 1), make_poly(Level::Base, {{0}, {0}, {0}, {1}}));
    EXPECT_EQ(degree(poly_derivative(ctx, f, 2)), -1);
    const FieldElement v = poly_eval(ctx, f, {Level::Base, {2}});   // 16 + 8 = 24 = 0 mod 3
    EXPECT_EQ(v.value.code, 0u);
}
