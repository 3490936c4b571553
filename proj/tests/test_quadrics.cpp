/**************************************************************************
 * test_quadrics.cpp
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
#include "pseudoarc/pseudoarc.hpp"
#include "pseudoarc/quadrics.hpp"

using namespace pseudoarc;

namespace {

// q^dim of the vanishing space, counted by trying every coefficient vector
std::size_t brute_vanishing_count(const FieldCtx& ctx, std::size_t n, const std::vector<Vec>& pts) {
    const Field& F = ctx.base();
    const std::size_t m = QuadraticForm::monomials(n);
    std::vector<std::uint32_t> c(m, 0);
    std::size_t count = 0;
    while (true) {
        QuadraticForm Q = zero_form(Level::Base, n);
        for (std::size_t i = 0; i < m; ++i) Q.coeffs[i] = {c[i]};
        bool all = true;
        for (const auto& p : pts) all = all && eval_form(ctx, Q, p).code == 0;
        count += all;
        std::size_t i = 0;
        while (i < m && ++c[i] == F.size()) c[i++] = 0;
        if (i == m) break;
    }
    return count;
}

std::vector<Vec> nrc_coords(const Field& F, std::size_t k) {
    std::vector<Vec> out;
    for (auto& p : nrc_points(F, k)) out.push_back(p.coords);
    return out;
}

}  // namespace

TEST(Quadrics, EvaluationAndIndexing) {
    const FieldCtx ctx(5, 1, 1);
    QuadraticForm Q = zero_form(Level::Base, 3);
    EXPECT_EQ(Q.coeffs.size(), 6u);
    Q.coeff(0, 0) = {1};
    Q.coeff(1, 0) = {2};   // same slot as (0,1)
    EXPECT_EQ(Q.index(0, 1), 1u);
    EXPECT_EQ(Q.index(1, 1), 3u);
    EXPECT_EQ(Q.index(2, 2), 5u);
    EXPECT_EQ(eval_form(ctx, Q, Vec{{1}, {1}, {4}}), Elem{3});
    EXPECT_THROW(eval_form(ctx, Q, Vec{{1}, {1}}), std::invalid_argument);
}

TEST(Quadrics, Homogeneity) {
    const FieldCtx ctx(7, 1, 2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        QuadraticForm Q = zero_form(Level::Top, 4);
        for (auto& c : Q.coeffs) c = oracle::random_elem(rng, ctx.top());
        Vec v(4);
        for (auto& x : v) x = oracle::random_elem(rng, ctx.top());
        const Elem l = oracle::random_elem(rng, ctx.top());
        Vec lv = v;
        for (auto& x : lv) x = ctx.top().mul(l, x);
        EXPECT_EQ(eval_form(ctx, Q, lv), ctx.top().mul(ctx.top().mul(l, l), eval_form(ctx, Q, v)));
    }
}

TEST(Quadrics, VanishingSpaceMatchesBruteCount) {
    const FieldCtx ctx(3, 1, 1);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 12; ++t) {
        std::vector<Vec> pts;
        const std::size_t npts = 1 + rng() % 6;
        for (std::size_t i = 0; i < npts; ++i) {
            Vec v(3);
            do
                for (auto& x : v) x = oracle::random_elem(rng, ctx.base());
            while (v == Vec(3));
            pts.push_back(v);
        }
        const auto vs = vanishing_space_of_points(ctx, Level::Base, 3, pts);
        std::size_t qd = 1;
        for (std::size_t i = 0; i < vs.basis.size(); ++i) qd *= 3;
        EXPECT_EQ(qd, brute_vanishing_count(ctx, 3, pts));
        for (const auto& Q : vs.basis)
            for (const auto& p : pts) EXPECT_EQ(eval_form(ctx, Q, p).code, 0u);
    }
}

TEST(Quadrics, ConicThroughNrc) {
    const FieldCtx ctx(5, 1, 1);
    const auto vs = vanishing_space_of_points(ctx, Level::Base, 3, nrc_coords(ctx.base(), 3));
    ASSERT_EQ(vs.basis.size(), 1u);
    const auto sys = nrc_quadric_system(ctx.base(), Level::Base, 3);
    ASSERT_EQ(sys.size(), 1u);
    // x1 x3 - x2^2 up to a scalar
    Matrix both;
    both.set_cols(6);
    both.append_row(vs.basis[0].coeffs);
    both.append_row(sys[0].coeffs);
    EXPECT_EQ(rank(ctx.base(), both), 1u);
}

TEST(Quadrics, NrcSystemSpansTheVanishingSpace) {
    for (auto [q, k] : std::vector<std::pair<unsigned, std::size_t>>{{7, 3}, {7, 4}, {11, 4}, {11, 5}, {13, 5}}) {
        const FieldCtx ctx(q, 1, 1);
        const auto pts = nrc_coords(ctx.base(), k);
        const auto sys = nrc_quadric_system(ctx.base(), Level::Base, k);
        EXPECT_EQ(sys.size(), oracle::binomial(k - 1, 2));
        for (const auto& Q : sys)
            for (const auto& p : pts) EXPECT_EQ(eval_form(ctx, Q, p).code, 0u);
        const auto vs = vanishing_space_of_points(ctx, Level::Base, k, pts);
        EXPECT_EQ(vs.basis.size(), oracle::binomial(k - 1, 2)) << "q=" << q << " k=" << k;
        Matrix m;
        m.set_cols(QuadraticForm::monomials(k));
        for (const auto& Q : sys) m.append_row(Q.coeffs);
        EXPECT_EQ(rank(ctx.base(), m), sys.size());
    }
}

TEST(Quadrics, TraceReductionAgreesPointwise) {
    const FieldCtx ctx(5, 1, 2);
    const auto basis = canonical_reduction_basis(ctx);
    std::mt19937_64 rng(4);
    QuadraticForm Q = zero_form(Level::Top, 3);
    for (auto& c : Q.coeffs) c = oracle::random_elem(rng, ctx.top());
    const Elem a = oracle::random_elem(rng, ctx.top()), b = oracle::random_elem(rng, ctx.top());
    const QuadraticForm Ra = trace_reduce(ctx, Q, basis, a);
    const QuadraticForm Rb = trace_reduce(ctx, Q, basis, b);
    const QuadraticForm Rab = trace_reduce(ctx, Q, basis, ctx.top().add(a, b));
    for (std::size_t i = 0; i < Ra.coeffs.size(); ++i) EXPECT_EQ(Rab.coeffs[i], ctx.base().add(Ra.coeffs[i], Rb.coeffs[i]));
    for (int t = 0; t < 200; ++t) {
        Vec x(6);
        for (auto& c : x) c = oracle::random_elem(rng, ctx.base());
        const Elem direct = ctx.rel_trace(ctx.top().mul(a, eval_form(ctx, Q, field_reduction_point(ctx, basis, x))));
        EXPECT_EQ(eval_form(ctx, Ra, x), direct);
    }
    EXPECT_THROW(trace_reduce(ctx, Q, {ctx.top().one(), ctx.top().from_int(3)}, a), std::invalid_argument);
    EXPECT_THROW(trace_reduce(ctx, zero_form(Level::Base, 3), basis, a), std::invalid_argument);
}

TEST(Quadrics, ConicIsACompleteIntersection) {
    const FieldCtx ctx(5, 1, 1);
    std::vector<Subspace> pts;
    for (const auto& p : nrc_coords(ctx.base(), 3)) pts.push_back(span(ctx, Level::Base, {p}));
    const auto sys = nrc_quadric_system(ctx.base(), Level::Base, 3);
    const auto v = is_complete_intersection(ctx, 3, pts, sys);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.points_checked, 31u);
    // no forms at all: every other point is an extra zero
    const auto none = is_complete_intersection(ctx, 3, pts, {});
    EXPECT_FALSE(none.holds);
    EXPECT_TRUE(none.extra.has_value());
    // a form that misses a curve point
    QuadraticForm x0sq = zero_form(Level::Base, 3);
    x0sq.coeff(0, 0) = {1};
    const auto miss = is_complete_intersection(ctx, 3, pts, {x0sq});
    EXPECT_TRUE(miss.missed.has_value());
    EXPECT_THROW(is_complete_intersection(ctx, 3, pts, sys, 30), std::length_error);
}

TEST(Quadrics, SmallImaginaryFamilyLiesOnNoQuadric) {
    const FieldCtx ctx(5, 1, 2);
    const auto P = build_P(ctx, 2);
    const auto vs = vanishing_space(ctx, 4, P.elements);
    EXPECT_EQ(vs.basis.size(), 0u);
    EXPECT_EQ(vs.points, 60u);
}

TEST(Quadrics, DesarguesianNrcLiesOnReducedQuadrics) {
    const FieldCtx ctx(3, 1, 2);
    const Spread s = canonical_spread(ctx, 3);
    const auto D = build_desarguesian_arc(ctx, director_nrc(ctx, s), s);
    const auto basis = canonical_reduction_basis(ctx);
    const auto sys = trace_reduce_system(ctx, nrc_quadric_system(ctx.top(), Level::Top, 3), basis, ctx.conjugates(ctx.normal_element()));
    EXPECT_TRUE(is_complete_intersection(ctx, 6, D.elements, sys).holds);
}
