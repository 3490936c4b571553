/**************************************************************************
 * test_matrix.cpp
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
#include "pseudoarc/matrix.hpp"

using namespace pseudoarc;

TEST(Matrix, RankMatchesSpanCount) {
    std::mt19937_64 rng(1);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {5, 1}}) {
        const Field F = Field::with_smallest_modulus(p, m);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
            Matrix a = oracle::random_matrix(rng, F, r, c);
            if (trial % 3 == 0 && r > 1) {   // force a dependency
                for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = F.add(a(0, j), a(r - 2, j));
            }
            ASSERT_EQ(rank(F, a), oracle::brute_rank(F, a));
            ASSERT_EQ(rref(F, a).pivots.size(), oracle::brute_rank(F, a));
        }
    }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    std::mt19937_64 rng(2);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {7, 1}, {3, 2}}) {
        const Field F = Field::with_smallest_modulus(p, m);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            const Matrix a = oracle::random_matrix(rng, F, n, n);
            ASSERT_EQ(determinant(F, a), oracle::leibniz_det(F, a));
        }
    }
}

TEST(Matrix, NullspaceIsExactKernel) {
    std::mt19937_64 rng(3);
    const Field F = Field::with_smallest_modulus(5, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        const Matrix a = oracle::random_matrix(rng, F, r, c);
        const Matrix k = nullspace(F, a);
        EXPECT_EQ(k.rows() + rank(F, a), c);
        for (std::size_t i = 0; i < k.rows(); ++i) {
            const auto prod = row_times(F, k.row(i), transpose(a));
            for (Elem x : prod) EXPECT_EQ(x.code, 0u);
        }
    }
}

TEST(Matrix, InverseAndSolve) {
    std::mt19937_64 rng(4);
    const Field F = Field::with_smallest_modulus(2, 3);
    int invertible = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Matrix a = oracle::random_matrix(rng, F, n, n);
        const auto inv = inverse(F, a);
        EXPECT_EQ(inv.has_value(), determinant(F, a).code != 0);
        if (!inv) continue;
        ++invertible;
        EXPECT_EQ(multiply(F, a, *inv), Matrix::identity(F, n));
        std::vector<Elem> b(n);
        for (auto& x : b) x = oracle::random_elem(rng, F);
        const auto x = solve(F, a, b);
        ASSERT_TRUE(x);
        const auto ax = row_times(F, *x, transpose(a));
        EXPECT_EQ(ax, b);
    }
    EXPECT_GT(invertible, 20);
    EXPECT_TRUE(inverse(F, Matrix{}).has_value());
}

TEST(Matrix, RrefIsCanonical) {
    const Field F = Field::with_smallest_modulus(3, 1);
    const Matrix a = Matrix::from_rows({{{1}, {2}, {0}}, {{2}, {1}, {1}}});
    const Matrix b = Matrix::from_rows({{{0}, {0}, {1}}, {{1}, {2}, {2}}});
    EXPECT_EQ(rref(F, a).reduced, rref(F, b).reduced);
}
