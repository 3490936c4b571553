/**************************************************************************
 * matrix.hpp
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
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace pseudoarc {

/// Dense row-major matrix of field elements. The field itself is passed to
/// every operation; a Matrix does not know which field it lives over.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
        }
        return m;
    }

    static Matrix identity(const Field& F, std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Elem> row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }

    std::vector<std::vector<Elem>> to_rows() const {
        std::vector<std::vector<Elem>> out;
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
        return out;
    }

    void append_row(std::span<const Elem> v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    void set_cols(std::size_t cols) {
        if (rows_ != 0 && cols != cols_) throw std::logic_error("Matrix::set_cols on non-empty matrix");
        cols_ = cols;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: width mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

inline Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem aik = a(i, k);
            if (aik.code == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(aik, b(k, j)));
        }
    return out;
}

/// Row vector times matrix.
inline std::vector<Elem> row_times(const Field& F, std::span<const Elem> v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
    std::vector<Elem> out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].code == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = F.add(out[j], F.mul(v[k], m(k, j)));
    }
    return out;
}

struct RrefResult {
    Matrix reduced;                    ///< nonzero rows only, pivots equal to one
    std::vector<std::size_t> pivots;   ///< pivot column of each row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(const Field& F, Matrix a) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).code == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const Elem inv = F.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).code == 0) continue;
            const Elem f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Field& F, const Matrix& a) {
    // Forward elimination only.
    Matrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).code == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = F.inv(m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).code == 0) continue;
            const Elem f = F.mul(m(i, c), inv);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        ++r;
    }
    return r;
}

/// Basis (as rows, in RREF) of { x : a x^T = 0 }.
inline Matrix nullspace(const Field& F, const Matrix& a) {
    const std::size_t n = a.cols();
    const auto [red, pivots] = rref(F, a);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    basis.set_cols(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> x(n);
        x[f] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = F.neg(red(i, f));
        basis.append_row(x);
    }
    if (basis.rows() == 0) return basis;
    Matrix canon = rref(F, basis).reduced;
    canon.set_cols(n);
    return canon;
}

inline Elem determinant(const Field& F, Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Elem det = F.one();
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).code == 0) ++piv;
        if (piv == n) return F.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m(c, c));
        const Elem inv = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).code == 0) continue;
            const Elem f = F.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return det;
}

inline std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    if (n == 0) return Matrix{};
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F.one();
    }
    const auto [red, pivots] = rref(F, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = red(i, n + j);
    return out;
}

/// Unique solution of a x^T = b for square nonsingular a.
inline std::optional<std::vector<Elem>> solve(const Field& F, const Matrix& a, std::span<const Elem> b) {
    const std::size_t n = a.rows();
    if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    if (n == 0) return std::vector<Elem>{};
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const auto [red, pivots] = rref(F, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    std::vector<Elem> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = red(i, n);
    return x;
}

}  // namespace pseudoarc
