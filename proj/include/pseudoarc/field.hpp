/**************************************************************************
 * field.hpp
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

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pseudoarc {

/// Element of GF(p^m), stored by its integer encoding sum_i c_i p^i where
/// c_i are the polynomial-basis digits (low digit least significant).
struct Elem {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

// Dense polynomial over F_p, low degree first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        std::int64_t qq = r / nr;
        std::tie(t, nt) = std::pair{nt, t - qq * nt};
        std::tie(r, nr) = std::pair{nr, r - qq * nr};
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    PrimePoly r(acc.begin(), acc.end());
    trim(r);
    return r;
}

inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
        trim(a);
    }
    return a;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

inline PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
    PrimePoly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// Ben-Or test: f of degree m is irreducible iff gcd(x^{p^d} - x, f) = 1 for
// every d <= m/2, i.e. f has no root in any GF(p^d) with d < m dividing it.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
    if (f.size() < 2 || f.back() == 0) return false;
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    const PrimePoly x{0, 1};
    PrimePoly g = x;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        g = poly_powmod(g, p, f, p);
        const PrimePoly gg = poly_gcd(f, poly_sub(g, x, p), p);
        if (gg.size() != 1) return false;
    }
    return true;
}

// Monic irreducible of the given degree with the smallest integer encoding
// sum_i c_i p^i (leading coefficient included).
inline PrimePoly smallest_irreducible(std::uint32_t p, unsigned degree) {
    const std::uint64_t count = ipow(p, degree);
    PrimePoly f(degree + 1, 0);
    f[degree] = 1;
    for (std::uint64_t low = 0; low < count; ++low) {
        std::uint64_t v = low;
        for (unsigned i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

}  // namespace detail

/// GF(p^m) in a polynomial basis over F_p[x]/(modulus). Multiplication goes
/// through log/antilog tables when the field has at most 2^16 elements and
/// through polynomial arithmetic otherwise. Immutable after construction.
class Field {
public:
    static constexpr std::uint64_t max_size = 1u << 24;
    static constexpr std::uint64_t table_limit = 1u << 16;

    Field(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p)) throw std::invalid_argument("Field: characteristic " + std::to_string(p) + " is not prime");
        if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("Field: modulus must be monic of degree >= 1");
        for (auto c : modulus_)
            if (c >= p) throw std::invalid_argument("Field: modulus digit out of range");
        if (!detail::is_irreducible(modulus_, p)) throw std::invalid_argument("Field: modulus is reducible");
        m_ = static_cast<std::uint32_t>(modulus_.size() - 1);
        const std::uint64_t size = detail::ipow(p, m_);
        if (size > max_size) throw std::invalid_argument("Field: order exceeds supported range");
        size_ = static_cast<std::uint32_t>(size);
        pow_p_.resize(m_ + 1);
        pow_p_[0] = 1;
        for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p;
        primitive_ = find_primitive();
        if (size_ <= table_limit) build_tables();
    }

    static Field with_smallest_modulus(std::uint32_t p, unsigned degree) {
        if (!detail::is_prime(p)) throw std::invalid_argument("Field: characteristic " + std::to_string(p) + " is not prime");
        if (degree == 0) throw std::invalid_argument("Field: degree must be >= 1");
        if (detail::ipow(p, degree) > max_size) throw std::invalid_argument("Field: order exceeds supported range");
        return Field(p, detail::smallest_irreducible(p, degree));
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return size_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    /// Class of x in F_p[x]/(modulus).
    Elem generator() const { return m_ == 1 ? Elem{(p_ - modulus_[0]) % p_} : Elem{p_}; }
    Elem primitive() const { return primitive_; }
    Elem from_int(std::int64_t n) const {
        const std::int64_t r = n % std::int64_t(p_);
        return {static_cast<std::uint32_t>(r < 0 ? r + p_ : r)};
    }
    bool contains(Elem a) const { return a.code < size_; }

    std::vector<std::uint32_t> digits(Elem a) const {
        std::vector<std::uint32_t> d(m_);
        std::uint32_t v = a.code;
        for (auto& x : d) {
            x = v % p_;
            v /= p_;
        }
        return d;
    }

    Elem from_digits(std::span<const std::uint32_t> d) const {
        if (d.size() > m_) throw std::invalid_argument("Field::from_digits: too many digits");
        std::uint32_t v = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] >= p_) throw std::invalid_argument("Field::from_digits: digit out of range");
            v = v * p_ + d[i];
        }
        return {v};
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return {a.code ^ b.code};
        if (m_ == 1) return {(a.code + b.code) % p_};
        std::uint32_t x = a.code, y = b.code, r = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t s = x % p_ + y % p_;
            if (s >= p_) s -= p_;
            r += s * pow_p_[i];
            x /= p_;
            y /= p_;
        }
        return {r};
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return {(p_ - a.code) % p_};
        std::uint32_t x = a.code, r = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((p_ - x % p_) % p_) * pow_p_[i];
            x /= p_;
        }
        return {r};
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.code == 0 || b.code == 0) return {0};
        if (!log_.empty()) return {exp_[log_[a.code] + log_[b.code]]};
        return slow_mul(a, b);
    }

    Elem inv(Elem a) const {
        if (a.code == 0) throw std::domain_error("Field::inv: zero has no inverse");
        if (!log_.empty()) return {exp_[(size_ - 1 - log_[a.code]) % (size_ - 1)]};
        return pow(a, size_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (e == 0) return one();
        if (a.code == 0) return zero();
        if (!log_.empty()) return {exp_[(std::uint64_t(log_[a.code]) * (e % (size_ - 1))) % (size_ - 1)]};
        Elem r = one();
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const {
        if (a.code == 0) throw std::domain_error("Field::order: zero");
        std::uint64_t n = size_ - 1;
        for (auto r : detail::prime_factors(size_ - 1))
            while (n % r == 0 && pow(a, n / r) == one()) n /= r;
        return n;
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.modulus_ == b.modulus_; }

private:
    Elem slow_mul(Elem a, Elem b) const {
        detail::PrimePoly x(digits(a)), y(digits(b));
        detail::trim(x);
        detail::trim(y);
        auto r = detail::poly_mod(detail::poly_mul(x, y, p_), modulus_, p_);
        r.resize(m_, 0);
        return from_digits(r);
    }

    Elem slow_pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem find_primitive() const {
        if (size_ == 2) return one();
        const auto factors = detail::prime_factors(size_ - 1);
        for (std::uint32_t c = 1; c < size_; ++c) {
            bool ok = true;
            for (auto r : factors)
                if (slow_pow(Elem{c}, (size_ - 1) / r) == one()) {
                    ok = false;
                    break;
                }
            if (ok) return {c};
        }
        throw std::logic_error("Field: no primitive element");
    }

    void build_tables() {
        exp_.assign(2 * std::size_t(size_), 0);
        log_.assign(size_, 0);
        Elem x = one();
        for (std::uint32_t i = 0; i + 1 < size_; ++i) {
            exp_[i] = x.code;
            log_[x.code] = i;
            x = slow_mul(x, primitive_);
        }
        for (std::uint32_t i = size_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (size_ - 1)];
    }

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t size_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;
    Elem primitive_{1};
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace pseudoarc
