/**************************************************************************
 * pseudoarc.hpp
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
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "matrix.hpp"
#include "nrc.hpp"
#include "projgeo.hpp"
#include "tower.hpp"

namespace pseudoarc {

enum class ElementKind { Imaginary, Osculating, OsculatingInfty, External };

inline const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::Imaginary: return "imaginary";
        case ElementKind::Osculating: return "osculating";
        case ElementKind::OsculatingInfty: return "osculating-infinity";
        case ElementKind::External: return "external";
    }
    return "?";
}

/// Where an element came from. `value` is alpha (top level) for Imaginary
/// and t (base level) for Osculating; unused otherwise.
struct ElementTag {
    ElementKind kind = ElementKind::External;
    Elem value{};

    friend bool operator==(const ElementTag&, const ElementTag&) = default;
};

/// A family of (h-1)-spaces of PG(hk-1, q).
struct PseudoArc {
    unsigned h = 1;
    unsigned k = 2;
    std::uint32_t q = 0;
    std::vector<Subspace> elements;
    std::vector<ElementTag> tags;
    std::vector<std::string> warnings;

    std::size_t size() const { return elements.size(); }
};

/// Largest size a pseudo-arc of (h-1)-spaces in PG(hk-1, q) can have.
inline std::uint64_t thas_bound(unsigned h, unsigned k, std::uint32_t q) {
    std::uint64_t qh = 1;
    for (unsigned i = 0; i < h; ++i) qh *= q;
    return (q % 2 == 0) ? qh + k : qh + k - 1;
}

namespace detail {

inline void check_params(const FieldCtx& ctx, unsigned k, PseudoArc& arc) {
    if (k < 2) throw std::invalid_argument("pseudo-arc constructions need k >= 2");
    arc.h = ctx.h();
    arc.k = k;
    arc.q = ctx.q();
    if (ctx.q() < ctx.h() * k + 1)
        arc.warnings.push_back("q = " + std::to_string(ctx.q()) + " < hk+1 = " + std::to_string(ctx.h() * k + 1) +
                               ": construction outside the range where the pseudo-arc property is guaranteed");
}

}  // namespace detail

/// X(P_alpha) for alpha in Lambda_{h,q}, P_alpha = (1, alpha, ..., alpha^{hk-1}).
inline Subspace imaginary_element(const FieldCtx& ctx, Elem alpha, unsigned k) {
    const auto p = veronese(ctx.top(), CurveParam::finite(alpha), std::size_t(ctx.h()) * k);
    return spread_element(ctx, p.coords);
}

inline PseudoArc build_P(const FieldCtx& ctx, unsigned k) {
    PseudoArc arc;
    detail::check_params(ctx, k, arc);
    const auto lam = lambda_set(ctx);
    if (lam.reps.empty()) throw std::invalid_argument("build_P: Lambda is empty");
    for (Elem a : lam.reps) {
        arc.elements.push_back(imaginary_element(ctx, a, k));
        arc.tags.push_back({ElementKind::Imaginary, a});
    }
    return arc;
}

/// Osculating (h-1)-spaces of NRC_{hk,q}: t ascending, then infinity.
inline PseudoArc build_O(const FieldCtx& ctx, unsigned k) {
    PseudoArc arc;
    detail::check_params(ctx, k, arc);
    const Field& F = ctx.base();
    const std::size_t N = std::size_t(ctx.h()) * k;
    require_characteristic_above(F, ctx.h() - 1, "build_O");
    for (std::uint32_t t = 0; t < F.size(); ++t) {
        arc.elements.push_back(Subspace::from_rows(ctx, Level::Base, osc_basis(F, Elem{t}, ctx.h() - 1, N)));
        arc.tags.push_back({ElementKind::Osculating, {t}});
    }
    arc.elements.push_back(Subspace::from_rows(ctx, Level::Base, osc_basis_infty(F, ctx.h() - 1, N)));
    arc.tags.push_back({ElementKind::OsculatingInfty, {}});
    return arc;
}

inline PseudoArc extend(const FieldCtx& ctx, const PseudoArc& arc) {
    const PseudoArc osc = build_O(ctx, arc.k);
    PseudoArc out = arc;
    for (std::size_t i = 0; i < osc.size(); ++i) {
        if (std::find(out.elements.begin(), out.elements.end(), osc.elements[i]) != out.elements.end())
            throw std::invalid_argument("extend: osculating element already present");
        out.elements.push_back(osc.elements[i]);
        out.tags.push_back(osc.tags[i]);
    }
    return out;
}

struct ArcVerdict {
    bool holds = true;
    std::vector<std::size_t> witness;   ///< first k-subset (lexicographic) failing to span
    std::uint64_t subsets_checked = 0;
};

namespace detail {

inline bool spans(const FieldCtx& ctx, const std::vector<Subspace>& el, const std::vector<std::size_t>& idx, std::size_t n) {
    Matrix m;
    m.set_cols(n);
    for (auto i : idx) m = vstack(m, el[i].basis());
    m.set_cols(n);
    return rank(ctx.base(), m) == n;
}

// Advance a sorted k-subset of {0..n-1} lexicographically; false at the end.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline void validate_elements(const std::vector<Subspace>& el, unsigned h, unsigned k) {
    const std::size_t n = std::size_t(h) * k;
    for (const auto& s : el) {
        if (s.level() != Level::Base) throw std::invalid_argument("pseudo-arc elements must be base-level subspaces");
        if (s.ambient_dim() != n) throw std::invalid_argument("pseudo-arc element in the wrong ambient space");
        if (s.rank() != h) throw std::invalid_argument("pseudo-arc element of the wrong dimension");
    }
}

}  // namespace detail

/**
 * Exhaustive check that every k of the elements span PG(hk-1, q). Subsets are
 * visited lexicographically. With several threads the subsets are split by
 * their first index; the reported witness is still the lexicographically
 * first one.
 */
inline ArcVerdict is_pseudo_arc(const FieldCtx& ctx, const std::vector<Subspace>& el, unsigned k, unsigned threads = 1) {
    const unsigned h = ctx.h();
    detail::validate_elements(el, h, k);
    const std::size_t n = std::size_t(h) * k;
    ArcVerdict v;
    if (el.size() < k || k == 0) return v;
    threads = std::max(1u, threads);
    const std::size_t firsts = el.size() - k + 1;

    std::atomic<std::size_t> best_first{firsts};
    std::atomic<std::uint64_t> checked{0};
    std::mutex mu;
    std::vector<std::size_t> best;

    auto work = [&](unsigned tid) {
        std::uint64_t local = 0;
        for (std::size_t f = tid; f < firsts; f += threads) {
            if (f >= best_first.load()) break;
            std::vector<std::size_t> idx(k);
            for (std::size_t j = 0; j < k; ++j) idx[j] = f + j;
            do {
                if (idx[0] != f) break;
                ++local;
                if (!detail::spans(ctx, el, idx, n)) {
                    std::lock_guard lock(mu);
                    if (best.empty() || idx < best) best = idx;
                    std::size_t cur = best_first.load();
                    while (f < cur && !best_first.compare_exchange_weak(cur, f)) {}
                    checked += local;
                    return;
                }
            } while (detail::next_subset(idx, el.size()));
        }
        checked += local;
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }
    v.subsets_checked = checked.load();
    if (!best.empty()) {
        v.holds = false;
        v.witness = best;
        // Thread scheduling may change how many subsets were visited; report
        // the deterministic count up to and including the witness instead.
        std::vector<std::size_t> idx(k);
        for (std::size_t j = 0; j < k; ++j) idx[j] = j;
        std::uint64_t count = 1;
        while (idx != best && detail::next_subset(idx, el.size())) ++count;
        v.subsets_checked = count;
        return v;
    }
    if (el.size() > thas_bound(h, k, ctx.q()))
        throw std::logic_error("is_pseudo_arc: verified family exceeds the Thas bound");
    return v;
}

/// Random k-subsets drawn with a fixed seed. Only a necessary condition.
inline ArcVerdict is_pseudo_arc_sampled(const FieldCtx& ctx, const std::vector<Subspace>& el, unsigned k,
                                        std::uint64_t samples, std::uint64_t seed) {
    const unsigned h = ctx.h();
    detail::validate_elements(el, h, k);
    ArcVerdict v;
    if (el.size() < k || k == 0) return v;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(el.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<std::size_t> idx;
        std::sample(all.begin(), all.end(), std::back_inserter(idx), k, rng);
        ++v.subsets_checked;
        if (!detail::spans(ctx, el, idx, std::size_t(h) * k)) {
            v.holds = false;
            v.witness = idx;
            return v;
        }
    }
    return v;
}

struct SpreadVerdict {
    bool contained = true;
    std::optional<std::size_t> witness;   ///< first element outside the spread
};

inline SpreadVerdict contained_in_spread(const FieldCtx& ctx, const std::vector<Subspace>& el, const Spread& s) {
    if (s.h != ctx.h()) throw std::invalid_argument("contained_in_spread: spread built for another h");
    for (std::size_t i = 0; i < el.size(); ++i)
        if (!spread_membership(ctx, el[i], s).member) return {false, i};
    return {};
}

/// X(A) for an arc A of the director space.
inline PseudoArc build_desarguesian_arc(const FieldCtx& ctx, const std::vector<Vec>& points, const Spread& s) {
    PseudoArc arc;
    arc.h = s.h;
    arc.k = s.k;
    arc.q = ctx.q();
    for (const auto& p : points)
        if (!contains(ctx, s.director, p)) throw std::invalid_argument("build_desarguesian_arc: point outside the director space");
    if (points.size() >= s.k) {
        std::vector<std::size_t> idx(s.k);
        for (std::size_t j = 0; j < s.k; ++j) idx[j] = j;
        do {
            Matrix m;
            m.set_cols(std::size_t(s.h) * s.k);
            for (auto i : idx) m.append_row(points[i]);
            if (rank(ctx.top(), m) != s.k) throw std::invalid_argument("build_desarguesian_arc: points do not form an arc");
        } while (detail::next_subset(idx, points.size()));
    }
    for (const auto& p : points) {
        arc.elements.push_back(spread_element(ctx, p));
        arc.tags.push_back({ElementKind::External, {}});
    }
    return arc;
}

/// NRC_{k,q^h} mapped into the director space of `s`.
inline std::vector<Vec> director_nrc(const FieldCtx& ctx, const Spread& s) {
    std::vector<Vec> out;
    for (const auto& p : nrc_points(ctx.top(), s.k)) out.push_back(theta_point(ctx, s, p.coords));
    return out;
}

}  // namespace pseudoarc
