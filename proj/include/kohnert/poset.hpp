#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kohnert/closure.hpp"
#include "kohnert/errors.hpp"

namespace kohnert {

using Element = std::size_t;

// (upper, lower)
using CoverPair = std::pair<Element, Element>;

// rank[x] for every element x.
using RankAssignment = std::vector<int>;

enum class BoundStatus { Exists, NoBound, NoExtremum };

namespace detail {

// Fixed-width bit rows, one per element, in a single buffer.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t words() const noexcept { return words_; }
    std::span<std::uint64_t> row(std::size_t i) noexcept { return {bits_.data() + i * words_, words_}; }
    std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return {bits_.data() + i * words_, words_};
    }

    void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    bool test(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }

    std::size_t count(std::size_t i) const noexcept {
        std::size_t total = 0;
        for (std::uint64_t w : row(i)) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

template <class Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn fn) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

} // namespace detail

/// A finite poset on elements 0..n-1 with its strict order stored as
/// reachability bit sets in both directions, and its covering relation.
class Poset {
public:
    /// Builds the order generated by `relations`, each pair (upper, lower)
    /// meaning lower < upper. Pairs (x, x) are ignored. The covers are the
    /// transitive reduction. Throws CycleError if the pairs contain a cycle.
    static Poset from_relations(std::size_t n, std::span<const CoverPair> relations) {
        Poset p;
        p.n_ = n;
        std::vector<std::vector<Element>> succ(n);
        for (auto [upper, lower] : relations) {
            if (upper >= n || lower >= n) throw std::out_of_range("relation element out of range");
            if (upper != lower) succ[upper].push_back(lower);
        }
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }

        // Kahn order from the top; then fill reachability bottom-up.
        std::vector<std::size_t> indegree(n, 0);
        for (const auto& s : succ) {
            for (Element l : s) ++indegree[l];
        }
        std::vector<Element> order;
        order.reserve(n);
        for (Element x = 0; x < n; ++x) {
            if (indegree[x] == 0) order.push_back(x);
        }
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (Element l : succ[order[head]]) {
                if (--indegree[l] == 0) order.push_back(l);
            }
        }
        if (order.size() != n) throw CycleError("order relation contains a cycle");

        p.down_ = detail::BitMatrix(n);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto row = p.down_.row(*it);
            for (Element l : succ[*it]) {
                row[l / 64] |= std::uint64_t{1} << (l % 64);
                auto lower = p.down_.row(l);
                for (std::size_t w = 0; w < row.size(); ++w) row[w] |= lower[w];
            }
        }

        std::vector<std::uint64_t> reach(p.down_.words());
        for (Element x = 0; x < n; ++x) {
            std::fill(reach.begin(), reach.end(), 0);
            for (Element t : succ[x]) {
                auto lower = p.down_.row(t);
                for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= lower[w];
            }
            for (Element s : succ[x]) {
                if (((reach[s / 64] >> (s % 64)) & 1U) == 0) p.covers_.emplace_back(x, s);
            }
        }

        p.up_ = detail::BitMatrix(n);
        for (Element y = 0; y < n; ++y) {
            detail::for_each_bit(p.down_.row(y), [&](std::size_t x) { p.up_.set(x, y); });
        }
        p.upper_covers_.assign(n, {});
        p.lower_covers_.assign(n, {});
        for (auto [u, l] : p.covers_) {
            p.lower_covers_[u].push_back(l);
            p.upper_covers_[l].push_back(u);
        }
        p.up_size_.resize(n);
        p.down_size_.resize(n);
        for (Element x = 0; x < n; ++x) {
            p.up_size_[x] = p.up_.count(x) + 1;
            p.down_size_[x] = p.down_.count(x) + 1;
        }
        return p;
    }

    static Poset from_relations(std::size_t n, std::initializer_list<CoverPair> relations) {
        return from_relations(n, std::span<const CoverPair>(relations.begin(), relations.size()));
    }

    std::size_t size() const noexcept { return n_; }

    // Sorted by (upper, lower).
    const std::vector<CoverPair>& covers() const noexcept { return covers_; }
    const std::vector<Element>& lower_covers(Element x) const { return lower_covers_.at(x); }
    const std::vector<Element>& upper_covers(Element x) const { return upper_covers_.at(x); }

    // x < y strictly.
    bool less(Element x, Element y) const { return down_.test(y, x); }
    bool less_equal(Element x, Element y) const { return x == y || less(x, y); }
    bool covered_by(Element x, Element y) const {
        const auto& c = lower_covers_.at(y);
        return std::find(c.begin(), c.end(), x) != c.end();
    }

    std::span<const std::uint64_t> strictly_below(Element x) const { return down_.row(x); }
    std::span<const std::uint64_t> strictly_above(Element x) const { return up_.row(x); }

    /// Least common upper bound, with the reason when there is none.
    std::pair<BoundStatus, std::optional<Element>> join_status(Element x, Element y) const {
        return extremum(x, y, up_, up_size_);
    }

    std::pair<BoundStatus, std::optional<Element>> meet_status(Element x, Element y) const {
        return extremum(x, y, down_, down_size_);
    }

private:
    // With S the inclusive common upper (lower) set, which is itself an upper
    // (lower) set: z in S is least (greatest) iff its own inclusive
    // upper (lower) set is all of S.
    std::pair<BoundStatus, std::optional<Element>> extremum(Element x, Element y, const detail::BitMatrix& rel,
                                                            const std::vector<std::size_t>& rel_size) const {
        if (x >= n_ || y >= n_) throw std::out_of_range("element out of range");
        if (x == y) return {BoundStatus::Exists, x};
        std::vector<std::uint64_t> common(rel.words());
        auto rx = rel.row(x);
        auto ry = rel.row(y);
        for (std::size_t w = 0; w < common.size(); ++w) common[w] = rx[w] & ry[w];
        common[x / 64] |= (std::uint64_t{1} << (x % 64)) & ry[x / 64];
        common[y / 64] |= (std::uint64_t{1} << (y % 64)) & rx[y / 64];

        std::size_t total = 0;
        for (std::uint64_t w : common) total += static_cast<std::size_t>(std::popcount(w));
        if (total == 0) return {BoundStatus::NoBound, std::nullopt};

        Element best = n_;
        detail::for_each_bit(common, [&](std::size_t z) {
            if (best == n_ || rel_size[z] > rel_size[best]) best = z;
        });
        if (rel_size[best] == total) return {BoundStatus::Exists, best};
        return {BoundStatus::NoExtremum, std::nullopt};
    }

    std::size_t n_ = 0;
    detail::BitMatrix down_;
    detail::BitMatrix up_;
    std::vector<std::size_t> up_size_;
    std::vector<std::size_t> down_size_;
    std::vector<CoverPair> covers_;
    std::vector<std::vector<Element>> upper_covers_;
    std::vector<std::vector<Element>> lower_covers_;
};

// Move edges point from the larger diagram to the smaller one.
inline Poset poset_from_closure(const ClosureGraph& g) {
    std::vector<CoverPair> relations;
    relations.reserve(g.edges().size());
    for (const Edge& e : g.edges()) relations.emplace_back(e.source, e.target);
    return Poset::from_relations(g.size(), relations);
}

inline std::vector<Element> maximal_elements(const Poset& p) {
    std::vector<Element> out;
    for (Element x = 0; x < p.size(); ++x) {
        if (p.upper_covers(x).empty()) out.push_back(x);
    }
    return out;
}

inline std::vector<Element> minimal_elements(const Poset& p) {
    std::vector<Element> out;
    for (Element x = 0; x < p.size(); ++x) {
        if (p.lower_covers(x).empty()) out.push_back(x);
    }
    return out;
}

inline bool is_bounded(const Poset& p) {
    return minimal_elements(p).size() == 1 && maximal_elements(p).size() == 1;
}

inline std::optional<Element> join(const Poset& p, Element x, Element y) { return p.join_status(x, y).second; }

inline std::optional<Element> meet(const Poset& p, Element x, Element y) { return p.meet_status(x, y).second; }

// Both axioms: x < y implies rank x < rank y, and covers step by exactly one.
inline bool is_rank_function(const Poset& p, const RankAssignment& rank) {
    if (rank.size() != p.size()) return false;
    for (int v : rank) {
        if (v < 0) return false;
    }
    for (auto [u, l] : p.covers()) {
        if (rank[u] != rank[l] + 1) return false;
    }
    for (Element y = 0; y < p.size(); ++y) {
        bool ok = true;
        detail::for_each_bit(p.strictly_below(y), [&](std::size_t x) { ok = ok && rank[x] < rank[y]; });
        if (!ok) return false;
    }
    return true;
}

/// A rank function if one exists. Ranks are propagated across covers within
/// each connected component (a cover forces a step of exactly one), any
/// conflict means none exists, and each component is shifted so its lowest
/// rank is zero. Minimal elements need not share a rank.
inline std::optional<RankAssignment> check_ranked(const Poset& p) {
    const std::size_t n = p.size();
    constexpr int unset = std::numeric_limits<int>::min();
    std::vector<int> rank(n, unset);
    for (Element start = 0; start < n; ++start) {
        if (rank[start] != unset) continue;
        std::vector<Element> component{start};
        rank[start] = 0;
        for (std::size_t head = 0; head < component.size(); ++head) {
            const Element x = component[head];
            for (Element l : p.lower_covers(x)) {
                if (rank[l] == unset) {
                    rank[l] = rank[x] - 1;
                    component.push_back(l);
                } else if (rank[l] != rank[x] - 1) {
                    return std::nullopt;
                }
            }
            for (Element u : p.upper_covers(x)) {
                if (rank[u] == unset) {
                    rank[u] = rank[x] + 1;
                    component.push_back(u);
                } else if (rank[u] != rank[x] + 1) {
                    return std::nullopt;
                }
            }
        }
        int lowest = 0;
        for (Element x : component) lowest = std::min(lowest, rank[x]);
        for (Element x : component) rank[x] -= lowest;
    }
    if (!is_rank_function(p, rank)) return std::nullopt;
    return rank;
}

inline bool is_join_semilattice(const Poset& p) {
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = x + 1; y < p.size(); ++y) {
            if (!join(p, x, y)) return false;
        }
    }
    return true;
}

inline bool is_meet_semilattice(const Poset& p) {
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = x + 1; y < p.size(); ++y) {
            if (!meet(p, x, y)) return false;
        }
    }
    return true;
}

inline bool is_lattice(const Poset& p) { return is_join_semilattice(p) && is_meet_semilattice(p); }

} // namespace kohnert
