#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "indset/errors.hpp"
#include "indset/graph.hpp"

namespace indset {

using big_int = boost::multiprecision::cpp_int;

inline constexpr int default_enum_cap = 24;
/// Hard ceiling on materialized enumeration: 2^30 characteristic vectors is
/// already past desk scale, and masks are stored in 32 bits.
inline constexpr int max_enum_vertices = 30;

/// The family I(G), materialized. Sets are stored as characteristic masks
/// with vertex i at bit i-1, listed in ascending mask order (this is the
/// enumeration order contract: {}, {1}, {2}, {1,2}, {3}, ...).
struct IndSetFamily {
    Graph graph;
    std::vector<std::uint32_t> sets;
    big_int cardinality; // == sets.size() when materialized

    int dimension() const { return graph.vertex_count(); }

    static std::vector<int> mask_vertices(std::uint32_t mask) {
        std::vector<int> out;
        for (int b = 0; mask; ++b, mask >>= 1)
            if (mask & 1u)
                out.push_back(b + 1);
        return out;
    }

    static std::uint32_t vertices_mask(const std::vector<int>& vs) {
        std::uint32_t m = 0;
        for (int v : vs)
            m |= 1u << (v - 1);
        return m;
    }
};

namespace detail {

inline std::vector<std::uint32_t> neighbor_masks32(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << (v - 1);
        adj[static_cast<std::size_t>(v)] |= 1u << (u - 1);
    }
    return adj;
}

} // namespace detail

/// Lists every independent set of g in ascending characteristic-mask order.
/// Runs in O(2^n) using the recurrence: m is independent iff m minus its
/// lowest vertex is independent and that vertex has no neighbor in m.
inline IndSetFamily enumerate_independent_sets(const Graph& g, int cap = default_enum_cap) {
    const int n = g.vertex_count();
    const int effective_cap = std::min(cap, max_enum_vertices);
    if (n > effective_cap)
        throw capacity_error("graph has " + std::to_string(n) +
                             " vertices, enumeration cap is " + std::to_string(effective_cap));
    auto adj = detail::neighbor_masks32(g);
    std::vector<std::uint32_t> low(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v)
        low[static_cast<std::size_t>(v - 1)] = adj[static_cast<std::size_t>(v)];

    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> indep(total, false);
    IndSetFamily fam;
    fam.graph = g;
    indep[0] = true;
    fam.sets.push_back(0);
    for (std::uint64_t m = 1; m < total; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const int b = std::countr_zero(mask);
        if (indep[m ^ (std::uint64_t{1} << b)] && (low[static_cast<std::size_t>(b)] & mask) == 0) {
            indep[m] = true;
            fam.sets.push_back(mask);
        }
    }
    fam.cardinality = fam.sets.size();
    return fam;
}

namespace detail {

/// Dynamic bitset over vertex indices 0..n-1, sized at construction.
/// Word count is fixed per counting context so keys hash consistently.
using word_vec = std::vector<std::uint64_t>;

struct word_vec_hash {
    std::size_t operator()(const word_vec& w) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t x : w) {
            h ^= static_cast<std::size_t>(x);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

inline bool wv_test(const word_vec& w, int b) {
    return (w[static_cast<std::size_t>(b >> 6)] >> (b & 63)) & 1u;
}
inline void wv_set(word_vec& w, int b) { w[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63); }
inline void wv_reset(word_vec& w, int b) { w[static_cast<std::size_t>(b >> 6)] &= ~(std::uint64_t{1} << (b & 63)); }
inline bool wv_empty(const word_vec& w) {
    for (std::uint64_t x : w)
        if (x)
            return false;
    return true;
}
inline int wv_popcount(const word_vec& w) {
    int c = 0;
    for (std::uint64_t x : w)
        c += std::popcount(x);
    return c;
}
inline int wv_first(const word_vec& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i])
            return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    return -1;
}
inline int wv_and_popcount(const word_vec& a, const word_vec& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

/// Branching counter: count(G) = count(G - v) + count(G - v - N(v)) on a
/// maximum-degree vertex v (ties to the smallest label), with connected
/// components counted independently and their results multiplied, and a memo
/// on component masks. All arithmetic is arbitrary precision.
class IndSetCounter {
public:
    explicit IndSetCounter(const Graph& g)
        : n_(g.vertex_count()), words_(static_cast<std::size_t>((n_ + 63) / 64)) {
        adj_.assign(static_cast<std::size_t>(n_), word_vec(words_, 0));
        for (auto [u, v] : g.edges()) {
            wv_set(adj_[static_cast<std::size_t>(u - 1)], v - 1);
            wv_set(adj_[static_cast<std::size_t>(v - 1)], u - 1);
        }
    }

    big_int count() {
        word_vec all(words_, 0);
        for (int b = 0; b < n_; ++b)
            wv_set(all, b);
        return count_set(all);
    }

private:
    big_int count_set(const word_vec& active) {
        big_int total = 1;
        word_vec remaining = active;
        while (!wv_empty(remaining)) {
            word_vec comp = extract_component(remaining, active);
            total *= count_component(comp);
        }
        return total;
    }

    word_vec extract_component(word_vec& remaining, const word_vec& active) {
        word_vec comp(words_, 0);
        std::vector<int> stack{wv_first(remaining)};
        wv_set(comp, stack.back());
        wv_reset(remaining, stack.back());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const word_vec& nb = adj_[static_cast<std::size_t>(u)];
            for (std::size_t i = 0; i < words_; ++i) {
                std::uint64_t todo = nb[i] & active[i] & ~comp[i];
                while (todo) {
                    int b = static_cast<int>(i * 64) + std::countr_zero(todo);
                    todo &= todo - 1;
                    wv_set(comp, b);
                    wv_reset(remaining, b);
                    stack.push_back(b);
                }
            }
        }
        return comp;
    }

    big_int count_component(const word_vec& comp) {
        const int size = wv_popcount(comp);
        if (size == 1)
            return 2;
        if (size == 2)
            return 3; // connected pair is a single edge
        if (auto it = memo_.find(comp); it != memo_.end())
            return it->second;

        int best = -1, best_deg = -1;
        for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t bits = comp[i];
            while (bits) {
                int b = static_cast<int>(i * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                int deg = wv_and_popcount(adj_[static_cast<std::size_t>(b)], comp);
                if (deg > best_deg) {
                    best_deg = deg;
                    best = b;
                }
            }
        }

        word_vec without_v = comp;
        wv_reset(without_v, best);
        word_vec without_nbhd = without_v;
        const word_vec& nb = adj_[static_cast<std::size_t>(best)];
        for (std::size_t i = 0; i < words_; ++i)
            without_nbhd[i] &= ~nb[i];

        big_int result = count_set(without_v) + count_set(without_nbhd);
        memo_.emplace(comp, result);
        return result;
    }

    int n_;
    std::size_t words_;
    std::vector<word_vec> adj_;
    std::unordered_map<word_vec, big_int, word_vec_hash> memo_;
};

} // namespace detail

/// Exact |I(G)|. Agrees with enumerate_independent_sets wherever both run;
/// no materialization, so it scales well past the enumeration cap.
inline big_int count_independent_sets(const Graph& g) {
    if (g.vertex_count() == 0)
        return 1;
    detail::IndSetCounter counter(g);
    return counter.count();
}

/// Closed form |I(K_{a,b})| = 2^a + 2^b - 1 (each side's subsets, empty set
/// counted once).
inline big_int count_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw invalid_parameter("complete bipartite sides must be >= 1");
    return (big_int(1) << a) + (big_int(1) << b) - 1;
}

} // namespace indset
