#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indset/count.hpp"
#include "indset/graph.hpp"

namespace indset {

/// Vertex subset of the double cover G x K_2 as the two per-side subsets of
/// V(G). side0/side1 are sorted; (v, 0) and (v, 1) carry labels 2v-1 and 2v
/// in the relabeled cover graph.
struct CoverSet {
    std::vector<int> side0;
    std::vector<int> side1;

    bool operator==(const CoverSet&) const = default;

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int v : side0)
            out.emplace_back(v, 0);
        for (int v : side1)
            out.emplace_back(v, 1);
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline std::vector<char> membership(const Graph& g, const std::vector<int>& vs,
                                    const char* what) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : vs) {
        if (v < 1 || v > g.vertex_count())
            throw invalid_parameter(std::string(what) + " contains out-of-range vertex " +
                                    std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

inline void require_independent(const Graph& g, const std::vector<char>& in, const char* what) {
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)])
            throw precondition_error(std::string(what) + " is not independent: contains edge (" +
                                     std::to_string(u) + "," + std::to_string(v) + ")");
}

inline std::vector<int> sorted_copy(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

} // namespace detail

/// Edges of G with one endpoint in s0 and the other in s1 — exactly the
/// pairs that stop s0 x {0} u s1 x {1} from being independent in the double
/// cover. Unordered, deduplicated.
inline std::vector<Edge> conflict_edges(const Graph& g, const std::vector<int>& s0,
                                        const std::vector<int>& s1) {
    auto in0 = detail::membership(g, s0, "s0");
    auto in1 = detail::membership(g, s1, "s1");
    detail::require_independent(g, in0, "s0");
    detail::require_independent(g, in1, "s1");
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        const bool uv = in0[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(v)];
        const bool vu = in0[static_cast<std::size_t>(v)] && in1[static_cast<std::size_t>(u)];
        if (uv || vu)
            out.emplace_back(u, v);
    }
    return out;
}

/// First subset of V(G), ordered by (cardinality, then lexicographic on the
/// sorted vertex list), that contains exactly one endpoint of every conflict
/// edge. Such a subset restricted to a connected component of the conflict
/// graph is necessarily one of its two color classes, so the minimum is the
/// smaller class per component (the class holding the component's smallest
/// vertex on ties) — no subset scan needed. The conflict graph is bipartite
/// whenever the conflicts come from a pair of independent sets; a
/// non-2-colorable input indicates corrupted state.
inline std::vector<int> canonical_swap_set(const Graph& g, const std::vector<Edge>& conflicts) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : conflicts) {
        if (u < 1 || v < 1 || u > n || v > n || u == v || !g.adjacent(u, v))
            throw invalid_parameter("conflict list contains a non-edge");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> swap_set;
    for (int s = 1; s <= n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1 || adj[static_cast<std::size_t>(s)].empty())
            continue;
        // BFS one component; s is its smallest vertex
        std::vector<int> cls[2];
        std::vector<int> queue{s};
        color[static_cast<std::size_t>(s)] = 0;
        cls[0].push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : adj[static_cast<std::size_t>(u)]) {
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    cls[cv].push_back(v);
                    queue.push_back(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    throw internal_error("conflict graph is not bipartite");
                }
            }
        }
        // smaller class wins; ties go to the class holding s (lex smaller)
        const std::vector<int>& pick =
            cls[0].size() <= cls[1].size() ? cls[0] : cls[1];
        swap_set.insert(swap_set.end(), pick.begin(), pick.end());
    }
    std::sort(swap_set.begin(), swap_set.end());
    return swap_set;
}

/// The injection: start from s0 x {0} u s1 x {1} and, for every vertex of
/// the canonical swap set, exchange the memberships of (i,0) and (i,1). The
/// result is independent in G x K_2.
inline CoverSet zhao_map(const Graph& g, const std::vector<int>& s0, const std::vector<int>& s1) {
    auto conflicts = conflict_edges(g, s0, s1); // validates independence
    auto swap_set = canonical_swap_set(g, conflicts);
    auto in_swap = detail::membership(g, swap_set, "swap set");
    auto in0 = detail::membership(g, s0, "s0");
    auto in1 = detail::membership(g, s1, "s1");
    CoverSet image;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        bool x = in0[static_cast<std::size_t>(v)];
        bool y = in1[static_cast<std::size_t>(v)];
        if (in_swap[static_cast<std::size_t>(v)])
            std::swap(x, y);
        if (x)
            image.side0.push_back(v);
        if (y)
            image.side1.push_back(v);
    }
    return image;
}

/// True iff the subset is independent in G x K_2, i.e. no edge (i,j) of G
/// has (i,0),(j,1) or (j,0),(i,1) both selected.
inline bool cover_set_independent(const Graph& g, const CoverSet& s) {
    auto in0 = detail::membership(g, s.side0, "side0");
    auto in1 = detail::membership(g, s.side1, "side1");
    for (auto [u, v] : g.edges()) {
        if (in0[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(v)])
            return false;
        if (in0[static_cast<std::size_t>(v)] && in1[static_cast<std::size_t>(u)])
            return false;
    }
    return true;
}

/// Inverse of zhao_map: recover the same-side conflicts, recompute the swap
/// set by the identical rule, and swap back. Returns nullopt for independent
/// sets of the double cover outside the map's image (the map need not be
/// surjective); a returned pair always satisfies zhao_map(g, s0, s1) ==
/// image.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
zhao_inverse(const Graph& g, const CoverSet& image) {
    if (!cover_set_independent(g, image))
        throw precondition_error("image is not independent in the double cover");
    auto in0 = detail::membership(g, image.side0, "side0");
    auto in1 = detail::membership(g, image.side1, "side1");

    std::vector<Edge> conflicts;
    for (auto [u, v] : g.edges()) {
        const bool same0 = in0[static_cast<std::size_t>(u)] && in0[static_cast<std::size_t>(v)];
        const bool same1 = in1[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(v)];
        if (same0 || same1)
            conflicts.emplace_back(u, v);
    }

    // an odd cycle among the conflicts means no valid swap set exists
    std::vector<int> swap_set;
    try {
        swap_set = canonical_swap_set(g, conflicts);
    } catch (const internal_error&) {
        return std::nullopt;
    }

    auto in_swap = detail::membership(g, swap_set, "swap set");
    std::vector<int> s0, s1;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        bool x = in0[static_cast<std::size_t>(v)];
        bool y = in1[static_cast<std::size_t>(v)];
        if (in_swap[static_cast<std::size_t>(v)])
            std::swap(x, y);
        if (x)
            s0.push_back(v);
        if (y)
            s1.push_back(v);
    }

    // candidate halves must be independent and must map back onto the input
    auto cs0 = detail::membership(g, s0, "s0");
    auto cs1 = detail::membership(g, s1, "s1");
    for (auto [u, v] : g.edges()) {
        if (cs0[static_cast<std::size_t>(u)] && cs0[static_cast<std::size_t>(v)])
            return std::nullopt;
        if (cs1[static_cast<std::size_t>(u)] && cs1[static_cast<std::size_t>(v)])
            return std::nullopt;
    }
    if (!(zhao_map(g, s0, s1) == image))
        return std::nullopt;
    return std::make_pair(std::move(s0), std::move(s1));
}

struct ZhaoInequalityCheck {
    big_int count_squared;
    big_int cover_count;
    bool pass;
};

/// Exact verification of |I(G)|^2 <= |I(G x K_2)|.
inline ZhaoInequalityCheck verify_zhao_inequality(const Graph& g) {
    const big_int c = count_independent_sets(g);
    const big_int cc = count_independent_sets(bipartite_double_cover(g).first);
    ZhaoInequalityCheck out{c * c, cc, false};
    out.pass = out.count_squared <= out.cover_count;
    return out;
}

} // namespace indset
