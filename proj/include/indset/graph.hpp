#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "indset/errors.hpp"

namespace indset {

using Edge = std::pair<int, int>; // normalized: first < second

/// Undirected simple graph on vertices 1..n. Immutable after construction;
/// all operations below are pure functions, so values can be shared across
/// threads freely.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0)
            throw invalid_parameter("vertex count must be nonnegative");
        adj_.assign(static_cast<std::size_t>(n) + 1, {});
        for (auto [u, v] : edges) {
            if (u == v)
                throw invalid_parameter("self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
            if (u < 1 || v > n)
                throw invalid_parameter("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range 1.." +
                                        std::to_string(n));
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw invalid_parameter("duplicate edge");
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(int u, int v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<int> isolated_vertices() const {
        std::vector<int> out;
        for (int v = 1; v <= n_; ++v)
            if (degree(v) == 0)
                out.push_back(v);
        return out;
    }

    /// Common degree d if every vertex has it; nullopt for irregular graphs
    /// and for the empty graph.
    std::optional<int> regular_degree() const {
        if (n_ == 0)
            return std::nullopt;
        int d = degree(1);
        for (int v = 2; v <= n_; ++v)
            if (degree(v) != d)
                return std::nullopt;
        return d;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw invalid_parameter("vertex " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<Edge> edges_;           // sorted, unique, first < second
    std::vector<std::vector<int>> adj_; // index 0 unused
};

/// Orientation (L, R) of a bipartite graph together with the degree-derived
/// sets: D_L/D_R are the distinct degrees per side, left_of_degree[d] is the
/// set of left vertices of degree d (these partition L), and
/// right_adjacent_to[d] is the set of right vertices adjacent to some left
/// vertex of degree d (these may overlap across d).
struct BipartiteView {
    Graph graph;
    std::vector<int> left;  // sorted
    std::vector<int> right; // sorted
    std::vector<int> left_degrees;
    std::vector<int> right_degrees;
    std::map<int, std::vector<int>> left_of_degree;
    std::map<int, std::vector<int>> right_adjacent_to;
};

/// Builds the view for a given left set, deriving all degree sets. Throws if
/// some edge does not cross between the two sides.
inline BipartiteView make_bipartite_view(const Graph& g, std::vector<int> left) {
    const int n = g.vertex_count();
    std::vector<char> is_left(static_cast<std::size_t>(n) + 1, 0);
    for (int v : left) {
        if (v < 1 || v > n)
            throw invalid_parameter("left vertex " + std::to_string(v) + " out of range");
        is_left[static_cast<std::size_t>(v)] = 1;
    }
    for (auto [u, v] : g.edges())
        if (is_left[static_cast<std::size_t>(u)] == is_left[static_cast<std::size_t>(v)])
            throw not_bipartite_error("edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ") does not cross the bipartition");

    BipartiteView view;
    view.graph = g;
    std::sort(left.begin(), left.end());
    view.left = std::move(left);
    for (int v = 1; v <= n; ++v)
        if (!is_left[static_cast<std::size_t>(v)])
            view.right.push_back(v);

    for (int v : view.left)
        view.left_of_degree[g.degree(v)].push_back(v);
    for (const auto& [d, vs] : view.left_of_degree)
        view.left_degrees.push_back(d);

    std::vector<int> right_deg_set;
    for (int v : view.right)
        right_deg_set.push_back(g.degree(v));
    std::sort(right_deg_set.begin(), right_deg_set.end());
    right_deg_set.erase(std::unique(right_deg_set.begin(), right_deg_set.end()),
                        right_deg_set.end());
    view.right_degrees = std::move(right_deg_set);

    for (const auto& [d, vs] : view.left_of_degree) {
        std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
        for (int l : vs)
            for (int r : g.neighbors(l))
                hit[static_cast<std::size_t>(r)] = 1;
        auto& rd = view.right_adjacent_to[d];
        for (int v = 1; v <= n; ++v)
            if (hit[static_cast<std::size_t>(v)])
                rd.push_back(v);
    }
    return view;
}

/// Two-colors g. Within each connected component the side containing the
/// component's minimum-labeled vertex joins L. Returns nullopt on an odd
/// cycle (not an error: "not bipartite" is an answer).
inline std::optional<BipartiteView> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> left;
    for (int s = 1; s <= n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1)
            continue;
        color[static_cast<std::size_t>(s)] = 0; // s is the component minimum
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : g.neighbors(u)) {
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    bfs.push(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    for (int v = 1; v <= n; ++v)
        if (color[static_cast<std::size_t>(v)] == 0)
            left.push_back(v);
    return make_bipartite_view(g, std::move(left));
}

/// Swaps L and R; all derived sets are recomputed. Involution.
inline BipartiteView flip(const BipartiteView& view) {
    return make_bipartite_view(view.graph, view.right);
}

/// Complete graph K_d: d vertices, all pairs joined, (d-1)-regular.
inline Graph complete_graph(int d) {
    if (d < 1)
        throw invalid_parameter("complete graph order must be >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= d; ++u)
        for (int v = u + 1; v <= d; ++v)
            edges.emplace_back(u, v);
    return Graph(d, std::move(edges));
}

/// Complete bipartite K_{a,b}: left vertices 1..a, right vertices a+1..a+b.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw invalid_parameter("complete bipartite sides must be >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            edges.emplace_back(u, v);
    return Graph(a + b, std::move(edges));
}

/// Disjoint union; component vertex labels are shifted so the i-th input
/// occupies a contiguous block after the first i-1.
inline Graph disjoint_union(const std::vector<Graph>& gs) {
    int n = 0;
    std::vector<Edge> edges;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + n, v + n);
        n += g.vertex_count();
    }
    return Graph(n, std::move(edges));
}

/// Label of the pair (u, h) in a tensor product with |V(H)| = nh columns.
inline int tensor_vertex_label(int u, int h, int nh) { return (u - 1) * nh + h; }

/// Tensor product: (u,h) ~ (u',h') iff u~u' in G and h~h' in H. Vertices are
/// relabeled (u,h) -> (u-1)*|V(H)| + h.
inline Graph tensor_product(const Graph& g, const Graph& h) {
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    for (auto [gu, gv] : g.edges()) {
        for (auto [hu, hv] : h.edges()) {
            edges.emplace_back(tensor_vertex_label(gu, hu, nh),
                               tensor_vertex_label(gv, hv, nh));
            edges.emplace_back(tensor_vertex_label(gu, hv, nh),
                               tensor_vertex_label(gv, hu, nh));
        }
    }
    return Graph(g.vertex_count() * nh, std::move(edges));
}

/// Bipartite double cover G x K_2. Copy 0 of vertex v gets label 2v-1 and
/// copy 1 gets label 2v; the returned view has L = copy 0, R = copy 1
/// (independent of any 2-coloring heuristic, so it is stable for
/// disconnected graphs too).
inline std::pair<Graph, BipartiteView> bipartite_double_cover(const Graph& g) {
    Graph cover = tensor_product(g, complete_graph(2));
    std::vector<int> left;
    for (int v = 1; v <= g.vertex_count(); ++v)
        left.push_back(2 * v - 1);
    BipartiteView view = make_bipartite_view(cover, std::move(left));
    return {std::move(cover), std::move(view)};
}

} // namespace indset
