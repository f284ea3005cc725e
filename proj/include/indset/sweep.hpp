#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "indset/bounds.hpp"
#include "indset/count.hpp"
#include "indset/entropy.hpp"
#include "indset/graph.hpp"
#include "indset/zhao.hpp"

namespace indset {

/// Calls fn(graph, left) for every labeled bipartite adjacency matrix with
/// parts 1..a on the left and a+1..a+b on the right. 2^(a*b) graphs,
/// isolated vertices included; filtering is the caller's business.
template <typename Fn>
void for_each_bipartite_matrix(int a, int b, Fn&& fn) {
    std::vector<int> left;
    for (int v = 1; v <= a; ++v)
        left.push_back(v);
    const std::uint64_t total = std::uint64_t{1} << (a * b);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if ((bits >> (i * b + j)) & 1u)
                    edges.emplace_back(i + 1, a + j + 1);
        fn(Graph(a + b, std::move(edges)), left);
    }
}

/// Calls fn(graph) for every labeled graph on exactly n vertices
/// (2^(n(n-1)/2) of them).
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    std::vector<Edge> all_pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            all_pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << all_pairs.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i)
            if ((bits >> i) & 1u)
                edges.push_back(all_pairs[i]);
        fn(Graph(n, std::move(edges)));
    }
}

struct BipartiteSweepOptions {
    bool with_audit = true;
    double tol = 1e-9;
};

struct BipartiteSweepTotals {
    long long graphs = 0;       // matrices with no isolated vertex
    long long sah_tight = 0;
    long long sah_above = 0;
    long long paper_tight = 0;  // over both orientations
    long long paper_above = 0;
    long long violations = 0;   // any VIOLATED verdict, sah or paper
    long long dominance_failures = 0;   // paper < sah in some orientation
    long long coincidence_failures = 0; // regular side but paper != sah
    long long audits = 0;
    long long audit_failures = 0;       // some audit step failed
    long long tightness_failures = 0;   // complete bipartite but ent37 not tight

    bool pass() const {
        return violations == 0 && dominance_failures == 0 && coincidence_failures == 0 &&
               audit_failures == 0 && tightness_failures == 0;
    }
};

/// Exhaustive bound verification over every labeled bipartite adjacency
/// matrix with |L| <= max_left, |R| <= max_right and no isolated vertices:
/// exact soundness of the Sah and one-sided bounds (both orientations),
/// dominance paper >= sah, the equal-on-regular-side coincidence, and (by
/// default) the full proof-chain audit per orientation with tightness
/// required on complete bipartite members.
inline BipartiteSweepTotals sweep_bipartite_bounds(int max_left, int max_right,
                                                   const BipartiteSweepOptions& opt = {}) {
    if (max_left < 1 || max_right < 1)
        throw invalid_parameter("sweep sides must be >= 1");
    BipartiteSweepTotals t;
    for (int a = 1; a <= max_left; ++a) {
        for (int b = 1; b <= max_right; ++b) {
            for_each_bipartite_matrix(a, b, [&](const Graph& g, const std::vector<int>& left) {
                if (!g.isolated_vertices().empty())
                    return;
                ++t.graphs;
                const big_int c = count_independent_sets(g);
                const BoundExpr sah = sah_bound(g);
                const BipartiteView view = make_bipartite_view(g, left);
                const BipartiteView flipped = flip(view);

                auto tally = [&](const BoundExpr& bound, long long& tight, long long& above) {
                    switch (compare_bound_vs_count(bound, c)) {
                    case BoundVsCount::tight: ++tight; break;
                    case BoundVsCount::strictly_above: ++above; break;
                    default: ++t.violations; break;
                    }
                };
                tally(sah, t.sah_tight, t.sah_above);

                for (const BipartiteView* v : {&view, &flipped}) {
                    const BoundExpr paper = paper_bound(*v);
                    tally(paper, t.paper_tight, t.paper_above);
                    if (compare_bounds(paper, sah) == BoundOrder::less)
                        ++t.dominance_failures;
                    const bool left_regular = v->left_degrees.size() <= 1;
                    if (left_regular && compare_bounds(paper, sah) != BoundOrder::equal)
                        ++t.coincidence_failures;
                }

                if (opt.with_audit) {
                    const bool complete = g.edge_count() == a * b;
                    const char* names[2] = {"default", "flipped"};
                    const BipartiteView* views[2] = {&view, &flipped};
                    for (int i = 0; i < 2; ++i) {
                        AuditOptions aopt;
                        aopt.tol = opt.tol;
                        aopt.orientation = names[i];
                        AuditReport rep = audit_bipartite_proof(*views[i], aopt);
                        ++t.audits;
                        if (!rep.pass)
                            ++t.audit_failures;
                        if (complete &&
                            std::abs(rep.final_bound_log2 - log2_big(c)) > opt.tol)
                            ++t.tightness_failures;
                    }
                }
            });
        }
    }
    return t;
}

struct ZhaoSweepTotals {
    long long graphs = 0;
    long long failures = 0;

    bool pass() const { return failures == 0; }
};

/// |I(G)|^2 <= |I(G x K_2)| for every labeled graph with at most max_n
/// vertices, verified by exact counting of both sides.
inline ZhaoSweepTotals sweep_zhao_inequality(int max_n) {
    if (max_n < 1)
        throw invalid_parameter("sweep size must be >= 1");
    ZhaoSweepTotals t;
    for (int n = 1; n <= max_n; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++t.graphs;
            if (!verify_zhao_inequality(g).pass)
                ++t.failures;
        });
    }
    return t;
}

struct InjectionSweepTotals {
    long long graphs = 0;
    long long pairs = 0;
    long long invalid_images = 0;     // image not independent in the cover
    long long duplicate_images = 0;   // injectivity violations
    long long roundtrip_failures = 0; // inverse did not recover the pair

    bool pass() const {
        return invalid_images == 0 && duplicate_images == 0 && roundtrip_failures == 0;
    }
};

/// Runs the injection over every ordered pair of independent sets of every
/// labeled graph with at most max_n vertices, checking image validity,
/// global injectivity, and exact inversion.
inline InjectionSweepTotals sweep_zhao_injection(int max_n) {
    if (max_n < 1)
        throw invalid_parameter("sweep size must be >= 1");
    InjectionSweepTotals t;
    for (int n = 1; n <= max_n; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++t.graphs;
            const IndSetFamily fam = enumerate_independent_sets(g);
            std::vector<std::uint64_t> images;
            images.reserve(fam.sets.size() * fam.sets.size());
            for (std::uint32_t m0 : fam.sets) {
                const auto s0 = IndSetFamily::mask_vertices(m0);
                for (std::uint32_t m1 : fam.sets) {
                    const auto s1 = IndSetFamily::mask_vertices(m1);
                    ++t.pairs;
                    const CoverSet image = zhao_map(g, s0, s1);
                    if (!cover_set_independent(g, image))
                        ++t.invalid_images;
                    images.push_back(
                        static_cast<std::uint64_t>(IndSetFamily::vertices_mask(image.side0)) |
                        (static_cast<std::uint64_t>(IndSetFamily::vertices_mask(image.side1)) << n));
                    auto back = zhao_inverse(g, image);
                    if (!back || back->first != s0 || back->second != s1)
                        ++t.roundtrip_failures;
                }
            }
            std::sort(images.begin(), images.end());
            for (std::size_t i = 1; i < images.size(); ++i)
                if (images[i] == images[i - 1])
                    ++t.duplicate_images;
        });
    }
    return t;
}

} // namespace indset
