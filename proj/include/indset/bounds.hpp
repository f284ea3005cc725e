#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "indset/count.hpp"
#include "indset/graph.hpp"

namespace indset {

/// log2 of a positive big integer, accurate to double precision at any size.
inline double log2_big(const big_int& v) {
    if (v <= 0)
        throw invalid_parameter("log2 of nonpositive value");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits < 900)
        return std::log2(v.convert_to<double>());
    big_int top = v >> (bits - 52);
    return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

struct BoundFactor {
    big_int base; // >= 2
    big_int num;  // >= 0, gcd(num, den) == 1 after canonicalization
    big_int den;  // >= 1

    bool operator==(const BoundFactor&) const = default;
};

/// Product-form bound  prod base_i^(num_i/den_i)  with integer bases and
/// rational exponents. Canonical: one factor per base (exponents of equal
/// bases are summed exactly), fractions reduced, zero exponents dropped,
/// factors sorted by base. The empty product has value 1.
class BoundExpr {
public:
    BoundExpr() = default;

    BoundExpr(std::vector<BoundFactor> raw, std::string provenance)
        : provenance_(std::move(provenance)) {
        std::map<big_int, std::pair<big_int, big_int>> merged; // base -> num/den
        for (auto& f : raw) {
            if (f.base < 2)
                throw invalid_parameter("bound factor base must be >= 2");
            if (f.den < 1 || f.num < 0)
                throw invalid_parameter("bound factor exponent must be nonnegative");
            auto it = merged.find(f.base);
            if (it == merged.end()) {
                merged.emplace(f.base, std::make_pair(f.num, f.den));
            } else {
                auto& [num, den] = it->second;
                num = num * f.den + f.num * den;
                den = den * f.den;
            }
        }
        for (auto& [base, exp] : merged) {
            auto& [num, den] = exp;
            if (num == 0)
                continue;
            big_int g = boost::multiprecision::gcd(num, den);
            factors_.push_back({base, num / g, den / g});
        }
    }

    const std::vector<BoundFactor>& factors() const { return factors_; }
    const std::string& provenance() const { return provenance_; }

    /// Floating value for reports only; verdicts never use it.
    double log2_value() const {
        double total = 0.0;
        for (const auto& f : factors_)
            total += f.num.convert_to<double>() / f.den.convert_to<double>() * log2_big(f.base);
        return total;
    }

    bool operator==(const BoundExpr& other) const { return factors_ == other.factors_; }

private:
    std::vector<BoundFactor> factors_;
    std::string provenance_;
};

enum class BoundVsCount { strictly_above, tight, violated };
enum class BoundOrder { less, equal, greater };

inline const char* to_string(BoundVsCount v) {
    switch (v) {
    case BoundVsCount::strictly_above: return "StrictlyAbove";
    case BoundVsCount::tight: return "Tight";
    default: return "VIOLATED";
    }
}

inline const char* to_string(BoundOrder v) {
    switch (v) {
    case BoundOrder::less: return "Less";
    case BoundOrder::equal: return "Equal";
    default: return "Greater";
    }
}

namespace detail {

/// Guard for the exact comparisons: denominators are cleared, so wildly
/// diverse degree products can push the integer powers past any reasonable
/// size. Refuse honestly rather than answer slowly or wrongly.
inline constexpr std::uint64_t max_comparison_bits = std::uint64_t{1} << 26;

inline big_int denominator_lcm(const BoundExpr& b, big_int q = 1) {
    for (const auto& f : b.factors())
        q = boost::multiprecision::lcm(q, f.den);
    return q;
}

inline std::uint64_t checked_exponent(const big_int& e, const big_int& base) {
    const std::uint64_t bits_per = base > 1 ? boost::multiprecision::msb(base) + 1 : 1;
    if (e > big_int(max_comparison_bits / bits_per))
        throw capacity_error("exact bound comparison exceeds size limits; "
                             "degree products are too diverse");
    return e.convert_to<std::uint64_t>();
}

inline big_int cleared_power(const BoundExpr& b, const big_int& q) {
    big_int value = 1;
    for (const auto& f : b.factors()) {
        big_int e = f.num * (q / f.den);
        value *= boost::multiprecision::pow(f.base, static_cast<unsigned>(checked_exponent(e, f.base)));
    }
    return value;
}

} // namespace detail

/// Exact verdict of bound vs count: both sides are raised to the lcm of the
/// factor denominators and compared as integers. No floating point.
inline BoundVsCount compare_bound_vs_count(const BoundExpr& b, const big_int& count) {
    if (count < 1)
        throw invalid_parameter("independent-set count is always >= 1");
    const big_int q = detail::denominator_lcm(b);
    const big_int lhs = boost::multiprecision::pow(count, static_cast<unsigned>(detail::checked_exponent(q, count)));
    const big_int rhs = detail::cleared_power(b, q);
    if (lhs < rhs)
        return BoundVsCount::strictly_above;
    if (lhs == rhs)
        return BoundVsCount::tight;
    return BoundVsCount::violated;
}

/// Exact three-way comparison of two product-form bounds.
inline BoundOrder compare_bounds(const BoundExpr& a, const BoundExpr& b) {
    const big_int q = detail::denominator_lcm(b, detail::denominator_lcm(a));
    const big_int va = detail::cleared_power(a, q);
    const big_int vb = detail::cleared_power(b, q);
    if (va < vb)
        return BoundOrder::less;
    if (va == vb)
        return BoundOrder::equal;
    return BoundOrder::greater;
}

/// (2^{d+1} - 1)^{n/2d} for a d-regular graph (bipartiteness not required).
inline BoundExpr kahn_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        throw not_applicable("regular-graph bound needs at least one vertex");
    auto d = g.regular_degree();
    if (!d) {
        const int d1 = g.degree(1);
        for (int v = 2; v <= n; ++v)
            if (g.degree(v) != d1)
                throw not_applicable("graph is irregular: vertex 1 has degree " +
                                     std::to_string(d1) + ", vertex " + std::to_string(v) +
                                     " has degree " + std::to_string(g.degree(v)));
        throw internal_error("regular_degree disagreed with degree scan");
    }
    if (*d == 0)
        throw precondition_error("graph has isolated vertices (0-regular)");
    BoundFactor f{(big_int(1) << (*d + 1)) - 1, n, 2 * *d};
    return BoundExpr({f}, "kahn[d=" + std::to_string(*d) + ",n=" + std::to_string(n) + "]");
}

/// prod over edges (u,v) of (2^{d_u} + 2^{d_v} - 1)^{1/(d_u d_v)}.
inline BoundExpr sah_bound(const Graph& g) {
    auto isolated = g.isolated_vertices();
    if (!isolated.empty()) {
        std::string msg = "graph has isolated vertices:";
        for (int v : isolated)
            msg += " " + std::to_string(v);
        throw precondition_error(msg);
    }
    std::vector<BoundFactor> factors;
    for (auto [u, v] : g.edges()) {
        const int du = g.degree(u), dv = g.degree(v);
        factors.push_back({(big_int(1) << du) + (big_int(1) << dv) - 1, 1, big_int(du) * dv});
    }
    return BoundExpr(std::move(factors), "sah[m=" + std::to_string(g.edge_count()) + "]");
}

/// prod over d in D_L, r in R_d of (2^d + 2^{deg r} - 1)^{1/d}. Orientation
/// dependent; see paper_bound_both.
inline BoundExpr paper_bound(const BipartiteView& view) {
    auto isolated = view.graph.isolated_vertices();
    if (!isolated.empty()) {
        std::string msg = "graph has isolated vertices:";
        for (int v : isolated)
            msg += " " + std::to_string(v);
        throw precondition_error(msg);
    }
    std::vector<BoundFactor> factors;
    for (const auto& [d, rs] : view.right_adjacent_to)
        for (int r : rs)
            factors.push_back({(big_int(1) << d) + (big_int(1) << view.graph.degree(r)) - 1, 1, d});
    return BoundExpr(std::move(factors), "paper[|L|=" + std::to_string(view.left.size()) +
                                             ",|R|=" + std::to_string(view.right.size()) + "]");
}

/// Both orientations of the one-sided bound; each is a valid upper bound on
/// |I(G)| and they differ in general when neither side is regular.
inline std::pair<BoundExpr, BoundExpr> paper_bound_both(const Graph& g) {
    auto view = bipartition(g);
    if (!view)
        throw not_bipartite_error("graph contains an odd cycle");
    return {paper_bound(*view), paper_bound(flip(*view))};
}

} // namespace indset
