#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "indset/bounds.hpp"
#include "indset/entropy.hpp"
#include "indset/sweep.hpp"
#include "indset/zhao.hpp"

namespace indset {

using json = nlohmann::ordered_json;

/// Big integers go out as JSON numbers while they fit 64 bits and as decimal
/// strings beyond that.
inline json big_int_json(const big_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline json to_json(const BoundExpr& b) {
    json factors = json::array();
    for (const auto& f : b.factors())
        factors.push_back({{"base", big_int_json(f.base)},
                           {"num", big_int_json(f.num)},
                           {"den", big_int_json(f.den)}});
    return {{"factors", std::move(factors)},
            {"log2", b.log2_value()},
            {"provenance", b.provenance()}};
}

inline json to_json(const AuditReport& r) {
    json q = json::object();
    for (const auto& [vertex, ratio] : r.q)
        q[std::to_string(vertex)] = {ratio.first, ratio.second};
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"id", s.id},
                         {"lhs", s.lhs},
                         {"rhs", s.rhs},
                         {"slack", s.slack},
                         {"kind", s.kind == StepKind::inequality ? "ineq" : "eq"},
                         {"pass", s.pass}});
    return {{"graph", r.graph_id},
            {"orientation", r.orientation},
            {"q", std::move(q)},
            {"steps", std::move(steps)},
            {"final_bound_log2", r.final_bound_log2},
            {"pass", r.pass}};
}

inline json to_json(const CoverSet& s) {
    json pairs = json::array();
    for (auto [v, side] : s.pairs())
        pairs.push_back({v, side});
    return pairs;
}

inline json to_json(const BipartiteSweepTotals& t) {
    return {{"graphs", t.graphs},
            {"sah_tight", t.sah_tight},
            {"sah_strictly_above", t.sah_above},
            {"paper_tight", t.paper_tight},
            {"paper_strictly_above", t.paper_above},
            {"violations", t.violations},
            {"dominance_failures", t.dominance_failures},
            {"coincidence_failures", t.coincidence_failures},
            {"audits", t.audits},
            {"audit_failures", t.audit_failures},
            {"tightness_failures", t.tightness_failures},
            {"pass", t.pass()}};
}

inline json to_json(const ZhaoSweepTotals& t) {
    return {{"graphs", t.graphs}, {"failures", t.failures}, {"pass", t.pass()}};
}

inline json to_json(const InjectionSweepTotals& t) {
    return {{"graphs", t.graphs},
            {"pairs", t.pairs},
            {"invalid_images", t.invalid_images},
            {"duplicate_images", t.duplicate_images},
            {"roundtrip_failures", t.roundtrip_failures},
            {"pass", t.pass()}};
}

} // namespace indset
