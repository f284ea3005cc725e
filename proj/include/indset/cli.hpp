#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "indset/graph_io.hpp"
#include "indset/serialize.hpp"

namespace indset {

/// One CLI invocation's outcome: the JSON document that goes to stdout and
/// the pass verdict that becomes the exit code.
struct RunReport {
    json doc;
    bool pass = false;
};

namespace detail {

inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    Graph graph;
    json input_echo;
    int stripped = 0; // isolated vertices removed
};

/// Removes isolated vertices and relabels the rest to 1..n', keeping order.
inline std::pair<Graph, int> strip_isolated(const Graph& g) {
    auto iso = g.isolated_vertices();
    if (iso.empty())
        return {g, 0};
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            relabel[static_cast<std::size_t>(v)] = ++next;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                           relabel[static_cast<std::size_t>(v)]);
    return {Graph(next, std::move(edges)), static_cast<int>(iso.size())};
}

inline LoadedGraph load_graph(const std::string& path, bool strip) {
    const std::string text = read_file(path);
    LoadedGraph out;
    out.graph = parse_graph(text);
    out.input_echo = {{"graph_file", path}, {"graph_hash", "fnv1a64:" + fnv1a64_hex(text)}};
    if (strip) {
        auto [stripped, k] = strip_isolated(out.graph);
        out.graph = std::move(stripped);
        out.stripped = k;
    }
    return out;
}

/// Shared command wrapper: timing, error capture, report assembly.
inline RunReport run_command(const std::string& command, const json& inputs,
                             const std::function<bool(json&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.doc["command"] = command;
    report.doc["inputs"] = inputs;
    json results = json::object();
    try {
        report.pass = body(results);
        report.doc["results"] = std::move(results);
    } catch (const error& e) {
        report.pass = false;
        report.doc["error"] = e.what();
    }
    report.doc["pass"] = report.pass;
    report.doc["wall_time_ms"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count());
    return report;
}

} // namespace detail

/// Enumeration cap resolution: explicit flag beats INDSET_ENUM_CAP beats the
/// built-in default.
inline int resolve_enum_cap(std::optional<int> flag = std::nullopt) {
    if (flag)
        return *flag;
    if (const char* env = std::getenv("INDSET_ENUM_CAP"))
        return std::atoi(env);
    return default_enum_cap;
}

struct CountOptions {
    std::string graph_file;
    bool enumerate = false;
    bool strip_isolated = false;
    int enum_cap = default_enum_cap;
};

inline RunReport cmd_count(const CountOptions& opt) {
    json inputs = {{"graph_file", opt.graph_file},
                   {"enumerate", opt.enumerate},
                   {"strip_isolated", opt.strip_isolated},
                   {"enum_cap", opt.enum_cap}};
    return detail::run_command("count", inputs, [&](json& results) {
        auto loaded = detail::load_graph(opt.graph_file, opt.strip_isolated);
        results["inputs_resolved"] = loaded.input_echo;
        const Graph& g = loaded.graph;
        results["n"] = g.vertex_count();
        results["m"] = g.edge_count();
        big_int count = count_independent_sets(g);
        if (loaded.stripped > 0) {
            results["stripped_isolated"] = loaded.stripped;
            count <<= loaded.stripped; // each isolated vertex doubles the count
        }
        results["count"] = count.str();
        if (opt.enumerate) {
            const IndSetFamily fam = enumerate_independent_sets(g, opt.enum_cap);
            json sets = json::array();
            for (std::uint32_t mask : fam.sets)
                sets.push_back(IndSetFamily::mask_vertices(mask));
            results["sets"] = std::move(sets);
        }
        return true;
    });
}

struct VerifyOptions {
    std::string graph_file;
    std::string bound = "all";        // kahn | sah | paper | all
    std::string orientation = "both"; // default | flip | both
    bool strip_isolated = false;
};

inline RunReport cmd_verify(const VerifyOptions& opt) {
    json inputs = {{"graph_file", opt.graph_file},
                   {"bound", opt.bound},
                   {"orientation", opt.orientation},
                   {"strip_isolated", opt.strip_isolated}};
    return detail::run_command("verify", inputs, [&](json& results) {
        if (opt.bound != "kahn" && opt.bound != "sah" && opt.bound != "paper" &&
            opt.bound != "all")
            throw invalid_parameter("unknown bound '" + opt.bound + "'");
        if (opt.orientation != "default" && opt.orientation != "flip" &&
            opt.orientation != "both")
            throw invalid_parameter("unknown orientation '" + opt.orientation + "'");
        auto loaded = detail::load_graph(opt.graph_file, opt.strip_isolated);
        results["inputs_resolved"] = loaded.input_echo;
        const Graph& g = loaded.graph;
        if (loaded.stripped > 0)
            results["stripped_isolated"] = loaded.stripped;
        const big_int count = count_independent_sets(g);
        results["count"] = count.str();

        const bool all = opt.bound == "all";
        bool any_violation = false, any_computed = false;
        json bounds = json::object();

        std::optional<BoundExpr> sah_expr;
        auto emit = [&](const char* name, const std::function<BoundExpr()>& make) -> std::optional<BoundExpr> {
            try {
                BoundExpr b = make();
                json entry = to_json(b);
                const BoundVsCount verdict = compare_bound_vs_count(b, count);
                entry["verdict"] = to_string(verdict);
                bounds[name] = std::move(entry);
                any_computed = true;
                any_violation = any_violation || verdict == BoundVsCount::violated;
                return b;
            } catch (const error& e) {
                if (!all)
                    throw;
                bounds[name] = {{"applicable", false}, {"reason", e.what()}};
                return std::nullopt;
            }
        };

        if (all || opt.bound == "kahn")
            emit("kahn", [&] { return kahn_bound(g); });
        if (all || opt.bound == "sah")
            sah_expr = emit("sah", [&] { return sah_bound(g); });
        if (all || opt.bound == "paper") {
            std::optional<BoundExpr> paper_default, paper_flipped;
            auto make_views = [&]() -> std::pair<BoundExpr, BoundExpr> {
                return paper_bound_both(g);
            };
            try {
                auto [def, flp] = make_views();
                paper_default = def;
                paper_flipped = flp;
            } catch (const error& e) {
                if (!all)
                    throw;
                bounds["paper"] = {{"applicable", false}, {"reason", e.what()}};
            }
            if (paper_default) {
                json paper = json::object();
                auto emit_orientation = [&](const char* name, const BoundExpr& b) {
                    json entry = to_json(b);
                    const BoundVsCount verdict = compare_bound_vs_count(b, count);
                    entry["verdict"] = to_string(verdict);
                    any_violation = any_violation || verdict == BoundVsCount::violated;
                    if (sah_expr)
                        entry["vs_sah"] = to_string(compare_bounds(b, *sah_expr));
                    paper[name] = std::move(entry);
                    any_computed = true;
                };
                if (opt.orientation != "flip")
                    emit_orientation("default", *paper_default);
                if (opt.orientation != "default")
                    emit_orientation("flipped", *paper_flipped);
                bounds["paper"] = std::move(paper);
            }
        }
        results["bounds"] = std::move(bounds);
        return !any_violation && any_computed;
    });
}

struct AuditCliOptions {
    std::string graph_file;
    std::string orientation = "default"; // default | flip
    double tol = 1e-9;
    int enum_cap = default_enum_cap;
};

inline RunReport cmd_audit(const AuditCliOptions& opt) {
    json inputs = {{"graph_file", opt.graph_file},
                   {"orientation", opt.orientation},
                   {"tol", opt.tol},
                   {"enum_cap", opt.enum_cap}};
    return detail::run_command("audit", inputs, [&](json& results) {
        if (opt.orientation != "default" && opt.orientation != "flip")
            throw invalid_parameter("unknown orientation '" + opt.orientation + "'");
        auto loaded = detail::load_graph(opt.graph_file, false);
        results["inputs_resolved"] = loaded.input_echo;
        auto view = bipartition(loaded.graph);
        if (!view)
            throw not_bipartite_error("graph contains an odd cycle");
        AuditOptions aopt;
        aopt.tol = opt.tol;
        aopt.enum_cap = opt.enum_cap;
        aopt.orientation = opt.orientation == "flip" ? "flipped" : "default";
        const BipartiteView chosen = opt.orientation == "flip" ? flip(*view) : *view;
        const AuditReport report = audit_bipartite_proof(chosen, aopt);
        results["audit"] = to_json(report);
        return report.pass;
    });
}

struct SweepOptions {
    int max_left = 0;   // bipartite sweep when both sides > 0
    int max_right = 0;
    int zhao_max_n = 0; // Zhao-inequality sweep when > 0
    bool with_audit = true;
    double tol = 1e-9;
    bool force = false; // waive the desk-scale limits
};

inline RunReport cmd_sweep(const SweepOptions& opt) {
    json inputs = {{"max_left", opt.max_left},     {"max_right", opt.max_right},
                   {"zhao_max_n", opt.zhao_max_n}, {"with_audit", opt.with_audit},
                   {"tol", opt.tol},               {"force", opt.force}};
    return detail::run_command("sweep", inputs, [&](json& results) {
        const bool bipartite_mode = opt.max_left > 0 || opt.max_right > 0;
        const bool zhao_mode = opt.zhao_max_n > 0;
        if (bipartite_mode == zhao_mode)
            throw invalid_parameter("choose either --max-left/--max-right or --zhao-max-n");
        if (bipartite_mode) {
            if (opt.max_left < 1 || opt.max_right < 1)
                throw invalid_parameter("both sweep sides must be >= 1");
            if (!opt.force && (opt.max_left > 5 || opt.max_right > 5))
                throw capacity_error("sides above 5 need --force (2^(a*b) matrices)");
            BipartiteSweepOptions sopt;
            sopt.with_audit = opt.with_audit;
            sopt.tol = opt.tol;
            const auto totals = sweep_bipartite_bounds(opt.max_left, opt.max_right, sopt);
            results["bipartite_sweep"] = to_json(totals);
            return totals.pass();
        }
        if (!opt.force && opt.zhao_max_n > 6)
            throw capacity_error("sizes above 6 need --force (2^(n(n-1)/2) graphs)");
        const auto totals = sweep_zhao_inequality(opt.zhao_max_n);
        results["zhao_sweep"] = to_json(totals);
        return totals.pass();
    });
}

struct ConstructOptions {
    std::string kind;                // complete | complete-bipartite | tensor | double-cover | union
    std::vector<int> params;         // numeric parameters for complete/complete-bipartite
    std::vector<std::string> files;  // input graph files for tensor/double-cover/union
    std::string out;                 // output path; empty means raw text on stdout
};

struct ConstructResult {
    RunReport report;
    std::string graph_text;
};

inline ConstructResult cmd_construct(const ConstructOptions& opt) {
    json inputs = {{"kind", opt.kind},
                   {"params", opt.params},
                   {"files", opt.files},
                   {"out", opt.out}};
    ConstructResult out;
    out.report = detail::run_command("construct", inputs, [&](json& results) {
        Graph g;
        if (opt.kind == "complete") {
            if (opt.params.size() != 1)
                throw invalid_parameter("construct complete needs one parameter d");
            g = complete_graph(opt.params[0]);
        } else if (opt.kind == "complete-bipartite") {
            if (opt.params.size() != 2)
                throw invalid_parameter("construct complete-bipartite needs parameters a b");
            g = complete_bipartite(opt.params[0], opt.params[1]);
        } else if (opt.kind == "tensor") {
            if (opt.files.size() != 2)
                throw invalid_parameter("construct tensor needs two graph files");
            g = tensor_product(parse_graph(detail::read_file(opt.files[0])),
                               parse_graph(detail::read_file(opt.files[1])));
        } else if (opt.kind == "double-cover") {
            if (opt.files.size() != 1)
                throw invalid_parameter("construct double-cover needs one graph file");
            g = bipartite_double_cover(parse_graph(detail::read_file(opt.files[0]))).first;
        } else if (opt.kind == "union") {
            std::vector<Graph> gs;
            for (const auto& f : opt.files)
                gs.push_back(parse_graph(detail::read_file(f)));
            g = disjoint_union(gs);
        } else {
            throw invalid_parameter("unknown construct kind '" + opt.kind + "'");
        }
        out.graph_text = serialize_graph(g);
        results["n"] = g.vertex_count();
        results["m"] = g.edge_count();
        if (!opt.out.empty()) {
            std::ofstream f(opt.out, std::ios::binary);
            if (!f)
                throw error("cannot write '" + opt.out + "'");
            f << out.graph_text;
            results["out"] = opt.out;
        }
        return true;
    });
    return out;
}

} // namespace indset
