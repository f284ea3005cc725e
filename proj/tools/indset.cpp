// Command-line front end: exact independent-set counting, bound
// verification, proof-chain audits, and exhaustive sweeps. JSON reports go
// to stdout, a one-line human summary to stderr; exit code 0 iff pass.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "indset/cli.hpp"

namespace {

int finish(const indset::RunReport& report, bool quiet) {
    std::cout << report.doc.dump(2) << '\n';
    if (!quiet) {
        if (report.doc.contains("error"))
            std::cerr << report.doc["command"].get<std::string>()
                      << ": error: " << report.doc["error"].get<std::string>() << '\n';
        else
            std::cerr << report.doc["command"].get<std::string>() << ": "
                      << (report.pass ? "pass" : "FAIL") << '\n';
    }
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independent-set counting and bound verification"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "suppress the stderr summary");

    std::optional<int> enum_cap_flag;

    // count
    indset::CountOptions count_opt;
    auto* count = app.add_subcommand("count", "exact |I(G)| of a graph file");
    count->add_option("graph", count_opt.graph_file, "graph file")->required();
    count->add_flag("--enumerate", count_opt.enumerate, "list the sets (within the cap)");
    count->add_flag("--strip-isolated", count_opt.strip_isolated,
                    "drop isolated vertices, multiply the count by 2^k");
    count->add_option("--enum-cap", enum_cap_flag, "enumeration cap override");

    // verify
    indset::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "evaluate bounds and compare exactly");
    verify->add_option("graph", verify_opt.graph_file, "graph file")->required();
    verify->add_option("--bound", verify_opt.bound, "kahn|sah|paper|all")
        ->check(CLI::IsMember({"kahn", "sah", "paper", "all"}));
    verify->add_option("--orientation", verify_opt.orientation, "default|flip|both")
        ->check(CLI::IsMember({"default", "flip", "both"}));
    verify->add_flag("--strip-isolated", verify_opt.strip_isolated,
                     "drop isolated vertices before verification");

    // audit
    indset::AuditCliOptions audit_opt;
    auto* audit = app.add_subcommand("audit", "run the entropy proof-chain audit");
    audit->add_option("graph", audit_opt.graph_file, "graph file")->required();
    audit->add_option("--orientation", audit_opt.orientation, "default|flip")
        ->check(CLI::IsMember({"default", "flip"}));
    audit->add_option("--tol", audit_opt.tol, "comparison tolerance");
    audit->add_option("--enum-cap", enum_cap_flag, "enumeration cap override");

    // sweep
    indset::SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "exhaustive desk-scale verification");
    sweep->add_option("--max-left", sweep_opt.max_left, "bipartite sweep: max |L|");
    sweep->add_option("--max-right", sweep_opt.max_right, "bipartite sweep: max |R|");
    sweep->add_option("--zhao-max-n", sweep_opt.zhao_max_n, "Zhao-inequality sweep: max n");
    sweep->add_flag("!--no-audit", sweep_opt.with_audit, "skip the per-graph audits");
    sweep->add_option("--tol", sweep_opt.tol, "audit tolerance");
    sweep->add_flag("--force", sweep_opt.force, "waive the desk-scale size limits");

    // construct
    indset::ConstructOptions construct_opt;
    auto* construct = app.add_subcommand("construct", "emit graph files for the named families");
    construct->add_option("kind", construct_opt.kind,
                          "complete|complete-bipartite|tensor|double-cover|union")
        ->required();
    construct->add_option("--param,-p", construct_opt.params, "numeric parameters");
    construct->add_option("--in", construct_opt.files, "input graph files");
    construct->add_option("--out,-o", construct_opt.out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (*count) {
        count_opt.enum_cap = indset::resolve_enum_cap(enum_cap_flag);
        return finish(indset::cmd_count(count_opt), quiet);
    }
    if (*verify)
        return finish(indset::cmd_verify(verify_opt), quiet);
    if (*audit) {
        audit_opt.enum_cap = indset::resolve_enum_cap(enum_cap_flag);
        return finish(indset::cmd_audit(audit_opt), quiet);
    }
    if (*sweep)
        return finish(indset::cmd_sweep(sweep_opt), quiet);
    if (*construct) {
        auto result = indset::cmd_construct(construct_opt);
        if (construct_opt.out.empty() && result.report.pass) {
            std::cout << result.graph_text;
            if (!quiet)
                std::cerr << "construct: pass\n";
            return 0;
        }
        return finish(result.report, quiet);
    }
    return 1;
}
