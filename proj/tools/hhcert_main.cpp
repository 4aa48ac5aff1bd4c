// Command-line front end: certified bounds, quadrature certificates, special
// means, and the inequality audit engine, all reporting through one JSON
// envelope on stdout.
//
// Exit codes: 0 holds / success, 2 hypothesis unmet under --certify,
// 3 inequality violated (audit semantics), 64 bad usage, 1 evaluation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhcert/hhcert.hpp"
#include "hhcert/report.hpp"

namespace {

using hhcert::json;

constexpr int exit_ok = 0;
constexpr int exit_eval_failure = 1;
constexpr int exit_hypothesis_unmet = 2;
constexpr int exit_violated = 3;
constexpr int exit_usage = 64;

struct FnSpec {
    std::string name;
    std::vector<double> params;
};

FnSpec parse_fn_spec(const std::string& spec) {
    FnSpec out;
    const auto colon = spec.find(':');
    out.name = spec.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.params.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("--fn: bad parameter '" + item + "'");
            }
        }
    }
    return out;
}

json fn_echo(const FnSpec& fs) {
    return json{{"name", fs.name}, {"params", fs.params}};
}

int emit(const hhcert::ReportEnvelope& env, const std::string& json_path, int code) {
    const std::string text = env.dump();
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text;
    }
    return code;
}

struct BoundArgs {
    std::string theorem;
    std::string fn;
    double a = 0, b = 1;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    int n = 1;
    double s = 1, q = 1;
    std::string variant = "corrected";
    bool certify = false;
};

int run_bound(const BoundArgs& args) {
    const FnSpec fs = parse_fn_spec(args.fn);
    auto f = hhcert::catalog_get(fs.name, fs.params);
    hhcert::Interval I(args.a, args.b);
    const double lambda = std::isnan(args.lambda) ? I.midpoint() : args.lambda;

    hhcert::BoundResult r;
    if (args.theorem == "cor1") {
        r = hhcert::bound_cor1_midpoint(f, I, args.s, args.q);
    } else if (args.theorem == "cor2") {
        r = hhcert::bound_cor2_trapezoid(f, I, args.q);
    } else {
        hhcert::BoundInput in(f, I, lambda, args.n, args.s, args.q);
        if (args.theorem == "t2") r = hhcert::bound_t2(in);
        else if (args.theorem == "t3") r = hhcert::bound_t3(in);
        else if (args.theorem == "t4") r = hhcert::bound_t4(in);
        else if (args.theorem == "t5") r = hhcert::bound_t5(in);
        else if (args.theorem == "t6") r = hhcert::bound_t6(in);
        else if (args.theorem == "t7") r = hhcert::bound_t7(in);
        else if (args.theorem == "t8") r = hhcert::bound_t8(in);
        else if (args.theorem == "t9") r = hhcert::bound_t9(in);
        else if (args.theorem == "t10") r = hhcert::bound_t10(in);
        else throw std::invalid_argument("--theorem: unknown id '" + args.theorem + "'");
    }

    double gate_bound = r.bound;
    if (args.variant == "printed" && r.variants.count("printed"))
        gate_bound = r.variants.at("printed");

    hhcert::ReportEnvelope env;
    env.command = "bound";
    env.inputs_echo = json{{"theorem", args.theorem}, {"fn", fn_echo(fs)},
                           {"a", args.a},             {"b", args.b},
                           {"lambda", lambda},        {"n", args.n},
                           {"s", args.s},             {"q", args.q},
                           {"variant", args.variant}, {"certify", args.certify}};

    std::string verdict;
    int code = exit_ok;
    if (!r.hypothesis_ok && args.certify) {
        verdict = "hypothesis_unmet";
        code = exit_hypothesis_unmet;
    } else {
        const double slack = 1e-9 * (1.0 + std::abs(gate_bound));
        const bool holds = r.lhs <= gate_bound + slack;
        verdict = holds ? "holds" : "violated";
        code = holds ? exit_ok : exit_violated;
        if (!r.hypothesis_ok)
            env.warnings.push_back("hypothesis check failed; evaluated in audit mode");
    }

    json results = hhcert::to_json(r);
    results["verdict"] = verdict;
    results["gate_variant"] = args.variant;
    results["gate_bound"] = gate_bound;
    env.results = std::move(results);
    return emit(env, "", code);
}

struct QuadArgs {
    std::string rule = "midpoint";
    std::string fn;
    double a = 0, b = 1;
    int pieces = 1;
    double s = 1, q = 1;
    std::string study;
    std::string csv_path;
};

int run_quad(const QuadArgs& args) {
    const FnSpec fs = parse_fn_spec(args.fn);
    auto f = hhcert::catalog_get(fs.name, fs.params);
    hhcert::Interval I(args.a, args.b);
    const hhcert::QuadRule rule =
        args.rule == "midpoint" ? hhcert::QuadRule::midpoint : hhcert::QuadRule::trapezoid;

    hhcert::ReportEnvelope env;
    env.command = "quad";
    env.inputs_echo = json{{"rule", args.rule}, {"fn", fn_echo(fs)}, {"a", args.a},
                           {"b", args.b},       {"pieces", args.pieces}, {"s", args.s},
                           {"q", args.q},       {"study", args.study},   {"csv", args.csv_path}};

    json results;
    if (!args.study.empty()) {
        std::vector<int> sizes;
        std::stringstream ss(args.study);
        std::string item;
        while (std::getline(ss, item, ','))
            sizes.push_back(std::stoi(item));
        const auto rows = hhcert::convergence_study(f, I, rule, args.s, args.q, sizes);
        json table = json::array();
        std::string csv = "pieces,value,bound,oracle_error\n";
        for (const auto& row : rows) {
            table.push_back(json{{"pieces", row.pieces},
                                 {"value", row.value},
                                 {"bound", row.bound},
                                 {"oracle_error", row.oracle_error}});
            char line[160];
            std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", row.pieces, row.value,
                          row.bound, row.oracle_error);
            csv += line;
        }
        results["study"] = table;
        results["slope"] = hhcert::convergence_slope(rows);
        if (!args.csv_path.empty()) {
            std::ofstream out(args.csv_path);
            if (!out) throw std::runtime_error("cannot write " + args.csv_path);
            out << csv;
        }
    } else {
        const hhcert::Partition K = hhcert::uniform_partition(I, args.pieces);
        const hhcert::QuadratureResult qr = rule == hhcert::QuadRule::midpoint
                                                ? hhcert::midpoint_error_bound(f, K, args.s, args.q)
                                                : hhcert::trapezoid_error_bound(f, K, args.s, args.q);
        results = hhcert::to_json(qr);
        if (!qr.hypothesis_ok)
            env.warnings.push_back("derivative hypothesis not verified on this interval");
    }
    env.results = std::move(results);
    return emit(env, "", exit_ok);
}

struct MeansArgs {
    double a = 0, b = 0;
    double p = 2.0;
    bool chain = false;
};

int run_means(const MeansArgs& args) {
    hhcert::PositivePair pair(args.a, args.b);
    hhcert::ReportEnvelope env;
    env.command = "means";
    env.inputs_echo = json{{"a", args.a}, {"b", args.b}, {"p", args.p}, {"chain", args.chain}};
    json results{{"arithmetic", hhcert::mean_arithmetic(pair)},
                 {"geometric", hhcert::mean_geometric(pair)},
                 {"harmonic", hhcert::mean_harmonic(pair)},
                 {"logarithmic", hhcert::mean_logarithmic(pair)},
                 {"identric", hhcert::mean_identric(pair)},
                 {"p_logarithmic", hhcert::mean_p_logarithmic(pair, args.p)}};
    if (args.chain) {
        const hhcert::MeansChain c = hhcert::means_chain_check(pair);
        results["chain"] = json{{"ordered", c.ordered},
                                {"H", c.harmonic},
                                {"G", c.geometric},
                                {"L", c.logarithmic},
                                {"I", c.identric},
                                {"A", c.arithmetic}};
    }
    env.results = std::move(results);
    return emit(env, "", exit_ok);
}

struct AuditArgs {
    std::string claim = "all";
    std::uint64_t seed = 0;
    std::string grid = "full";
    std::string json_path;
};

int run_audit(const AuditArgs& args) {
    std::vector<std::string> claims;
    if (args.claim == "all") {
        claims = hhcert::audit_claim_ids();
    } else {
        const auto& ids = hhcert::audit_claim_ids();
        if (std::find(ids.begin(), ids.end(), args.claim) == ids.end())
            throw std::invalid_argument("--claim: unknown id '" + args.claim + "'");
        claims.push_back(args.claim);
    }

    const hhcert::GridSpec grid{args.grid, args.seed};
    std::vector<hhcert::AuditRecord> records;
    for (const auto& id : claims) {
        auto batch = hhcert::audit_claim(id, grid);
        records.insert(records.end(), batch.begin(), batch.end());
    }
    const hhcert::AuditSummary summary = hhcert::audit_summary(records);

    hhcert::ReportEnvelope env;
    env.command = "audit";
    env.inputs_echo =
        json{{"claim", args.claim}, {"seed", args.seed}, {"grid", args.grid}};
    json recs = json::array();
    for (const auto& r : records) recs.push_back(hhcert::to_json(r));
    env.results = json{{"records", recs}, {"summary", hhcert::to_json(summary)}};

    for (const auto& cs : summary.claims) {
        const int printed = cs.violations - cs.gating_violations;
        if (printed > 0)
            env.warnings.push_back(cs.claim_id + ": " + std::to_string(printed) +
                                   " printed-variant violation(s)");
    }
    const int code = summary.total_gating_violations > 0 ? exit_violated : exit_ok;
    return emit(env, args.json_path, code);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hhcert: certified Hermite-Hadamard-type bounds, composite quadrature "
                 "certificates, special means, and an inequality audit engine"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "evaluate one theorem/corollary bound");
    bound->add_option("--theorem", bound_args.theorem, "t2..t10, cor1, cor2")->required();
    bound->add_option("--fn", bound_args.fn, "catalog function NAME[:p1,p2,...]")->required();
    bound->add_option("--a", bound_args.a, "left endpoint")->required();
    bound->add_option("--b", bound_args.b, "right endpoint")->required();
    bound->add_option("--lambda", bound_args.lambda, "interior point (default midpoint)");
    bound->add_option("--n", bound_args.n, "derivative order (default 1)");
    bound->add_option("--s", bound_args.s, "convexity index in (0,1] (default 1)");
    bound->add_option("--q", bound_args.q, "Hoelder exponent >= 1 (default 1)");
    bound->add_option("--variant", bound_args.variant, "printed|corrected (default corrected)")
        ->check(CLI::IsMember({"printed", "corrected"}));
    bound->add_flag("--certify", bound_args.certify,
                    "fail with exit 2 when the hypothesis check does not pass");

    QuadArgs quad_args;
    auto* quad = app.add_subcommand("quad", "composite rule with a-priori error certificate");
    quad->add_option("--rule", quad_args.rule, "midpoint|trapezoid")
        ->check(CLI::IsMember({"midpoint", "trapezoid"}));
    quad->add_option("--fn", quad_args.fn, "catalog function NAME[:p1,p2,...]")->required();
    quad->add_option("--a", quad_args.a, "left endpoint")->required();
    quad->add_option("--b", quad_args.b, "right endpoint")->required();
    quad->add_option("--pieces", quad_args.pieces, "uniform cells (default 1)");
    quad->add_option("--s", quad_args.s, "convexity index (default 1)");
    quad->add_option("--q", quad_args.q, "Hoelder exponent (default 1)");
    quad->add_option("--study", quad_args.study, "comma list of piece counts for a convergence table");
    quad->add_option("--csv", quad_args.csv_path, "write the convergence table as CSV");

    MeansArgs means_args;
    auto* means = app.add_subcommand("means", "the six two-argument means");
    means->add_option("--a", means_args.a, "first positive number")->required();
    means->add_option("--b", means_args.b, "second positive number")->required();
    means->add_option("--p", means_args.p, "order of the p-logarithmic mean (default 2)");
    means->add_flag("--chain", means_args.chain, "also verify H <= G <= L <= I <= A");

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "run inequality audits over case grids");
    audit->add_option("--claim", audit_args.claim, "claim id or 'all' (default all)");
    audit->add_option("--seed", audit_args.seed, "grid seed (default 0)");
    audit->add_option("--grid", audit_args.grid, "small|full (default full)")
        ->check(CLI::IsMember({"small", "full"}));
    audit->add_option("--json", audit_args.json_path, "also write the envelope to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            std::cout << app.help();
            return exit_ok;
        }
        std::cerr << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (bound->parsed()) return run_bound(bound_args);
        if (quad->parsed()) return run_quad(quad_args);
        if (means->parsed()) return run_means(means_args);
        return run_audit(audit_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "evaluation failure: " << e.what() << "\n";
        return exit_eval_failure;
    }
}
