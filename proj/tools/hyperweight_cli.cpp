// hyperweight: command-line front end over the JSON instance format.
//
// Exit codes: 0 success, 1 input error, 2 no weighting found / verification
// failed / CRITICAL sweep finding, 3 witness produced only by fallback search,
// 4 no witness exists for the chosen matrix variant.

#include <hyperweight/coeff_matrix.hpp>
#include <hyperweight/generate.hpp>
#include <hyperweight/json_io.hpp>
#include <hyperweight/phi.hpp>
#include <hyperweight/reduction.hpp>
#include <hyperweight/solver.hpp>
#include <hyperweight/sweep.hpp>
#include <hyperweight/witness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

using namespace hyperweight;

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kNotFound = 2, kFallback = 3, kNoWitness = 4 };

struct Options {
    std::string instance;
    std::string weighting;
    std::string mode = "pair-distinct";
    std::string method = "backtrack";
    std::string variant = "jacobian";
    std::string format = "json";
    std::string monomial;
    std::string findings = "hyperweight_findings.json";
    std::string out;
    std::uint64_t seed = 1;

    // gen
    std::size_t n = 5;
    std::size_t m = 4;
    std::size_t min_size = 2;
    std::size_t max_size = 3;
    std::string lists = "random-rational";
    bool no_lists = false;

    // sweep
    std::size_t n_max = 4;
    std::size_t m_max = 3;
    std::size_t trials = 10;
    std::string variants = "both";
    std::size_t coeff_n_max = 4;
    std::size_t coeff_m_max = 3;
    std::size_t catalog_limit = 1000;
    unsigned threads = 0;
    bool no_cn = false;
    bool no_identity = false;
};

void emit(const Json& j, const std::string& path = {})
{
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

void persist_findings(const std::vector<Json>& findings, const std::string& path)
{
    if (findings.empty() || path.empty())
        return;
    Json all = Json::array();
    for (const Json& f : findings)
        all.push_back(f);
    emit(all, path);
    std::cerr << "CRITICAL: " << findings.size() << " finding(s) written to " << path << '\n';
}

Instance load_instance(const std::string& path)
{
    Instance inst = instance_from_json(read_json_file(path));
    require_valid(inst.hypergraph);
    return inst;
}

int cmd_solve(const Options& opt)
{
    Instance inst = load_instance(opt.instance);
    if (!inst.lists)
        throw std::invalid_argument("solve needs \"vertex_lists\" and \"edge_lists\"");
    const SolveMode mode = parse_solve_mode(opt.mode);
    const Hypergraph& h = inst.hypergraph;

    std::optional<TotalWeighting> w;
    Json extra = Json::object();
    if (opt.method == "backtrack") {
        w = solve_backtracking(h, *inst.lists, mode);
    } else if (opt.method == "cn") {
        if (mode != SolveMode::PairDistinct)
            throw std::invalid_argument("--method=cn only supports --mode=pair-distinct");
        CnSolution sol = solve_cn(h, *inst.lists);
        extra["witness"] = multiset_to_json(sol.witness.columns);
        extra["witness_permanent"] = to_string(sol.witness.permanent);
        w = std::move(sol.weighting);
    } else {
        throw std::invalid_argument("unknown method '" + opt.method + "'");
    }

    if (!w) {
        if (mode == SolveMode::PairDistinct) {
            Json f{{"severity", "CRITICAL"},
                   {"kind", "no-pair-distinct-weighting"},
                   {"instance", instance_to_json(h, &*inst.lists)},
                   {"detail", "method " + opt.method}};
            persist_findings({f}, opt.findings);
        }
        std::cerr << "no weighting found\n";
        return kNotFound;
    }

    const VerifyReport report = verify(h, *w, &*inst.lists);
    if (!report.passes(mode))
        throw std::logic_error("internal error: solver output failed verification");
    Json out = weighting_to_json(*w);
    out["total_weights"] = rational_list_to_json(report.totals);
    out["mode"] = to_string(mode);
    out["method"] = opt.method;
    out.update(extra);
    emit(out, opt.out);
    return kOk;
}

int cmd_verify(const Options& opt)
{
    Instance inst = load_instance(opt.instance);
    const TotalWeighting w = weighting_from_json(read_json_file(opt.weighting));
    require_complete(inst.hypergraph, w);
    const VerifyReport report = verify(inst.hypergraph, w, inst.lists ? &*inst.lists : nullptr);
    emit(verify_report_to_json(report), opt.out);
    return report.passes(parse_solve_mode(opt.mode)) ? kOk : kNotFound;
}

int cmd_witness(const Options& opt)
{
    Instance inst = load_instance(opt.instance);
    const MatrixVariant variant = parse_variant(opt.variant);
    const std::vector<EdgeId> kept = distinct_pair_edges(inst.hypergraph);
    const Hypergraph reduced = restrict_to_edges(inst.hypergraph, kept);

    WitnessResult w;
    try {
        w = build_witness(reduced, variant);
    } catch (const NoWitnessError& e) {
        emit(Json{{"variant", to_string(variant)}, {"error", e.what()}}, opt.out);
        return kNoWitness;
    }

    Json out = witness_to_json(w);
    out["reduced_edges"] = kept;
    const MonomialIndex t = MonomialIndex::from_multiset(w.columns, reduced.num_edges(), reduced.num_vertices());
    Json check{{"monomial", t.describe()},
               {"permanent_bridge", to_string(coefficient_from_permanent(CoeffMatrix(reduced, variant), t))}};
    if (reduced.num_edges() <= kExpandMaxEdges && reduced.num_edges() + reduced.num_vertices() <= kExpandMaxVariables) {
        const Rational expected(expand_phi(reduced).coefficient(t));
        check["expand_phi"] = to_string(expected);
        check["agree"] = to_string(expected) == check["permanent_bridge"].get<std::string>();
    } else {
        check["expand_phi"] = nullptr;
        check["agree"] = nullptr;
    }
    out["coefficient_check"] = check;
    emit(out, opt.out);
    return w.used_fallback ? kFallback : kOk;
}

Json coefficient_row(const Hypergraph& h, const MonomialIndex& t, const std::optional<PhiExpansion>& expansion)
{
    Json row{{"monomial", t.describe()},
             {"jacobian_bridge", to_string(coefficient_from_permanent(CoeffMatrix(h, MatrixVariant::Jacobian), t))},
             {"paper_bridge", to_string(coefficient_from_permanent(CoeffMatrix(h, MatrixVariant::PaperLiteral), t))}};
    row["expand_phi"] = expansion ? Json(to_string(expansion->coefficient(t))) : Json(nullptr);
    row["interpolation"] =
        t.cn_admissible() ? Json(to_string(coefficient_interpolation(h, t, canonical_grids(t)))) : Json(nullptr);
    return row;
}

int cmd_coeff(const Options& opt)
{
    Instance inst = load_instance(opt.instance);
    const Hypergraph& h = inst.hypergraph;
    std::optional<PhiExpansion> expansion;
    if (h.num_edges() <= kExpandMaxEdges && h.num_edges() + h.num_vertices() <= kExpandMaxVariables)
        expansion = expand_phi(h);

    Json rows = Json::array();
    if (!opt.monomial.empty()) {
        rows.push_back(coefficient_row(h, monomial_from_names(split_names(opt.monomial), h.num_edges(), h.num_vertices()),
                                       expansion));
    } else {
        for (const MonomialIndex& t : admissible_monomials(h.num_edges(), h.num_vertices()))
            rows.push_back(coefficient_row(h, t, expansion));
    }
    emit(Json{{"coefficients", rows}}, opt.out);
    return kOk;
}

int cmd_identity(const Options& opt)
{
    Instance inst = load_instance(opt.instance);
    const MatrixVariant variant = parse_variant(opt.variant);
    Json rows = Json::array();
    for (const IdentityViolation& v : check_column_identity(inst.hypergraph, variant))
        rows.push_back(identity_violation_to_json(v));
    emit(Json{{"variant", to_string(variant)}, {"violations", rows}}, opt.out);
    return kOk;
}

int cmd_sweep(const Options& opt)
{
    SweepConfig config;
    config.n_max = opt.n_max;
    config.m_max = opt.m_max;
    config.sizes = {opt.min_size, opt.max_size};
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.list_mode = parse_list_mode(opt.lists);
    if (opt.variants == "both")
        config.variants = {MatrixVariant::Jacobian, MatrixVariant::PaperLiteral};
    else
        config.variants = {parse_variant(opt.variants)};
    config.coeff_n_max = opt.coeff_n_max;
    config.coeff_m_max = opt.coeff_m_max;
    config.catalog_limit = opt.catalog_limit;
    config.threads = opt.threads;
    config.cn_guided = !opt.no_cn;
    config.identity_check = !opt.no_identity;

    SweepResult result = run_sweep(config);
    emit(result.report, opt.out);
    persist_findings(result.findings, opt.findings);
    return result.critical() ? kNotFound : kOk;
}

int cmd_gen(const Options& opt)
{
    const Hypergraph h = random_hypergraph(opt.n, opt.m, {opt.min_size, opt.max_size}, opt.seed);
    if (opt.no_lists) {
        emit(instance_to_json(h, nullptr), opt.out);
        return kOk;
    }
    const ListAssignment lists = random_lists(h, parse_list_mode(opt.lists), mix_seed(opt.seed, 1));
    emit(instance_to_json(h, &lists), opt.out);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Total weightings of hypergraphs from vertex and edge lists"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "Random seed");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}));
        sub->add_option("--out", opt.out, "Write output to a file instead of stdout");
    };
    auto variant_flag = [&](CLI::App* sub) {
        sub->add_option("--variant", opt.variant, "Matrix variant")
            ->check(CLI::IsMember({"paper", "paper-literal", "jacobian"}));
    };

    auto* solve = app.add_subcommand("solve", "Find a weighting from the instance's lists");
    solve->add_option("instance", opt.instance)->required();
    solve->add_option("--mode", opt.mode)->check(CLI::IsMember({"pair-distinct", "pair", "proper-only", "proper"}));
    solve->add_option("--method", opt.method)->check(CLI::IsMember({"backtrack", "cn"}));
    solve->add_option("--findings", opt.findings, "Where to persist CRITICAL findings");
    variant_flag(solve);
    common(solve);

    auto* verify_cmd = app.add_subcommand("verify", "Check a weighting against an instance");
    verify_cmd->add_option("instance", opt.instance)->required();
    verify_cmd->add_option("weighting", opt.weighting)->required();
    verify_cmd->add_option("--mode", opt.mode)->check(CLI::IsMember({"pair-distinct", "pair", "proper-only", "proper"}));
    common(verify_cmd);

    auto* witness = app.add_subcommand("witness", "Build a nonzero-permanent column multiset with its trace");
    witness->add_option("instance", opt.instance)->required();
    variant_flag(witness);
    common(witness);

    auto* coeff = app.add_subcommand("coeff", "Compare coefficient extraction routes");
    coeff->add_option("instance", opt.instance)->required();
    coeff->add_option("--monomial", opt.monomial, "Comma-separated variables, e.g. v1,v2 or e0,e0");
    variant_flag(coeff);
    common(coeff);

    auto* identity = app.add_subcommand("identity-check", "Catalog rows where column e != column u - column v_e");
    identity->add_option("instance", opt.instance)->required();
    variant_flag(identity);
    common(identity);

    auto* sweep = app.add_subcommand("sweep", "Run the experiment sweep over all small hypergraphs");
    sweep->add_option("--n-max", opt.n_max);
    sweep->add_option("--m-max", opt.m_max);
    sweep->add_option("--min-size", opt.min_size);
    sweep->add_option("--max-size", opt.max_size);
    sweep->add_option("--trials", opt.trials);
    sweep->add_option("--lists", opt.lists)
        ->check(CLI::IsMember({"random-rational", "random", "constant-12-123", "constant", "adversarial-equal-lists",
                               "adversarial"}));
    sweep->add_option("--variants", opt.variants)->check(CLI::IsMember({"both", "paper", "jacobian"}));
    sweep->add_option("--coeff-n-max", opt.coeff_n_max);
    sweep->add_option("--coeff-m-max", opt.coeff_m_max);
    sweep->add_option("--catalog-limit", opt.catalog_limit);
    sweep->add_option("--threads", opt.threads);
    sweep->add_option("--findings", opt.findings, "Where to persist CRITICAL findings");
    sweep->add_flag("--no-cn", opt.no_cn, "Skip the coefficient-guided solver");
    sweep->add_flag("--no-identity", opt.no_identity, "Skip the column identity catalog");
    common(sweep);

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--n", opt.n);
    gen->add_option("--m", opt.m);
    gen->add_option("--min-size", opt.min_size);
    gen->add_option("--max-size", opt.max_size);
    gen->add_option("--lists", opt.lists)
        ->check(CLI::IsMember({"random-rational", "random", "constant-12-123", "constant", "adversarial-equal-lists",
                               "adversarial"}));
    gen->add_flag("--no-lists", opt.no_lists);
    common(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*solve)
            return cmd_solve(opt);
        if (*verify_cmd)
            return cmd_verify(opt);
        if (*witness)
            return cmd_witness(opt);
        if (*coeff)
            return cmd_coeff(opt);
        if (*identity)
            return cmd_identity(opt);
        if (*sweep)
            return cmd_sweep(opt);
        if (*gen)
            return cmd_gen(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
