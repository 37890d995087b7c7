#pragma once

// Experiment sweep over every small hypergraph: solver success under seeded
// list assignments, witness construction per matrix variant, column identity
// violations and three-way coefficient agreement. Instances run in parallel;
// results are merged in instance order so the report only depends on the
// configuration.

#include "coeff_matrix.hpp"
#include "generate.hpp"
#include "json_io.hpp"
#include "phi.hpp"
#include "reduction.hpp"
#include "solver.hpp"
#include "witness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hyperweight {

struct SweepConfig {
    std::size_t n_max = 4;
    std::size_t m_max = 3;
    SizeRange sizes{2, 4};
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    ListMode list_mode = ListMode::RandomRational;
    std::vector<MatrixVariant> variants{MatrixVariant::Jacobian, MatrixVariant::PaperLiteral};
    std::size_t coeff_n_max = 4;
    std::size_t coeff_m_max = 3;
    bool cn_guided = true;
    bool identity_check = true;
    std::size_t catalog_limit = 1000;
    unsigned threads = 0; // 0: hardware concurrency; never affects the report

    void validate() const
    {
        require_size_range(sizes);
        if (m_max > kExhaustiveSearchMaxEdges)
            throw std::invalid_argument("sweep: m_max must be at most " + std::to_string(kExhaustiveSearchMaxEdges));
        if (n_max > 8)
            throw std::invalid_argument("sweep: n_max must be at most 8");
        if (coeff_m_max > kExpandMaxEdges || coeff_n_max + coeff_m_max > kExpandMaxVariables)
            throw std::invalid_argument("sweep: coefficient stratum exceeds the expansion guard");
        if (variants.empty())
            throw std::invalid_argument("sweep: no matrix variant selected");
    }

    Json to_json() const
    {
        Json v = Json::array();
        for (MatrixVariant x : variants)
            v.push_back(to_string(x));
        return Json{{"n_max", n_max},
                    {"m_max", m_max},
                    {"min_size", sizes.min},
                    {"max_size", sizes.max},
                    {"trials", trials},
                    {"seed", seed},
                    {"list_mode", to_string(list_mode)},
                    {"variants", v},
                    {"coeff_n_max", coeff_n_max},
                    {"coeff_m_max", coeff_m_max},
                    {"cn_guided", cn_guided},
                    {"identity_check", identity_check},
                    {"catalog_limit", catalog_limit}};
    }
};

struct SweepResult {
    Json report;
    std::vector<Json> findings; // CRITICAL, each with the full instance

    bool critical() const noexcept { return !findings.empty(); }
};

namespace detail {

struct VariantOutcome {
    bool built = false;
    bool fallback = false;
    bool b_valid = false;
    bool nonzero = false;
    bool lift_held = true;
    std::map<std::string, std::size_t> claims;
    std::size_t identity_violations = 0;
    std::vector<Json> identity_catalog;
    std::optional<bool> bridge_matches_expansion; // witness monomial, inside the expansion guard
};

struct InstanceOutcome {
    std::size_t trials = 0;
    std::size_t pair_successes = 0;
    std::size_t proper_successes = 0;
    std::size_t cn_attempts = 0;
    std::size_t cn_successes = 0;
    std::map<MatrixVariant, VariantOutcome> variants;
    bool coeff_checked = false;
    std::size_t monomials = 0;
    std::size_t interpolation_agree = 0;
    std::map<MatrixVariant, std::size_t> bridge_agree;
    std::map<MatrixVariant, std::vector<Json>> bridge_mismatches;
    std::vector<Json> findings;
};

inline Json finding(const std::string& kind, const Hypergraph& h, const ListAssignment* lists, const std::string& detail)
{
    return Json{{"severity", "CRITICAL"}, {"kind", kind}, {"instance", instance_to_json(h, lists)}, {"detail", detail}};
}

inline InstanceOutcome run_instance(const SweepConfig& config, const Hypergraph& h, std::size_t index)
{
    InstanceOutcome out;
    const Hypergraph reduced = restrict_to_edges(h, distinct_pair_edges(h));

    std::optional<WitnessResult> jacobian_witness;
    for (MatrixVariant variant : config.variants) {
        VariantOutcome& vo = out.variants[variant];
        try {
            WitnessResult w = build_witness(reduced, variant);
            vo.built = true;
            vo.fallback = w.used_fallback;
            vo.b_valid = w.columns.b_valid() && w.columns.size() == reduced.num_edges();
            vo.nonzero = w.permanent != 0;
            for (const Discrepancy& d : w.discrepancies)
                ++vo.claims[to_string(d.claim)];
            for (const StepRecord& s : w.trace)
                if (!s.fallback && s.per_lifted != factorial(s.degree) * s.per_previous)
                    vo.lift_held = false;
            const MonomialIndex t =
                MonomialIndex::from_multiset(w.columns, reduced.num_edges(), reduced.num_vertices());
            const Rational bridge = coefficient_from_permanent(CoeffMatrix(reduced, variant), t);
            if (reduced.num_edges() <= kExpandMaxEdges &&
                reduced.num_edges() + reduced.num_vertices() <= kExpandMaxVariables)
                vo.bridge_matches_expansion = bridge == Rational(expand_phi(reduced).coefficient(t));
            if (variant == MatrixVariant::Jacobian) {
                if (bridge == 0 || !vo.b_valid || !vo.nonzero || !vo.lift_held)
                    out.findings.push_back(finding("jacobian-witness-unsound", reduced, nullptr,
                                                   "witness " + w.columns.describe() + " coefficient " +
                                                       to_string(bridge)));
                jacobian_witness = std::move(w);
            }
        } catch (const NoWitnessError& e) {
            if (variant == MatrixVariant::Jacobian)
                out.findings.push_back(finding("jacobian-no-witness", reduced, nullptr, e.what()));
        }

        if (config.identity_check) {
            for (const IdentityViolation& iv : check_column_identity(h, variant)) {
                ++vo.identity_violations;
                if (vo.identity_catalog.size() < config.catalog_limit) {
                    Json entry = identity_violation_to_json(iv);
                    entry["instance"] = index;
                    vo.identity_catalog.push_back(std::move(entry));
                }
            }
        }
    }

    if (h.num_vertices() <= config.coeff_n_max && h.num_edges() <= config.coeff_m_max) {
        out.coeff_checked = true;
        const PhiExpansion expansion = expand_phi(h);
        std::map<MatrixVariant, CoeffMatrix> matrices;
        for (MatrixVariant variant : {MatrixVariant::Jacobian, MatrixVariant::PaperLiteral})
            matrices.emplace(variant, CoeffMatrix(h, variant));
        for (const MonomialIndex& t : admissible_monomials(h.num_edges(), h.num_vertices())) {
            ++out.monomials;
            const Rational expected(expansion.coefficient(t));
            const Rational interpolated = coefficient_interpolation(h, t, canonical_grids(t));
            if (interpolated == expected)
                ++out.interpolation_agree;
            else
                out.findings.push_back(finding("interpolation-mismatch", h, nullptr,
                                               t.describe() + ": expansion " + to_string(expected) +
                                                   ", interpolation " + to_string(interpolated)));
            for (const auto& [variant, a] : matrices) {
                const Rational bridge = coefficient_from_permanent(a, t);
                if (bridge == expected) {
                    ++out.bridge_agree[variant];
                    continue;
                }
                out.bridge_mismatches[variant].push_back(Json{{"instance", index},
                                                              {"n", h.num_vertices()},
                                                              {"edges", hypergraph_to_json(h)["edges"]},
                                                              {"monomial", t.describe()},
                                                              {"expand_phi", to_string(expected)},
                                                              {"permanent_bridge", to_string(bridge)}});
                if (variant == MatrixVariant::Jacobian)
                    out.findings.push_back(finding("jacobian-bridge-mismatch", h, nullptr,
                                                   t.describe() + ": expansion " + to_string(expected) +
                                                       ", bridge " + to_string(bridge)));
            }
        }
    }

    const std::uint64_t instance_seed = mix_seed(config.seed, index);
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const ListAssignment lists = random_lists(h, config.list_mode, mix_seed(instance_seed, trial));
        ++out.trials;
        const bool pair_ok = solve_backtracking(h, lists, SolveMode::PairDistinct).has_value();
        if (pair_ok)
            ++out.pair_successes;
        else
            out.findings.push_back(finding("no-pair-distinct-weighting", h, &lists,
                                           "backtracking exhausted the lists without a pair-distinct weighting"));
        if (solve_backtracking(h, lists, SolveMode::ProperOnly))
            ++out.proper_successes;

        if (config.cn_guided && jacobian_witness) {
            ++out.cn_attempts;
            const ReducedInstance r = reduce_duplicate_pairs(h, lists);
            std::optional<TotalWeighting> w = solve_cn_guided(r.hypergraph, r.lists, jacobian_witness->columns);
            if (w) {
                replay_reduction(r.log, *w, lists);
                ++out.cn_successes;
                if (!pair_ok)
                    out.findings.push_back(finding("cn-backtracking-disagreement", h, &lists,
                                                   "subgrid search succeeded where backtracking failed"));
            } else {
                out.findings.push_back(finding("cn-subgrid-empty", h, &lists,
                                               "nonzero coefficient but no non-zero of phi on the subgrid"));
            }
        }
    }
    return out;
}

inline double rate(std::size_t num, std::size_t den) { return den == 0 ? 1.0 : static_cast<double>(num) / den; }

} // namespace detail

inline SweepResult run_sweep(const SweepConfig& config)
{
    config.validate();
    const std::vector<Hypergraph> instances = enumerate_hypergraphs(config.n_max, config.m_max, config.sizes);

    std::vector<detail::InstanceOutcome> outcomes(instances.size());
    std::vector<std::string> errors(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                outcomes[i] = detail::run_instance(config, instances[i], i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(instances.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("sweep instance " + std::to_string(i) + ": " + errors[i]);

    SweepResult result;
    std::size_t trials = 0, pair_ok = 0, proper_ok = 0, cn_attempts = 0, cn_ok = 0;
    std::size_t coeff_instances = 0, monomials = 0, interp_agree = 0;
    std::map<MatrixVariant, std::size_t> bridge_agree;
    std::map<MatrixVariant, std::size_t> bridge_mismatch_total;
    std::map<MatrixVariant, Json> bridge_catalog;

    struct VariantTotals {
        std::size_t built = 0, none = 0, fallback = 0, b_valid = 0, nonzero = 0, lift_held = 0;
        std::size_t with_discrepancies = 0;
        std::size_t bridge_checked = 0, bridge_match = 0;
        std::size_t identity_total = 0, identity_instances = 0;
        std::map<std::string, std::size_t> claims;
        Json catalog = Json::array();
    };
    std::map<MatrixVariant, VariantTotals> totals;

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        detail::InstanceOutcome& o = outcomes[i];
        trials += o.trials;
        pair_ok += o.pair_successes;
        proper_ok += o.proper_successes;
        cn_attempts += o.cn_attempts;
        cn_ok += o.cn_successes;
        for (auto& [variant, vo] : o.variants) {
            VariantTotals& vt = totals[variant];
            vo.built ? ++vt.built : ++vt.none;
            vt.fallback += vo.fallback;
            vt.with_discrepancies += !vo.claims.empty();
            vt.b_valid += vo.built && vo.b_valid;
            vt.nonzero += vo.built && vo.nonzero;
            vt.lift_held += vo.built && vo.lift_held;
            if (vo.bridge_matches_expansion) {
                ++vt.bridge_checked;
                vt.bridge_match += *vo.bridge_matches_expansion;
            }
            for (const auto& [claim, k] : vo.claims)
                vt.claims[claim] += k;
            vt.identity_total += vo.identity_violations;
            vt.identity_instances += vo.identity_violations > 0;
            for (Json& entry : vo.identity_catalog)
                if (vt.catalog.size() < config.catalog_limit)
                    vt.catalog.push_back(std::move(entry));
        }
        if (o.coeff_checked) {
            ++coeff_instances;
            monomials += o.monomials;
            interp_agree += o.interpolation_agree;
            for (MatrixVariant variant : {MatrixVariant::Jacobian, MatrixVariant::PaperLiteral}) {
                bridge_agree[variant] += o.bridge_agree[variant];
                Json& catalog = bridge_catalog[variant];
                if (catalog.is_null())
                    catalog = Json::array();
                for (Json& entry : o.bridge_mismatches[variant]) {
                    ++bridge_mismatch_total[variant];
                    if (catalog.size() < config.catalog_limit)
                        catalog.push_back(std::move(entry));
                }
            }
        }
        for (Json& f : o.findings) {
            f["instance_index"] = i;
            result.findings.push_back(std::move(f));
        }
    }

    Json witness = Json::object();
    Json identity = Json::object();
    for (auto& [variant, vt] : totals) {
        witness[to_string(variant)] = Json{{"built", vt.built},
                                           {"no_witness", vt.none},
                                           {"fallback", vt.fallback},
                                           {"fallback_rate", detail::rate(vt.fallback, vt.built + vt.none)},
                                           {"b_valid", vt.b_valid},
                                           {"nonzero_permanent", vt.nonzero},
                                           {"lift_assertions_held", vt.lift_held},
                                           {"discrepancies", vt.claims},
                                           {"instances_with_discrepancies", vt.with_discrepancies},
                                           {"discrepancy_rate", detail::rate(vt.with_discrepancies, vt.built + vt.none)},
                                           {"witness_bridge_checked", vt.bridge_checked},
                                           {"witness_bridge_matches_expansion", vt.bridge_match}};
        if (config.identity_check)
            identity[to_string(variant)] = Json{{"violations", vt.identity_total},
                                                {"instances_with_violations", vt.identity_instances},
                                                {"catalog", vt.catalog}};
    }

    Json coefficients = Json{{"instances", coeff_instances},
                             {"monomials", monomials},
                             {"interpolation_agree", interp_agree},
                             {"interpolation_agreement_rate", detail::rate(interp_agree, monomials)}};
    for (MatrixVariant variant : {MatrixVariant::Jacobian, MatrixVariant::PaperLiteral})
        coefficients[to_string(variant)] = Json{{"agree", bridge_agree[variant]},
                                                {"agreement_rate", detail::rate(bridge_agree[variant], monomials)},
                                                {"mismatches", bridge_mismatch_total[variant]},
                                                {"mismatch_catalog", bridge_catalog[variant].is_null()
                                                                         ? Json::array()
                                                                         : bridge_catalog[variant]}};

    result.report = Json{{"config", config.to_json()},
                         {"instances", instances.size()},
                         {"solver",
                          {{"trials", trials},
                           {"pair_distinct_successes", pair_ok},
                           {"pair_distinct_success_rate", detail::rate(pair_ok, trials)},
                           {"proper_only_successes", proper_ok},
                           {"proper_only_success_rate", detail::rate(proper_ok, trials)}}},
                         {"cn_guided",
                          {{"attempts", cn_attempts},
                           {"successes", cn_ok},
                           {"success_rate", detail::rate(cn_ok, cn_attempts)}}},
                         {"witness", witness},
                         {"coefficients", coefficients},
                         {"critical_findings", result.findings.size()}};
    if (config.identity_check)
        result.report["identity"] = identity;
    return result;
}

} // namespace hyperweight
