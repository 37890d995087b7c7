#pragma once

// Inductive construction of a column multiset B (vertex columns at most once,
// edge columns at most twice, |B| = m) with per(B) != 0.
//
// Level i is the hypergraph induced on vertices i..n-1, relabelled so that
// vertex i becomes 0. Starting from the empty level n, each level lifts the
// multiset of level i+1, adds deg(i) copies of column i, switches v_e columns
// to e columns for the edges at i, and finally trades every copy of column i
// for either v_e or e. Each step's permanent claim is checked; a failed check
// is recorded and the level is re-solved by exhaustive search.

#include "arith.hpp"
#include "coeff_matrix.hpp"
#include "hypergraph.hpp"
#include "permanent.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweight {

inline constexpr std::size_t kExhaustiveSearchMaxEdges = 10;
inline constexpr std::size_t kWitnessMaxEdges = 14;

class NoWitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProofClaim {
    Lift,       // per(C) = k! per(B')
    Switch,     // replacing v_e by e keeps the permanent
    Assign,     // one of the two replacements of a u column is nonzero
    Validity,   // the level's multiset is B-valid
    Subproblem, // the level has no witness at all
};

inline std::string to_string(ProofClaim claim)
{
    switch (claim) {
    case ProofClaim::Lift:
        return "lift";
    case ProofClaim::Switch:
        return "switch";
    case ProofClaim::Assign:
        return "assign";
    case ProofClaim::Validity:
        return "validity";
    case ProofClaim::Subproblem:
        return "subproblem";
    }
    return "?";
}

// All ids in trace records are global (vertex and edge ids of the input).
struct SwitchRecord {
    EdgeId edge = 0;
    VertexId replaced_vertex = 0;
    BigInt per_before;
    BigInt per_after;
};

struct AssignRecord {
    EdgeId edge = 0;
    BigInt per_before;
    BigInt per_vertex_option;
    BigInt per_edge_option;
    std::optional<ColumnRef> chosen;
};

struct StepRecord {
    VertexId u = 0;
    std::size_t degree = 0;
    std::size_t level_edges = 0;
    BigInt per_previous;
    BigInt per_lifted;
    std::vector<SwitchRecord> switches;
    std::vector<AssignRecord> assignments;
    bool fallback = false;
    ColumnMultiset result;
    BigInt per_result;
};

struct Discrepancy {
    ProofClaim claim = ProofClaim::Lift;
    VertexId u = 0;
    std::optional<EdgeId> edge;
    std::string detail;
};

struct WitnessResult {
    MatrixVariant variant = MatrixVariant::Jacobian;
    ColumnMultiset columns;
    BigInt permanent = 1;
    std::vector<StepRecord> trace;
    std::vector<Discrepancy> discrepancies;
    bool used_fallback = false;
};

/// The chain of induced hypergraphs H_0 = H, H_1, ..., H_n obtained by
/// repeatedly deleting the first vertex.
struct PeelChain {
    std::vector<Hypergraph> levels;
    std::vector<std::vector<EdgeId>> global_edges; // level edge -> input edge
    std::vector<std::vector<EdgeId>> kept_edges;   // level i+1 edge -> level i edge
    std::vector<std::size_t> degrees;

    explicit PeelChain(const Hypergraph& h)
    {
        levels.push_back(h);
        std::vector<EdgeId> identity(h.num_edges());
        for (EdgeId e = 0; e < identity.size(); ++e)
            identity[e] = e;
        global_edges.push_back(std::move(identity));
        while (levels.back().num_vertices() > 0) {
            PeeledVertex peeled = delete_first_vertex(levels.back());
            std::vector<EdgeId> global;
            for (EdgeId e : peeled.kept_edges)
                global.push_back(global_edges.back()[e]);
            degrees.push_back(peeled.degree);
            kept_edges.push_back(std::move(peeled.kept_edges));
            levels.push_back(std::move(peeled.rest));
            global_edges.push_back(std::move(global));
        }
    }

    ColumnRef to_global(std::size_t level, ColumnRef local) const
    {
        return local.is_edge() ? ColumnRef::edge(global_edges[level][local.index])
                               : ColumnRef::vertex(local.index + level);
    }

    ColumnMultiset to_global(std::size_t level, const ColumnMultiset& local) const
    {
        ColumnMultiset out;
        for (const auto& [ref, k] : local.counts())
            out.add(to_global(level, ref), k);
        return out;
    }
};

namespace detail {

// Kuhn's augmenting paths: can every chosen column be matched to a distinct
// row in its support? Necessary for a nonzero permanent.
inline bool columns_matchable(const CoeffMatrix& a, const std::vector<std::size_t>& chosen)
{
    const std::size_t rows = a.num_edges();
    std::vector<long> row_owner(rows, -1);
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        std::vector<bool> seen(rows, false);
        std::function<bool(std::size_t)> augment = [&](std::size_t col) {
            for (std::size_t r = 0; r < rows; ++r) {
                if (seen[r] || a.matrix()(r, chosen[col]) == 0)
                    continue;
                seen[r] = true;
                if (row_owner[r] < 0 || augment(static_cast<std::size_t>(row_owner[r]))) {
                    row_owner[r] = static_cast<long>(col);
                    return true;
                }
            }
            return false;
        };
        if (!augment(c))
            return false;
    }
    return true;
}

} // namespace detail

/// Lexicographically first B-valid multiset (as a sorted column sequence,
/// edges before vertices) of size m with nonzero permanent.
inline std::optional<ColumnMultiset> exhaustive_witness_search(const Hypergraph& h, MatrixVariant variant)
{
    require_valid(h);
    const std::size_t m = h.num_edges();
    if (m > kExhaustiveSearchMaxEdges)
        throw std::length_error("exhaustive_witness_search: m = " + std::to_string(m) + " exceeds " +
                                std::to_string(kExhaustiveSearchMaxEdges));
    const CoeffMatrix a(h, variant);
    const std::size_t columns = m + h.num_vertices();
    std::vector<std::size_t> chosen;
    std::optional<ColumnMultiset> found;

    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (chosen.size() == m) {
            ColumnMultiset b;
            for (std::size_t c : chosen)
                b.add(a.column_ref(c));
            if (multiset_permanent(a, b) != 0) {
                found = std::move(b);
                return true;
            }
            return false;
        }
        for (std::size_t c = start; c < columns; ++c) {
            const std::size_t cap = c < m ? 2 : 1;
            std::size_t already = 0;
            for (std::size_t x : chosen)
                already += (x == c);
            if (already >= cap)
                continue;
            chosen.push_back(c);
            if (detail::columns_matchable(a, chosen) && rec(c))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

/// Runs the induction over the vertex order. Throws NoWitnessError if neither
/// the induction nor exhaustive search produces a witness.
inline WitnessResult build_witness(const Hypergraph& h, MatrixVariant variant = MatrixVariant::Jacobian)
{
    require_valid(h);
    if (h.num_edges() > kWitnessMaxEdges)
        throw std::length_error("build_witness: m = " + std::to_string(h.num_edges()) + " exceeds " +
                                std::to_string(kWitnessMaxEdges));

    const PeelChain chain(h);
    const std::size_t n = h.num_vertices();

    WitnessResult result;
    result.variant = variant;
    ColumnMultiset current; // witness of the level above, in its local ids
    BigInt current_per = 1;

    auto discrepancy = [&](ProofClaim claim, VertexId u, std::optional<EdgeId> edge, std::string detail) {
        result.discrepancies.push_back({claim, u, edge, std::move(detail)});
    };

    for (std::size_t level = n; level-- > 0;) {
        const Hypergraph& sub = chain.levels[level];
        const CoeffMatrix a(sub, variant);
        const VertexId global_u = level;
        const ColumnRef u_col = ColumnRef::vertex(0);

        StepRecord step;
        step.u = global_u;
        step.degree = chain.degrees[level];
        step.level_edges = sub.num_edges();
        step.per_previous = current_per;

        ColumnMultiset work;
        for (const auto& [ref, k] : current.counts())
            work.add(ref.is_edge() ? ColumnRef::edge(chain.kept_edges[level][ref.index])
                                   : ColumnRef::vertex(ref.index + 1),
                     k);
        work.add(u_col, step.degree);
        step.per_lifted = multiset_permanent(a, work);

        bool failed = false;
        if (step.per_lifted != factorial(step.degree) * current_per) {
            discrepancy(ProofClaim::Lift, global_u, std::nullopt,
                        "per(C) = " + to_string(step.per_lifted) + ", expected " + std::to_string(step.degree) +
                            "! * " + to_string(current_per));
            failed = true;
        }

        const std::vector<EdgeId> at_u = sub.incident_edges(0);

        for (std::size_t i = 0; !failed && i < at_u.size(); ++i) {
            const EdgeId e = at_u[i];
            const ColumnRef v_col = ColumnRef::vertex(a.pairs()[e].v);
            if (!work.contains(v_col))
                continue;
            SwitchRecord sw;
            sw.edge = chain.global_edges[level][e];
            sw.replaced_vertex = v_col.index + level;
            sw.per_before = multiset_permanent(a, work);
            work.remove_one(v_col);
            work.add(ColumnRef::edge(e));
            sw.per_after = multiset_permanent(a, work);
            if (sw.per_after != sw.per_before) {
                discrepancy(ProofClaim::Switch, global_u, sw.edge,
                            "per changed from " + to_string(sw.per_before) + " to " + to_string(sw.per_after) +
                                " when replacing v" + std::to_string(sw.replaced_vertex) + " by e" +
                                std::to_string(sw.edge));
                failed = true;
            }
            step.switches.push_back(std::move(sw));
        }

        for (std::size_t i = 0; !failed && i < at_u.size(); ++i) {
            const EdgeId e = at_u[i];
            const ColumnRef v_col = ColumnRef::vertex(a.pairs()[e].v);
            const ColumnRef e_col = ColumnRef::edge(e);
            AssignRecord as;
            as.edge = chain.global_edges[level][e];
            as.per_before = multiset_permanent(a, work);

            ColumnMultiset with_vertex = work;
            with_vertex.remove_one(u_col);
            with_vertex.add(v_col);
            as.per_vertex_option = multiset_permanent(a, with_vertex);

            ColumnMultiset with_edge = work;
            with_edge.remove_one(u_col);
            with_edge.add(e_col);
            as.per_edge_option = multiset_permanent(a, with_edge);

            if (as.per_vertex_option != 0) {
                as.chosen = chain.to_global(level, v_col);
                work = std::move(with_vertex);
            } else if (as.per_edge_option != 0) {
                as.chosen = chain.to_global(level, e_col);
                work = std::move(with_edge);
            } else {
                discrepancy(ProofClaim::Assign, global_u, as.edge,
                            "both replacements have permanent 0 (before: " + to_string(as.per_before) + ")");
                failed = true;
            }
            step.assignments.push_back(std::move(as));
        }

        if (!failed && (!work.b_valid() || work.size() != sub.num_edges())) {
            discrepancy(ProofClaim::Validity, global_u, std::nullopt,
                        "multiset " + chain.to_global(level, work).describe() + " is not B-valid");
            failed = true;
        }

        if (failed) {
            result.used_fallback = true;
            step.fallback = true;
            std::optional<ColumnMultiset> found = exhaustive_witness_search(sub, variant);
            if (!found) {
                discrepancy(ProofClaim::Subproblem, global_u, std::nullopt,
                            "no B-valid multiset with nonzero permanent on vertices " + std::to_string(level) +
                                ".." + std::to_string(n - 1));
                std::optional<ColumnMultiset> whole =
                    level == 0 ? std::nullopt : exhaustive_witness_search(h, variant);
                if (!whole)
                    throw NoWitnessError("no B-valid column multiset with nonzero permanent exists for the " +
                                         to_string(variant) + " matrix");
                step.result = *whole;
                step.per_result = multiset_permanent(CoeffMatrix(h, variant), *whole);
                result.trace.push_back(std::move(step));
                result.columns = std::move(*whole);
                result.permanent = result.trace.back().per_result;
                return result;
            }
            work = std::move(*found);
        }

        current_per = multiset_permanent(a, work);
        step.result = chain.to_global(level, work);
        step.per_result = current_per;
        result.trace.push_back(std::move(step));
        current = std::move(work);
    }

    result.columns = std::move(current);
    result.permanent = current_per;
    return result;
}

struct IdentityViolation {
    VertexId u = 0;
    EdgeId edge = 0;
    EdgeId row = 0;
    BigInt lhs; // A(row, e)
    BigInt rhs; // A(row, u) - A(row, v_e)
};

/// At every level, compares column e with column u minus column v_e for each
/// edge e at the peeled vertex u and reports every disagreeing row.
inline std::vector<IdentityViolation> check_column_identity(const Hypergraph& h, MatrixVariant variant)
{
    require_valid(h);
    const PeelChain chain(h);
    std::vector<IdentityViolation> out;
    for (std::size_t level = 0; level < h.num_vertices(); ++level) {
        const Hypergraph& sub = chain.levels[level];
        const CoeffMatrix a(sub, variant);
        for (EdgeId e : sub.incident_edges(0)) {
            const ColumnRef v_col = ColumnRef::vertex(a.pairs()[e].v);
            for (EdgeId row = 0; row < sub.num_edges(); ++row) {
                BigInt lhs = a.entry(row, ColumnRef::edge(e));
                BigInt rhs = a.entry(row, ColumnRef::vertex(0)) - a.entry(row, v_col);
                if (lhs != rhs)
                    out.push_back({level, chain.global_edges[level][e], chain.global_edges[level][row], lhs, rhs});
            }
        }
    }
    return out;
}

} // namespace hyperweight
