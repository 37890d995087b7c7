#pragma once

// Finding and checking total weightings drawn from list assignments.

#include "arith.hpp"
#include "coeff_matrix.hpp"
#include "hypergraph.hpp"
#include "phi.hpp"
#include "reduction.hpp"
#include "weighting.hpp"
#include "witness.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweight {

enum class SolveMode {
    PairDistinct, // w(u_e) != w(v_e) for every edge
    ProperOnly,   // no edge has all its vertices at one total weight
};

inline std::string to_string(SolveMode mode)
{
    return mode == SolveMode::PairDistinct ? "pair-distinct" : "proper-only";
}

inline SolveMode parse_solve_mode(const std::string& text)
{
    if (text == "pair-distinct" || text == "pair")
        return SolveMode::PairDistinct;
    if (text == "proper-only" || text == "proper")
        return SolveMode::ProperOnly;
    throw std::invalid_argument("unknown solve mode '" + text + "'");
}

struct VerifyReport {
    std::vector<Rational> totals;
    std::vector<EdgeId> pair_violations;
    std::vector<EdgeId> monochromatic_edges;
    std::vector<std::string> list_violations; // "v<i>" / "e<j>"

    bool pair_distinct() const noexcept { return pair_violations.empty(); }
    bool proper() const noexcept { return monochromatic_edges.empty(); }
    bool lists_respected() const noexcept { return list_violations.empty(); }
    bool passes(SolveMode mode) const noexcept
    {
        return lists_respected() && proper() && (mode == SolveMode::ProperOnly || pair_distinct());
    }
};

inline VerifyReport verify(const Hypergraph& h, const TotalWeighting& w, const ListAssignment* lists = nullptr)
{
    require_valid(h);
    VerifyReport report;
    report.totals = total_weights(h, w);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const EdgePair p = edge_pair(h, e);
        if (report.totals[p.u] == report.totals[p.v])
            report.pair_violations.push_back(e);
        bool mono = true;
        for (VertexId v : h.edge(e))
            if (report.totals[v] != report.totals[h.edge(e).front()])
                mono = false;
        if (mono)
            report.monochromatic_edges.push_back(e);
    }
    if (lists) {
        require_well_formed(h, *lists);
        for (VertexId v = 0; v < h.num_vertices(); ++v)
            if (!list_contains(lists->vertex_lists[v], w.vertex_weights[v]))
                report.list_violations.push_back("v" + std::to_string(v));
        for (EdgeId e = 0; e < h.num_edges(); ++e)
            if (!list_contains(lists->edge_lists[e], w.edge_weights[e]))
                report.list_violations.push_back("e" + std::to_string(e));
    }
    return report;
}

namespace detail {

// Depth-first search over vertices (in order) and then edges (in input
// order), values in list order. A constraint is checked as soon as the last
// variable it depends on is assigned.
class WeightingSearch {
public:
    WeightingSearch(const Hypergraph& h, const ListAssignment& lists, SolveMode mode)
        : h_(h), lists_(lists), mode_(mode), n_(h.num_vertices()), m_(h.num_edges()), totals_(n_),
          checks_at_(n_ + m_)
    {
        std::vector<std::vector<EdgeId>> incident(n_);
        for (EdgeId e = 0; e < m_; ++e)
            for (VertexId v : h.edge(e))
                incident[v].push_back(e);

        for (EdgeId e = 0; e < m_; ++e) {
            std::vector<VertexId> watched;
            if (mode == SolveMode::PairDistinct) {
                const EdgePair p = edge_pair(h, e);
                watched = {p.u, p.v};
            } else {
                watched = h.edge(e);
            }
            std::size_t last = 0;
            for (VertexId v : watched) {
                last = std::max(last, v);
                for (EdgeId f : incident[v])
                    last = std::max(last, n_ + f);
            }
            checks_at_[last].push_back(e);
        }
    }

    std::optional<TotalWeighting> run()
    {
        weighting_.vertex_weights.assign(n_, Rational(0));
        weighting_.edge_weights.assign(m_, Rational(0));
        if (descend(0))
            return weighting_;
        return std::nullopt;
    }

    std::size_t nodes() const noexcept { return nodes_; }

private:
    bool satisfied(EdgeId e) const
    {
        const Edge& members = h_.edge(e);
        if (mode_ == SolveMode::PairDistinct)
            return totals_[members[0]] != totals_[members[1]];
        for (VertexId v : members)
            if (totals_[v] != totals_[members[0]])
                return true;
        return false;
    }

    bool descend(std::size_t var)
    {
        if (var == n_ + m_)
            return true;
        const bool is_vertex = var < n_;
        const std::vector<Rational>& options = is_vertex ? lists_.vertex_lists[var] : lists_.edge_lists[var - n_];
        for (const Rational& value : options) {
            ++nodes_;
            assign(var, value, +1);
            bool ok = true;
            for (EdgeId e : checks_at_[var])
                if (!satisfied(e)) {
                    ok = false;
                    break;
                }
            if (ok && descend(var + 1))
                return true;
            assign(var, value, -1);
        }
        return false;
    }

    void assign(std::size_t var, const Rational& value, int direction)
    {
        if (var < n_) {
            weighting_.vertex_weights[var] = value;
            if (direction > 0)
                totals_[var] += value;
            else
                totals_[var] -= value;
            return;
        }
        const EdgeId e = var - n_;
        weighting_.edge_weights[e] = value;
        for (VertexId v : h_.edge(e)) {
            if (direction > 0)
                totals_[v] += value;
            else
                totals_[v] -= value;
        }
    }

    const Hypergraph& h_;
    const ListAssignment& lists_;
    SolveMode mode_;
    std::size_t n_;
    std::size_t m_;
    std::vector<Rational> totals_;
    std::vector<std::vector<EdgeId>> checks_at_;
    TotalWeighting weighting_;
    std::size_t nodes_ = 0;
};

inline void require_sound(const Hypergraph& h, const TotalWeighting& w, const ListAssignment& lists, SolveMode mode)
{
    if (!verify(h, w, &lists).passes(mode))
        throw std::logic_error("solver produced a weighting that fails verification");
}

} // namespace detail

/// Plain search on the given instance, without the duplicate-pair reduction.
inline std::optional<TotalWeighting> search_weighting(const Hypergraph& h, const ListAssignment& lists,
                                                      SolveMode mode = SolveMode::PairDistinct)
{
    require_valid(h);
    require_well_formed(h, lists);
    std::optional<TotalWeighting> w = detail::WeightingSearch(h, lists, mode).run();
    if (w)
        detail::require_sound(h, *w, lists, mode);
    return w;
}

/// Backtracking solver. In pair-distinct mode duplicate pairs are reduced
/// first and the result is replayed onto the original instance; proper-only
/// mode searches the instance directly because properness of a removed edge
/// does not follow from its twin.
inline std::optional<TotalWeighting> solve_backtracking(const Hypergraph& h, const ListAssignment& lists,
                                                        SolveMode mode = SolveMode::PairDistinct)
{
    require_valid(h);
    require_well_formed(h, lists);
    if (mode == SolveMode::ProperOnly)
        return search_weighting(h, lists, mode);

    const ReducedInstance reduced = reduce_duplicate_pairs(h, lists);
    std::optional<TotalWeighting> w = search_weighting(reduced.hypergraph, reduced.lists, mode);
    if (!w)
        return std::nullopt;
    TotalWeighting lifted = replay_reduction(reduced.log, *w, lists);
    detail::require_sound(h, lifted, lists, mode);
    return lifted;
}

/// Searches only the subgrid picked out by the witness monomial t: variable z
/// ranges over the first t_z + 1 entries of its list. The coefficient of x^t is
/// checked to be nonzero first; then some grid point is a non-zero of phi.
inline std::optional<TotalWeighting> solve_cn_guided(const Hypergraph& h, const ListAssignment& lists,
                                                     const ColumnMultiset& witness)
{
    require_valid(h);
    require_well_formed(h, lists);
    if (!witness.b_valid() || witness.size() != h.num_edges())
        throw std::invalid_argument("solve_cn_guided: witness is not a B-valid multiset of size m");
    const MonomialIndex t = MonomialIndex::from_multiset(witness, h.num_edges(), h.num_vertices());
    const std::size_t m = h.num_edges();

    std::vector<std::vector<Rational>> grids;
    for (std::size_t i = 0; i < t.num_variables(); ++i) {
        const std::vector<Rational>& list = i < m ? lists.edge_lists[i] : lists.vertex_lists[i - m];
        if (list.size() < t.degree_at(i) + 1)
            throw std::invalid_argument("solve_cn_guided: list of " + to_string(t.ref_at(i)) + " is too short");
        grids.emplace_back(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(t.degree_at(i) + 1));
    }

    const Rational coefficient = coefficient_from_permanent(CoeffMatrix(h, MatrixVariant::Jacobian), t);
    if (coefficient == 0)
        throw std::invalid_argument("solve_cn_guided: coefficient of " + t.describe() + " is 0");
    const Rational interpolated = coefficient_interpolation(h, t, grids);
    if (interpolated != coefficient)
        throw std::logic_error("solve_cn_guided: interpolated coefficient " + to_string(interpolated) +
                               " differs from permanent bridge " + to_string(coefficient));

    std::vector<std::size_t> digit(grids.size(), 0);
    std::vector<Rational> point(grids.size());
    while (true) {
        for (std::size_t i = 0; i < grids.size(); ++i)
            point[i] = grids[i][digit[i]];
        TotalWeighting w = weighting_from_variables(m, point);
        if (evaluate_phi(h, w) != 0) {
            detail::require_sound(h, w, lists, SolveMode::PairDistinct);
            return w;
        }
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == grids[i].size())
            digit[i++] = 0;
        if (i == digit.size())
            return std::nullopt;
    }
}

struct CnSolution {
    WitnessResult witness; // built on the reduced instance
    std::optional<TotalWeighting> weighting;
};

/// Reduce, build a jacobian witness, search its subgrid, replay.
inline CnSolution solve_cn(const Hypergraph& h, const ListAssignment& lists)
{
    const ReducedInstance reduced = reduce_duplicate_pairs(h, lists);
    CnSolution out{build_witness(reduced.hypergraph, MatrixVariant::Jacobian), std::nullopt};
    std::optional<TotalWeighting> w = solve_cn_guided(reduced.hypergraph, reduced.lists, out.witness.columns);
    if (w) {
        out.weighting = replay_reduction(reduced.log, *w, lists);
        detail::require_sound(h, *out.weighting, lists, SolveMode::PairDistinct);
    }
    return out;
}

} // namespace hyperweight
