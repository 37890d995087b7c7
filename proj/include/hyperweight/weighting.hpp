#pragma once

#include "arith.hpp"
#include "hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweight {

inline constexpr std::size_t kVertexListSize = 2;
inline constexpr std::size_t kEdgeListSize = 3;

/// Candidate weights: two per vertex, three per edge, distinct within a list.
/// List order is significant (it is the solver's value order).
struct ListAssignment {
    std::vector<std::vector<Rational>> vertex_lists;
    std::vector<std::vector<Rational>> edge_lists;

    bool operator==(const ListAssignment&) const = default;
};

/// A weight for every vertex and every edge.
struct TotalWeighting {
    std::vector<Rational> vertex_weights;
    std::vector<Rational> edge_weights;

    bool operator==(const TotalWeighting&) const = default;
};

namespace detail {

inline void check_list(const std::vector<Rational>& list, std::size_t expected, const std::string& name)
{
    if (list.size() != expected)
        throw std::invalid_argument("list of " + name + " has " + std::to_string(list.size()) +
                                    " elements, expected " + std::to_string(expected));
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (list[i] == list[j])
                throw std::invalid_argument("list of " + name + " repeats " + to_string(list[i]));
}

} // namespace detail

inline void require_well_formed(const Hypergraph& h, const ListAssignment& lists)
{
    if (lists.vertex_lists.size() != h.num_vertices())
        throw std::invalid_argument("expected " + std::to_string(h.num_vertices()) + " vertex lists, got " +
                                    std::to_string(lists.vertex_lists.size()));
    if (lists.edge_lists.size() != h.num_edges())
        throw std::invalid_argument("expected " + std::to_string(h.num_edges()) + " edge lists, got " +
                                    std::to_string(lists.edge_lists.size()));
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        detail::check_list(lists.vertex_lists[v], kVertexListSize, "v" + std::to_string(v));
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        detail::check_list(lists.edge_lists[e], kEdgeListSize, "e" + std::to_string(e));
}

inline void require_complete(const Hypergraph& h, const TotalWeighting& w)
{
    if (w.vertex_weights.size() != h.num_vertices() || w.edge_weights.size() != h.num_edges())
        throw std::invalid_argument("weighting assigns " + std::to_string(w.vertex_weights.size()) +
                                    " vertices and " + std::to_string(w.edge_weights.size()) +
                                    " edges, instance has " + std::to_string(h.num_vertices()) + " and " +
                                    std::to_string(h.num_edges()));
}

inline bool list_contains(const std::vector<Rational>& list, const Rational& x)
{
    return std::find(list.begin(), list.end(), x) != list.end();
}

/// w(v) = omega(v) + sum of omega(e) over edges e containing v.
inline std::vector<Rational> total_weights(const Hypergraph& h, const TotalWeighting& w)
{
    require_complete(h, w);
    std::vector<Rational> totals = w.vertex_weights;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        for (VertexId v : h.edge(e))
            totals.at(v) += w.edge_weights[e];
    return totals;
}

/// Lists {1,2} on every vertex and {1,2,3} on every edge.
inline ListAssignment constant_lists(const Hypergraph& h)
{
    ListAssignment lists;
    lists.vertex_lists.assign(h.num_vertices(), {Rational(1), Rational(2)});
    lists.edge_lists.assign(h.num_edges(), {Rational(1), Rational(2), Rational(3)});
    return lists;
}

} // namespace hyperweight
