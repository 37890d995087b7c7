#pragma once

// Removal of edges whose leading vertex pair repeats an earlier edge's pair.
// A removed edge e' gets a fixed weight c from its own list; adding c to the
// lists of every vertex of e' keeps every total weight reachable, so a
// weighting of the reduced instance lifts back to the original one.

#include "hypergraph.hpp"
#include "weighting.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperweight {

struct ReductionRecord {
    EdgeId removed_edge = 0; // index in the original instance
    EdgePair pair;
    Rational weight;
    std::vector<VertexId> vertices;
};

struct ReductionLog {
    std::vector<ReductionRecord> records;
    std::vector<EdgeId> kept_edges; // reduced edge index -> original edge index
    std::size_t original_edge_count = 0;

    bool empty() const noexcept { return records.empty(); }
};

struct ReducedInstance {
    Hypergraph hypergraph;
    ListAssignment lists;
    ReductionLog log;
};

/// Original indices of the edges that survive the reduction: the earliest edge
/// of each pair class, in input order.
inline std::vector<EdgeId> distinct_pair_edges(const Hypergraph& h)
{
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<EdgeId> kept;
    for (const EdgePair& p : edge_pairs(h))
        if (seen.emplace(p.u, p.v).second)
            kept.push_back(p.edge);
    return kept;
}

inline Hypergraph restrict_to_edges(const Hypergraph& h, const std::vector<EdgeId>& kept)
{
    std::vector<Edge> edges;
    edges.reserve(kept.size());
    for (EdgeId e : kept)
        edges.push_back(h.edge(e));
    return Hypergraph(h.num_vertices(), std::move(edges));
}

inline ReducedInstance reduce_duplicate_pairs(const Hypergraph& h, const ListAssignment& lists)
{
    require_valid(h);
    require_well_formed(h, lists);

    ReducedInstance out;
    out.log.original_edge_count = h.num_edges();
    out.log.kept_edges = distinct_pair_edges(h);
    out.hypergraph = restrict_to_edges(h, out.log.kept_edges);
    out.lists.vertex_lists = lists.vertex_lists;

    std::size_t next_kept = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (next_kept < out.log.kept_edges.size() && out.log.kept_edges[next_kept] == e) {
            out.lists.edge_lists.push_back(lists.edge_lists[e]);
            ++next_kept;
            continue;
        }
        ReductionRecord record{e, edge_pair(h, e), lists.edge_lists[e].front(), h.edge(e)};
        for (VertexId v : record.vertices)
            for (Rational& x : out.lists.vertex_lists[v])
                x += record.weight;
        out.log.records.push_back(std::move(record));
    }
    return out;
}

/// Lift a weighting of the reduced instance back to the original instance.
/// Throws if the lifted weighting leaves the original lists, which means the
/// input did not come from the shifted lists recorded in `log`.
inline TotalWeighting replay_reduction(const ReductionLog& log, const TotalWeighting& reduced,
                                       const ListAssignment& original_lists)
{
    if (reduced.edge_weights.size() != log.kept_edges.size())
        throw std::invalid_argument("replay_reduction: weighting has " + std::to_string(reduced.edge_weights.size()) +
                                    " edge weights, log expects " + std::to_string(log.kept_edges.size()));

    TotalWeighting out;
    out.vertex_weights = reduced.vertex_weights;
    out.edge_weights.assign(log.original_edge_count, Rational(0));
    for (std::size_t j = 0; j < log.kept_edges.size(); ++j)
        out.edge_weights[log.kept_edges[j]] = reduced.edge_weights[j];

    for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
        out.edge_weights[it->removed_edge] = it->weight;
        for (VertexId v : it->vertices) {
            if (v >= out.vertex_weights.size())
                throw std::invalid_argument("replay_reduction: vertex out of range");
            out.vertex_weights[v] -= it->weight;
        }
    }

    if (original_lists.vertex_lists.size() != out.vertex_weights.size() ||
        original_lists.edge_lists.size() != out.edge_weights.size())
        throw std::invalid_argument("replay_reduction: list assignment does not match the original instance");
    for (VertexId v = 0; v < out.vertex_weights.size(); ++v)
        if (!list_contains(original_lists.vertex_lists[v], out.vertex_weights[v]))
            throw std::invalid_argument("replay_reduction: weight " + to_string(out.vertex_weights[v]) + " of v" +
                                        std::to_string(v) + " is not in its shifted list");
    for (EdgeId e = 0; e < out.edge_weights.size(); ++e)
        if (!list_contains(original_lists.edge_lists[e], out.edge_weights[e]))
            throw std::invalid_argument("replay_reduction: weight " + to_string(out.edge_weights[e]) + " of e" +
                                        std::to_string(e) + " is not in its list");
    return out;
}

} // namespace hyperweight
