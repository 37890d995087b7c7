#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperweight {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using Edge = std::vector<VertexId>;

/// Hypergraph on vertices 0..n-1. The vertex order is the id order; every
/// edge is stored sorted and without repeated vertices, and edges keep their
/// input order. Construction does not reject malformed edges so that
/// validate() can report them.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
        }
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const Edge& edge(EdgeId e) const
    {
        if (e >= edges_.size())
            throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
        return edges_[e];
    }

    bool contains(EdgeId e, VertexId v) const
    {
        const Edge& members = edge(e);
        return std::binary_search(members.begin(), members.end(), v);
    }

    std::vector<EdgeId> incident_edges(VertexId v) const
    {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < edges_.size(); ++e)
            if (std::binary_search(edges_[e].begin(), edges_[e].end(), v))
                out.push_back(e);
        return out;
    }

    std::size_t degree(VertexId v) const { return incident_edges(v).size(); }

    bool operator==(const Hypergraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct EdgePair {
    EdgeId edge = 0;
    VertexId u = 0;
    VertexId v = 0;

    bool operator==(const EdgePair&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool valid() const noexcept { return violations.empty(); }
};

inline ValidationReport validate(const Hypergraph& h)
{
    ValidationReport report;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const Edge& members = h.edge(e);
        if (members.size() < 2)
            report.violations.push_back("edge " + std::to_string(e) + ": edge of size " +
                                        std::to_string(members.size()));
        for (VertexId v : members)
            if (v >= h.num_vertices())
                report.violations.push_back("edge " + std::to_string(e) + ": vertex id out of range (" +
                                            std::to_string(v) + " >= " + std::to_string(h.num_vertices()) + ")");
    }
    return report;
}

inline void require_valid(const Hypergraph& h)
{
    ValidationReport report = validate(h);
    if (report.valid())
        return;
    std::string message = "invalid hypergraph:";
    for (const auto& v : report.violations)
        message += " " + v + ";";
    throw std::invalid_argument(message);
}

inline EdgePair edge_pair(const Hypergraph& h, EdgeId e)
{
    const Edge& members = h.edge(e);
    if (members.size() < 2)
        throw std::invalid_argument("edge " + std::to_string(e) + " has fewer than two vertices");
    return {e, members[0], members[1]};
}

inline std::vector<EdgePair> edge_pairs(const Hypergraph& h)
{
    std::vector<EdgePair> out;
    out.reserve(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        out.push_back(edge_pair(h, e));
    return out;
}

inline bool has_duplicate_pairs(const Hypergraph& h)
{
    std::vector<std::pair<VertexId, VertexId>> seen;
    for (const auto& p : edge_pairs(h))
        seen.emplace_back(p.u, p.v);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
}

/// Result of removing the order-first vertex. `rest` is relabelled so that old
/// vertex v becomes v - 1; `kept_edges[j]` is the index in the parent of the
/// j-th edge of `rest`.
struct PeeledVertex {
    VertexId u = 0;
    std::size_t degree = 0;
    Hypergraph rest;
    std::vector<EdgeId> kept_edges;
};

inline PeeledVertex delete_first_vertex(const Hypergraph& h)
{
    if (h.num_vertices() == 0)
        throw std::invalid_argument("delete_first_vertex: empty hypergraph");
    PeeledVertex out;
    out.u = 0;
    std::vector<Edge> rest_edges;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const Edge& members = h.edge(e);
        if (!members.empty() && members.front() == 0) {
            ++out.degree;
            continue;
        }
        Edge shifted;
        shifted.reserve(members.size());
        for (VertexId v : members)
            shifted.push_back(v - 1);
        rest_edges.push_back(std::move(shifted));
        out.kept_edges.push_back(e);
    }
    out.rest = Hypergraph(h.num_vertices() - 1, std::move(rest_edges));
    return out;
}

/// Vertices grouped by identical incidence sets; classes ordered by their
/// smallest member.
inline std::vector<std::vector<VertexId>> find_twins(const Hypergraph& h)
{
    std::map<std::vector<EdgeId>, std::vector<VertexId>> classes;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        classes[h.incident_edges(v)].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto& [incidence, members] : classes)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hyperweight
