#pragma once

// JSON forms of instances, weightings, verification reports, witness traces
// and identity checks. Rationals are always written as strings ("p" or "p/q")
// and read from strings or JSON integers.

#include "coeff_matrix.hpp"
#include "hypergraph.hpp"
#include "reduction.hpp"
#include "solver.hpp"
#include "weighting.hpp"
#include "witness.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hyperweight {

using Json = nlohmann::json;

struct Instance {
    Hypergraph hypergraph;
    std::optional<ListAssignment> lists;
};

inline Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(BigInt(j.get<long long>()));
    throw std::invalid_argument("expected a rational as a string or integer, got " + j.dump());
}

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline std::vector<Rational> rational_list_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const Json& x : j)
        out.push_back(rational_from_json(x));
    return out;
}

inline Json rational_list_to_json(const std::vector<Rational>& values)
{
    Json out = Json::array();
    for (const Rational& x : values)
        out.push_back(rational_to_json(x));
    return out;
}

inline Hypergraph hypergraph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("instance must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw std::invalid_argument("\"n\" must be a nonnegative integer");
    if (!j["edges"].is_array())
        throw std::invalid_argument("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array())
            throw std::invalid_argument("each edge must be an array of vertex ids");
        Edge members;
        for (const Json& v : e) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw std::invalid_argument("vertex ids must be nonnegative integers, got " + v.dump());
            members.push_back(v.get<std::size_t>());
        }
        edges.push_back(std::move(members));
    }
    return Hypergraph(j["n"].get<std::size_t>(), std::move(edges));
}

inline Json hypergraph_to_json(const Hypergraph& h)
{
    Json edges = Json::array();
    for (const Edge& e : h.edges())
        edges.push_back(e);
    return Json{{"n", h.num_vertices()}, {"edges", edges}};
}

/// Parses the instance format. Lists are optional as a pair; when present
/// they are checked for shape and distinct entries.
inline Instance instance_from_json(const Json& j)
{
    Instance out{hypergraph_from_json(j), std::nullopt};
    const bool has_vertex = j.contains("vertex_lists");
    const bool has_edge = j.contains("edge_lists");
    if (has_vertex != has_edge)
        throw std::invalid_argument("\"vertex_lists\" and \"edge_lists\" must be given together");
    if (has_vertex) {
        ListAssignment lists;
        if (!j["vertex_lists"].is_array() || !j["edge_lists"].is_array())
            throw std::invalid_argument("list assignments must be arrays");
        for (const Json& l : j["vertex_lists"])
            lists.vertex_lists.push_back(rational_list_from_json(l));
        for (const Json& l : j["edge_lists"])
            lists.edge_lists.push_back(rational_list_from_json(l));
        require_well_formed(out.hypergraph, lists);
        out.lists = std::move(lists);
    }
    return out;
}

inline Json instance_to_json(const Hypergraph& h, const ListAssignment* lists)
{
    Json out = hypergraph_to_json(h);
    if (lists) {
        Json vl = Json::array(), el = Json::array();
        for (const auto& l : lists->vertex_lists)
            vl.push_back(rational_list_to_json(l));
        for (const auto& l : lists->edge_lists)
            el.push_back(rational_list_to_json(l));
        out["vertex_lists"] = vl;
        out["edge_lists"] = el;
    }
    return out;
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline Json weighting_to_json(const TotalWeighting& w)
{
    return Json{{"vertex_weights", rational_list_to_json(w.vertex_weights)},
                {"edge_weights", rational_list_to_json(w.edge_weights)}};
}

inline TotalWeighting weighting_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vertex_weights") || !j.contains("edge_weights"))
        throw std::invalid_argument("weighting must have \"vertex_weights\" and \"edge_weights\"");
    return {rational_list_from_json(j["vertex_weights"]), rational_list_from_json(j["edge_weights"])};
}

inline Json verify_report_to_json(const VerifyReport& r)
{
    return Json{{"total_weights", rational_list_to_json(r.totals)},
                {"pair_violations", r.pair_violations},
                {"monochromatic_edges", r.monochromatic_edges},
                {"list_violations", r.list_violations},
                {"pair_distinct", r.pair_distinct()},
                {"proper", r.proper()},
                {"lists_respected", r.lists_respected()}};
}

inline Json multiset_to_json(const ColumnMultiset& b)
{
    Json out = Json::array();
    for (ColumnRef ref : b.expanded())
        out.push_back(to_string(ref));
    return out;
}

inline Json witness_to_json(const WitnessResult& w)
{
    Json trace = Json::array();
    for (const StepRecord& s : w.trace) {
        Json switches = Json::array();
        for (const SwitchRecord& sw : s.switches)
            switches.push_back({{"edge", "e" + std::to_string(sw.edge)},
                                {"replaced", "v" + std::to_string(sw.replaced_vertex)},
                                {"per_before", to_string(sw.per_before)},
                                {"per_after", to_string(sw.per_after)}});
        Json assignments = Json::array();
        for (const AssignRecord& as : s.assignments)
            assignments.push_back({{"edge", "e" + std::to_string(as.edge)},
                                   {"per_before", to_string(as.per_before)},
                                   {"per_vertex_option", to_string(as.per_vertex_option)},
                                   {"per_edge_option", to_string(as.per_edge_option)},
                                   {"chosen", as.chosen ? Json(to_string(*as.chosen)) : Json(nullptr)}});
        trace.push_back({{"u", "v" + std::to_string(s.u)},
                         {"degree", s.degree},
                         {"level_edges", s.level_edges},
                         {"per_previous", to_string(s.per_previous)},
                         {"per_lifted", to_string(s.per_lifted)},
                         {"switches", switches},
                         {"assignments", assignments},
                         {"fallback", s.fallback},
                         {"columns", multiset_to_json(s.result)},
                         {"per", to_string(s.per_result)}});
    }
    Json discrepancies = Json::array();
    for (const Discrepancy& d : w.discrepancies)
        discrepancies.push_back({{"claim", to_string(d.claim)},
                                 {"u", "v" + std::to_string(d.u)},
                                 {"edge", d.edge ? Json("e" + std::to_string(*d.edge)) : Json(nullptr)},
                                 {"detail", d.detail}});
    return Json{{"variant", to_string(w.variant)},
                {"columns", multiset_to_json(w.columns)},
                {"permanent", to_string(w.permanent)},
                {"b_valid", w.columns.b_valid()},
                {"used_fallback", w.used_fallback},
                {"trace", trace},
                {"discrepancies", discrepancies}};
}

inline Json identity_violation_to_json(const IdentityViolation& v)
{
    return Json{{"u", "v" + std::to_string(v.u)},
                {"edge", "e" + std::to_string(v.edge)},
                {"row", "e" + std::to_string(v.row)},
                {"lhs", to_string(v.lhs)},
                {"rhs", to_string(v.rhs)}};
}

/// Parses "v0,v2,e1,e1" (or a JSON array of such names) into a monomial.
inline MonomialIndex monomial_from_names(const std::vector<std::string>& names, std::size_t m, std::size_t n)
{
    MonomialIndex t(m, n);
    for (const std::string& name : names) {
        ColumnRef ref = parse_column_ref(name);
        if (ref.is_edge() ? ref.index >= m : ref.index >= n)
            throw std::invalid_argument("variable " + name + " out of range");
        ++t.degree(ref);
    }
    return t;
}

inline std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

} // namespace hyperweight
