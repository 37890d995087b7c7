#pragma once

// Instance generation: exhaustive enumeration of small labelled hypergraphs,
// seeded random hypergraphs and seeded list assignments. All randomness goes
// through Rng so that results are identical across standard libraries.

#include "hypergraph.hpp"
#include "weighting.hpp"

#include <cstdint>
#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweight {

struct SizeRange {
    std::size_t min = 2;
    std::size_t max = 2;
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

inline void require_size_range(SizeRange sizes)
{
    if (sizes.min < 2)
        throw std::invalid_argument("edge sizes must be at least 2");
    if (sizes.max < sizes.min)
        throw std::invalid_argument("empty edge size range");
}

/// Every vertex subset of allowed size, ordered by size and then lexicographically.
inline std::vector<Edge> possible_edges(std::size_t n, SizeRange sizes)
{
    require_size_range(sizes);
    std::vector<Edge> out;
    for (std::size_t s = sizes.min; s <= sizes.max && s <= n; ++s) {
        Edge current(s);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == s) {
                out.push_back(current);
                return;
            }
            for (VertexId v = start; v + (s - pos) <= n; ++v) {
                current[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
    }
    return out;
}

inline std::uint64_t possible_edge_count(std::size_t n, SizeRange sizes)
{
    require_size_range(sizes);
    std::uint64_t total = 0;
    const std::uint64_t cap = std::uint64_t{1} << 62;
    for (std::size_t s = sizes.min; s <= sizes.max && s <= n; ++s) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < s; ++i) {
            c = c * (n - i) / (i + 1);
            if (c > cap)
                return cap;
        }
        total += c;
        if (total > cap)
            return cap;
    }
    return total;
}

/// Visits every hypergraph with 0..n_max vertices and 0..m_max pairwise
/// distinct edges of allowed size, ordered by n, then m, then edge
/// combination. Returns the number of instances visited.
inline std::size_t for_each_hypergraph(std::size_t n_max, std::size_t m_max, SizeRange sizes,
                                       const std::function<void(const Hypergraph&)>& visit)
{
    require_size_range(sizes);
    std::size_t count = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::vector<Edge> pool = possible_edges(n, sizes);
        for (std::size_t m = 0; m <= m_max && m <= pool.size(); ++m) {
            std::vector<std::size_t> pick(m);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
                if (pos == m) {
                    std::vector<Edge> edges;
                    edges.reserve(m);
                    for (std::size_t i : pick)
                        edges.push_back(pool[i]);
                    visit(Hypergraph(n, std::move(edges)));
                    ++count;
                    return;
                }
                for (std::size_t i = start; i + (m - pos) <= pool.size(); ++i) {
                    pick[pos] = i;
                    rec(pos + 1, i + 1);
                }
            };
            rec(0, 0);
        }
    }
    return count;
}

inline std::vector<Hypergraph> enumerate_hypergraphs(std::size_t n_max, std::size_t m_max, SizeRange sizes)
{
    std::vector<Hypergraph> out;
    for_each_hypergraph(n_max, m_max, sizes, [&](const Hypergraph& h) { out.push_back(h); });
    return out;
}

/// m distinct random edges on n vertices.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, SizeRange sizes, std::uint64_t seed)
{
    require_size_range(sizes);
    const std::uint64_t available = possible_edge_count(n, sizes);
    if (m > available)
        throw std::invalid_argument("cannot place " + std::to_string(m) + " distinct edges; only " +
                                    std::to_string(available) + " are possible");
    Rng rng(seed);
    std::vector<Edge> edges;

    if (available <= 4096) {
        std::vector<Edge> pool = possible_edges(n, sizes);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t j = i + rng.below(pool.size() - i);
            std::swap(pool[i], pool[j]);
            edges.push_back(pool[i]);
        }
        return Hypergraph(n, std::move(edges));
    }

    const std::size_t top = std::min(sizes.max, n);
    std::set<Edge> seen;
    std::vector<VertexId> scratch(n);
    while (edges.size() < m) {
        std::size_t s = sizes.min + rng.below(top - sizes.min + 1);
        for (VertexId v = 0; v < n; ++v)
            scratch[v] = v;
        for (std::size_t i = 0; i < s; ++i)
            std::swap(scratch[i], scratch[i + rng.below(n - i)]);
        Edge e(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(s));
        std::sort(e.begin(), e.end());
        if (seen.insert(e).second)
            edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

enum class ListMode { RandomRational, Constant, AdversarialEqual };

inline std::string to_string(ListMode mode)
{
    switch (mode) {
    case ListMode::RandomRational:
        return "random-rational";
    case ListMode::Constant:
        return "constant-12-123";
    case ListMode::AdversarialEqual:
        return "adversarial-equal-lists";
    }
    return "?";
}

inline ListMode parse_list_mode(const std::string& text)
{
    if (text == "random-rational" || text == "random")
        return ListMode::RandomRational;
    if (text == "constant-12-123" || text == "constant")
        return ListMode::Constant;
    if (text == "adversarial-equal-lists" || text == "adversarial")
        return ListMode::AdversarialEqual;
    throw std::invalid_argument("unknown list mode '" + text + "'");
}

/// `size` distinct rationals p/q with |p| <= 6 and 1 <= q <= 3. The small
/// range makes coincidences between total weights common.
inline std::vector<Rational> random_rational_list(Rng& rng, std::size_t size)
{
    std::vector<Rational> out;
    while (out.size() < size) {
        Rational x(BigInt(rng.between(-6, 6)), BigInt(rng.between(1, 3)));
        if (!list_contains(out, x))
            out.push_back(x);
    }
    return out;
}

inline ListAssignment random_lists(const Hypergraph& h, ListMode mode, std::uint64_t seed)
{
    if (mode == ListMode::Constant)
        return constant_lists(h);
    Rng rng(seed);
    ListAssignment lists;
    if (mode == ListMode::AdversarialEqual) {
        std::vector<Rational> vertex_list = random_rational_list(rng, kVertexListSize);
        std::vector<Rational> edge_list = random_rational_list(rng, kEdgeListSize);
        lists.vertex_lists.assign(h.num_vertices(), vertex_list);
        lists.edge_lists.assign(h.num_edges(), edge_list);
        return lists;
    }
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        lists.vertex_lists.push_back(random_rational_list(rng, kVertexListSize));
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        lists.edge_lists.push_back(random_rational_list(rng, kEdgeListSize));
    return lists;
}

} // namespace hyperweight
