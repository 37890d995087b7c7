#pragma once

// The edge-pair polynomial phi(omega) = prod_e (w(u_e) - w(v_e)): pointwise
// evaluation, brute-force expansion and coefficient recovery from grid values.
// Nothing here goes through CoeffMatrix; these routes serve as oracles for the
// permanent bridge.

#include "arith.hpp"
#include "coeff_matrix.hpp"
#include "hypergraph.hpp"
#include "weighting.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hyperweight {

inline constexpr std::size_t kExpandMaxEdges = 6;
inline constexpr std::size_t kExpandMaxVariables = 12;

inline Rational evaluate_phi(const Hypergraph& h, const TotalWeighting& w)
{
    require_valid(h);
    const std::vector<Rational> totals = total_weights(h, w);
    Rational product = 1;
    for (const EdgePair& p : edge_pairs(h))
        product *= totals[p.u] - totals[p.v];
    return product;
}

/// Exact expansion of phi keyed by exponent vectors (edges first, then vertices).
class PhiExpansion {
public:
    using Terms = std::map<std::vector<std::size_t>, BigInt>;

    PhiExpansion(std::size_t m, std::size_t n, Terms terms) : m_(m), n_(n), terms_(std::move(terms)) {}

    BigInt coefficient(const MonomialIndex& t) const
    {
        if (t.num_edges() != m_ || t.num_vertices() != n_)
            throw std::invalid_argument("monomial shape does not match the expansion");
        auto it = terms_.find(t.degrees());
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t num_edges() const noexcept { return m_; }
    std::size_t num_vertices() const noexcept { return n_; }

private:
    std::size_t m_;
    std::size_t n_;
    Terms terms_;
};

inline PhiExpansion expand_phi(const Hypergraph& h)
{
    require_valid(h);
    const std::size_t m = h.num_edges();
    const std::size_t n = h.num_vertices();
    if (m > kExpandMaxEdges || m + n > kExpandMaxVariables)
        throw std::length_error("expand_phi: instance with m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                                " exceeds the expansion guard");

    // Linear factor of edge f: x_{u_f} - x_{v_f} + sum_{z ∋ u_f} y_z - sum_{z ∋ v_f} y_z.
    auto factor = [&](const EdgePair& p) {
        std::vector<long long> coeffs(m + n, 0);
        coeffs[m + p.u] += 1;
        coeffs[m + p.v] -= 1;
        for (EdgeId z = 0; z < m; ++z) {
            if (h.contains(z, p.u))
                coeffs[z] += 1;
            if (h.contains(z, p.v))
                coeffs[z] -= 1;
        }
        return coeffs;
    };

    PhiExpansion::Terms poly;
    poly[std::vector<std::size_t>(m + n, 0)] = 1;
    for (const EdgePair& p : edge_pairs(h)) {
        const std::vector<long long> linear = factor(p);
        PhiExpansion::Terms next;
        for (const auto& [exponents, c] : poly) {
            for (std::size_t i = 0; i < linear.size(); ++i) {
                if (linear[i] == 0)
                    continue;
                std::vector<std::size_t> e = exponents;
                ++e[i];
                next[e] += c * linear[i];
            }
        }
        poly.clear();
        for (auto& [e, c] : next)
            if (c != 0)
                poly.emplace(e, std::move(c));
    }
    return PhiExpansion(m, n, std::move(poly));
}

/// Grid {0, 1, ..., t_z} for every variable.
inline std::vector<std::vector<Rational>> canonical_grids(const MonomialIndex& t)
{
    std::vector<std::vector<Rational>> grids;
    for (std::size_t d : t.degrees()) {
        std::vector<Rational> g;
        for (std::size_t b = 0; b <= d; ++b)
            g.emplace_back(static_cast<long long>(b));
        grids.push_back(std::move(g));
    }
    return grids;
}

inline TotalWeighting weighting_from_variables(std::size_t m, const std::vector<Rational>& values)
{
    TotalWeighting w;
    w.edge_weights.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
    w.vertex_weights.assign(values.begin() + static_cast<std::ptrdiff_t>(m), values.end());
    return w;
}

/// Coefficient of x^t in phi from its values on the grid prod_z grid_z,
/// valid because phi has total degree m = |t|:
///   sum_x phi(x) / prod_z prod_{b in grid_z, b != x_z} (x_z - b).
inline Rational coefficient_interpolation(const Hypergraph& h, const MonomialIndex& t,
                                          const std::vector<std::vector<Rational>>& grids)
{
    require_valid(h);
    const std::size_t m = h.num_edges();
    if (t.num_edges() != m || t.num_vertices() != h.num_vertices())
        throw std::invalid_argument("monomial shape does not match the instance");
    if (!t.cn_admissible())
        throw std::invalid_argument("coefficient_interpolation: vertex degrees must be <= 1 and edge degrees <= 2");
    if (t.total_degree() != m)
        throw std::invalid_argument("coefficient_interpolation: monomial degree must equal m");
    if (grids.size() != t.num_variables())
        throw std::invalid_argument("coefficient_interpolation: one grid per variable required");
    for (std::size_t i = 0; i < grids.size(); ++i) {
        if (grids[i].size() != t.degree_at(i) + 1)
            throw std::invalid_argument("coefficient_interpolation: grid for " + to_string(t.ref_at(i)) +
                                        " must have " + std::to_string(t.degree_at(i) + 1) + " points");
        for (std::size_t a = 0; a < grids[i].size(); ++a)
            for (std::size_t b = a + 1; b < grids[i].size(); ++b)
                if (grids[i][a] == grids[i][b])
                    throw std::invalid_argument("coefficient_interpolation: duplicate grid value for " +
                                                to_string(t.ref_at(i)));
    }

    std::vector<std::size_t> digit(grids.size(), 0);
    std::vector<Rational> point(grids.size());
    Rational total = 0;
    while (true) {
        Rational weight = 1;
        for (std::size_t i = 0; i < grids.size(); ++i) {
            point[i] = grids[i][digit[i]];
            for (std::size_t b = 0; b < grids[i].size(); ++b)
                if (b != digit[i])
                    weight *= point[i] - grids[i][b];
        }
        total += evaluate_phi(h, weighting_from_variables(m, point)) / weight;

        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == grids[i].size())
            digit[i++] = 0;
        if (i == digit.size())
            break;
    }
    return total;
}

} // namespace hyperweight
