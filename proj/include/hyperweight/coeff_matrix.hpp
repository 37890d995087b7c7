#pragma once

// The m x (m+n) coefficient matrix of the edge-pair polynomial, column
// multisets over it, and the permanent route to monomial coefficients.
//
// Variables and columns share one indexing: edge variables 0..m-1 first, then
// vertex variables m..m+n-1.

#include "arith.hpp"
#include "hypergraph.hpp"
#include "int_matrix.hpp"
#include "permanent.hpp"

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweight {

enum class MatrixVariant {
    PaperLiteral, // vertex column z is the incidence indicator of z in each edge
    Jacobian,     // vertex column z is +1 where z = u_e and -1 where z = v_e
};

inline std::string to_string(MatrixVariant variant)
{
    return variant == MatrixVariant::Jacobian ? "jacobian" : "paper";
}

inline MatrixVariant parse_variant(const std::string& text)
{
    if (text == "jacobian")
        return MatrixVariant::Jacobian;
    if (text == "paper" || text == "paper-literal")
        return MatrixVariant::PaperLiteral;
    throw std::invalid_argument("unknown matrix variant '" + text + "'");
}

struct ColumnRef {
    enum class Kind { Edge, Vertex };

    Kind kind = Kind::Vertex;
    std::size_t index = 0;

    static ColumnRef edge(EdgeId e) { return {Kind::Edge, e}; }
    static ColumnRef vertex(VertexId v) { return {Kind::Vertex, v}; }

    bool is_edge() const noexcept { return kind == Kind::Edge; }
    bool is_vertex() const noexcept { return kind == Kind::Vertex; }

    auto operator<=>(const ColumnRef&) const = default;
};

inline std::string to_string(ColumnRef ref)
{
    return (ref.is_edge() ? "e" : "v") + std::to_string(ref.index);
}

inline ColumnRef parse_column_ref(const std::string& text)
{
    if (text.size() < 2 || (text[0] != 'e' && text[0] != 'v'))
        throw std::invalid_argument("malformed column name '" + text + "'");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed column name '" + text + "'");
    std::size_t index = std::stoul(text.substr(1));
    return text[0] == 'e' ? ColumnRef::edge(index) : ColumnRef::vertex(index);
}

class CoeffMatrix {
public:
    CoeffMatrix(const Hypergraph& h, MatrixVariant variant)
        : variant_(variant), n_(h.num_vertices()), m_(h.num_edges()), pairs_(edge_pairs(h)), matrix_(m_, m_ + n_)
    {
        require_valid(h);
        for (EdgeId row = 0; row < m_; ++row) {
            const EdgePair& p = pairs_[row];
            for (EdgeId z = 0; z < m_; ++z) {
                const bool has_u = h.contains(z, p.u);
                const bool has_v = h.contains(z, p.v);
                if (has_u && !has_v)
                    matrix_(row, z) = 1;
                else if (has_v && !has_u)
                    matrix_(row, z) = -1;
            }
            if (variant == MatrixVariant::PaperLiteral) {
                for (VertexId z : h.edge(row))
                    matrix_(row, m_ + z) = 1;
            } else {
                matrix_(row, m_ + p.u) = 1;
                matrix_(row, m_ + p.v) = -1;
            }
        }
    }

    MatrixVariant variant() const noexcept { return variant_; }
    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return m_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<EdgePair>& pairs() const noexcept { return pairs_; }

    std::size_t column_index(ColumnRef ref) const
    {
        if (ref.is_edge() ? ref.index >= m_ : ref.index >= n_)
            throw std::out_of_range("column " + hyperweight::to_string(ref) + " out of range");
        return ref.is_edge() ? ref.index : m_ + ref.index;
    }

    ColumnRef column_ref(std::size_t index) const
    {
        return index < m_ ? ColumnRef::edge(index) : ColumnRef::vertex(index - m_);
    }

    std::vector<BigInt> column(ColumnRef ref) const { return matrix_.column(column_index(ref)); }
    const BigInt& entry(EdgeId row, ColumnRef ref) const { return matrix_(row, column_index(ref)); }

private:
    MatrixVariant variant_;
    std::size_t n_;
    std::size_t m_;
    std::vector<EdgePair> pairs_;
    IntMatrix matrix_;
};

inline CoeffMatrix build_matrix(const Hypergraph& h, MatrixVariant variant) { return CoeffMatrix(h, variant); }

/// A multiset of column references; the proof's matrices B, C and D.
class ColumnMultiset {
public:
    void add(ColumnRef ref, std::size_t copies = 1)
    {
        if (copies > 0)
            counts_[ref] += copies;
    }

    void remove_one(ColumnRef ref)
    {
        auto it = counts_.find(ref);
        if (it == counts_.end())
            throw std::invalid_argument("column " + to_string(ref) + " not in multiset");
        if (--it->second == 0)
            counts_.erase(it);
    }

    std::size_t count(ColumnRef ref) const
    {
        auto it = counts_.find(ref);
        return it == counts_.end() ? 0 : it->second;
    }

    bool contains(ColumnRef ref) const { return count(ref) > 0; }

    std::size_t size() const noexcept
    {
        std::size_t total = 0;
        for (const auto& [ref, k] : counts_)
            total += k;
        return total;
    }

    bool empty() const noexcept { return counts_.empty(); }

    /// Each vertex column at most once, each edge column at most twice.
    bool b_valid() const noexcept
    {
        for (const auto& [ref, k] : counts_)
            if (k > (ref.is_vertex() ? 1u : 2u))
                return false;
        return true;
    }

    /// Columns in ColumnRef order, repeated by multiplicity.
    std::vector<ColumnRef> expanded() const
    {
        std::vector<ColumnRef> out;
        for (const auto& [ref, k] : counts_)
            out.insert(out.end(), k, ref);
        return out;
    }

    const std::map<ColumnRef, std::size_t>& counts() const noexcept { return counts_; }

    std::string describe() const
    {
        std::string out = "{";
        bool first = true;
        for (ColumnRef ref : expanded()) {
            out += (first ? "" : ",") + to_string(ref);
            first = false;
        }
        return out + "}";
    }

    bool operator==(const ColumnMultiset&) const = default;

private:
    std::map<ColumnRef, std::size_t> counts_;
};

/// Exponent vector over the m+n variables (edges first, then vertices).
class MonomialIndex {
public:
    MonomialIndex() = default;
    MonomialIndex(std::size_t m, std::size_t n) : m_(m), degrees_(m + n, 0) {}
    MonomialIndex(std::size_t m, std::vector<std::size_t> degrees) : m_(m), degrees_(std::move(degrees))
    {
        if (degrees_.size() < m_)
            throw std::invalid_argument("degree vector shorter than edge count");
    }

    static MonomialIndex from_multiset(const ColumnMultiset& columns, std::size_t m, std::size_t n)
    {
        MonomialIndex t(m, n);
        for (const auto& [ref, k] : columns.counts())
            t.degree(ref) += k;
        return t;
    }

    ColumnMultiset to_multiset() const
    {
        ColumnMultiset out;
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            out.add(ref_at(i), degrees_[i]);
        return out;
    }

    std::size_t num_edges() const noexcept { return m_; }
    std::size_t num_vertices() const noexcept { return degrees_.size() - m_; }
    std::size_t num_variables() const noexcept { return degrees_.size(); }
    const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

    std::size_t& degree(ColumnRef ref) { return degrees_.at(index_of(ref)); }
    std::size_t degree(ColumnRef ref) const { return degrees_.at(index_of(ref)); }
    std::size_t degree_at(std::size_t i) const { return degrees_.at(i); }

    std::size_t total_degree() const noexcept
    {
        std::size_t total = 0;
        for (std::size_t d : degrees_)
            total += d;
        return total;
    }

    bool cn_admissible() const noexcept
    {
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            if (degrees_[i] > (i < m_ ? 2u : 1u))
                return false;
        return true;
    }

    ColumnRef ref_at(std::size_t i) const { return i < m_ ? ColumnRef::edge(i) : ColumnRef::vertex(i - m_); }
    std::size_t index_of(ColumnRef ref) const { return ref.is_edge() ? ref.index : m_ + ref.index; }

    std::string describe() const { return to_multiset().describe(); }

    auto operator<=>(const MonomialIndex&) const = default;

private:
    std::size_t m_ = 0;
    std::vector<std::size_t> degrees_;
};

/// Square (or rectangular) matrix whose columns are the multiset's columns of
/// `a`, placed in ColumnRef order.
inline IntMatrix assemble(const CoeffMatrix& a, const ColumnMultiset& columns)
{
    const std::vector<ColumnRef> refs = columns.expanded();
    IntMatrix out(a.num_edges(), refs.size());
    for (std::size_t c = 0; c < refs.size(); ++c)
        out.set_column(c, a.column(refs[c]));
    return out;
}

inline BigInt multiset_permanent(const CoeffMatrix& a, const ColumnMultiset& columns)
{
    return permanent(assemble(a, columns));
}

/// per(assemble(A, t)) / prod_z t_z!. For the jacobian variant this is the
/// coefficient of x^t in the edge-pair polynomial.
inline Rational coefficient_from_permanent(const CoeffMatrix& a, const MonomialIndex& t)
{
    if (t.num_edges() != a.num_edges() || t.num_vertices() != a.num_vertices())
        throw std::invalid_argument("monomial shape does not match the matrix");
    if (t.total_degree() != a.num_edges())
        throw std::invalid_argument("monomial degree " + std::to_string(t.total_degree()) + " differs from m = " +
                                    std::to_string(a.num_edges()));
    BigInt multiplicity = 1;
    for (std::size_t d : t.degrees())
        multiplicity *= factorial(d);
    return Rational(multiset_permanent(a, t.to_multiset()), multiplicity);
}

/// All exponent vectors of total degree m with edge degrees <= 2 and vertex
/// degrees <= 1, in lexicographic order of the degree vector.
inline std::vector<MonomialIndex> admissible_monomials(std::size_t m, std::size_t n)
{
    std::vector<MonomialIndex> out;
    std::vector<std::size_t> degrees(m + n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t remaining) {
        if (i == degrees.size()) {
            if (remaining == 0)
                out.emplace_back(m, degrees);
            return;
        }
        const std::size_t cap = i < m ? 2 : 1;
        for (std::size_t d = 0; d <= cap && d <= remaining; ++d) {
            degrees[i] = d;
            rec(i + 1, remaining - d);
        }
        degrees[i] = 0;
    };
    rec(0, m);
    return out;
}

} // namespace hyperweight
