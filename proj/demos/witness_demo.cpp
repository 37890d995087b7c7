// Builds a witness for a small hypergraph, reads off its monomial and uses it
// to pick a weighting from random lists.

#include <hyperweight/generate.hpp>
#include <hyperweight/json_io.hpp>
#include <hyperweight/solver.hpp>
#include <hyperweight/witness.hpp>

#include <iostream>

using namespace hyperweight;

int main()
{
    const Hypergraph h(5, {{0, 1, 2}, {1, 3}, {2, 3, 4}, {0, 4}});
    const WitnessResult witness = build_witness(h, MatrixVariant::Jacobian);
    std::cout << "witness " << witness.columns.describe() << " per = " << witness.permanent
              << (witness.used_fallback ? " (fallback)" : "") << '\n';

    const MonomialIndex t = MonomialIndex::from_multiset(witness.columns, h.num_edges(), h.num_vertices());
    std::cout << "coefficient of " << t.describe() << " = "
              << to_string(coefficient_from_permanent(CoeffMatrix(h, MatrixVariant::Jacobian), t)) << '\n';

    const ListAssignment lists = random_lists(h, ListMode::RandomRational, 7);
    const std::optional<TotalWeighting> w = solve_cn_guided(h, lists, witness.columns);
    if (!w) {
        std::cout << "no weighting on the witness subgrid\n";
        return 1;
    }
    std::cout << weighting_to_json(*w).dump() << '\n';
    std::cout << "totals " << rational_list_to_json(total_weights(h, *w)).dump() << '\n';
    return 0;
}
