#include "dessin/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace dessin {

namespace {

void require_divisor(const PlaneTree& tree, int d) {
    if (d <= 0) throw std::invalid_argument("divisor must be positive");
    if (tree.edge_count() % d != 0)
        throw std::invalid_argument("branch criteria need a divisor of the edge count");
}

} // namespace

bool covers_chain_by_branches(const PlaneTree& tree, int d) {
    require_divisor(tree, d);
    for (const BranchPair& pair : tree.adjacent_branch_pairs())
        if ((pair.weight_a + pair.weight_b) % d != 0) return false;
    return true;
}

bool covers_star_by_branches(const PlaneTree& tree, int d) {
    require_divisor(tree, d);
    for (const BranchPair& pair : tree.adjacent_branch_pairs())
        if ((pair.weight_a - pair.weight_b) % d != 0) return false;
    return true;
}

int chain_invariant(const PlaneTree& tree) {
    int g = 0;
    for (const BranchPair& pair : tree.adjacent_branch_pairs())
        g = std::gcd(g, pair.weight_a + pair.weight_b);
    return std::gcd(tree.edge_count(), g);
}

int star_invariant(const PlaneTree& tree) {
    int g = 0;
    for (const BranchPair& pair : tree.adjacent_branch_pairs())
        g = std::gcd(g, std::abs(pair.weight_a - pair.weight_b));
    return std::gcd(tree.edge_count(), g);
}

CurveData curve_data(const PlaneTree& tree) {
    CurveData data;
    data.n = tree.edge_count();
    data.odd_vertices = tree.odd_vertex_count();
    data.genus = (data.odd_vertices - 2) / 2;
    data.chain_invariant = chain_invariant(tree);
    data.divisor_order = data.n / data.chain_invariant;
    data.star_invariant = star_invariant(tree);
    return data;
}

bool odd_vertex_divisibility_check(const PlaneTree& tree, int d) {
    require_divisor(tree, d);
    if (!covers_chain_by_branches(tree, d))
        throw std::invalid_argument("odd-vertex check needs a chain-covering tree");
    const auto& cycles = tree.map().vertex_cycles();
    for (const auto& cycle : cycles) {
        if (cycle.size() % 2 == 0) continue;
        for (Dart dart : cycle)
            if (tree.branch_weight(dart) % d != 0) return false;
    }
    return true;
}

} // namespace dessin
