#include "dessin/enumerate.hpp"

#include <stdexcept>

#include "dessin/invariants.hpp"

namespace dessin {

namespace {

DartInvolution matching_of(const std::string& walk) {
    std::vector<int> image(walk.size());
    std::vector<int> open;
    for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
        if (walk[i] == '(') {
            open.push_back(i);
        } else {
            image[i] = open.back();
            image[open.back()] = i;
            open.pop_back();
        }
    }
    return DartInvolution(std::move(image));
}

// Lexicographic successor among balanced strings: flip the rightmost '('
// whose prefix stays valid, then append the least completion (all opens
// first).  Returns false when the string was the last one, ")(" repeated.
bool next_walk(std::string& walk) {
    const int m = static_cast<int>(walk.size());
    int balance_before = 0;
    std::vector<int> balances(m);
    for (int i = 0; i < m; ++i) {
        balances[i] = balance_before;
        balance_before += walk[i] == '(' ? 1 : -1;
    }
    int opens_before = 0;
    int flip = -1;
    for (int i = 0; i < m; ++i)
        if (walk[i] == '(' && balances[i] >= 1) flip = i;
    for (int i = 0; flip >= 0 && i < flip; ++i)
        if (walk[i] == '(') ++opens_before;
    if (flip < 0) return false;
    walk[flip] = ')';
    const int opens_left = m / 2 - opens_before;
    for (int i = flip + 1; i < m; ++i)
        walk[i] = i - flip <= opens_left ? '(' : ')';
    return true;
}

} // namespace

TreeStream::TreeStream(int edges, Mode mode) : mode_(mode) {
    if (edges <= 0) throw std::invalid_argument("tree stream needs a positive edge count");
    walk_ = std::string(edges, '(') + std::string(edges, ')');
}

std::optional<DartInvolution> TreeStream::next() {
    while (!exhausted_) {
        DartInvolution phi = matching_of(walk_);
        if (!next_walk(walk_)) exhausted_ = true;
        if (mode_ == Mode::Rooted || is_canonical(phi)) return phi;
    }
    return std::nullopt;
}

std::vector<DartInvolution> rooted_trees(int edges) {
    std::vector<DartInvolution> trees;
    TreeStream stream(edges, TreeStream::Mode::Rooted);
    while (auto phi = stream.next()) trees.push_back(*std::move(phi));
    return trees;
}

std::vector<DartInvolution> unrooted_trees(int edges) {
    std::vector<DartInvolution> trees;
    TreeStream stream(edges, TreeStream::Mode::Unrooted);
    while (auto phi = stream.next()) trees.push_back(*std::move(phi));
    return trees;
}

std::optional<PlaneTree> search_genus_order(int target_genus, int target_order, int max_edges) {
    if (target_genus < 0) throw std::invalid_argument("genus must be non-negative");
    if (target_order <= 0) throw std::invalid_argument("divisor order must be positive");
    for (int n = target_order; n <= max_edges; n += target_order) {
        TreeStream stream(n, TreeStream::Mode::Unrooted);
        while (auto phi = stream.next()) {
            PlaneTree tree(to_map(*phi));
            if (tree.odd_vertex_count() != 2 * target_genus + 2) continue;
            if (n / chain_invariant(tree) == target_order) return tree;
        }
    }
    return std::nullopt;
}

} // namespace dessin
