#pragma once

#include <optional>
#include <vector>

#include "dessin/involution.hpp"

// Exhaustive plane-tree generation.
//
// Rooted trees are streamed as balanced parenthesis strings in ascending
// lexicographic order ('(' < ')'), Catalan(n) of them; unrooted mode keeps
// only the involutions that equal their own canonical form, one per plane
// tree.

namespace dessin {

class TreeStream {
public:
    enum class Mode { Rooted, Unrooted };

    TreeStream(int edges, Mode mode);

    std::optional<DartInvolution> next();

private:
    Mode mode_;
    std::string walk_;
    bool exhausted_ = false;
};

std::vector<DartInvolution> rooted_trees(int edges);
std::vector<DartInvolution> unrooted_trees(int edges);

// First unrooted tree, scanning edge counts order, 2*order, 3*order, ...,
// whose odd-vertex count is 2*target_genus + 2 and whose divisor order is
// target_order.  Absence within the bound is a valid result.
std::optional<PlaneTree> search_genus_order(int target_genus, int target_order, int max_edges);

} // namespace dessin
