#pragma once

#include <string>
#include <vector>

// Dessins as pairs of dart permutations.
//
// An n-edged map is carried by 2n darts (oriented edges) labelled 0..2n-1.
// rho0 sends a dart to the next dart counterclockwise around its origin
// vertex; rho1 swaps the two darts of each edge.  Vertices are the cycles
// of rho0, faces the cycles of rho0∘rho1, and permutations compose on the
// left: (pq)(x) = p(q(x)).

namespace dessin {

using Dart = int;

class CombinatorialMap {
public:
    // Validates that both vectors are permutations of the same even size,
    // that edge_reversal is a fixed-point-free involution, and that the
    // two permutations act transitively on darts.
    CombinatorialMap(std::vector<Dart> vertex_rotation, std::vector<Dart> edge_reversal);

    int edge_count() const { return static_cast<int>(rho0_.size()) / 2; }
    int dart_count() const { return static_cast<int>(rho0_.size()); }

    Dart next_at_vertex(Dart d) const { return rho0_[d]; }
    Dart reverse(Dart d) const { return rho1_[d]; }
    Dart face_next(Dart d) const { return rho0_[rho1_[d]]; }

    int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
    int face_count() const { return face_count_; }
    // From V - n + F = 2 - 2g.
    int genus() const { return (2 - (vertex_count() - edge_count() + face_count())) / 2; }
    bool is_unicellular() const { return face_count_ == 1; }

    int vertex_of(Dart d) const { return vertex_of_dart_[d]; }
    int valency(int vertex) const { return static_cast<int>(vertex_cycles_[vertex].size()); }

    // One entry per vertex, darts listed in rotation order starting from the
    // smallest dart of the cycle.  Vertex ids follow first-dart order.
    const std::vector<std::vector<Dart>>& vertex_cycles() const { return vertex_cycles_; }

    // Multiset of vertex valencies, ascending.
    std::vector<int> degree_profile() const;

    bool operator==(const CombinatorialMap& other) const {
        return rho0_ == other.rho0_ && rho1_ == other.rho1_;
    }

private:
    std::vector<Dart> rho0_;
    std::vector<Dart> rho1_;
    std::vector<int> vertex_of_dart_;
    std::vector<std::vector<Dart>> vertex_cycles_;
    int face_count_ = 0;
};

// Two adjacent branch weights at a common vertex, consecutive in rotation
// order.  A leaf pairs its single branch with itself.
struct BranchPair {
    int vertex;
    int weight_a;
    int weight_b;

    bool operator==(const BranchPair&) const = default;
};

class PlaneTree {
public:
    // Requires a unicellular genus-0 map (V = n + 1).
    explicit PlaneTree(CombinatorialMap map);

    const CombinatorialMap& map() const { return map_; }
    int edge_count() const { return map_.edge_count(); }
    int vertex_of(Dart d) const { return map_.vertex_of(d); }

    // Weight of the branch containing dart d and growing from its origin
    // vertex: the edge of d plus everything hanging beyond its head.
    int branch_weight(Dart d) const;

    // All 2n adjacent pairs, one per (dart, next-dart-in-rotation) incidence.
    std::vector<BranchPair> adjacent_branch_pairs() const;

    int odd_vertex_count() const;

    bool operator==(const PlaneTree& other) const { return map_ == other.map_; }

private:
    CombinatorialMap map_;
    std::vector<int> branch_weight_;
};

bool is_plane_tree(const CombinatorialMap& map);

} // namespace dessin
