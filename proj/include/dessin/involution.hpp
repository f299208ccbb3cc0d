#pragma once

#include <vector>

#include "dessin/combinatorial_map.hpp"

// Unicellular dessins as dart involutions.
//
// Relabelling the darts of a one-faced map along its face walk turns the
// face permutation into i -> i+1 (mod 2n); the map is then determined by
// the relabelled edge reversal phi alone, via rho0(i) = phi(i)+1 (mod 2n).
// phi is well defined up to conjugation by powers of the full cycle.

namespace dessin {

class DartInvolution {
public:
    // Validates a fixed-point-free involution of 0..2n-1.
    explicit DartInvolution(std::vector<int> image);

    int edge_count() const { return static_cast<int>(image_.size()) / 2; }
    int dart_count() const { return static_cast<int>(image_.size()); }

    int operator()(int dart) const { return image_[dart]; }

    // 2n-periodic extension to all integers: at(x + 2n) = at(x) + 2n.
    long long at(long long x) const;

    const std::vector<int>& image() const { return image_; }

    bool operator==(const DartInvolution&) const = default;

private:
    std::vector<int> image_;
};

// Face-walk relabelling of a one-faced map.  dart_of_label[i] is the dart
// visited at step i of the walk that starts at dart 0.
struct FaceLabelling {
    DartInvolution involution;
    std::vector<Dart> dart_of_label;
};

// Throws if the map has more than one face.
FaceLabelling to_involution(const CombinatorialMap& map);

// Rebuilds the map: rho1 = phi, rho0(i) = phi(i)+1 (mod 2n).
CombinatorialMap to_map(const DartInvolution& phi);

// Conjugation by the k-th power of the full cycle: x -> phi(x-k)+k (mod 2n).
DartInvolution rotate_labels(const DartInvolution& phi, int k);

// Lexicographically least among the 2n label rotations; a labelling-free
// key for the underlying rooted-at-no-dart dessin.
DartInvolution canonical_form(const DartInvolution& phi);
bool is_canonical(const DartInvolution& phi);

int genus(const DartInvolution& phi);

// phi describes a tree iff its pairings are mutually non-crossing.
bool is_noncrossing(const DartInvolution& phi);

// Trees make every displacement phi(i) - i odd.
bool has_odd_displacements(const DartInvolution& phi);

// Checks phi(i) - i == 2w - 1 (mod 2n) against independently computed
// branch weights w, over the whole face walk.
bool displacements_match_branch_weights(const PlaneTree& tree);

} // namespace dessin
