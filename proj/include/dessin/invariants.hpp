#pragma once

#include "dessin/combinatorial_map.hpp"

// Branch-weight criteria and the derived curve data.
//
// A tree covers a d-edged chain (star) exactly when every two adjacent
// branch weights have their sum (difference) divisible by d.  The largest
// such divisors of n are the chain and star invariants; a tree with o odd
// vertices corresponds to a hyperelliptic curve of genus (o-2)/2 carrying
// a divisor of order n / chain_invariant.

namespace dessin {

struct CurveData {
    int n = 0;
    int odd_vertices = 0;
    int genus = 0;
    int chain_invariant = 0;
    int divisor_order = 0;
    int star_invariant = 0;

    bool operator==(const CurveData&) const = default;
};

// Both throw unless d > 0 and d | n.
bool covers_chain_by_branches(const PlaneTree& tree, int d);
bool covers_star_by_branches(const PlaneTree& tree, int d);

// gcd(n, gcd of all adjacent sums); the gcd with n keeps the result a
// divisor of n (bare sums alone over-report on odd stars, whose center
// sums are all 2).
int chain_invariant(const PlaneTree& tree);

// gcd(n, gcd of all |adjacent differences|), with gcd(x, 0) = x.
int star_invariant(const PlaneTree& tree);

CurveData curve_data(const PlaneTree& tree);

// Under covers_chain_by_branches(tree, d), every branch at every vertex of
// odd valency must have weight divisible by d; the precondition is checked
// and violating calls throw.  A false return would mean the branch
// criterion and the odd-vertex divisibility law disagree.
bool odd_vertex_divisibility_check(const PlaneTree& tree, int d);

} // namespace dessin
