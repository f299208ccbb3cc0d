#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dessin/combinatorial_map.hpp"
#include "dessin/involution.hpp"

// Brute-force ground truth.
//
// These checks re-derive covering and the chain/star invariants from the
// permutation-group definitions (residue blocks, set images, exhaustive
// partition scans) without the congruence shortcuts, then compare every
// route on every small tree.  Disagreements come back as data, never as
// mid-scan failures.

namespace dessin {

struct Discrepancy {
    DartInvolution tree;
    int d = 0;  // 0 when not tied to one divisor
    std::string subject;
    std::vector<std::pair<std::string, long long>> methods;
};

struct CrossCheckReport {
    std::vector<Discrepancy> discrepancies;
    std::vector<int> trees_per_edge_count;  // index = edge count, [0] unused
};

// Quotient involution on residue blocks mod 2d, built set-wise: present
// exactly when the edge reversal maps every block onto a single other
// block and no block onto itself.  Throws unless the map is unicellular
// and d divides n.
std::optional<DartInvolution> induced_block_reversal(const CombinatorialMap& map, int d);

// True iff the block map i -> i mod 2d semiconjugates both the face cycle
// and the edge reversal onto a 2d-dart quotient whose edge reversal is
// fixed-point-free.
bool semiconjugacy_cover_check(const CombinatorialMap& map, int d);

// Exhausts every partition of {0..2n-1} into 2d equal blocks and confirms
// that the full cycle preserves exactly one of them, the residue classes.
// Guarded to n <= 6.
bool block_system_uniqueness_check(int n, int d);

// quotient(phi, d1) must equal quotient(quotient(phi, d1*d2), d1) whenever
// all three coverings exist.
bool quotient_tower_check(const DartInvolution& phi);

// Fixed-point-free involutions on 2n darts that satisfy the star
// congruence phi(i) + phi(i+1) = 2i+1 (mod 2n) yet have no valency-1
// vertex; such dessins are the reason the star recognizer demands a leaf.
std::vector<DartInvolution> leafless_star_congruence(int n);

// Runs every route over every unrooted tree with at most max_edges edges
// and every divisor: chain and star coverings by branch weights, by
// congruence, by quotient shape, and by block oracle plus closed forms;
// the gcd invariants against maximal-divisor scans; the displacement
// identity and parity; odd-vertex divisibility; the quotient tower.
CrossCheckReport cross_check_all(int max_edges);

std::string describe(const Discrepancy& discrepancy);

} // namespace dessin
