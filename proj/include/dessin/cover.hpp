#pragma once

#include <optional>

#include "dessin/involution.hpp"

// Coverings of unicellular dessins.
//
// An n-edged dessin covers a d-edged one exactly when the involution phi
// respects the residue blocks mod 2d: phi(i+2d) = phi(i) (mod 2d) with no
// block sent to itself.  The quotient involution is phi mod 2d.

namespace dessin {

enum class CoverFailure { None, Divisibility, Periodicity, FixedBlock };

struct CoverReport {
    int d = 0;
    bool covers = false;
    std::optional<DartInvolution> quotient;
    CoverFailure reason = CoverFailure::None;
};

// Total in d > 0: a non-divisor of n reports Divisibility rather than
// throwing, so divisor scans can stay simple.
CoverReport covers_dessin(const DartInvolution& phi, int d);

// Tree specialization: periodicity alone suffices because displacements of
// tree involutions are odd, so no block can map to itself.  Throws unless
// phi has genus 0.
CoverReport covers_tree(const DartInvolution& phi, int d);

// Throws when the covering fails.
DartInvolution quotient(const DartInvolution& phi, int d);

// Chain recognizers: consecutive images descend by one, equivalently
// phi(i) = phi(0) - i (mod 2d) with phi(0) odd.
bool is_chain(const DartInvolution& phi);
bool is_chain_closed_form(const DartInvolution& phi);

// Star recognizers: phi(i) + phi(i+1) = 2i+1 (mod 2d) together with the
// valency-1 hypothesis, equivalently phi(j) = j + (-1)^j phi(0) with
// phi(0) in {1, 2d-1}.  Without a valency-1 vertex both return false even
// when the congruence holds.
bool is_star(const DartInvolution& phi);
bool is_star_closed_form(const DartInvolution& phi);

// Direct congruence criteria on the covering tree itself:
// phi(i) - phi(i+1) = 1 (mod 2d) for chains,
// phi(i) + phi(i+1) = 2i+1 (mod 2d) for stars,
// each gated on d | n.  Meaningful for genus-0 involutions.
bool covers_chain(const DartInvolution& phi, int d);
bool covers_star(const DartInvolution& phi, int d);

} // namespace dessin
