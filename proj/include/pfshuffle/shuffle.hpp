#pragma once

#include <vector>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/combinatorics.hpp"
#include "pfshuffle/formal_quadratic.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/polyring.hpp"

namespace pfshuffle {

/// One quadruple (J', H', K'_1, K'_2) of the shuffling sum for a canonical
/// split (IJ / HK):
///   H' u J' = H u J,  K'_1 u K'_2 = K,  |H'| <= |H|,
///   I n H  is contained in H',  J n K  is contained in J' n K'_2.
struct ShuffleIndex {
    Row top_part;     // J'
    Row bottom_part;  // H'
    Row moved_tail;   // K'_1, joins the top row
    Row kept_tail;    // K'_2, stays in the bottom row
    int deficit = 0;  // h = |H| - |H'|

    friend bool operator==(const ShuffleIndex&, const ShuffleIndex&) = default;
};

/// Every quadruple of the index set, each exactly once. Subsets H' of H u J
/// containing I n H are chosen first, J' is their complement, then subsets
/// K'_1 of K minus (J n K).
std::vector<ShuffleIndex> enumerate_index_set(const CanonicalSplit& split);

/// (-1)^{h(h+1)/2} [|J minus K| + h, h]_{-1} eps(H'J') eps(Z_2 K'_1), with
/// Z_2 = J n K.
Integer shuffle_coefficient(const CanonicalSplit& split, const ShuffleIndex& index);

/// The term x(I J' K'_1 / H' K'_2) for one quadruple, with the sign from
/// sorting both rows folded into `sign`.
struct ShuffleTerm {
    PairKey key;
    int sign = 1;
};
ShuffleTerm assemble_term(const CanonicalSplit& split, const ShuffleIndex& index);

/// The shuffling relation of a non-standard two-row tableau with standard
/// rows: the tableau itself with coefficient 1, every other tableau (A / B)
/// satisfying A <= both rows and B >= both rows. A pure row swap gives zero.
/// Throws ContractViolation for a standard tableau.
FormalQuadratic shuffling_relation(const Tableau& tableau, int n);

/// The same sum restricted to quadruples with K'_1 empty.
FormalQuadratic truncated_shuffling_relation(const Tableau& tableau, int n);

/// pfaffian substitution of the shuffling relation (x(∅) -> 1); the zero
/// polynomial for every admissible tableau.
SparsePoly shuffling_relation_pf(const Tableau& tableau, PfaffianContext& ctx);

/// Every non-standard two-row tableau with standard rows over 1..n (both
/// arrangements of equal-length incomparable rows), optionally including the
/// pure row swaps.
std::vector<Tableau> nonstandard_tableaux(int n, bool include_row_swaps = false);

/// The failed simplification for n = 4: truncating the relation of (23/14)
/// to K'_1 = ∅ and removing the relation of (234/1) leaves a combination
/// of standard tableaux, which cannot lie in the kernel.
struct TruncationCounterexample {
    FormalQuadratic full;       // relation of (23/14)
    FormalQuadratic truncated;  // its K'_1 = ∅ part
    FormalQuadratic companion;  // relation of (234/1)
    FormalQuadratic residual;   // full - truncated - companion
    SparsePoly residual_pf;
    bool residual_all_standard = false;
    bool residual_in_kernel = false;
};
TruncationCounterexample truncated_relation_counterexample();

} // namespace pfshuffle
