#pragma once

#include <vector>

#include "delpair/base_ring.hpp"
#include "delpair/matrix.hpp"

namespace delpair {

/// Invariant factors q1 | q2 | ... | qr of the cokernel of a square
/// endomorphism matrix over a PID base ring, each normalized to the
/// canonical associate (positive over Z, monic over Q[v]). Zero diagonal
/// entries are counted separately as rank deficiency.
struct SmithData {
    std::vector<RatFunc> invariants;
    int rank_deficiency = 0;
};

// Over Z and Q[v]: full Euclidean reduction. Over Q (a field) there is
// nothing to reduce and the invariants are all 1, one per unit of rank.
SmithData smith_normal_form(const Matrix<RatFunc>& m, const BaseRing& ring);

struct UnitRatioResult {
    bool comparable = false;       // invariant factor lists agree
    bool doubly_singular = false;  // both determinants vanish; unit fixed to 1
    RatFunc unit;                  // det(u) = unit * det(u_other)
};

// Compares the cokernels of two endomorphism matrices via their
// invariant factors and, when they agree, reports the base-ring unit
// relating the determinants. The matrices need not have the same size;
// unit invariants are ignored in the comparison. Throws SingularInput
// if exactly one determinant vanishes.
UnitRatioResult unit_ratio(const Matrix<RatFunc>& u, const Matrix<RatFunc>& u_other,
                           const BaseRing& ring);

}  // namespace delpair
