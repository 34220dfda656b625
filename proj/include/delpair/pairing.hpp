#pragma once

#include <string>
#include <utility>
#include <vector>

#include "delpair/algebra.hpp"
#include "delpair/family.hpp"

namespace delpair {

/// A pairing section value in the fixed trivialization, together with
/// the normalization route that produced it and the unit group modulo
/// which it is canonical.
struct PairingCertificate {
    RatFunc value;
    std::string normalization;   // norm | iterated_nm | sylvester | macaulay
    std::string unit_ambiguity;  // unit group of the base ring
    std::vector<std::string> trace;
    bool zero_warning = false;  // value is 0: the section zero loci meet
};

std::string unit_group_name(const BaseRing& ring);

// d = 0: the pairing of a single section on a finite fiber is its norm.
PairingCertificate pairing_norm_d0(const FiniteAlgebra& fiber, const std::vector<RatFunc>& element);

// Reference route on P^d: Sylvester (d = 1) or Macaulay (d = 2, 3)
// resultant of the d+1 forms. Throws NotCertified when the d-prefix is
// refuted; a vanishing value is returned with zero_warning instead.
PairingCertificate pairing_section(const SectionSequence& seq);

// Iterated route on P^1: restrict the second section to the zero locus
// of the first and take the norm there. Agrees with the Sylvester route
// up to the declared unit group.
PairingCertificate pairing_iterated(const SectionSequence& seq);

/// Structured verifier outcome; fields keep insertion order so reports
/// serialize deterministically.
struct VerifyReport {
    std::string check;
    bool pass = false;
    bool degenerate = false;  // input hit a degenerate locus; equality vacuous or zero
    std::vector<std::pair<std::string, std::string>> fields;
    void put(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
};

// pairing(.., s*s', ..) against pairing(.., s, ..) * pairing(.., s', ..):
// the template sequence's slot (1-based) is replaced by the two factors
// and by their product.
VerifyReport verify_multiadditivity(const SectionSequence& templ, int slot,
                                    const BundleSection& factor_a, const BundleSection& factor_b);

// pairing(perm . seq) = unit * pairing(seq); on P^1 the transposition
// unit is exactly (-1)^(k1*k2) in the Sylvester normalization.
VerifyReport verify_symmetry(const SectionSequence& seq, const std::vector<int>& perm);

// Specialize-then-pair equals pair-then-specialize at t = t0, exactly,
// in the resultant normalization. Roots of the certificate resultant
// give a degenerate verdict (both sides vanish).
VerifyReport verify_base_change(const SectionSequence& seq, const Rat& t0);

// Pairing with the pulled-back constant m in the last slot equals
// m^delta, delta the product of the prefix twists (d = 1 here; the d=0
// degree case is verify_pullback_d0).
VerifyReport verify_pullback(const SectionSequence& prefix, const RatFunc& m);
VerifyReport verify_pullback_d0(const FiniteAlgebra& fiber, const RatFunc& m);

// Restriction to the two divisors in either order: Nm on Z(s1) of s2
// against Nm on Z(s2) of s1, with the relating unit produced by the
// invariant-factor comparison of the two restriction endomorphisms.
VerifyReport verify_restriction_order(const SectionSequence& seq);

/// P^1-tower over X = P^1_S: inner sections are bihomogeneous forms in
/// (y0, y1) and (x0, x1) of the declared bidegrees.
struct TowerInput {
    BaseRing base;
    BundleSection outer;  // section of O(k1) on X
    MPoly inner2, inner3;
    int deg_y2, deg_x2, deg_y3, deg_x3;
};

// Projection formula: the triple pairing over Y/S computed through the
// rank k1*deg_y2 fiber algebra equals, up to unit, the X/S-pairing of
// the outer section with the inner pairing section.
VerifyReport verify_projection(const TowerInput& tower);

/// Per-slot scalars representing bundle isomorphisms u_i given by
/// multiplication.
struct ScalarIsomorphism {
    std::vector<RatFunc> scalars;  // one nonzero scalar per slot
};

struct IsomorphismResult {
    PairingCertificate scaled;
    RatFunc predicted;  // value * prod_i lambda_i^(prod_{j != i} k_j)
    bool law_holds = false;
    VerifyReport report;
};

// Re-pairs the scaled sections and asserts the resultant homogeneity
// law for the scale factors.
IsomorphismResult apply_isomorphism(const SectionSequence& seq, const ScalarIsomorphism& iso);

}  // namespace delpair
