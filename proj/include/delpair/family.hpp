#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpair/algebra.hpp"
#include "delpair/base_ring.hpp"
#include "delpair/mpoly.hpp"

namespace delpair {

/// X = P^d over the base ring, with homogeneous coordinates x0..xd.
/// Surjective, projective, of pure relative dimension d over every base
/// point by construction.
struct ProjectiveFamily {
    ProjectiveFamily(BaseRing base, int fiber_dim);
    BaseRing base;
    int dim;  // d in {1,2,3}; finite fibers (d = 0) are FiniteAlgebra instead
    std::vector<std::string> coords() const;
    bool operator==(const ProjectiveFamily& o) const { return base == o.base && dim == o.dim; }
};

/// A global section of O(k): a homogeneous form of degree k in the
/// family coordinates with base-ring coefficients, nonzero on the
/// generic fiber.
struct BundleSection {
    BundleSection(const ProjectiveFamily& family, int twist, MPoly form);
    ProjectiveFamily family;
    int twist;
    MPoly form;
};

struct SectionSequence {
    SectionSequence(ProjectiveFamily family, std::vector<BundleSection> sections);
    ProjectiveFamily family;
    std::vector<BundleSection> sections;
    SectionSequence permuted(const std::vector<int>& perm) const;  // perm[i] = 1-based source slot
};

/// Unimodular integer coordinate change on P^1 recorded alongside
/// dehomogenization data: x0 -> a*x0 + b*x1, x1 -> c*x0 + d*x1.
struct CoordChange {
    int a = 1, b = 0, c = 0, d = 1;
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    MPoly apply(const MPoly& form) const;
    std::string describe() const;
};

struct RegularityCertificate {
    bool prefix_certified = false;  // first min(len, d) sections form an f-regular sequence
    bool certified = false;         // prefix + nonvanishing full resultant (+ global demand)
    int failing_index = 0;          // 1-based first failing slot; 0 when certified
    std::string reason;
    RatFunc resultant = RatFunc(Rat(1));  // full-sequence resultant when length == d+1
    std::string resultant_kind = "none";  // sylvester | macaulay | none
    std::vector<Rat> bad_fibers;          // rational roots of r(t) over Q[t]
    bool nonrational_bad_locus = false;
    bool demanded_global = false;
};

// Exact certification by resultants: Sylvester for d = 1, Macaulay plus
// pairwise coprimality for d = 2,3. Over Q[t] the certificate records
// r(t) and its rational roots (the fibers where regularity degenerates);
// demand_global turns a nonempty bad locus into a refutation.
RegularityCertificate certify_regular(const SectionSequence& seq, bool demand_global = false);

struct OrderCheck {
    bool agree = false;
    RegularityCertificate original;
    RegularityCertificate permuted;
};
// Certifies both orderings and reports whether the verdicts agree
// (they must, by order-independence of regular sequences).
OrderCheck order_permuted_is_regular(const SectionSequence& seq, const std::vector<int>& perm,
                                     bool demand_global = false);

// Bezout product of the d twists on P^d. The d = 0 convention (degree of
// the finite fiber) is handled by the caller with a FiniteAlgebra rank.
long intersection_number(const ProjectiveFamily& family, const std::vector<int>& twists);

/// Coordinate ring of Z(s) on P^1 as a finite base-ring algebra of rank
/// k = deg(s), built from the companion matrix of the monic
/// dehomogenized form. The chart / coordinate change used to reach a
/// unit leading coefficient is recorded so later restrictions stay
/// comparable.
struct ZeroLocusData {
    FiniteAlgebra algebra;
    std::vector<RatFunc> minimal_poly;  // monic, ascending powers, degree k
    CoordChange chart;
    RatFunc lead_unit;  // leading coefficient removed while making it monic
};

ZeroLocusData zero_locus_algebra(const BundleSection& s);

// Coordinates of s|_Z(s1) in the companion basis 1, x, ..., x^(k-1):
// apply the recorded chart, dehomogenize, reduce modulo the minimal
// polynomial.
std::vector<RatFunc> restrict_section(const ZeroLocusData& locus, const BundleSection& s);

// Content analysis used for bad-fiber reporting over Q[t]: rational
// roots of the gcd of all coefficient numerators.
QPoly coefficient_content(const MPoly& form);

}  // namespace delpair
