#pragma once

#include <string>
#include <vector>

#include "delpair/base_ring.hpp"
#include "delpair/matrix.hpp"

namespace delpair {

/// A finite algebra B over a base ring A, given by a basis e_1..e_n and
/// structure constants: e_i * e_j = sum_k table[i][j][k] e_k with
/// fraction-field entries. Commutativity, associativity and the unit
/// are validated at construction; everything downstream (norms,
/// pairings, certificates) trusts the table.
class FiniteAlgebra {
public:
    FiniteAlgebra(BaseRing base, int rank, std::vector<RatFunc> structure_constants,
                  std::vector<RatFunc> unit_coords);

    // Companion algebra A[x]/(p) for a monic p of degree k >= 1 given by
    // ascending coefficients (p[k] == 1); basis 1, x, ..., x^(k-1).
    static FiniteAlgebra companion(const BaseRing& base, const std::vector<RatFunc>& monic_poly);

    const BaseRing& base() const { return base_; }
    int rank() const { return rank_; }
    const RatFunc& structure_constant(int i, int j, int k) const {
        return mult_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }
    const std::vector<RatFunc>& unit_coords() const { return unit_; }
    // True when every structure constant lies in the base ring; together
    // with base-ring element coordinates this forces integral norms.
    bool integral_structure() const { return integral_structure_; }

    std::vector<RatFunc> multiply(const std::vector<RatFunc>& a,
                                  const std::vector<RatFunc>& b) const;
    std::vector<RatFunc> scale(const RatFunc& s) const;  // coordinates of s * 1_B

    // Matrix of multiplication by f on B tensored with the fraction field.
    Matrix<RatFunc> multiplication_operator(const std::vector<RatFunc>& f) const;

    // det(L_f). If f and the structure constants are integral over the
    // base ring, the result is certified to lie in the base ring;
    // failure throws IntegralityViolation (the base rings here are
    // integrally closed, so a violation means a corrupt table).
    RatFunc norm_element(const std::vector<RatFunc>& f) const;

    // Norm of a module endomorphism given as a matrix in the fixed
    // trivialization; checks commutation with the algebra action and
    // throws NotModuleLinear otherwise. Zero determinant means the map
    // is not injective.
    RatFunc norm_module_map(const Matrix<RatFunc>& h) const;

    // Base change Q[t] -> Q at t = t0; throws SpecializationPole when a
    // structure-constant denominator vanishes there.
    FiniteAlgebra specialize(const Rat& t0) const;

    bool element_is_integral(const std::vector<RatFunc>& f) const;

private:
    void validate() const;
    BaseRing base_;
    int rank_;
    std::vector<RatFunc> mult_;
    std::vector<RatFunc> unit_;
    bool integral_structure_ = false;
};

struct PullbackPowerCheck {
    RatFunc computed;
    RatFunc expected;
    bool equal = false;
};

// Scalar shadow of the pull-back power law: Nm(m * 1_B) versus m^rank.
PullbackPowerCheck pullback_power_check(const FiniteAlgebra& algebra, const RatFunc& m);

}  // namespace delpair
