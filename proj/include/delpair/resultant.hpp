#pragma once

#include <string>
#include <vector>

#include "delpair/matrix.hpp"
#include "delpair/mpoly.hpp"

namespace delpair {

/// Sylvester matrix of two coefficient sequences given in descending
/// order (entry 0 is the top coefficient). Sequences of length k+1
/// describe forms of degree k; zero top coefficients are legitimate and
/// encode zeros at infinity. Works over any integral-domain scalar.
template <typename C>
Matrix<C> sylvester_matrix(const std::vector<C>& f, const std::vector<C>& g) {
    int k1 = static_cast<int>(f.size()) - 1;
    int k2 = static_cast<int>(g.size()) - 1;
    Matrix<C> m(k1 + k2, k1 + k2);
    for (int r = 0; r < k2; ++r)
        for (int j = 0; j <= k1; ++j) m(r, r + j) = f[static_cast<size_t>(j)];
    for (int r = 0; r < k1; ++r)
        for (int j = 0; j <= k2; ++j) m(k2 + r, r + j) = g[static_cast<size_t>(j)];
    return m;
}

template <typename C>
C sylvester_resultant(const std::vector<C>& f, const std::vector<C>& g) {
    return det_fraction_free(sylvester_matrix(f, g));
}

// Resultant of two binary forms on P^1 in the given coordinates;
// vanishes exactly when they share a projective zero.
RatFunc binary_form_resultant(const MPoly& f, int deg_f, const MPoly& g, int deg_g,
                              const std::string& hi, const std::string& lo);

// Resultant of two forms with respect to one variable, with the other
// variables retained in the coefficients. Both degrees must be positive.
MPoly variable_resultant(const MPoly& f, const MPoly& g, const std::string& var);

struct MacaulayResult {
    RatFunc value;
    // Nonidentity when the canonical minor degenerated and a recorded
    // unimodular coordinate change was applied (value then differs from
    // the untransformed resultant by at most a sign).
    std::string coordinate_change = "";
};

// Classical Macaulay resultant of n forms of the given degrees in n
// variables, at the critical degree: det of the Macaulay matrix divided
// by the det of its non-reduced minor.
MacaulayResult macaulay_resultant(const std::vector<MPoly>& forms, const std::vector<int>& degrees,
                                  const std::vector<std::string>& vars);

}  // namespace delpair
