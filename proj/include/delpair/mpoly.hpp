#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpair/base_ring.hpp"
#include "delpair/matrix.hpp"
#include "delpair/ratfunc.hpp"

namespace delpair {

/// Sparse multivariate polynomial in named variables with fraction-field
/// coefficients. The base-ring variable (t in Q[t]) is never a polynomial
/// variable here; it lives inside the RatFunc coefficients. Variables are
/// kept sorted by name and terms ordered lexicographically, which fixes
/// the canonical text form.
class MPoly {
public:
    using Exp = std::vector<int>;

    MPoly() = default;
    MPoly(long constant) { *this = MPoly(RatFunc(constant)); }
    explicit MPoly(const RatFunc& constant);
    static MPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, RatFunc>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    RatFunc constant_value() const;  // requires is_constant()
    int total_degree() const;        // -1 for zero
    int degree_in(const std::string& var) const;
    std::optional<int> homogeneous_degree() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const;
    MPoly pow(unsigned long e) const;

    // Exact quotient in the polynomial ring; throws std::domain_error if
    // the division leaves a remainder.
    MPoly exact_div(const MPoly& divisor) const;

    MPoly substitute(const std::string& var, const MPoly& value) const;
    MPoly set_var(const std::string& var, const RatFunc& value) const;
    // Applies var -> value to every coefficient (specialization of the
    // base-ring variable inside RatFunc).
    MPoly specialize_coeffs(const Rat& value) const;

    // Coefficients of a binary form: entry j is the coefficient of
    // hi^j * lo^(degree-j). Requires the polynomial to involve only the
    // two given variables and be homogeneous of the given degree (zero
    // is allowed).
    std::vector<RatFunc> binary_coeffs(const std::string& hi, const std::string& lo,
                                       int degree) const;
    // Decomposition by powers of one variable; the returned polynomials
    // no longer involve it.
    std::map<int, MPoly> coeffs_in(const std::string& var) const;

    std::string to_text(const std::string& base_var) const;

private:
    static void align(MPoly& a, MPoly& b);
    void add_term(const Exp& e, const RatFunc& c);
    void remap(const std::vector<std::string>& new_vars);
    std::vector<std::string> vars_;   // sorted
    std::map<Exp, RatFunc> terms_;    // exponent vector (parallel to vars_) -> nonzero coefficient
};

inline bool dp_is_zero(const MPoly& x) { return x.is_zero(); }
inline MPoly dp_exact_div(const MPoly& a, const MPoly& b) { return a.exact_div(b); }

}  // namespace delpair
