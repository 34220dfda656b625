#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace delpair {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with rational coefficients. This is the
/// coefficient carrier of the fraction field Q(v); the variable name is
/// not stored, it belongs to the surrounding ring description.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant);
    QPoly(long constant);
    static QPoly variable();
    static QPoly from_coeffs(std::vector<Rat> coeffs);  // coeffs[i] is the v^i coefficient

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly& operator*=(const Rat& s);
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    bool divides(const QPoly& other) const;
    QPoly monic() const;
    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    QPoly pow(unsigned long e) const;

    // Monic gcd; gcd(0,0) = 0.
    static QPoly gcd(QPoly a, QPoly b);

    // All rational roots, via the rational root theorem on the primitive
    // integer model, with multiplicity stripped (each root listed once).
    std::vector<Rat> rational_roots() const;

    std::string to_text(const std::string& var) const;

private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace delpair
