#pragma once

#include <string>

#include "delpair/qpoly.hpp"

namespace delpair {

/// Element of the fraction field Q(v): a reduced quotient of two QPoly
/// with monic denominator. Constants embed Q; every supported base ring
/// lives inside one of these fields, so this is the scalar type used by
/// all matrices, structure constants and pairing values.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    RatFunc(long constant) : num_(constant), den_(Rat(1)) {}
    RatFunc(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}
    RatFunc(QPoly num, QPoly den);
    static RatFunc variable() { return RatFunc(QPoly::variable()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rat as_rational() const;  // requires is_constant()

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc pow(long e) const;

    // Substitute v = x; throws SpecializationPole when the denominator
    // vanishes at x.
    Rat eval(const Rat& x) const;

    std::string to_text(const std::string& var) const;

private:
    void reduce();
    QPoly num_;
    QPoly den_;
};

}  // namespace delpair
