#include "delpair/ratfunc.hpp"

#include <stdexcept>

#include "delpair/errors.hpp"

namespace delpair {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::divmod(num_, g).first;
        den_ = QPoly::divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rat RatFunc::as_rational() const {
    if (!is_constant()) throw std::logic_error("rational function is not a constant");
    return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return RatFunc(Rat(1)) / pow(-e);
    RatFunc acc(Rat(1));
    RatFunc base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0)
        throw SpecializationPole("denominator vanishes at specialization point " + x.get_str());
    return num_.eval(x) / d;
}

std::string RatFunc::to_text(const std::string& var) const {
    if (is_polynomial()) return num_.to_text(var);
    std::string n = num_.to_text(var);
    std::string d = den_.to_text(var);
    if (num_.degree() > 0 || num_.coeff(0) < 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace delpair
