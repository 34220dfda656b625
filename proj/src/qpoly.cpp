#include "delpair/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "delpair/errors.hpp"

namespace delpair {

QPoly::QPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

QPoly QPoly::variable() {
    QPoly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

QPoly QPoly::from_coeffs(std::vector<Rat> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

Rat QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

const Rat& QPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly::from_coeffs(std::move(r));
}

QPoly& QPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo(a.c_.size() - b.c_.size() + 1, Rat(0));
    const Rat& lead = b.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / lead;
        quo[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.c_[j];
    }
    return {QPoly::from_coeffs(std::move(quo)), QPoly::from_coeffs(std::move(rem))};
}

bool QPoly::divides(const QPoly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r = *this;
    Rat inv = 1 / leading();
    for (auto& x : r.c_) x *= inv;
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return from_coeffs(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly acc(Rat(1));
    QPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Rat> QPoly::rational_roots() const {
    std::vector<Rat> roots;
    if (is_constant()) return roots;
    // Clear denominators to a primitive integer polynomial.
    Int den(1);
    for (const auto& c : c_) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ic(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat scaled = c_[i] * Rat(den);
        ic[i] = scaled.get_num();
    }
    // Strip powers of v.
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    Int a0 = abs(ic[low]);
    Int an = abs(ic.back());
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        for (Int d(1); d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        return ds;
    };
    for (const Int& p : divisors(a0)) {
        for (const Int& q : divisors(an)) {
            for (int sign : {1, -1}) {
                Rat cand(sign * p, q);
                cand.canonicalize();
                if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string QPoly::to_text(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        bool first = out.empty();
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coeff_txt = a.get_str();
        if (i == 0) {
            out += coeff_txt;
        } else {
            if (a != 1) out += coeff_txt + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace delpair
