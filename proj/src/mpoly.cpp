#include "delpair/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "delpair/errors.hpp"

namespace delpair {

MPoly::MPoly(const RatFunc& constant) {
    if (!constant.is_zero()) terms_[Exp{}] = constant;
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_[Exp{1}] = RatFunc(Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x != 0) return false;
    return true;
}

RatFunc MPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    if (terms_.empty()) return RatFunc();
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

std::optional<int> MPoly::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (deg && *deg != s) return std::nullopt;
        deg = s;
    }
    return deg;
}

void MPoly::remap(const std::vector<std::string>& new_vars) {
    std::map<Exp, RatFunc> out;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exp ne(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out[std::move(ne)] = c;
    }
    vars_ = new_vars;
    terms_ = std::move(out);
}

void MPoly::align(MPoly& a, MPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged = a.vars_;
    for (const auto& v : b.vars_)
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    a.remap(merged);
    b.remap(merged);
}

void MPoly::add_term(const Exp& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly x = a, y = b;
    MPoly::align(x, y);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly x = a, y = b;
    MPoly::align(x, y);
    for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly x = a, y = b;
    MPoly::align(x, y);
    MPoly r;
    r.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            MPoly::Exp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    MPoly x = *this, y = o;
    align(x, y);
    return x.terms_ == y.terms_;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly acc(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    MPoly rem = *this, div = divisor;
    align(rem, div);
    MPoly quo;
    quo.vars_ = rem.vars_;
    const auto& dlt = *div.terms_.rbegin();  // leading term in lex order
    while (!rem.terms_.empty()) {
        const auto& rlt = *rem.terms_.rbegin();
        Exp qe(rlt.first.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            qe[i] = rlt.first[i] - dlt.first[i];
            if (qe[i] < 0) throw std::domain_error("polynomial division is not exact");
        }
        RatFunc qc = rlt.second / dlt.second;
        quo.add_term(qe, qc);
        for (const auto& [e, c] : div.terms_) {
            Exp ne(e.size());
            for (size_t i = 0; i < ne.size(); ++i) ne[i] = e[i] + qe[i];
            rem.add_term(ne, -(c * qc));
        }
    }
    return quo;
}

MPoly MPoly::substitute(const std::string& var, const MPoly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MPoly out;
    for (const auto& [e, c] : terms_) {
        MPoly term(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i == idx)
                term *= value.pow(static_cast<unsigned long>(e[i]));
            else
                term *= MPoly::variable(vars_[i]).pow(static_cast<unsigned long>(e[i]));
        }
        out += term;
    }
    return out;
}

MPoly MPoly::set_var(const std::string& var, const RatFunc& value) const {
    return substitute(var, MPoly(value));
}

MPoly MPoly::specialize_coeffs(const Rat& value) const {
    MPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.add_term(e, RatFunc(c.eval(value)));
    return out;
}

std::vector<RatFunc> MPoly::binary_coeffs(const std::string& hi, const std::string& lo,
                                          int degree) const {
    std::vector<RatFunc> out(static_cast<size_t>(degree) + 1, RatFunc());
    int hi_idx = -1, lo_idx = -1;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == hi) hi_idx = static_cast<int>(i);
        if (vars_[i] == lo) lo_idx = static_cast<int>(i);
    }
    for (const auto& [e, c] : terms_) {
        int eh = hi_idx >= 0 ? e[hi_idx] : 0;
        int el = lo_idx >= 0 ? e[lo_idx] : 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && static_cast<int>(i) != hi_idx && static_cast<int>(i) != lo_idx)
                throw std::logic_error("form involves variable " + vars_[i] +
                                       " outside the binary pair");
        if (eh + el != degree)
            throw HomogeneityError("term of degree " + std::to_string(eh + el) +
                                   " in a form declared of degree " + std::to_string(degree));
        out[static_cast<size_t>(eh)] = c;
    }
    return out;
}

std::map<int, MPoly> MPoly::coeffs_in(const std::string& var) const {
    std::map<int, MPoly> out;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    std::vector<std::string> rest = vars_;
    int idx = -1;
    if (it != vars_.end()) {
        idx = static_cast<int>(it - vars_.begin());
        rest.erase(rest.begin() + idx);
    }
    for (const auto& [e, c] : terms_) {
        int power = idx >= 0 ? e[static_cast<size_t>(idx)] : 0;
        Exp re;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != idx) re.push_back(e[i]);
        auto& slot = out[power];
        if (slot.vars_.empty() && slot.terms_.empty()) slot.vars_ = rest;
        slot.add_term(re, c);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::string MPoly::to_text(const std::string& base_var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool has_mono = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });

        // Present the coefficient as (sign, magnitude). Single-term
        // polynomial coefficients keep their sign outside; anything
        // else is parenthesized.
        bool neg = false;
        std::string mag;
        if (c.is_constant()) {
            Rat r = c.as_rational();
            neg = r < 0;
            Rat a = neg ? Rat(-r) : r;
            if (a == 1 && has_mono)
                mag = "";
            else
                mag = a.get_str();
        } else if (c.is_polynomial()) {
            const QPoly& p = c.num();
            int nonzero = 0;
            for (int i = 0; i <= p.degree(); ++i)
                if (p.coeff(i) != 0) ++nonzero;
            if (nonzero == 1) {
                int k = p.degree();
                Rat a = p.coeff(k);
                neg = a < 0;
                if (neg) a = -a;
                mag = (a == 1) ? "" : a.get_str();
                if (!mag.empty()) mag += "*";
                mag += base_var;
                if (k > 1) mag += "^" + std::to_string(k);
            } else {
                mag = "(" + c.to_text(base_var) + ")";
            }
        } else {
            mag = "(" + c.to_text(base_var) + ")";
        }

        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";

        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mag.empty() && mono.empty()) mag = "1";
        out += mag;
        if (!mag.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

}  // namespace delpair
