#include "delpair/base_ring.hpp"

#include "delpair/errors.hpp"

namespace delpair {

BaseRing BaseRing::from_name(const std::string& name) {
    if (name == "Z") return integers();
    if (name == "Q") return rationals();
    if (name.size() >= 4 && name.substr(0, 2) == "Q[" && name.back() == ']') {
        std::string var = name.substr(2, name.size() - 3);
        for (char c : var)
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw ParseError("invalid base ring variable in '" + name + "'");
        if (var.empty()) throw ParseError("empty base ring variable in '" + name + "'");
        return poly_over_q(var);
    }
    throw ParseError("unknown base ring '" + name + "' (expected Z, Q, or Q[t])");
}

bool BaseRing::contains(const RatFunc& x) const {
    switch (kind_) {
        case RingKind::Integers:
            return x.is_constant() && x.num().coeff(0).get_den() == 1;
        case RingKind::Rationals:
            return x.is_constant();
        case RingKind::PolyOverQ:
            return x.is_polynomial();
    }
    return false;
}

bool BaseRing::is_unit(const RatFunc& x) const {
    switch (kind_) {
        case RingKind::Integers:
            return x.is_constant() && (x.num().coeff(0) == 1 || x.num().coeff(0) == -1);
        case RingKind::Rationals:
            return x.is_constant() && !x.is_zero();
        case RingKind::PolyOverQ:
            return x.is_constant() && !x.is_zero();
    }
    return false;
}

std::string BaseRing::name() const {
    switch (kind_) {
        case RingKind::Integers:
            return "Z";
        case RingKind::Rationals:
            return "Q";
        case RingKind::PolyOverQ:
            return "Q[" + var_ + "]";
    }
    return "?";
}

}  // namespace delpair
