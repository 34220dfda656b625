#pragma once

#include <string>

#include "delpair/ratfunc.hpp"

namespace delpair {

enum class RingKind { Integers, Rationals, PolyOverQ };

/// One of the supported base rings Z, Q, Q[v]. Each is a PID (hence
/// integrally closed), each comes with its fraction field embedded in
/// Q(v), and elements are represented as RatFunc values satisfying the
/// membership predicate below.
class BaseRing {
public:
    BaseRing() : kind_(RingKind::Rationals) {}
    explicit BaseRing(RingKind kind, std::string var = "t")
        : kind_(kind), var_(std::move(var)) {}

    static BaseRing integers() { return BaseRing(RingKind::Integers); }
    static BaseRing rationals() { return BaseRing(RingKind::Rationals); }
    static BaseRing poly_over_q(std::string var = "t") {
        return BaseRing(RingKind::PolyOverQ, std::move(var));
    }
    // Parses "Z", "Q", "Q[t]" (any identifier between the brackets).
    static BaseRing from_name(const std::string& name);

    RingKind kind() const { return kind_; }
    const std::string& variable() const { return var_; }
    bool has_variable() const { return kind_ == RingKind::PolyOverQ; }

    bool contains(const RatFunc& x) const;
    bool is_unit(const RatFunc& x) const;
    // Euclidean base rings support Smith reduction.
    bool is_euclidean_domain() const { return kind_ != RingKind::Rationals; }

    std::string name() const;
    std::string element_text(const RatFunc& x) const { return x.to_text(var_); }

    bool operator==(const BaseRing& o) const {
        return kind_ == o.kind_ && (kind_ != RingKind::PolyOverQ || var_ == o.var_);
    }

private:
    RingKind kind_;
    std::string var_ = "t";
};

}  // namespace delpair
