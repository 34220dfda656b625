#include "delpair/algebra.hpp"

#include "delpair/errors.hpp"

namespace delpair {

FiniteAlgebra::FiniteAlgebra(BaseRing base, int rank, std::vector<RatFunc> structure_constants,
                             std::vector<RatFunc> unit_coords)
    : base_(std::move(base)), rank_(rank), mult_(std::move(structure_constants)),
      unit_(std::move(unit_coords)) {
    if (rank_ <= 0) throw InvalidAlgebra("rank must be positive");
    size_t n = static_cast<size_t>(rank_);
    if (mult_.size() != n * n * n)
        throw InvalidAlgebra("structure constant table has wrong size");
    if (unit_.size() != n) throw InvalidAlgebra("unit coordinate vector has wrong size");
    validate();
    integral_structure_ = true;
    for (const auto& c : mult_)
        if (!base_.contains(c)) integral_structure_ = false;
    for (const auto& c : unit_)
        if (!base_.contains(c)) integral_structure_ = false;
}

FiniteAlgebra FiniteAlgebra::companion(const BaseRing& base,
                                       const std::vector<RatFunc>& monic_poly) {
    int k = static_cast<int>(monic_poly.size()) - 1;
    if (k < 1 || !monic_poly.back().is_one())
        throw InvalidAlgebra("companion algebra needs a monic polynomial of degree >= 1");
    size_t n = static_cast<size_t>(k);
    // Powers x^m reduced modulo p for m <= 2k-2.
    std::vector<std::vector<RatFunc>> powers;
    std::vector<RatFunc> cur(n, RatFunc());
    cur[0] = RatFunc(Rat(1));
    powers.push_back(cur);
    for (int m = 1; m <= 2 * k - 2; ++m) {
        std::vector<RatFunc> next(n, RatFunc());
        // multiply by x
        RatFunc overflow = cur[n - 1];
        for (size_t i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = RatFunc();
        if (!overflow.is_zero())
            for (size_t i = 0; i < n; ++i) next[i] -= overflow * monic_poly[i];
        powers.push_back(next);
        cur = next;
    }
    std::vector<RatFunc> mult(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) mult[(i * n + j) * n + l] = powers[i + j][l];
    std::vector<RatFunc> unit(n, RatFunc());
    unit[0] = RatFunc(Rat(1));
    return FiniteAlgebra(base, k, std::move(mult), std::move(unit));
}

void FiniteAlgebra::validate() const {
    size_t n = static_cast<size_t>(rank_);
    auto c = [&](size_t i, size_t j, size_t k) -> const RatFunc& {
        return mult_[(i * n + j) * n + k];
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (!(c(i, j, k) == c(j, i, k)))
                    throw InvalidAlgebra("structure constants are not commutative at basis pair (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    // Associativity on all basis triples: (e_i e_j) e_k == e_i (e_j e_k).
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                for (size_t m = 0; m < n; ++m) {
                    RatFunc lhs, rhs;
                    for (size_t l = 0; l < n; ++l) {
                        lhs += c(i, j, l) * c(l, k, m);
                        rhs += c(j, k, l) * c(i, l, m);
                    }
                    if (!(lhs == rhs))
                        throw InvalidAlgebra("structure constants are not associative at triple (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             "," + std::to_string(k + 1) + ")");
                }
            }
    // Two-sided identity (one side suffices once commutativity holds).
    for (size_t j = 0; j < n; ++j)
        for (size_t m = 0; m < n; ++m) {
            RatFunc v;
            for (size_t i = 0; i < n; ++i) v += unit_[i] * c(i, j, m);
            RatFunc want = (m == j) ? RatFunc(Rat(1)) : RatFunc();
            if (!(v == want)) throw InvalidAlgebra("declared unit is not an identity");
        }
}

std::vector<RatFunc> FiniteAlgebra::multiply(const std::vector<RatFunc>& a,
                                             const std::vector<RatFunc>& b) const {
    size_t n = static_cast<size_t>(rank_);
    std::vector<RatFunc> out(n, RatFunc());
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            RatFunc f = a[i] * b[j];
            for (size_t k = 0; k < n; ++k) {
                const RatFunc& c = mult_[(i * n + j) * n + k];
                if (!c.is_zero()) out[k] += f * c;
            }
        }
    }
    return out;
}

std::vector<RatFunc> FiniteAlgebra::scale(const RatFunc& s) const {
    std::vector<RatFunc> out(unit_.size());
    for (size_t i = 0; i < unit_.size(); ++i) out[i] = s * unit_[i];
    return out;
}

Matrix<RatFunc> FiniteAlgebra::multiplication_operator(const std::vector<RatFunc>& f) const {
    size_t n = static_cast<size_t>(rank_);
    if (f.size() != n) throw InvalidAlgebra("element coordinate vector has wrong length");
    Matrix<RatFunc> L(rank_, rank_);
    for (size_t j = 0; j < n; ++j) {
        // column j holds the coordinates of f * e_j
        for (size_t i = 0; i < n; ++i) {
            if (f[i].is_zero()) continue;
            for (size_t k = 0; k < n; ++k) {
                const RatFunc& c = mult_[(i * n + j) * n + k];
                if (!c.is_zero()) L(static_cast<int>(k), static_cast<int>(j)) += f[i] * c;
            }
        }
    }
    return L;
}

bool FiniteAlgebra::element_is_integral(const std::vector<RatFunc>& f) const {
    for (const auto& x : f)
        if (!base_.contains(x)) return false;
    return true;
}

RatFunc FiniteAlgebra::norm_element(const std::vector<RatFunc>& f) const {
    RatFunc det = det_fraction_free(multiplication_operator(f));
    if (integral_structure_ && element_is_integral(f) && !base_.contains(det))
        throw IntegralityViolation("norm " + base_.element_text(det) +
                                   " of an integral element does not lie in " + base_.name());
    return det;
}

RatFunc FiniteAlgebra::norm_module_map(const Matrix<RatFunc>& h) const {
    if (h.rows() != rank_ || h.cols() != rank_)
        throw NotModuleLinear("endomorphism matrix has wrong shape");
    // B-linearity: h must commute with multiplication by every basis vector.
    for (int i = 0; i < rank_; ++i) {
        std::vector<RatFunc> e(static_cast<size_t>(rank_), RatFunc());
        e[static_cast<size_t>(i)] = RatFunc(Rat(1));
        Matrix<RatFunc> L = multiplication_operator(e);
        if (!(L * h == h * L))
            throw NotModuleLinear("matrix does not commute with the algebra action at basis vector " +
                                  std::to_string(i + 1));
    }
    return det_fraction_free(h);
}

FiniteAlgebra FiniteAlgebra::specialize(const Rat& t0) const {
    if (base_.kind() != RingKind::PolyOverQ)
        return *this;  // constant algebra; nothing to specialize
    auto eval_all = [&](const std::vector<RatFunc>& in) {
        std::vector<RatFunc> out(in.size());
        for (size_t i = 0; i < in.size(); ++i) out[i] = RatFunc(in[i].eval(t0));
        return out;
    };
    return FiniteAlgebra(BaseRing::rationals(), rank_, eval_all(mult_), eval_all(unit_));
}

PullbackPowerCheck pullback_power_check(const FiniteAlgebra& algebra, const RatFunc& m) {
    PullbackPowerCheck out;
    out.computed = algebra.norm_element(algebra.scale(m));
    out.expected = m.pow(algebra.rank());
    out.equal = out.computed == out.expected;
    return out;
}

}  // namespace delpair
