#include "delpair/smith.hpp"

#include <algorithm>

#include "delpair/errors.hpp"

namespace delpair {

namespace {

// Euclidean domain hooks for the reduction. quo_rem must return a
// remainder strictly smaller than the divisor in the domain's size.
struct IntDomain {
    using E = Int;
    static bool is_zero(const E& x) { return x == 0; }
    static bool smaller(const E& a, const E& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
    static E quo(const E& a, const E& b) {
        E q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static E canonical(const E& x) { return x < 0 ? E(-x) : x; }
    static RatFunc to_ratfunc(const E& x) { return RatFunc(Rat(x)); }
};

struct PolyDomain {
    using E = QPoly;
    static bool is_zero(const E& x) { return x.is_zero(); }
    static bool smaller(const E& a, const E& b) { return a.degree() < b.degree(); }
    static E quo(const E& a, const E& b) { return QPoly::divmod(a, b).first; }
    static E canonical(const E& x) { return x.monic(); }
    static RatFunc to_ratfunc(const E& x) { return RatFunc(x); }
};

template <typename D>
SmithData smith_reduce(Matrix<typename D::E> m) {
    using E = typename D::E;
    const int n = std::min(m.rows(), m.cols());
    SmithData out;
    int t = 0;
    for (; t < n; ++t) {
        // Locate a pivot of minimal Euclidean size in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j)
                if (!D::is_zero(m(i, j)) && (pi < 0 || D::smaller(m(i, j), m(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero
        if (pi != t) m.swap_rows(t, pi);
        if (pj != t) m.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (int i = t + 1; i < m.rows(); ++i) {
                if (D::is_zero(m(i, t))) continue;
                E q = D::quo(m(i, t), m(t, t));
                for (int j = t; j < m.cols(); ++j) m(i, j) = m(i, j) - q * m(t, j);
                if (!D::is_zero(m(i, t))) {
                    m.swap_rows(t, i);  // remainder is strictly smaller
                    dirty = true;
                }
            }
            for (int j = t + 1; j < m.cols(); ++j) {
                if (D::is_zero(m(t, j))) continue;
                E q = D::quo(m(t, j), m(t, t));
                for (int i = t; i < m.rows(); ++i) m(i, j) = m(i, j) - q * m(i, t);
                if (!D::is_zero(m(t, j))) {
                    m.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // Pivot must divide the whole trailing block for the
                // divisibility chain; otherwise fold a bad row in and
                // keep reducing.
                for (int i = t + 1; i < m.rows() && !dirty; ++i)
                    for (int j = t + 1; j < m.cols() && !dirty; ++j) {
                        E rem = m(i, j) - D::quo(m(i, j), m(t, t)) * m(t, t);
                        if (!D::is_zero(rem)) {
                            for (int jj = t; jj < m.cols(); ++jj) m(t, jj) = m(t, jj) + m(i, jj);
                            dirty = true;
                        }
                    }
            }
        }
        out.invariants.push_back(D::to_ratfunc(D::canonical(m(t, t))));
    }
    out.rank_deficiency = n - t;
    return out;
}

}  // namespace

SmithData smith_normal_form(const Matrix<RatFunc>& m, const BaseRing& ring) {
    if (!m.is_square()) throw std::invalid_argument("Smith reduction expects a square matrix");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!ring.contains(m(i, j)))
                throw UnsupportedRing("matrix entry " + m(i, j).to_text(ring.variable()) +
                                      " is not an element of " + ring.name());

    switch (ring.kind()) {
        case RingKind::Rationals: {
            // Field case: invariants are all 1, one per unit of rank.
            Matrix<Rat> g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = m(i, j).as_rational();
            int rank = 0;
            for (int col = 0; col < n && rank < n; ++col) {
                int pivot = -1;
                for (int i = rank; i < n; ++i)
                    if (g(i, col) != 0) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0) continue;
                g.swap_rows(rank, pivot);
                for (int i = rank + 1; i < n; ++i) {
                    if (g(i, col) == 0) continue;
                    Rat f = g(i, col) / g(rank, col);
                    for (int j = col; j < n; ++j) g(i, j) -= f * g(rank, j);
                }
                ++rank;
            }
            SmithData out;
            out.invariants.assign(rank, RatFunc(Rat(1)));
            out.rank_deficiency = n - rank;
            return out;
        }
        case RingKind::Integers: {
            Matrix<Int> mi(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mi(i, j) = m(i, j).num().coeff(0).get_num();
            return smith_reduce<IntDomain>(std::move(mi));
        }
        case RingKind::PolyOverQ: {
            Matrix<QPoly> mp(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mp(i, j) = m(i, j).num();
            return smith_reduce<PolyDomain>(std::move(mp));
        }
    }
    throw UnsupportedRing("unhandled base ring kind");
}

UnitRatioResult unit_ratio(const Matrix<RatFunc>& u, const Matrix<RatFunc>& u_other,
                           const BaseRing& ring) {
    RatFunc det_a = det_fraction_free(u);
    RatFunc det_b = det_fraction_free(u_other);
    if (det_a.is_zero() != det_b.is_zero())
        throw SingularInput("exactly one endomorphism is singular; cokernels cannot agree");
    UnitRatioResult out;
    if (det_a.is_zero()) {
        out.comparable = true;
        out.doubly_singular = true;
        out.unit = RatFunc(Rat(1));
        return out;
    }

    auto nontrivial = [&](const SmithData& s) {
        std::vector<RatFunc> inv;
        for (const auto& q : s.invariants)
            if (!ring.is_unit(q)) inv.push_back(q);
        return inv;
    };
    SmithData sa = smith_normal_form(u, ring);
    SmithData sb = smith_normal_form(u_other, ring);
    if (nontrivial(sa) != nontrivial(sb)) return out;  // Incomparable

    out.comparable = true;
    out.unit = det_a / det_b;
    if (!ring.is_unit(out.unit))
        throw SingularInput("determinant ratio " + ring.element_text(out.unit) +
                            " is not a unit despite equal invariants");
    return out;
}

}  // namespace delpair
