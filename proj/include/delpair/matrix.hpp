#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "delpair/qpoly.hpp"
#include "delpair/ratfunc.hpp"

namespace delpair {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        assert(static_cast<int>(data_.size()) == rows_ * cols_);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (dp_is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

// Zero tests and exact division hooks for the scalar types the
// determinant kernel runs over.
inline bool dp_is_zero(const Int& x) { return x == 0; }
inline bool dp_is_zero(const Rat& x) { return x == 0; }
inline bool dp_is_zero(const QPoly& x) { return x.is_zero(); }
inline bool dp_is_zero(const RatFunc& x) { return x.is_zero(); }

inline Int dp_exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Rat dp_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline QPoly dp_exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = QPoly::divmod(a, b);
    assert(r.is_zero());
    return q;
}
inline RatFunc dp_exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

/// Fraction-free determinant (one-step Bareiss with row pivoting).
/// Intermediate entries stay minors of the input, so over polynomial
/// entries nothing leaves the polynomial ring. Empty matrix gives 1.
template <typename T>
T det_fraction_free(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return T(1);
    T prev = T(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (dp_is_zero(m(k, k))) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!dp_is_zero(m(i, k))) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return T(0);
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = dp_exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? T(0) - det : det;
}

}  // namespace delpair
