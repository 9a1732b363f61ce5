#pragma once

#include <cstdint>
#include <vector>

#include "ident/ratfunc.hpp"

namespace ident {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

/*
 * Reduced row echelon form over any field type with +,-,*,/ and is_zero.
 * Pivot choice is fixed: leftmost nonzero column, then the first admissible
 * row, so identical input gives identical output.
 */
template <class T>
Matrix<T> rref(Matrix<T> m) {
    size_t pr = 0;
    for (size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        size_t pivot = pr;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != pr)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(pr, j));
        T inv = m.at(pr, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) / inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, col).is_zero()) continue;
            T f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(pr, j);
        }
        ++pr;
    }
    return m;
}

template <class T>
size_t rref_rank(const Matrix<T>& r) {
    size_t rank = 0;
    for (size_t i = 0; i < r.rows(); ++i)
        for (size_t j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) {
                ++rank;
                break;
            }
    return rank;
}

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators.
size_t rank_symbolic(const Matrix<RatFunc>& m);
size_t rank_symbolic(const Matrix<Rational>& m);

/*
 * Monte-Carlo lower bound on the rank: evaluates the matrix at `trials`
 * random integer points in [-2^31, 2^31] (resampling points which hit a
 * denominator zero) and takes the maximal rank seen. Reproducible from the
 * seed on any platform.
 */
size_t rank_probabilistic(const Matrix<RatFunc>& m, uint64_t seed, int trials);

// Deterministic cross-platform PRNG (splitmix64 stream).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    // uniform in [lo, hi] via rejection sampling
    int64_t uniform(int64_t lo, int64_t hi);

  private:
    uint64_t state_;
};

}  // namespace ident
