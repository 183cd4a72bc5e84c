#pragma once

#include <cstddef>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

// Dense matrix over Q.  Rank is fraction-free (Bareiss); everything is exact.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    QMat operator*(const QMat& o) const;
    bool operator==(const QMat& o) const;

    // Columns of this followed by columns of o (row counts must match).
    QMat hstack(const QMat& o) const;

    // Fraction-free Gaussian elimination on an integer-scaled copy.  Pivot
    // choice: smallest nonzero |entry| in the current column, ties broken by
    // the lowest row index.
    std::size_t rank() const;

    // Basis of { x : Ax = 0 } as matrix columns (cols() x nullity).
    QMat nullspace() const;

    QMat mat_pow(unsigned k) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// dim(U cap W) for the column spans of A and B via
// dim U + dim W - dim(U + W); spanning sets, not bases, are fine.
std::size_t intersection_dim(const QMat& A, const QMat& B);

}  // namespace germlab
