#include "germlab/ratmat.hpp"

#include <cassert>
#include <stdexcept>

namespace germlab {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : a_) {
        if (x != 0) return false;
    }
    return true;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

bool QMat::operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QMat QMat::hstack(const QMat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch in hstack");
    QMat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::size_t QMat::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // Scale every row to a primitive integer row; row scaling preserves rank.
    std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            Int l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), at(i, j).get_den().get_mpz_t());
            den = l;
        }
        Int content = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            m[i][j] = at(i, j).get_num() * (den / at(i, j).get_den());
            Int g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), m[i][j].get_mpz_t());
            content = g;
        }
        if (content > 1) {
            for (std::size_t j = 0; j < cols_; ++j) {
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), content.get_mpz_t());
            }
        }
    }

    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        // Smallest |entry| keeps the Bareiss minors small.
        std::size_t piv = rows_;
        for (std::size_t i = rank; i < rows_; ++i) {
            if (m[i][col] == 0) continue;
            if (piv == rows_ || mpz_cmpabs(m[i][col].get_mpz_t(), m[piv][col].get_mpz_t()) < 0) {
                piv = i;
            }
        }
        if (piv == rows_) continue;
        std::swap(m[rank], m[piv]);
        const std::vector<Int>& p = m[rank];
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j) {
                Int t = m[i][j] * p[col] - m[i][col] * p[j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = p[col];
        ++rank;
    }
    return rank;
}

QMat QMat::nullspace() const {
    // Gauss-Jordan to reduced row echelon form.
    QMat m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = row; i < rows_; ++i) {
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(piv, j));
        const Rat inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }

    QMat basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            basis.at(pivot_col[r], k) = -m.at(r, fc);
        }
    }
    return basis;
}

QMat QMat::mat_pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix power of a non-square matrix");
    QMat acc = identity(rows_);
    QMat base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

std::size_t intersection_dim(const QMat& A, const QMat& B) {
    const std::size_t du = A.rank();
    const std::size_t dw = B.rank();
    const std::size_t dsum = A.hstack(B).rank();
    return du + dw - dsum;
}

}  // namespace germlab
