#ifndef MZLAB_MATRIX_HPP
#define MZLAB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "mzlab/ring.hpp"

namespace mzlab {

// Dense matrix over a field coefficient ring (Q or F_p).
class Mat {
  public:
    Mat() : ring_(Ring::q()) {}
    Mat(Ring field, size_t rows, size_t cols)
        : ring_(field), rows_(rows), cols_(cols), a_(rows * cols, Coeff::zero(field)) {}

    static Mat identity(Ring field, size_t n);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Coeff& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Coeff& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Coeff& c) const;
    Mat power(unsigned e) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool is_zero() const;

    std::vector<Coeff> apply(const std::vector<Coeff>& v) const;  // matrix * column

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;

    // Rows spanning the kernel {v : M v = 0}, returned in RREF.
    Mat nullspace() const;
    // Rows spanning the column space, returned in RREF.
    Mat colspace() const;

    // Drops all-zero rows (used after rref to get a canonical basis matrix).
    Mat without_zero_rows() const;

  private:
    Ring ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Coeff> a_;
};

// Canonical row space of a list of row vectors: RREF, zero rows dropped.
Mat row_space(Ring field, const std::vector<std::vector<Coeff>>& rows, size_t cols);

// Exact membership of v in the row space of an RREF basis matrix.
bool in_row_space(const Mat& rref_basis, std::vector<Coeff> v);

// Dense matrix over Z for lattice computations.
class IntMat {
  public:
    IntMat() = default;
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    bool operator==(const IntMat& o) const = default;

    // In-place row Hermite normal form: echelon, positive pivots, entries
    // above each pivot reduced into [0, pivot); zero rows dropped.
    void hnf();

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

IntMat hnf_span(const std::vector<std::vector<mpz_class>>& rows, size_t cols);

// Exact Z-membership of v in the row lattice of an HNF basis.
bool in_lattice(const IntMat& hnf_basis, std::vector<mpz_class> v);

}  // namespace mzlab

#endif
