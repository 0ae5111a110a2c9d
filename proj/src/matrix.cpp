#include "mzlab/matrix.hpp"

#include <algorithm>

namespace mzlab {

Mat Mat::identity(Ring field, size_t n) {
    Mat m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Coeff::one(field);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(ring_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

Mat Mat::scaled(const Coeff& c) const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Mat Mat::power(unsigned e) const {
    Mat r = identity(ring_, rows_);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Mat Mat::transpose() const {
    Mat r(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Coeff& c) { return c.is_zero(); });
}

std::vector<Coeff> Mat::apply(const std::vector<Coeff>& v) const {
    std::vector<Coeff> r(rows_, Coeff::zero(ring_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            r[i] = r[i] + at(i, j) * v[j];
        }
    return r;
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = rows_;
        for (size_t i = row; i < rows_; ++i) {
            if (!at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Coeff inv = at(row, col).inv();
        for (size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Coeff f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat m = *this;
    return m.rref().size();
}

Mat Mat::nullspace() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Coeff>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Coeff> v(cols_, Coeff::zero(ring_));
        v[free] = Coeff::one(ring_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return row_space(ring_, basis, cols_);
}

Mat Mat::colspace() const {
    Mat t = transpose();
    t.rref();
    return t.without_zero_rows();
}

Mat Mat::without_zero_rows() const {
    std::vector<std::vector<Coeff>> keep;
    for (size_t i = 0; i < rows_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        std::vector<Coeff> row;
        row.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) row.push_back(at(i, j));
        keep.push_back(std::move(row));
    }
    Mat r(ring_, keep.size(), cols_);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = keep[i][j];
    return r;
}

Mat row_space(Ring field, const std::vector<std::vector<Coeff>>& rows, size_t cols) {
    Mat m(field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    m.rref();
    return m.without_zero_rows();
}

bool in_row_space(const Mat& rref_basis, std::vector<Coeff> v) {
    for (size_t r = 0; r < rref_basis.rows(); ++r) {
        size_t pivot = rref_basis.cols();
        for (size_t j = 0; j < rref_basis.cols(); ++j) {
            if (!rref_basis.at(r, j).is_zero()) {
                pivot = j;
                break;
            }
        }
        if (pivot == rref_basis.cols()) continue;
        if (v[pivot].is_zero()) continue;
        Coeff f = v[pivot];
        for (size_t j = pivot; j < rref_basis.cols(); ++j)
            v[j] = v[j] - f * rref_basis.at(r, j);
    }
    return std::all_of(v.begin(), v.end(), [](const Coeff& c) { return c.is_zero(); });
}

// ---- integer lattices ----

void IntMat::hnf() {
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // clear the column below `row` down to a single nonzero entry
        for (;;) {
            size_t best = rows_;
            for (size_t i = row; i < rows_; ++i) {
                if (at(i, col) == 0) continue;
                if (best == rows_ || abs(at(i, col)) < abs(at(best, col))) best = i;
            }
            if (best == rows_) break;  // column is zero from `row` down
            if (best != row)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(best, j), at(row, j));
            bool others = false;
            for (size_t i = row + 1; i < rows_; ++i) {
                if (at(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), at(i, col).get_mpz_t(), at(row, col).get_mpz_t());
                for (size_t j = 0; j < cols_; ++j) at(i, j) -= q * at(row, j);
                if (at(i, col) != 0) others = true;
            }
            if (!others) break;
        }
        if (at(row, col) == 0) continue;
        if (at(row, col) < 0)
            for (size_t j = 0; j < cols_; ++j) at(row, j) = -at(row, j);
        for (size_t i = 0; i < row; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), at(i, col).get_mpz_t(), at(row, col).get_mpz_t());
            if (q == 0) continue;
            for (size_t j = 0; j < cols_; ++j) at(i, j) -= q * at(row, j);
        }
        ++row;
    }
    // drop zero rows
    std::vector<mpz_class> keep;
    size_t kept = 0;
    for (size_t i = 0; i < rows_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        for (size_t j = 0; j < cols_; ++j) keep.push_back(at(i, j));
        ++kept;
    }
    a_ = std::move(keep);
    rows_ = kept;
}

IntMat hnf_span(const std::vector<std::vector<mpz_class>>& rows, size_t cols) {
    IntMat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    m.hnf();
    return m;
}

bool in_lattice(const IntMat& hnf_basis, std::vector<mpz_class> v) {
    for (size_t r = 0; r < hnf_basis.rows(); ++r) {
        size_t pivot = hnf_basis.cols();
        for (size_t j = 0; j < hnf_basis.cols(); ++j) {
            if (hnf_basis.at(r, j) != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == hnf_basis.cols()) continue;
        if (v[pivot] == 0) continue;
        if (v[pivot] % hnf_basis.at(r, pivot) != 0) return false;
        mpz_class q = v[pivot] / hnf_basis.at(r, pivot);
        for (size_t j = pivot; j < hnf_basis.cols(); ++j) v[j] -= q * hnf_basis.at(r, j);
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace mzlab
