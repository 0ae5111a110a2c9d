#include "mzlab/polytope.hpp"

#include <algorithm>

namespace mzlab {

SupportSet support(const Poly& f) {
    if (f.is_zero()) throw zero_polynomial_error();
    SupportSet s;
    s.points.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms) s.points.push_back(e);
    return s;
}

namespace {

constexpr size_t kMaxDim = 8;
constexpr size_t kMaxPoints = 64;

// Phase-1 simplex, minimizing the sum of one artificial variable per
// equality row.  Bland's smallest-index rule on entering and leaving
// variables makes cycling impossible.
class Simplex {
  public:
    Simplex(const std::vector<ExpVec>& pts, size_t dim)
        : n_(dim), k_(pts.size()), rows_(n_ + 1), cols_(k_ + rows_) {
        a_.assign(rows_, std::vector<mpq_class>(cols_, 0));
        rhs_.assign(rows_, 0);
        basis_.resize(rows_);
        for (size_t r = 0; r < n_; ++r)
            for (size_t j = 0; j < k_; ++j) a_[r][j] = pts[j][r];
        for (size_t j = 0; j < k_; ++j) a_[n_][j] = 1;
        rhs_[n_] = 1;
        for (size_t r = 0; r < rows_; ++r) {
            a_[r][k_ + r] = 1;
            basis_[r] = k_ + r;
        }
        cost_.assign(cols_, 0);
        cost_rhs_ = 0;
        for (size_t j = 0; j < k_; ++j)
            for (size_t r = 0; r < rows_; ++r) cost_[j] -= a_[r][j];
        for (size_t r = 0; r < rows_; ++r) cost_rhs_ -= rhs_[r];
    }

    bool feasible() {
        for (;;) {
            size_t enter = cols_;
            for (size_t j = 0; j < cols_; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) break;

            size_t leave = rows_;
            mpq_class best;
            for (size_t r = 0; r < rows_; ++r) {
                if (a_[r][enter] <= 0) continue;
                mpq_class ratio = rhs_[r] / a_[r][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows_) throw error("phase-1 simplex claims an unbounded direction");
            pivot(leave, enter);
        }
        return cost_rhs_ == 0;
    }

  private:
    void pivot(size_t r, size_t c) {
        mpq_class inv = 1 / a_[r][c];
        for (size_t j = 0; j < cols_; ++j) a_[r][j] *= inv;
        rhs_[r] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            mpq_class f = a_[i][c];
            for (size_t j = 0; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (cost_[c] != 0) {
            mpq_class f = cost_[c];
            for (size_t j = 0; j < cols_; ++j) cost_[j] -= f * a_[r][j];
            cost_rhs_ -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    size_t n_, k_, rows_, cols_;
    std::vector<std::vector<mpq_class>> a_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> cost_;
    mpq_class cost_rhs_;
    std::vector<size_t> basis_;
};

}  // namespace

bool contains_origin(const SupportSet& s) {
    if (s.points.empty()) throw error("empty support");
    size_t dim = s.points[0].size();
    if (dim > kMaxDim) throw budget_exceeded_error("polytope dimension > 8");
    if (s.points.size() > kMaxPoints) throw budget_exceeded_error("more than 64 support points");
    return Simplex(s.points, dim).feasible();
}

bool dk_radical_test(const Poly& f) {
    if (f.ring.characteristic() != 0)
        throw ring_mismatch_error("the polytope criterion needs characteristic zero");
    return !contains_origin(support(f));
}

std::optional<int> constant_term_probe(const Poly& f, int max_power) {
    if (max_power < 1) throw error("max_power must be >= 1");
    ExpVec origin(f.nvars(), 0);
    Poly p = Poly::constant(f.ring, f.vars, f.laurent, Coeff::one(f.ring));
    for (int m = 1; m <= max_power; ++m) {
        p = p * f;
        if (!coeff_of(p, origin).is_zero()) return m;
    }
    return std::nullopt;
}

}  // namespace mzlab
