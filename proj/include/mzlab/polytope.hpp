#ifndef MZLAB_POLYTOPE_HPP
#define MZLAB_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "mzlab/poly.hpp"

namespace mzlab {

// Monomial support of a nonzero Laurent polynomial; duplicates removed.
struct SupportSet {
    std::vector<ExpVec> points;
};

SupportSet support(const Poly& f);  // throws zero_polynomial_error

// Exact rational LP feasibility of  sum l_i v_i = 0, sum l_i = 1, l_i >= 0,
// solved by a dense phase-1 simplex with Bland's rule.
bool contains_origin(const SupportSet& s);

// f lies in the radical of the no-constant-term subspace iff the origin is
// outside the polytope of f.  Characteristic-zero coefficients only.
bool dk_radical_test(const Poly& f);

// Smallest m <= max_power with a nonzero constant term in f^m.
std::optional<int> constant_term_probe(const Poly& f, int max_power);

}  // namespace mzlab

#endif
