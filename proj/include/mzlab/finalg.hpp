#ifndef MZLAB_FINALG_HPP
#define MZLAB_FINALG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mzlab/matrix.hpp"

namespace mzlab {

using Elem = std::vector<Coeff>;  // coordinates w.r.t. the algebra basis

// Finite-dimensional associative algebra given by structure constants
// e_i * e_j = sum_k c[i][j][k] e_k.  Associativity (and the unit law, when a
// unit is declared) is verified at construction.
struct StructAlgebra {
    Ring field;
    size_t dim = 0;
    std::vector<Coeff> constants;  // c[(i*dim + j)*dim + k]
    std::optional<Elem> unit;
    bool split_product = false;  // declared K^n with componentwise product

    static StructAlgebra from_constants(Ring field, size_t dim, std::vector<Coeff> constants,
                                        std::optional<Elem> unit, bool split_product = false);
    // F[x]/(m(x)) with basis 1, x, ..., x^{d-1}; modulus coefficients are
    // m_0..m_d with m_d = 1.
    static StructAlgebra quotient_univariate(Ring field, const std::vector<Coeff>& modulus);
    static StructAlgebra make_split_product(Ring field, size_t n);

    const Coeff& c(size_t i, size_t j, size_t k) const {
        return constants[(i * dim + j) * dim + k];
    }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem power(const Elem& a, unsigned m) const;  // a^m, m >= 1
    Elem zero_elem() const { return Elem(dim, Coeff::zero(field)); }
    Elem basis_elem(size_t i) const;
    bool is_zero_elem(const Elem& a) const;
    bool is_commutative() const;
    Mat left_mult_matrix(const Elem& a) const;
    std::string elem_to_string(const Elem& a) const;
};

inline constexpr size_t kDefaultElementBudget = 1u << 20;

// All p^dim elements, in mixed-radix enumeration order.  F_p only.
std::vector<Elem> all_elements(const StructAlgebra& a, size_t budget = kDefaultElementBudget);

// Subspace of algebra coordinates; basis rows in RREF.
struct CoordSubspace {
    Ring field;
    size_t ambient = 0;
    Mat basis;

    static CoordSubspace from_vectors(Ring field, size_t ambient, const std::vector<Elem>& gens);
    size_t dim() const { return basis.rows(); }
    bool contains(const Elem& v) const { return in_row_space(basis, v); }
    bool subspace_of(const CoordSubspace& o) const;
    bool operator==(const CoordSubspace& o) const {
        return field == o.field && ambient == o.ambient && basis == o.basis;
    }
};

// All subspaces of F_p^dim via reduced echelon basis enumeration.
std::vector<CoordSubspace> all_subspaces(Ring fp_field, size_t dim,
                                         size_t budget = kDefaultElementBudget);

enum class Side { Left, Right, TwoSided };

// Exhaustive idempotent list: brute force over F_p within budget, or the 0/1
// vectors of a declared split product.
std::vector<Elem> idempotents(const StructAlgebra& a, size_t budget = kDefaultElementBudget);

CoordSubspace principal_ideal(const StructAlgebra& a, const Elem& e, Side side);

// Theorem criterion: V is a theta-MS iff every idempotent inside V generates
// a principal theta-ideal contained in V.
bool ms_test_idempotent(const StructAlgebra& a, const CoordSubspace& v,
                        Side side = Side::TwoSided, size_t budget = kDefaultElementBudget);

// Definition-level decision over a finite algebra: powers are eventually
// periodic, so both quantifiers reduce to cycle detection.
bool ms_decide_finite(const StructAlgebra& a, const CoordSubspace& v,
                      Side side = Side::TwoSided, size_t budget = kDefaultElementBudget);

// Exact radical of V as an element set: a such that the eventually-periodic
// tail of its power orbit lies in V.
std::vector<Elem> finite_radical_set(const StructAlgebra& a, const CoordSubspace& v,
                                     size_t budget = kDefaultElementBudget);

std::vector<Elem> nilpotent_set(const StructAlgebra& a, size_t budget = kDefaultElementBudget);

// A linear operator on algebra coordinates, optionally verified against the
// algebra's multiplication (endomorphism law or Leibniz law on basis pairs).
struct LinOp {
    enum class Law { None, Endomorphism, Derivation };
    Mat mat;
    Law law = Law::None;
};

LinOp make_linop(const Mat& m);
LinOp make_endomorphism(const StructAlgebra& a, const Mat& m);   // verifies the law
LinOp make_derivation_op(const StructAlgebra& a, const Mat& m);  // verifies Leibniz

enum class DecompKind { Additive, Multiplicative };

struct Decomposition {
    DecompKind kind = DecompKind::Additive;
    std::vector<Coeff> eigenvalues;
    std::vector<Mat> blocks;  // RREF bases of the generalized eigenspaces

    size_t total_dim() const;
};

// Generalized eigenspace decomposition, blocks stabilized.  Eigenvalues are
// discovered by exhaustive scan over F_p, or over Q by a rational-root search
// on the square-free part of the characteristic polynomial; a supplied list
// overrides discovery.
Decomposition gen_eigendecomp(const LinOp& op, DecompKind kind,
                              const std::optional<std::vector<Coeff>>& eigenvalues = std::nullopt);

// Checks A_l * A_m lands in A_{l+m} (additive) or A_{l*m} (multiplicative);
// a missing index forces the product to vanish.
bool grading_check(const StructAlgebra& a, const Decomposition& dec);

// Image assembled from the distinguished block's image plus all other
// blocks, verified against the directly computed column space.
CoordSubspace image_decomp(const Mat& op, const Decomposition& dec, const Coeff& distinguished);

// Stabilized union of Ker op^k, k >= 1.
CoordSubspace kernel_chain(const Mat& op);

// Nilpotent elements of a commutative algebra: brute force over F_p, trace
// form kernel over Q.
CoordSubspace nilradical_commutative(const StructAlgebra& a,
                                     size_t budget = kDefaultElementBudget);

// Newton's identities: power sums p_1..p_n to elementary symmetric e_1..e_n.
// Needs characteristic 0 or > n.
std::vector<Coeff> newton_to_elementary(const std::vector<Coeff>& power_sums);

// Checks c_r b_r^m + ... + c_d b_d^m = 0 for m = 1..max_power.
bool power_sum_system_check(const std::vector<Coeff>& values, const std::vector<Coeff>& coeffs,
                            int max_power);

// Diagnostic: a nonzero idempotent inside Ker(delta) and Im(delta) would be a
// flagged anomaly for characteristic-zero carriers.
std::optional<Elem> idempotent_anomaly_scan(const StructAlgebra& a, const Mat& delta,
                                            size_t budget = kDefaultElementBudget);

// Plain-text structure constant format:
//   dim <d> field q|z|fp:<p>
//   <i> <j> <k> <coeff>        (1-based indices, one line per nonzero c)
//   unit <v1> ... <vd>         (optional)
//   split                      (optional split-product declaration)
// '#' starts a comment; field z is realized over Q.
StructAlgebra parse_struct_algebra(std::istream& in);

// Characteristic polynomial coefficients (monic, returned low-to-high) via
// the classical trace recursion; characteristic-zero fields only.
std::vector<Coeff> char_poly(const Mat& m);

}  // namespace mzlab

#endif
