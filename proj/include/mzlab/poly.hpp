#ifndef MZLAB_POLY_HPP
#define MZLAB_POLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mzlab/ring.hpp"

namespace mzlab {

// Integer exponent vector indexing a (Laurent) monomial.
using ExpVec = std::vector<int>;

std::string expvec_to_string(const ExpVec& e, const std::vector<std::string>& vars);

// Multivariate (Laurent) polynomial in canonical form: finitely supported
// map ExpVec -> Coeff with no stored zeros.  Equality of canonical forms is
// the equality used everywhere.
struct Poly {
    Ring ring;
    std::vector<std::string> vars;
    bool laurent = false;
    std::map<ExpVec, Coeff> terms;

    static Poly zero(const Ring& r, std::vector<std::string> vars, bool laurent);
    static Poly constant(const Ring& r, std::vector<std::string> vars, bool laurent,
                         const Coeff& c);
    static Poly from_int(const Ring& r, std::vector<std::string> vars, bool laurent, long long v);
    static Poly monomial(const Ring& r, std::vector<std::string> vars, bool laurent,
                         const ExpVec& e, const Coeff& c);
    static Poly variable(const Ring& r, std::vector<std::string> vars, bool laurent, size_t i);

    size_t nvars() const { return vars.size(); }
    bool is_zero() const { return terms.empty(); }
    Poly shape_zero() const { return zero(ring, vars, laurent); }

    // Inserts c*x^e, combining with an existing term; strips zeros.
    void add_term(const ExpVec& e, const Coeff& c);

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

enum class ArithOp { Add, Sub, Mul };

Poly arith(const Poly& f, const Poly& g, ArithOp op);
Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly scale(const Poly& f, const Coeff& c);

Poly pow(const Poly& f, unsigned m);

// Ring-homomorphic extension f(images).  In a Laurent ambient a negative
// exponent on variable i requires images[i] to be a unit monomial.
Poly substitute(const Poly& f, std::span<const Poly> images);

Coeff coeff_of(const Poly& f, const ExpVec& e);

bool is_unit(const Coeff& c);

// Total degree span helpers (Laurent-aware).
int max_total_degree(const Poly& f);

std::string to_string(const Poly& f);

void require_compatible(const Poly& f, const Poly& g);

// Exact embedding Z[x...] -> Q[x...] for fraction-field linear algebra.
Poly to_rational_coeffs(const Poly& f);

}  // namespace mzlab

#endif
