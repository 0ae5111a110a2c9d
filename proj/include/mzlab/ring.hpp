#ifndef MZLAB_RING_HPP
#define MZLAB_RING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "mzlab/errors.hpp"

namespace mzlab {

// Coefficient domains: Q, Z, F_p (p a machine-word prime), and the Laurent
// polynomial ring Q[t^-1, t] used as a coefficient ring.
struct Ring {
    enum class Tag { Q, Z, Fp, QLaurent };

    Tag tag = Tag::Q;
    uint64_t p = 0;  // modulus, Fp only

    static Ring q() { return {Tag::Q, 0}; }
    static Ring z() { return {Tag::Z, 0}; }
    static Ring fp(uint64_t p);
    static Ring qlaurent() { return {Tag::QLaurent, 0}; }

    bool operator==(const Ring&) const = default;

    bool is_field() const { return tag == Tag::Q || tag == Tag::Fp; }
    uint64_t characteristic() const { return tag == Tag::Fp ? p : 0; }
    std::string name() const;
};

bool is_prime_u64(uint64_t n);

// Univariate Laurent polynomial in the distinguished symbol t over Q,
// finite support, no stored zeros.
using TPoly = std::map<long long, mpq_class>;

class Coeff {
  public:
    Coeff() : ring_(Ring::q()), v_(mpq_class(0)) {}

    static Coeff zero(const Ring& r);
    static Coeff one(const Ring& r);
    static Coeff from_int(const Ring& r, long long v);
    static Coeff from_mpz(const Ring& r, const mpz_class& v);
    static Coeff from_mpq(const Ring& r, const mpq_class& v);  // Q and QLaurent only
    static Coeff t_power(const mpq_class& c, long long k);     // c*t^k in Q[t^-1,t]
    static Coeff from_tpoly(TPoly tp);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    // Units: Q, F_p nonzero; Z: +-1; Q[t^-1,t]: nonzero monomial c*t^k.
    bool is_unit() const;
    Coeff inv() const;  // throws not_a_unit_error

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff div(const Coeff& o) const { return *this * o.inv(); }
    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    const mpz_class& z() const { return std::get<mpz_class>(v_); }
    uint64_t fp() const { return std::get<uint64_t>(v_); }
    const TPoly& tpoly() const { return std::get<TPoly>(v_); }

    // Exact conversion into Q; throws ring_mismatch_error for F_p and
    // non-constant Laurent values.
    mpq_class to_mpq() const;

    std::string to_string() const;

  private:
    Coeff(Ring r, std::variant<mpq_class, mpz_class, uint64_t, TPoly> v)
        : ring_(r), v_(std::move(v)) {}
    void require_same_ring(const Coeff& o) const;

    Ring ring_;
    std::variant<mpq_class, mpz_class, uint64_t, TPoly> v_;
};

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t fp_inv(uint64_t a, uint64_t p);
uint64_t fp_from_ll(long long v, uint64_t p);
uint64_t fp_from_mpz(const mpz_class& v, uint64_t p);

std::string mpq_to_string(const mpq_class& v);

}  // namespace mzlab

#endif
