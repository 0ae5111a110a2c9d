#include "mzlab/ring.hpp"

#include <sstream>

namespace mzlab {

// ---- F_p helpers (p fits a machine word, products via 128-bit) ----

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
    if (a == 0) throw not_a_unit_error("0 in F_" + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

uint64_t fp_from_ll(long long v, uint64_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
}

uint64_t fp_from_mpz(const mpz_class& v, uint64_t p) {
    mpz_class m = v % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(p));
    return mpz_get_ui(m.get_mpz_t());
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = fp_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = fp_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Ring Ring::fp(uint64_t p) {
    if (!is_prime_u64(p)) throw ring_mismatch_error("F_p modulus " + std::to_string(p) + " is not prime");
    return {Tag::Fp, p};
}

std::string Ring::name() const {
    switch (tag) {
        case Tag::Q: return "q";
        case Tag::Z: return "z";
        case Tag::Fp: return "fp:" + std::to_string(p);
        case Tag::QLaurent: return "qlaurent";
    }
    return "?";
}

// ---- t-Laurent helpers ----

namespace {

void tp_strip(TPoly& tp) {
    for (auto it = tp.begin(); it != tp.end();) {
        if (it->second == 0)
            it = tp.erase(it);
        else
            ++it;
    }
}

TPoly tp_add(const TPoly& a, const TPoly& b, int bsign) {
    TPoly r = a;
    for (const auto& [k, c] : b) {
        auto& slot = r[k];
        slot += bsign > 0 ? c : mpq_class(-c);
    }
    tp_strip(r);
    return r;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r[ka + kb] += ca * cb;
    tp_strip(r);
    return r;
}

}  // namespace

// ---- Coeff ----

Coeff Coeff::zero(const Ring& r) {
    switch (r.tag) {
        case Ring::Tag::Q: return Coeff(r, mpq_class(0));
        case Ring::Tag::Z: return Coeff(r, mpz_class(0));
        case Ring::Tag::Fp: return Coeff(r, uint64_t{0});
        case Ring::Tag::QLaurent: return Coeff(r, TPoly{});
    }
    throw error("bad ring tag");
}

Coeff Coeff::one(const Ring& r) { return from_int(r, 1); }

Coeff Coeff::from_int(const Ring& r, long long v) {
    switch (r.tag) {
        case Ring::Tag::Q: return Coeff(r, mpq_class(static_cast<long>(v)));
        case Ring::Tag::Z: return Coeff(r, mpz_class(static_cast<long>(v)));
        case Ring::Tag::Fp: return Coeff(r, fp_from_ll(v, r.p));
        case Ring::Tag::QLaurent: {
            TPoly tp;
            if (v != 0) tp[0] = mpq_class(static_cast<long>(v));
            return Coeff(r, std::move(tp));
        }
    }
    throw error("bad ring tag");
}

Coeff Coeff::from_mpz(const Ring& r, const mpz_class& v) {
    switch (r.tag) {
        case Ring::Tag::Q: return Coeff(r, mpq_class(v));
        case Ring::Tag::Z: return Coeff(r, v);
        case Ring::Tag::Fp: return Coeff(r, fp_from_mpz(v, r.p));
        case Ring::Tag::QLaurent: {
            TPoly tp;
            if (v != 0) tp[0] = mpq_class(v);
            return Coeff(r, std::move(tp));
        }
    }
    throw error("bad ring tag");
}

Coeff Coeff::from_mpq(const Ring& r, const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    switch (r.tag) {
        case Ring::Tag::Q: return Coeff(r, std::move(c));
        case Ring::Tag::QLaurent: {
            TPoly tp;
            if (c != 0) tp[0] = c;
            return Coeff(r, std::move(tp));
        }
        case Ring::Tag::Z:
            if (c.get_den() != 1) throw ring_mismatch_error("rational value in Z");
            return Coeff(r, mpz_class(c.get_num()));
        case Ring::Tag::Fp: {
            if (c.get_den() % mpz_class(static_cast<unsigned long>(r.p)) == 0)
                throw not_a_unit_error("denominator divisible by p");
            uint64_t num = fp_from_mpz(c.get_num(), r.p);
            uint64_t den = fp_from_mpz(c.get_den(), r.p);
            return Coeff(r, fp_mul(num, fp_inv(den, r.p), r.p));
        }
    }
    throw error("bad ring tag");
}

Coeff Coeff::t_power(const mpq_class& c, long long k) {
    TPoly tp;
    mpq_class cc = c;
    cc.canonicalize();
    if (cc != 0) tp[k] = cc;
    return Coeff(Ring::qlaurent(), std::move(tp));
}

Coeff Coeff::from_tpoly(TPoly tp) {
    tp_strip(tp);
    return Coeff(Ring::qlaurent(), std::move(tp));
}

bool Coeff::is_zero() const {
    switch (ring_.tag) {
        case Ring::Tag::Q: return q() == 0;
        case Ring::Tag::Z: return z() == 0;
        case Ring::Tag::Fp: return fp() == 0;
        case Ring::Tag::QLaurent: return tpoly().empty();
    }
    return false;
}

bool Coeff::is_one() const { return *this == one(ring_); }

bool Coeff::is_unit() const {
    switch (ring_.tag) {
        case Ring::Tag::Q: return q() != 0;
        case Ring::Tag::Fp: return fp() != 0;
        case Ring::Tag::Z: return z() == 1 || z() == -1;
        case Ring::Tag::QLaurent: return tpoly().size() == 1;
    }
    return false;
}

Coeff Coeff::inv() const {
    if (!is_unit()) throw not_a_unit_error(to_string() + " in " + ring_.name());
    switch (ring_.tag) {
        case Ring::Tag::Q: return Coeff(ring_, mpq_class(1 / q()));
        case Ring::Tag::Fp: return Coeff(ring_, fp_inv(fp(), ring_.p));
        case Ring::Tag::Z: return *this;
        case Ring::Tag::QLaurent: {
            const auto& [k, c] = *tpoly().begin();
            TPoly tp;
            tp[-k] = 1 / c;
            return Coeff(ring_, std::move(tp));
        }
    }
    throw error("bad ring tag");
}

void Coeff::require_same_ring(const Coeff& o) const {
    if (!(ring_ == o.ring_))
        throw ring_mismatch_error(ring_.name() + " vs " + o.ring_.name());
}

Coeff Coeff::operator+(const Coeff& o) const {
    require_same_ring(o);
    switch (ring_.tag) {
        case Ring::Tag::Q: return Coeff(ring_, mpq_class(q() + o.q()));
        case Ring::Tag::Z: return Coeff(ring_, mpz_class(z() + o.z()));
        case Ring::Tag::Fp: return Coeff(ring_, fp_add(fp(), o.fp(), ring_.p));
        case Ring::Tag::QLaurent: return Coeff(ring_, tp_add(tpoly(), o.tpoly(), +1));
    }
    throw error("bad ring tag");
}

Coeff Coeff::operator-(const Coeff& o) const {
    require_same_ring(o);
    switch (ring_.tag) {
        case Ring::Tag::Q: return Coeff(ring_, mpq_class(q() - o.q()));
        case Ring::Tag::Z: return Coeff(ring_, mpz_class(z() - o.z()));
        case Ring::Tag::Fp: return Coeff(ring_, fp_sub(fp(), o.fp(), ring_.p));
        case Ring::Tag::QLaurent: return Coeff(ring_, tp_add(tpoly(), o.tpoly(), -1));
    }
    throw error("bad ring tag");
}

Coeff Coeff::operator*(const Coeff& o) const {
    require_same_ring(o);
    switch (ring_.tag) {
        case Ring::Tag::Q: return Coeff(ring_, mpq_class(q() * o.q()));
        case Ring::Tag::Z: return Coeff(ring_, mpz_class(z() * o.z()));
        case Ring::Tag::Fp: return Coeff(ring_, fp_mul(fp(), o.fp(), ring_.p));
        case Ring::Tag::QLaurent: return Coeff(ring_, tp_mul(tpoly(), o.tpoly()));
    }
    throw error("bad ring tag");
}

Coeff Coeff::operator-() const { return zero(ring_) - *this; }

bool Coeff::operator==(const Coeff& o) const { return ring_ == o.ring_ && v_ == o.v_; }

mpq_class Coeff::to_mpq() const {
    switch (ring_.tag) {
        case Ring::Tag::Q: return q();
        case Ring::Tag::Z: return mpq_class(z());
        case Ring::Tag::QLaurent: {
            if (tpoly().empty()) return mpq_class(0);
            if (tpoly().size() == 1 && tpoly().begin()->first == 0) return tpoly().begin()->second;
            throw ring_mismatch_error("non-constant Laurent coefficient has no rational value");
        }
        case Ring::Tag::Fp: throw ring_mismatch_error("F_p residue has no canonical rational value");
    }
    throw error("bad ring tag");
}

std::string mpq_to_string(const mpq_class& v) {
    std::ostringstream os;
    os << v.get_num();
    if (v.get_den() != 1) os << "/" << v.get_den();
    return os.str();
}

std::string Coeff::to_string() const {
    switch (ring_.tag) {
        case Ring::Tag::Q: return mpq_to_string(q());
        case Ring::Tag::Z: return z().get_str();
        case Ring::Tag::Fp: return std::to_string(fp());
        case Ring::Tag::QLaurent: {
            if (tpoly().empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (auto it = tpoly().rbegin(); it != tpoly().rend(); ++it) {
                mpq_class c = it->second;
                if (first) {
                    if (c < 0) {
                        os << "-";
                        c = -c;
                    }
                    first = false;
                } else if (c < 0) {
                    os << " - ";
                    c = -c;
                } else {
                    os << " + ";
                }
                bool has_t = it->first != 0;
                if (c != 1 || !has_t) {
                    os << mpq_to_string(c);
                    if (has_t) os << "*";
                }
                if (has_t) {
                    os << "t";
                    if (it->first != 1) os << "^" << it->first;
                }
            }
            return os.str();
        }
    }
    throw error("bad ring tag");
}

}  // namespace mzlab
