#include "mzlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mzlab {

std::string expvec_to_string(const ExpVec& e, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << vars[i];
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

Poly Poly::zero(const Ring& r, std::vector<std::string> vars, bool laurent) {
    Poly f;
    f.ring = r;
    f.vars = std::move(vars);
    f.laurent = laurent;
    return f;
}

Poly Poly::constant(const Ring& r, std::vector<std::string> vars, bool laurent, const Coeff& c) {
    Poly f = zero(r, std::move(vars), laurent);
    f.add_term(ExpVec(f.nvars(), 0), c);
    return f;
}

Poly Poly::from_int(const Ring& r, std::vector<std::string> vars, bool laurent, long long v) {
    return constant(r, std::move(vars), laurent, Coeff::from_int(r, v));
}

Poly Poly::monomial(const Ring& r, std::vector<std::string> vars, bool laurent, const ExpVec& e,
                    const Coeff& c) {
    Poly f = zero(r, std::move(vars), laurent);
    f.add_term(e, c);
    return f;
}

Poly Poly::variable(const Ring& r, std::vector<std::string> vars, bool laurent, size_t i) {
    Poly f = zero(r, std::move(vars), laurent);
    ExpVec e(f.nvars(), 0);
    e.at(i) = 1;
    f.add_term(e, Coeff::one(r));
    return f;
}

void Poly::add_term(const ExpVec& e, const Coeff& c) {
    if (e.size() != nvars()) throw error("exponent vector length mismatch");
    if (!laurent && std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
        throw error("negative exponent in non-Laurent polynomial");
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool Poly::operator==(const Poly& o) const {
    return ring == o.ring && vars == o.vars && laurent == o.laurent && terms == o.terms;
}

void require_compatible(const Poly& f, const Poly& g) {
    if (!(f.ring == g.ring)) throw ring_mismatch_error(f.ring.name() + " vs " + g.ring.name());
    if (f.vars != g.vars) throw ring_mismatch_error("variable lists differ");
    if (f.laurent != g.laurent) throw ring_mismatch_error("Laurent flags differ");
}

Poly arith(const Poly& f, const Poly& g, ArithOp op) {
    require_compatible(f, g);
    Poly r = f.shape_zero();
    switch (op) {
        case ArithOp::Add:
        case ArithOp::Sub: {
            r.terms = f.terms;
            for (const auto& [e, c] : g.terms)
                r.add_term(e, op == ArithOp::Add ? c : -c);
            break;
        }
        case ArithOp::Mul: {
            for (const auto& [ef, cf] : f.terms) {
                for (const auto& [eg, cg] : g.terms) {
                    ExpVec e(ef.size());
                    for (size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
                    r.add_term(e, cf * cg);
                }
            }
            break;
        }
    }
    return r;
}

Poly operator+(const Poly& f, const Poly& g) { return arith(f, g, ArithOp::Add); }
Poly operator-(const Poly& f, const Poly& g) { return arith(f, g, ArithOp::Sub); }
Poly operator*(const Poly& f, const Poly& g) { return arith(f, g, ArithOp::Mul); }

Poly operator-(const Poly& f) { return scale(f, -Coeff::one(f.ring)); }

Poly scale(const Poly& f, const Coeff& c) {
    Poly r = f.shape_zero();
    for (const auto& [e, fc] : f.terms) r.add_term(e, fc * c);
    return r;
}

Poly pow(const Poly& f, unsigned m) {
    Poly r = Poly::constant(f.ring, f.vars, f.laurent, Coeff::one(f.ring));
    for (unsigned i = 0; i < m; ++i) r = r * f;
    return r;
}

namespace {

// images[i]^k with negative k allowed only for unit monomials
Poly image_power(const Poly& img, int k, const std::string& var) {
    if (k >= 0) return pow(img, static_cast<unsigned>(k));
    if (img.terms.size() != 1)
        throw non_invertible_image_error("image of " + var + " is not a monomial");
    const auto& [e, c] = *img.terms.begin();
    if (!c.is_unit())
        throw non_invertible_image_error("image of " + var + " has non-unit coefficient " +
                                         c.to_string());
    if (!img.laurent && std::any_of(e.begin(), e.end(), [](int v) { return v != 0; }))
        throw non_invertible_image_error("image of " + var +
                                         " is not invertible outside a Laurent ambient");
    ExpVec einv(e.size());
    for (size_t i = 0; i < e.size(); ++i) einv[i] = -e[i];
    Poly inv = Poly::monomial(img.ring, img.vars, img.laurent, einv, c.inv());
    return pow(inv, static_cast<unsigned>(-k));
}

}  // namespace

Poly substitute(const Poly& f, std::span<const Poly> images) {
    if (images.size() != f.nvars())
        throw error("substitute needs one image per variable (" + std::to_string(f.nvars()) +
                    " expected)");
    for (size_t i = 0; i + 1 < images.size(); ++i) require_compatible(images[i], images[i + 1]);
    if (!images.empty() && !(images[0].ring == f.ring))
        throw ring_mismatch_error("image ring differs from source ring");

    Poly shape = images.empty() ? f.shape_zero() : images[0].shape_zero();
    Poly r = shape;
    for (const auto& [e, c] : f.terms) {
        Poly term = Poly::constant(shape.ring, shape.vars, shape.laurent, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term = term * image_power(images[i], e[i], f.vars[i]);
        }
        r = r + term;
    }
    return r;
}

Coeff coeff_of(const Poly& f, const ExpVec& e) {
    if (e.size() != f.nvars()) throw error("exponent vector length mismatch");
    auto it = f.terms.find(e);
    return it == f.terms.end() ? Coeff::zero(f.ring) : it->second;
}

bool is_unit(const Coeff& c) { return c.is_unit(); }

int max_total_degree(const Poly& f) {
    int best = 0;
    for (const auto& [e, c] : f.terms) {
        int d = 0;
        for (int k : e) d += std::abs(k);
        best = std::max(best, d);
    }
    return best;
}

Poly to_rational_coeffs(const Poly& f) {
    if (f.ring.tag == Ring::Tag::Q) return f;
    if (f.ring.tag != Ring::Tag::Z)
        throw ring_mismatch_error("only Z embeds into Q here, got " + f.ring.name());
    Poly r = Poly::zero(Ring::q(), f.vars, f.laurent);
    for (const auto& [e, c] : f.terms) r.add_term(e, Coeff::from_mpz(Ring::q(), c.z()));
    return r;
}

// Canonical printing: terms in reverse lexicographic exponent order, t-powers
// of QLaurent coefficients expanded so that the output re-parses.
std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";

    struct Piece {
        mpq_class coeff;        // Q/Z/QLaurent path
        uint64_t residue = 0;   // Fp path
        long long tpow = 0;
        ExpVec e;
    };
    std::vector<Piece> pieces;
    const bool fp = f.ring.tag == Ring::Tag::Fp;

    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        switch (f.ring.tag) {
            case Ring::Tag::Q: pieces.push_back({c.q(), 0, 0, e}); break;
            case Ring::Tag::Z: pieces.push_back({mpq_class(c.z()), 0, 0, e}); break;
            case Ring::Tag::Fp: pieces.push_back({mpq_class(0), c.fp(), 0, e}); break;
            case Ring::Tag::QLaurent:
                for (auto jt = c.tpoly().rbegin(); jt != c.tpoly().rend(); ++jt)
                    pieces.push_back({jt->second, 0, jt->first, e});
                break;
        }
    }

    std::ostringstream os;
    bool first = true;
    for (const auto& p : pieces) {
        mpq_class c = p.coeff;
        bool neg = !fp && c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }

        std::vector<std::string> factors;
        std::string cs = fp ? std::to_string(p.residue) : mpq_to_string(c);
        bool coeff_is_one = fp ? p.residue == 1 : c == 1;
        bool has_monomial = p.tpow != 0 ||
                            std::any_of(p.e.begin(), p.e.end(), [](int k) { return k != 0; });
        if (!coeff_is_one || !has_monomial) factors.push_back(cs);
        if (p.tpow != 0)
            factors.push_back(p.tpow == 1 ? "t" : "t^" + std::to_string(p.tpow));
        for (size_t i = 0; i < p.e.size(); ++i) {
            if (p.e[i] == 0) continue;
            factors.push_back(p.e[i] == 1 ? f.vars[i]
                                          : f.vars[i] + "^" + std::to_string(p.e[i]));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    std::string out = os.str();
    // a bare leading "-" needs an explicit coefficient to stay grammar-valid
    if (out.rfind("-", 0) == 0 && out.size() > 1 && !std::isdigit(static_cast<unsigned char>(out[1])))
        out = "-1*" + out.substr(1);
    return out;
}

}  // namespace mzlab
