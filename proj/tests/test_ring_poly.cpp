#include "doctest.h"

#include <map>

#include "test_util.hpp"

using namespace mzlab;

namespace {

Poly pq(const std::string& s) { return parse_poly(s, Ring::q(), {"x"}, false); }

// independent univariate Laurent arithmetic over F_p for oracle checks:
// plain exponent->residue maps, schoolbook convolution
using LMap = std::map<int, int>;

LMap lmul(const LMap& a, const LMap& b, int p) {
    LMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            int& slot = r[ea + eb];
            slot = (slot + ca * cb) % p;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

LMap lpow_binary(LMap base, unsigned e, int p) {
    LMap r{{0, 1}};
    while (e) {
        if (e & 1) r = lmul(r, base, p);
        base = lmul(base, base, p);
        e >>= 1;
    }
    return r;
}

LMap to_lmap(const Poly& f) {
    LMap r;
    for (const auto& [e, c] : f.terms) r[e[0]] = static_cast<int>(c.fp());
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("ring_poly");

TEST_CASE("arith examples") {
    CHECK(pq("x + 1") * pq("x - 1") == pq("x^2 - 1"));

    Ring f2 = Ring::fp(2);
    Poly u = parse_poly("x + x^-1", f2, {"x"}, true);
    CHECK(u * u == parse_poly("x^2 + x^-2", f2, {"x"}, true));

    Poly v = parse_poly("x + x^-1", Ring::q(), {"x"}, true);
    // hand convolution of supports: (1,-1) x (1,-1) -> {2: 1, 0: 2, -2: 1}
    CHECK(v * v == parse_poly("x^2 + 2 + x^-2", Ring::q(), {"x"}, true));
}

TEST_CASE("arith ring mismatch") {
    CHECK_THROWS_AS(pq("x") + parse_poly("x", Ring::z(), {"x"}, false), ring_mismatch_error);
    CHECK_THROWS_AS(pq("x") + parse_poly("y", Ring::q(), {"y"}, false), ring_mismatch_error);
}

TEST_CASE("pow examples") {
    CHECK(pow(pq("x + 1"), 2) == pq("x^2 + 2*x + 1"));

    // oracle: binary-exponentiation over independent map arithmetic mod 2
    Ring f2 = Ring::fp(2);
    Poly u = parse_poly("x + x^-1", f2, {"x"}, true);
    LMap expect = lpow_binary(to_lmap(u), 3, 2);
    CHECK(to_lmap(pow(u, 3)) == expect);
    CHECK(pow(u, 3) == parse_poly("x^3 + x + x^-1 + x^-3", f2, {"x"}, true));

    Poly f = pq("3*x^2 - 1/2");
    CHECK(pow(f, 1) == f);
    CHECK(pow(f, 0) == pq("1"));
}

TEST_CASE("substitute examples") {
    Ring q = Ring::q();
    std::vector<std::string> xy{"x", "y"};
    Poly f = parse_poly("x*y", q, xy, false);
    std::vector<Poly> images{parse_poly("x + 1", q, xy, false), parse_poly("y^2", q, xy, false)};
    CHECK(substitute(f, images) == parse_poly("x*y^2 + y^2", q, xy, false));

    Ring f2 = Ring::fp(2);
    Poly xm = parse_poly("x^5", f2, {"x"}, true);
    std::vector<Poly> inv{parse_poly("x^-1", f2, {"x"}, true)};
    CHECK(substitute(xm, inv) == parse_poly("x^-5", f2, {"x"}, true));

    // phi_a(x^n) = a^n x^n
    Poly x3 = pq("x^3");
    std::vector<Poly> dbl{pq("2*x")};
    CHECK(substitute(x3, dbl) == pq("8*x^3"));
}

TEST_CASE("substitute non-invertible image") {
    Ring q = Ring::q();
    Poly f = parse_poly("x^-1", q, {"x"}, true);
    std::vector<Poly> bad{parse_poly("x + 1", q, {"x"}, true)};
    CHECK_THROWS_AS(substitute(f, bad), non_invertible_image_error);
    // a unit monomial is fine
    std::vector<Poly> good{parse_poly("2*x^2", q, {"x"}, true)};
    CHECK(substitute(f, good) == parse_poly("1/2*x^-2", q, {"x"}, true));
}

TEST_CASE("coeff_of examples") {
    CHECK(coeff_of(pq("x^2 - 1"), ExpVec{0}) == Coeff::from_int(Ring::q(), -1));
    Poly v = parse_poly("x + x^-1", Ring::q(), {"x"}, true);
    CHECK(coeff_of(v * v, ExpVec{0}) == Coeff::from_int(Ring::q(), 2));
    CHECK(coeff_of(pq("x"), ExpVec{2}).is_zero());
}

TEST_CASE("is_unit examples") {
    // 1 - 2^3 = -7 is a unit of Q[t^-1,t]; 1 - 2t is not
    TPoly a;
    a[0] = -7;
    CHECK(is_unit(Coeff::from_tpoly(a)));
    TPoly b;
    b[0] = 1;
    b[1] = -2;
    CHECK_FALSE(is_unit(Coeff::from_tpoly(b)));
    CHECK(is_unit(Coeff::t_power(mpq_class(3), -2)));
    CHECK_FALSE(is_unit(Coeff::from_int(Ring::z(), -3)));
    CHECK(is_unit(Coeff::from_int(Ring::z(), -1)));
    CHECK_FALSE(is_unit(Coeff::zero(Ring::qlaurent())));
}

TEST_CASE("ring axioms on randomized triples") {
    Rng rng(0x11110001);
    std::vector<Ring> rings{Ring::q(), Ring::z(), Ring::fp(2), Ring::fp(5), Ring::qlaurent()};
    std::vector<std::string> xy{"x", "y"};
    for (const Ring& ring : rings) {
        for (int n = 0; n < 40; ++n) {
            Poly f = mztest::random_poly(rng, ring, xy, false);
            Poly g = mztest::random_poly(rng, ring, xy, false);
            Poly h = mztest::random_poly(rng, ring, xy, false);
            CHECK((f + g) + h == f + (g + h));
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f - f == f.shape_zero());
        }
    }
}

TEST_CASE("pow is additive in the exponent") {
    Rng rng(0x11110002);
    for (int n = 0; n < 25; ++n) {
        Ring ring = n % 2 ? Ring::q() : Ring::fp(5);
        Poly f = mztest::random_poly(rng, ring, {"x"}, true, 2, 2);
        unsigned a = static_cast<unsigned>(rng.range(0, 3));
        unsigned b = static_cast<unsigned>(rng.range(0, 3));
        CHECK(pow(f, a + b) == pow(f, a) * pow(f, b));
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    Rng rng(0x11110003);
    Ring q = Ring::q();
    std::vector<std::string> xy{"x", "y"};
    for (int n = 0; n < 40; ++n) {
        Poly f = mztest::random_poly(rng, q, xy, false);
        Poly g = mztest::random_poly(rng, q, xy, false);
        std::vector<Poly> images{mztest::random_poly(rng, q, xy, false),
                                 mztest::random_poly(rng, q, xy, false)};
        CHECK(substitute(f * g, images) == substitute(f, images) * substitute(g, images));
        CHECK(substitute(f + g, images) == substitute(f, images) + substitute(g, images));
    }
}

TEST_CASE("canonicalization: print then parse is the identity") {
    Rng rng(0x11110004);
    std::vector<Ring> rings{Ring::q(), Ring::z(), Ring::fp(5), Ring::qlaurent()};
    std::vector<std::string> xy{"x", "y"};
    for (const Ring& ring : rings) {
        for (int n = 0; n < 40; ++n) {
            bool laurent = n % 2 == 0;
            Poly f = mztest::random_poly(rng, ring, xy, laurent);
            CHECK(parse_poly(to_string(f), ring, xy, laurent) == f);
        }
    }
}

TEST_SUITE_END();
