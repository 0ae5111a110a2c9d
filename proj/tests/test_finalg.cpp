#include "doctest.h"

#include <sstream>

#include "mzlab/finalg.hpp"
#include "mzlab/rng.hpp"

using namespace mzlab;

namespace {

Elem ev(Ring ring, std::vector<long long> v) {
    Elem e;
    for (long long x : v) e.push_back(Coeff::from_int(ring, x));
    return e;
}

StructAlgebra f2_dual() {  // F_2[x]/(x^2)
    Ring f2 = Ring::fp(2);
    return StructAlgebra::quotient_univariate(f2, {Coeff::zero(f2), Coeff::zero(f2),
                                                   Coeff::one(f2)});
}

Mat diag(Ring ring, std::vector<long long> d) {
    Mat m(ring, d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = Coeff::from_int(ring, d[i]);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("finalg");

TEST_CASE("construction checks associativity and unit") {
    Ring q = Ring::q();
    // e1*e1 = e2, everything else zero: (e1e1)e1 = e2e1 = 0 = e1(e1e1) -- associative
    std::vector<Coeff> c(8, Coeff::zero(q));
    c[(0 * 2 + 0) * 2 + 1] = Coeff::one(q);
    CHECK_NOTHROW(StructAlgebra::from_constants(q, 2, c, std::nullopt));

    // e1*e1 = e1 with a wrong unit declaration
    std::vector<Coeff> c2(8, Coeff::zero(q));
    c2[(0 * 2 + 0) * 2 + 0] = Coeff::one(q);
    CHECK_THROWS_AS(
        StructAlgebra::from_constants(q, 2, c2, ev(q, {1, 1})),
        precondition_failed_error);
}

TEST_CASE("idempotent enumeration") {
    Ring f2 = Ring::fp(2);
    StructAlgebra split2 = StructAlgebra::make_split_product(f2, 2);
    std::vector<Elem> idems = idempotents(split2);
    CHECK(idems.size() == 4);  // all of {0,1}^2

    CHECK(idempotents(f2_dual()) ==
          std::vector<Elem>{ev(f2, {0, 0}), ev(f2, {1, 0})});

    Ring q = Ring::q();
    StructAlgebra q3 = StructAlgebra::make_split_product(q, 3);
    CHECK(idempotents(q3).size() == 8);

    // a generic Q-algebra has no enumeration route
    std::vector<Coeff> c(8, Coeff::zero(q));
    c[(0 * 2 + 0) * 2 + 0] = Coeff::one(q);
    StructAlgebra plain = StructAlgebra::from_constants(q, 2, c, std::nullopt);
    CHECK_THROWS_AS(idempotents(plain), unsupported_over_q_error);
}

TEST_CASE("principal ideals") {
    Ring f2 = Ring::fp(2);
    StructAlgebra split2 = StructAlgebra::make_split_product(f2, 2);
    CoordSubspace ideal = principal_ideal(split2, ev(f2, {1, 0}), Side::TwoSided);
    CHECK(ideal.dim() == 1);
    CHECK(ideal.contains(ev(f2, {1, 0})));
    CHECK_FALSE(ideal.contains(ev(f2, {0, 1})));

    CHECK(principal_ideal(split2, ev(f2, {0, 0}), Side::TwoSided).dim() == 0);
    CHECK(principal_ideal(split2, ev(f2, {1, 1}), Side::TwoSided).dim() == 2);
}

TEST_CASE("idempotent criterion on small algebras") {
    Ring f2 = Ring::fp(2);
    StructAlgebra dual = f2_dual();
    CoordSubspace vx = CoordSubspace::from_vectors(f2, 2, {ev(f2, {0, 1})});
    CHECK(ms_test_idempotent(dual, vx));
    CoordSubspace v1 = CoordSubspace::from_vectors(f2, 2, {ev(f2, {1, 0})});
    CHECK_FALSE(ms_test_idempotent(dual, v1));

    StructAlgebra split2 = StructAlgebra::make_split_product(f2, 2);
    CoordSubspace ve = CoordSubspace::from_vectors(f2, 2, {ev(f2, {1, 0})});
    CHECK(ms_test_idempotent(split2, ve));
}

TEST_CASE("definition-level decision on small algebras") {
    Ring f2 = Ring::fp(2);
    StructAlgebra dual = f2_dual();
    for (const CoordSubspace& v : all_subspaces(f2, 2)) {
        bool expected = v.dim() == 2 || !v.contains(ev(f2, {1, 0}));
        CHECK(ms_decide_finite(dual, v) == expected);
    }

    StructAlgebra split2 = StructAlgebra::make_split_product(f2, 2);
    CoordSubspace vdiag = CoordSubspace::from_vectors(f2, 2, {ev(f2, {1, 1})});
    CHECK_FALSE(ms_decide_finite(split2, vdiag));
    CoordSubspace whole = CoordSubspace::from_vectors(f2, 2, {ev(f2, {1, 0}), ev(f2, {0, 1})});
    CHECK(ms_decide_finite(split2, whole));
}

TEST_CASE("oracle equivalence on an exhaustive subspace sweep") {
    Ring f3 = Ring::fp(3);
    StructAlgebra a = StructAlgebra::quotient_univariate(
        f3, {Coeff::zero(f3), Coeff::zero(f3), Coeff::one(f3)});  // F_3[x]/(x^2)
    for (const CoordSubspace& v : all_subspaces(f3, 2)) {
        for (Side side : {Side::Left, Side::Right, Side::TwoSided})
            CHECK(ms_test_idempotent(a, v, side) == ms_decide_finite(a, v, side));
    }
}

namespace {

StructAlgebra upper_triangular_2x2(Ring field) {
    // basis e11, e12, e22
    std::vector<Coeff> c(27, Coeff::zero(field));
    auto set = [&](size_t i, size_t j, size_t k) { c[(i * 3 + j) * 3 + k] = Coeff::one(field); };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 2, 1);
    set(2, 2, 2);
    Elem one{Coeff::one(field), Coeff::zero(field), Coeff::one(field)};
    return StructAlgebra::from_constants(field, 3, std::move(c), one);
}

}  // namespace

TEST_CASE("sides separate on a noncommutative carrier") {
    // span{e11} in the upper-triangular 2x2 algebra: a left Mathieu subspace
    // but not a right or two-sided one, by both decision routes
    Ring f2 = Ring::fp(2);
    StructAlgebra t2 = upper_triangular_2x2(f2);
    CoordSubspace v = CoordSubspace::from_vectors(f2, 3, {ev(f2, {1, 0, 0})});

    CHECK(ms_decide_finite(t2, v, Side::Left));
    CHECK_FALSE(ms_decide_finite(t2, v, Side::Right));
    CHECK_FALSE(ms_decide_finite(t2, v, Side::TwoSided));
    CHECK(ms_test_idempotent(t2, v, Side::Left));
    CHECK_FALSE(ms_test_idempotent(t2, v, Side::Right));
    CHECK_FALSE(ms_test_idempotent(t2, v, Side::TwoSided));

    CHECK(principal_ideal(t2, ev(f2, {1, 0, 0}), Side::Left).dim() == 1);
    CHECK(principal_ideal(t2, ev(f2, {1, 0, 0}), Side::Right).dim() == 2);

    // mirrored for span{e22}
    CoordSubspace w = CoordSubspace::from_vectors(f2, 3, {ev(f2, {0, 0, 1})});
    CHECK_FALSE(ms_decide_finite(t2, w, Side::Left));
    CHECK(ms_decide_finite(t2, w, Side::Right));
}

TEST_CASE("oracle equivalence on a noncommutative sweep") {
    Ring f2 = Ring::fp(2);
    StructAlgebra t2 = upper_triangular_2x2(f2);
    for (const CoordSubspace& v : all_subspaces(f2, 3))
        for (Side side : {Side::Left, Side::Right, Side::TwoSided})
            CHECK(ms_test_idempotent(t2, v, side) == ms_decide_finite(t2, v, side));
}

TEST_CASE("generalized eigendecomposition") {
    Ring q = Ring::q();
    Decomposition dec = gen_eigendecomp(make_linop(diag(q, {1, 2, 4})),
                                        DecompKind::Multiplicative);
    REQUIRE(dec.eigenvalues.size() == 3);
    CHECK(dec.eigenvalues[0] == Coeff::from_int(q, 1));
    CHECK(dec.eigenvalues[1] == Coeff::from_int(q, 2));
    CHECK(dec.eigenvalues[2] == Coeff::from_int(q, 4));
    for (const Mat& b : dec.blocks) CHECK(b.rows() == 1);

    Decomposition one = gen_eigendecomp(make_linop(Mat::identity(q, 4)), DecompKind::Additive);
    REQUIRE(one.eigenvalues.size() == 1);
    CHECK(one.blocks[0].rows() == 4);

    Mat jordan(q, 3, 3);
    jordan.at(0, 1) = Coeff::one(q);
    jordan.at(1, 2) = Coeff::one(q);
    Decomposition nil = gen_eigendecomp(make_linop(jordan), DecompKind::Additive);
    REQUIRE(nil.eigenvalues.size() == 1);
    CHECK(nil.eigenvalues[0].is_zero());
    CHECK(nil.blocks[0].rows() == 3);

    // rotation by 90 degrees has no rational eigenvalues
    Mat rot(q, 2, 2);
    rot.at(0, 1) = Coeff::from_int(q, -1);
    rot.at(1, 0) = Coeff::one(q);
    CHECK_THROWS_AS(gen_eigendecomp(make_linop(rot), DecompKind::Additive), non_split_error);
}

TEST_CASE("characteristic polynomial recursion") {
    Ring q = Ring::q();
    std::vector<Coeff> cp = char_poly(diag(q, {1, 2}));
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Coeff::from_int(q, 2));
    CHECK(cp[1] == Coeff::from_int(q, -3));
    CHECK(cp[2] == Coeff::one(q));
}

TEST_CASE("grading checks on quotient algebras") {
    Ring q = Ring::q();
    StructAlgebra a = StructAlgebra::quotient_univariate(
        q, {Coeff::zero(q), Coeff::zero(q), Coeff::zero(q), Coeff::one(q)});  // Q[x]/(x^3)

    LinOp euler = make_derivation_op(a, diag(q, {0, 1, 2}));
    Decomposition add = gen_eigendecomp(euler, DecompKind::Additive);
    CHECK(grading_check(a, add));

    LinOp phi2 = make_endomorphism(a, diag(q, {1, 2, 4}));
    Decomposition mul = gen_eigendecomp(phi2, DecompKind::Multiplicative);
    CHECK(grading_check(a, mul));

    // shuffled eigenvalue labels break the grading
    Decomposition bad = mul;
    std::swap(bad.eigenvalues[0], bad.eigenvalues[1]);
    CHECK_FALSE(grading_check(a, bad));
}

TEST_CASE("image assembled from a decomposition") {
    Ring q = Ring::q();
    Mat phi = diag(q, {1, 2, 4});
    Decomposition dec = gen_eigendecomp(make_linop(phi), DecompKind::Multiplicative);
    Mat delta = Mat::identity(q, 3) - phi;  // diag(0, -1, -3)
    CoordSubspace im = image_decomp(delta, dec, Coeff::one(q));
    CHECK(im.dim() == 2);
    CHECK(im.contains(ev(q, {0, 1, 0})));
    CHECK(im.contains(ev(q, {0, 0, 1})));
    CHECK_FALSE(im.contains(ev(q, {1, 0, 0})));

    Mat inv = diag(q, {2, 3, 5});
    Decomposition dinv = gen_eigendecomp(make_linop(inv), DecompKind::Additive);
    CHECK(image_decomp(inv, dinv, Coeff::zero(q)).dim() == 3);

    Mat zero(q, 2, 2);
    Decomposition dzero = gen_eigendecomp(make_linop(zero), DecompKind::Additive);
    CHECK(image_decomp(zero, dzero, Coeff::zero(q)).dim() == 0);
}

TEST_CASE("image decomposition on randomized split operators") {
    Ring q = Ring::q();
    Rng rng(0x44440001);
    int done = 0;
    while (done < 100) {
        size_t d = static_cast<size_t>(rng.range(2, 5));
        Mat s(q, d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) s.at(i, j) = Coeff::from_int(q, rng.range(-2, 2));
        if (s.rank() != d) continue;
        Mat aug(q, d, 2 * d);
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) aug.at(i, j) = s.at(i, j);
            aug.at(i, d + i) = Coeff::one(q);
        }
        aug.rref();
        Mat sinv(q, d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) sinv.at(i, j) = aug.at(i, d + j);

        // upper-triangular core with small eigenvalues, split by construction
        Mat core(q, d, d);
        for (size_t i = 0; i < d; ++i) core.at(i, i) = Coeff::from_int(q, rng.range(-2, 2));
        for (size_t i = 0; i + 1 < d; ++i)
            if (core.at(i, i) == core.at(i + 1, i + 1) && rng.range(0, 1))
                core.at(i, i + 1) = Coeff::one(q);
        Mat m = s * core * sinv;

        Decomposition dec = gen_eigendecomp(make_linop(m), DecompKind::Additive);
        CHECK(dec.total_dim() == d);
        CHECK_NOTHROW(image_decomp(m, dec, Coeff::zero(q)));
        ++done;
    }
}

TEST_CASE("kernel chains") {
    Ring q = Ring::q();
    Mat p = diag(q, {1, 1, 0});
    CHECK(kernel_chain(p).dim() == 1);

    CHECK(kernel_chain(diag(q, {2, 3, 5})).dim() == 0);

    Mat jordan(q, 3, 3);
    jordan.at(0, 1) = Coeff::one(q);
    jordan.at(1, 2) = Coeff::one(q);
    CHECK(kernel_chain(jordan).dim() == 3);
    CHECK(jordan.nullspace().rows() == 1);  // the chain genuinely grows
}

TEST_CASE("nilradical of commutative algebras") {
    Ring q = Ring::q();
    StructAlgebra dual = StructAlgebra::quotient_univariate(
        q, {Coeff::zero(q), Coeff::zero(q), Coeff::one(q)});
    CoordSubspace nil = nilradical_commutative(dual);
    CHECK(nil.dim() == 1);
    CHECK(nil.contains(ev(q, {0, 1})));

    Ring f2 = Ring::fp(2);
    CHECK(nilradical_commutative(StructAlgebra::make_split_product(f2, 2)).dim() == 0);

    // Q[x]/(x^3 - x) is split semisimple
    StructAlgebra split3 = StructAlgebra::quotient_univariate(
        q, {Coeff::zero(q), Coeff::from_int(q, -1), Coeff::zero(q), Coeff::one(q)});
    CHECK(nilradical_commutative(split3).dim() == 0);

    // noncommutative input is rejected
    CHECK_THROWS_AS(nilradical_commutative(upper_triangular_2x2(q)), not_commutative_error);
}

TEST_CASE("Newton's identities") {
    Ring q = Ring::q();
    std::vector<Coeff> zeros(3, Coeff::zero(q));
    CHECK(newton_to_elementary(zeros) == zeros);

    // values {1, -1}: p = (0, 2), e = (0, -1)
    std::vector<Coeff> p{Coeff::zero(q), Coeff::from_int(q, 2)};
    std::vector<Coeff> e{Coeff::zero(q), Coeff::from_int(q, -1)};
    CHECK(newton_to_elementary(p) == e);

    CHECK(newton_to_elementary({Coeff::from_int(q, 2)}) ==
          std::vector<Coeff>{Coeff::from_int(q, 2)});

    Ring f2 = Ring::fp(2);
    std::vector<Coeff> small(3, Coeff::zero(f2));
    CHECK_THROWS_AS(newton_to_elementary(small), characteristic_too_small_error);
}

TEST_CASE("Newton round-trip on random rational multisets") {
    Ring q = Ring::q();
    Rng rng(0x44440002);
    for (int n = 0; n < 60; ++n) {
        size_t k = static_cast<size_t>(rng.range(1, 6));
        std::vector<Coeff> values;
        for (size_t i = 0; i < k; ++i)
            values.push_back(Coeff::from_mpq(q, mpq_class(static_cast<long>(rng.range(-4, 4)), static_cast<long>(rng.range(1, 3)))));

        // direct power sums
        std::vector<Coeff> ps;
        for (size_t m = 1; m <= k; ++m) {
            Coeff acc = Coeff::zero(q);
            for (const Coeff& b : values) {
                Coeff t = Coeff::one(q);
                for (size_t i = 0; i < m; ++i) t = t * b;
                acc = acc + t;
            }
            ps.push_back(acc);
        }
        // independent elementary symmetric values: expand prod (t - b_i)
        std::vector<Coeff> monic{Coeff::one(q)};  // coefficients, high to low
        for (const Coeff& b : values) {
            std::vector<Coeff> next(monic.size() + 1, Coeff::zero(q));
            for (size_t i = 0; i < monic.size(); ++i) {
                next[i] = next[i] + monic[i];
                next[i + 1] = next[i + 1] - monic[i] * b;
            }
            monic = std::move(next);
        }
        std::vector<Coeff> expected;
        int sign = -1;
        for (size_t i = 1; i <= k; ++i) {
            expected.push_back(sign < 0 ? -monic[i] : monic[i]);
            sign = -sign;
        }
        CHECK(newton_to_elementary(ps) == expected);
    }
}

TEST_CASE("power sum system checks") {
    Ring q = Ring::q();
    auto vals = [&](std::vector<long long> v) {
        std::vector<Coeff> out;
        for (long long x : v) out.push_back(Coeff::from_int(q, x));
        return out;
    };
    CHECK(power_sum_system_check(vals({1, 1}), vals({1, -1}), 10));
    CHECK_FALSE(power_sum_system_check(vals({1, 2}), vals({1, -1}), 2));
    CHECK(power_sum_system_check(vals({1, -1}), vals({1, 1}), 1));
    CHECK_FALSE(power_sum_system_check(vals({1, -1}), vals({1, 1}), 2));
}

TEST_CASE("distinct nonzero values force vanishing coefficients") {
    // the Vandermonde argument: if sum c_i b_i^m = 0 for m = 1..k with the
    // b_i distinct and nonzero, then every c_i = 0
    Ring q = Ring::q();
    Rng rng(0x44440003);
    for (int n = 0; n < 30; ++n) {
        size_t k = static_cast<size_t>(rng.range(1, 4));
        std::vector<long long> raw;
        while (raw.size() < k) {
            long long v = rng.range(-5, 5);
            if (v == 0) continue;
            if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
        }
        Mat vm(q, k, k);
        for (size_t m = 0; m < k; ++m)
            for (size_t i = 0; i < k; ++i) {
                Coeff t = Coeff::one(q);
                for (size_t s = 0; s <= m; ++s) t = t * Coeff::from_int(q, raw[i]);
                vm.at(m, i) = t;
            }
        CHECK(vm.nullspace().rows() == 0);

        // and any nonzero coefficient vector fails the power-sum check
        std::vector<Coeff> coeffs(k, Coeff::zero(q));
        coeffs[static_cast<size_t>(rng.range(0, static_cast<long long>(k) - 1))] =
            Coeff::from_int(q, rng.range(1, 3));
        std::vector<Coeff> values;
        for (long long v : raw) values.push_back(Coeff::from_int(q, v));
        CHECK_FALSE(power_sum_system_check(values, coeffs, static_cast<int>(k)));
    }
}

TEST_CASE("idempotent anomaly diagnostic") {
    // over F_2 the swap on F_2 x F_2 genuinely traps (1,1) in Ker cap Im
    Ring f2 = Ring::fp(2);
    StructAlgebra split2 = StructAlgebra::make_split_product(f2, 2);
    Mat swap(f2, 2, 2);
    swap.at(0, 1) = Coeff::one(f2);
    swap.at(1, 0) = Coeff::one(f2);
    Mat delta = Mat::identity(f2, 2) - swap;
    auto found = idempotent_anomaly_scan(split2, delta);
    REQUIRE(found.has_value());
    CHECK(*found == ev(f2, {1, 1}));

    // over Q the same shape is clean
    Ring q = Ring::q();
    StructAlgebra qsplit2 = StructAlgebra::make_split_product(q, 2);
    Mat qswap(q, 2, 2);
    qswap.at(0, 1) = Coeff::one(q);
    qswap.at(1, 0) = Coeff::one(q);
    Mat qdelta = Mat::identity(q, 2) - qswap;
    CHECK_FALSE(idempotent_anomaly_scan(qsplit2, qdelta).has_value());
}

namespace {

// raw two-quantifier decision: every a whose whole power orbit lies in V,
// against every pair (b, c) of algebra elements, not just basis pairs
bool ms_decide_all_pairs(const StructAlgebra& a, const CoordSubspace& v, Side side) {
    std::vector<Elem> elems = all_elements(a);
    for (const Elem& cand : elems) {
        if (a.is_zero_elem(cand)) continue;
        // full orbit with an explicit element table instead of Floyd
        std::vector<Elem> seen;
        Elem cur = cand;
        bool all_in = true;
        while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
            seen.push_back(cur);
            if (!v.contains(cur)) all_in = false;
            cur = a.mul(cur, cand);
        }
        if (!all_in) continue;
        size_t cycle_start =
            static_cast<size_t>(std::find(seen.begin(), seen.end(), cur) - seen.begin());
        for (size_t k = cycle_start; k < seen.size(); ++k) {
            const Elem& z = seen[k];
            for (const Elem& b : elems)
                for (const Elem& c : elems) {
                    Elem t = z;
                    if (side != Side::Right) t = a.mul(b, t);
                    if (side != Side::Left) t = a.mul(t, c);
                    if (!v.contains(t)) return false;
                }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("basis-pair witnesses match the all-pairs definition") {
    Ring f2 = Ring::fp(2);
    std::vector<StructAlgebra> algebras;
    algebras.push_back(f2_dual());
    algebras.push_back(StructAlgebra::make_split_product(f2, 2));
    algebras.push_back(upper_triangular_2x2(f2));
    for (const StructAlgebra& a : algebras)
        for (const CoordSubspace& v : all_subspaces(f2, a.dim))
            for (Side side : {Side::Left, Side::Right, Side::TwoSided})
                CHECK(ms_decide_finite(a, v, side) == ms_decide_all_pairs(a, v, side));
}

TEST_CASE("budget guards") {
    Ring f2 = Ring::fp(2);
    StructAlgebra big = StructAlgebra::make_split_product(f2, 25);
    CHECK_THROWS_AS(all_elements(big), budget_exceeded_error);
    CHECK_THROWS_AS(ms_decide_finite(big, CoordSubspace::from_vectors(f2, 25, {})),
                    budget_exceeded_error);
}

TEST_CASE("decomposition of the wrong operator is rejected") {
    Ring q = Ring::q();
    Decomposition dec = gen_eigendecomp(make_linop(diag(q, {1, 2, 4})),
                                        DecompKind::Multiplicative);
    // the 0-block of an unrelated operator does not assemble its image
    Mat other(q, 3, 3);
    other.at(0, 1) = Coeff::one(q);
    CHECK_THROWS_AS(image_decomp(other, dec, Coeff::zero(q)), decomposition_mismatch_error);
}

TEST_CASE("structure constant file parsing") {
    std::istringstream in(
        "# F_2[x]/(x^2)\n"
        "dim 2 field fp:2\n"
        "1 1 1 1\n"
        "1 2 2 1\n"
        "2 1 2 1\n"
        "unit 1 0\n");
    StructAlgebra a = parse_struct_algebra(in);
    CHECK(a.dim == 2);
    CHECK(a.field == Ring::fp(2));
    REQUIRE(a.unit.has_value());
    CHECK(a.mul(ev(Ring::fp(2), {0, 1}), ev(Ring::fp(2), {0, 1})) == ev(Ring::fp(2), {0, 0}));

    std::istringstream bad("dim 2 field fp:2\n1 1 3 1\n");
    CHECK_THROWS(parse_struct_algebra(bad));
}

TEST_SUITE_END();
