#include "mzlab/finalg.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace mzlab {

// ---- StructAlgebra ----

StructAlgebra StructAlgebra::from_constants(Ring field, size_t dim, std::vector<Coeff> constants,
                                            std::optional<Elem> unit, bool split_product) {
    if (constants.size() != dim * dim * dim)
        throw error("structure constant table has wrong size");
    StructAlgebra a{field, dim, std::move(constants), std::move(unit), split_product};
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                Elem lhs = a.mul(a.mul(a.basis_elem(i), a.basis_elem(j)), a.basis_elem(k));
                Elem rhs = a.mul(a.basis_elem(i), a.mul(a.basis_elem(j), a.basis_elem(k)));
                if (lhs != rhs)
                    throw precondition_failed_error(
                        "associativity fails at basis triple (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
            }
    if (a.unit) {
        for (size_t i = 0; i < dim; ++i) {
            Elem e = a.basis_elem(i);
            if (a.mul(*a.unit, e) != e || a.mul(e, *a.unit) != e)
                throw precondition_failed_error("declared unit does not act as identity");
        }
    }
    return a;
}

StructAlgebra StructAlgebra::quotient_univariate(Ring field, const std::vector<Coeff>& modulus) {
    if (modulus.size() < 2 || !modulus.back().is_one())
        throw error("modulus must be monic of degree >= 1");
    size_t d = modulus.size() - 1;

    // representatives of x^e for e = 0 .. 2d-2
    std::vector<Elem> rep(2 * d - 1, Elem(d, Coeff::zero(field)));
    for (size_t e = 0; e < d; ++e) rep[e][e] = Coeff::one(field);
    for (size_t e = d; e < 2 * d - 1; ++e) {
        const Elem& prev = rep[e - 1];
        Elem cur(d, Coeff::zero(field));
        for (size_t k = 0; k + 1 < d; ++k) cur[k + 1] = prev[k];
        Coeff top = prev[d - 1];
        for (size_t k = 0; k < d; ++k) cur[k] = cur[k] - top * modulus[k];
        rep[e] = std::move(cur);
    }

    std::vector<Coeff> c(d * d * d, Coeff::zero(field));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = rep[i + j][k];

    Elem one(d, Coeff::zero(field));
    one[0] = Coeff::one(field);
    return from_constants(field, d, std::move(c), one);
}

StructAlgebra StructAlgebra::make_split_product(Ring field, size_t n) {
    std::vector<Coeff> c(n * n * n, Coeff::zero(field));
    for (size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = Coeff::one(field);
    Elem one(n, Coeff::one(field));
    return from_constants(field, n, std::move(c), one, /*split_product=*/true);
}

Elem StructAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem r = zero_elem();
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Coeff ab = a[i] * b[j];
            for (size_t k = 0; k < dim; ++k) {
                const Coeff& s = c(i, j, k);
                if (!s.is_zero()) r[k] = r[k] + ab * s;
            }
        }
    }
    return r;
}

Elem StructAlgebra::power(const Elem& a, unsigned m) const {
    if (m == 0) throw error("power of exponent 0 needs a unit; use m >= 1");
    Elem r = a;
    for (unsigned i = 1; i < m; ++i) r = mul(r, a);
    return r;
}

Elem StructAlgebra::basis_elem(size_t i) const {
    Elem e = zero_elem();
    e.at(i) = Coeff::one(field);
    return e;
}

bool StructAlgebra::is_zero_elem(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const Coeff& c) { return c.is_zero(); });
}

bool StructAlgebra::is_commutative() const {
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            if (mul(basis_elem(i), basis_elem(j)) != mul(basis_elem(j), basis_elem(i)))
                return false;
    return true;
}

Mat StructAlgebra::left_mult_matrix(const Elem& a) const {
    Mat m(field, dim, dim);
    for (size_t j = 0; j < dim; ++j) {
        Elem col = mul(a, basis_elem(j));
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::string StructAlgebra::elem_to_string(const Elem& a) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < dim; ++i) {
        if (i) os << ", ";
        os << a[i].to_string();
    }
    os << ")";
    return os.str();
}

std::vector<Elem> all_elements(const StructAlgebra& a, size_t budget) {
    if (a.field.tag != Ring::Tag::Fp)
        throw unsupported_over_q_error("exhaustive element enumeration needs F_p");
    size_t count = 1;
    for (size_t i = 0; i < a.dim; ++i) {
        if (a.field.p > budget / count)
            throw budget_exceeded_error("p^d = " + std::to_string(a.field.p) + "^" +
                                        std::to_string(a.dim));
        count *= a.field.p;
    }
    std::vector<Elem> out;
    out.reserve(count);
    Elem cur = a.zero_elem();
    std::vector<uint64_t> digits(a.dim, 0);
    for (size_t n = 0; n < count; ++n) {
        for (size_t i = 0; i < a.dim; ++i)
            cur[i] = Coeff::from_int(a.field, static_cast<long long>(digits[i]));
        out.push_back(cur);
        for (size_t i = a.dim; i-- > 0;) {
            if (++digits[i] < a.field.p) break;
            digits[i] = 0;
        }
    }
    return out;
}

// ---- CoordSubspace ----

CoordSubspace CoordSubspace::from_vectors(Ring field, size_t ambient,
                                          const std::vector<Elem>& gens) {
    return CoordSubspace{field, ambient, row_space(field, gens, ambient)};
}

bool CoordSubspace::subspace_of(const CoordSubspace& o) const {
    for (size_t i = 0; i < basis.rows(); ++i) {
        Elem row;
        for (size_t j = 0; j < basis.cols(); ++j) row.push_back(basis.at(i, j));
        if (!o.contains(row)) return false;
    }
    return true;
}

std::vector<CoordSubspace> all_subspaces(Ring fp_field, size_t dim, size_t budget) {
    if (fp_field.tag != Ring::Tag::Fp)
        throw unsupported_over_q_error("subspace enumeration needs F_p");
    std::vector<CoordSubspace> out;
    size_t produced = 0;
    for (size_t mask = 0; mask < (size_t{1} << dim); ++mask) {
        std::vector<size_t> pivots;
        for (size_t c = 0; c < dim; ++c)
            if (mask & (size_t{1} << c)) pivots.push_back(c);
        size_t r = pivots.size();

        // free positions: (row, col) with col right of the row's pivot and
        // col not itself a pivot
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t row = 0; row < r; ++row)
            for (size_t c = pivots[row] + 1; c < dim; ++c)
                if (!(mask & (size_t{1} << c))) free_pos.emplace_back(row, c);

        size_t variants = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) {
            if (fp_field.p > budget / variants)
                throw budget_exceeded_error("subspace enumeration");
            variants *= fp_field.p;
        }
        if (produced + variants > budget) throw budget_exceeded_error("subspace enumeration");
        for (size_t v = 0; v < variants; ++v) {
            Mat basis(fp_field, r, dim);
            for (size_t row = 0; row < r; ++row)
                basis.at(row, pivots[row]) = Coeff::one(fp_field);
            size_t rest = v;
            for (const auto& [row, col] : free_pos) {
                basis.at(row, col) =
                    Coeff::from_int(fp_field, static_cast<long long>(rest % fp_field.p));
                rest /= fp_field.p;
            }
            out.push_back(CoordSubspace{fp_field, dim, basis});
            ++produced;
        }
    }
    return out;
}

// ---- idempotents and MS decisions ----

std::vector<Elem> idempotents(const StructAlgebra& a, size_t budget) {
    std::vector<Elem> out;
    if (a.field.tag == Ring::Tag::Fp) {
        for (const Elem& e : all_elements(a, budget))
            if (a.mul(e, e) == e) out.push_back(e);
        return out;
    }
    if (a.split_product) {
        if (a.dim > 20) throw budget_exceeded_error("2^d with d = " + std::to_string(a.dim));
        for (size_t mask = 0; mask < (size_t{1} << a.dim); ++mask) {
            Elem e = a.zero_elem();
            for (size_t i = 0; i < a.dim; ++i)
                if (mask & (size_t{1} << i)) e[i] = Coeff::one(a.field);
            out.push_back(e);
        }
        return out;
    }
    throw unsupported_over_q_error(
        "idempotent enumeration needs F_p or a declared split product");
}

CoordSubspace principal_ideal(const StructAlgebra& a, const Elem& e, Side side) {
    std::vector<Elem> gens{e};
    CoordSubspace span = CoordSubspace::from_vectors(a.field, a.dim, gens);
    for (;;) {
        std::vector<Elem> next = gens;
        for (const Elem& v : gens) {
            for (size_t b = 0; b < a.dim; ++b) {
                if (side != Side::Right) next.push_back(a.mul(a.basis_elem(b), v));
                if (side != Side::Left) next.push_back(a.mul(v, a.basis_elem(b)));
            }
        }
        CoordSubspace bigger = CoordSubspace::from_vectors(a.field, a.dim, next);
        if (bigger.dim() == span.dim()) return span;
        span = std::move(bigger);
        gens = std::move(next);
    }
}

bool ms_test_idempotent(const StructAlgebra& a, const CoordSubspace& v, Side side,
                        size_t budget) {
    for (const Elem& e : idempotents(a, budget)) {
        if (!v.contains(e)) continue;
        if (!principal_ideal(a, e, side).subspace_of(v)) return false;
    }
    return true;
}

namespace {

struct PowerOrbit {
    std::vector<Elem> powers;  // a^1 .. a^{tail+cycle}
    size_t tail = 0;
    size_t cycle = 0;
};

// Floyd tortoise-and-hare on z -> z*a starting from a itself.
PowerOrbit power_orbit(const StructAlgebra& alg, const Elem& a) {
    auto step = [&](const Elem& z) { return alg.mul(z, a); };
    Elem tortoise = step(a);
    Elem hare = step(step(a));
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(step(hare));
    }
    size_t tail = 0;
    tortoise = a;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++tail;
    }
    size_t cycle = 1;
    hare = step(tortoise);
    while (hare != tortoise) {
        hare = step(hare);
        ++cycle;
    }
    PowerOrbit orbit;
    orbit.tail = tail;
    orbit.cycle = cycle;
    Elem cur = a;
    for (size_t k = 0; k < tail + cycle; ++k) {
        orbit.powers.push_back(cur);
        cur = step(cur);
    }
    return orbit;
}

bool cycle_translates_in(const StructAlgebra& a, const CoordSubspace& v, const PowerOrbit& orbit,
                         Side side) {
    for (size_t k = orbit.tail; k < orbit.tail + orbit.cycle; ++k) {
        const Elem& z = orbit.powers[k];
        for (size_t i = 0; i < a.dim; ++i) {
            if (side == Side::Left) {
                if (!v.contains(a.mul(a.basis_elem(i), z))) return false;
            } else if (side == Side::Right) {
                if (!v.contains(a.mul(z, a.basis_elem(i)))) return false;
            } else {
                Elem left = a.mul(a.basis_elem(i), z);
                for (size_t j = 0; j < a.dim; ++j)
                    if (!v.contains(a.mul(left, a.basis_elem(j)))) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool ms_decide_finite(const StructAlgebra& a, const CoordSubspace& v, Side side, size_t budget) {
    for (const Elem& cand : all_elements(a, budget)) {
        if (a.is_zero_elem(cand)) continue;
        PowerOrbit orbit = power_orbit(a, cand);
        bool all_in = true;
        for (const Elem& p : orbit.powers)
            if (!v.contains(p)) {
                all_in = false;
                break;
            }
        if (!all_in) continue;
        if (!cycle_translates_in(a, v, orbit, side)) return false;
    }
    return true;
}

std::vector<Elem> finite_radical_set(const StructAlgebra& a, const CoordSubspace& v,
                                     size_t budget) {
    std::vector<Elem> out;
    for (const Elem& cand : all_elements(a, budget)) {
        if (a.is_zero_elem(cand)) {
            out.push_back(cand);
            continue;
        }
        PowerOrbit orbit = power_orbit(a, cand);
        bool tail_in = true;
        for (size_t k = orbit.tail; k < orbit.tail + orbit.cycle; ++k)
            if (!v.contains(orbit.powers[k])) {
                tail_in = false;
                break;
            }
        if (tail_in) out.push_back(cand);
    }
    return out;
}

std::vector<Elem> nilpotent_set(const StructAlgebra& a, size_t budget) {
    std::vector<Elem> out;
    for (const Elem& cand : all_elements(a, budget)) {
        if (a.is_zero_elem(cand)) {
            out.push_back(cand);
            continue;
        }
        if (a.is_zero_elem(a.power(cand, static_cast<unsigned>(a.dim + 1)))) out.push_back(cand);
    }
    return out;
}

// ---- linear operators ----

LinOp make_linop(const Mat& m) { return LinOp{m, LinOp::Law::None}; }

LinOp make_endomorphism(const StructAlgebra& a, const Mat& m) {
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            Elem lhs = m.apply(a.mul(a.basis_elem(i), a.basis_elem(j)));
            Elem rhs = a.mul(m.apply(a.basis_elem(i)), m.apply(a.basis_elem(j)));
            if (lhs != rhs)
                throw precondition_failed_error("multiplicativity fails at basis pair (" +
                                                std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ")");
        }
    return LinOp{m, LinOp::Law::Endomorphism};
}

LinOp make_derivation_op(const StructAlgebra& a, const Mat& m) {
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            Elem ei = a.basis_elem(i), ej = a.basis_elem(j);
            Elem lhs = m.apply(a.mul(ei, ej));
            Elem rhs = a.zero_elem();
            Elem t1 = a.mul(m.apply(ei), ej);
            Elem t2 = a.mul(ei, m.apply(ej));
            for (size_t k = 0; k < a.dim; ++k) rhs[k] = t1[k] + t2[k];
            if (lhs != rhs)
                throw precondition_failed_error("Leibniz law fails at basis pair (" +
                                                std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ")");
        }
    return LinOp{m, LinOp::Law::Derivation};
}

size_t Decomposition::total_dim() const {
    size_t s = 0;
    for (const Mat& b : blocks) s += b.rows();
    return s;
}

// ---- characteristic polynomial and eigenvalues ----

namespace {

Coeff trace(const Mat& m) {
    Coeff t = Coeff::zero(m.ring());
    for (size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
}

using QPoly = std::vector<Coeff>;  // low-to-high, field coefficients

int qp_deg(const QPoly& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return static_cast<int>(i);
    return -1;
}

QPoly qp_derivative(const QPoly& f, Ring ring) {
    QPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * Coeff::from_int(ring, static_cast<long long>(i)));
    if (d.empty()) d.push_back(Coeff::zero(ring));
    return d;
}

// remainder of f by (monic-normalized) g
QPoly qp_rem(QPoly f, const QPoly& g, Ring ring) {
    int dg = qp_deg(g);
    Coeff lead = g[static_cast<size_t>(dg)];
    for (int df = qp_deg(f); df >= dg; df = qp_deg(f)) {
        Coeff q = f[static_cast<size_t>(df)].div(lead);
        for (int i = 0; i <= dg; ++i) {
            size_t fi = static_cast<size_t>(df - dg + i);
            f[fi] = f[fi] - q * g[static_cast<size_t>(i)];
        }
    }
    (void)ring;
    return f;
}

QPoly qp_quot(QPoly f, const QPoly& g, Ring ring) {
    int dg = qp_deg(g);
    Coeff lead = g[static_cast<size_t>(dg)];
    QPoly q(f.size(), Coeff::zero(ring));
    for (int df = qp_deg(f); df >= dg; df = qp_deg(f)) {
        Coeff c = f[static_cast<size_t>(df)].div(lead);
        q[static_cast<size_t>(df - dg)] = c;
        for (int i = 0; i <= dg; ++i) {
            size_t fi = static_cast<size_t>(df - dg + i);
            f[fi] = f[fi] - c * g[static_cast<size_t>(i)];
        }
    }
    return q;
}

QPoly qp_gcd(QPoly a, QPoly b, Ring ring) {
    while (qp_deg(b) >= 0) {
        QPoly r = qp_rem(a, b, ring);
        a = std::move(b);
        b = std::move(r);
    }
    int da = qp_deg(a);
    if (da >= 0) {
        Coeff inv = a[static_cast<size_t>(da)].inv();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

Coeff qp_eval(const QPoly& f, const Coeff& x) {
    Coeff r = Coeff::zero(x.ring());
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

std::vector<mpz_class> small_divisors(const mpz_class& n_in, size_t iteration_budget) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    mpz_class d = 1;
    size_t steps = 0;
    for (; d * d <= n; ++d) {
        if (++steps > iteration_budget)
            throw budget_exceeded_error("divisor enumeration of " + n.get_str());
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

std::vector<Coeff> rational_roots(const QPoly& f_in, Ring ring) {
    std::vector<Coeff> roots;
    QPoly f = f_in;

    // factor out t^k
    while (qp_deg(f) >= 1 && f[0].is_zero()) {
        f.erase(f.begin());
        if (roots.empty()) roots.push_back(Coeff::zero(ring));
    }
    int d = qp_deg(f);
    if (d <= 0) return roots;

    // scale to a primitive integer polynomial
    mpz_class denlcm = 1;
    for (int i = 0; i <= d; ++i) {
        mpq_class q = f[static_cast<size_t>(i)].to_mpq();
        mpz_class den = q.get_den();
        denlcm = denlcm / gcd(denlcm, den) * den;
    }
    std::vector<mpz_class> zc(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        mpq_class q = f[static_cast<size_t>(i)].to_mpq() * mpq_class(denlcm);
        zc[static_cast<size_t>(i)] = q.get_num();
    }
    mpz_class content = 0;
    for (const auto& c : zc) content = gcd(content, c);
    if (content > 1)
        for (auto& c : zc) c /= content;

    for (const mpz_class& p : small_divisors(zc[0], 2'000'000))
        for (const mpz_class& q : small_divisors(zc[static_cast<size_t>(d)], 2'000'000))
            for (int sign : {1, -1}) {
                mpq_class cand(sign * p, q);
                cand.canonicalize();
                Coeff x = Coeff::from_mpq(ring, cand);
                if (qp_eval(f, x).is_zero() &&
                    std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    return roots;
}

bool coeff_less(const Coeff& a, const Coeff& b) {
    if (a.ring().tag == Ring::Tag::Fp) return a.fp() < b.fp();
    return a.to_mpq() < b.to_mpq();
}

Mat stabilized_kernel(const Mat& m) {
    Mat power = m;
    Mat kernel = power.nullspace();
    for (size_t i = 1; i <= m.rows(); ++i) {
        power = power * m;
        Mat next = power.nullspace();
        if (next.rows() == kernel.rows()) return kernel;
        kernel = std::move(next);
    }
    return kernel;
}

}  // namespace

std::vector<Coeff> char_poly(const Mat& m) {
    Ring ring = m.ring();
    if (ring.characteristic() != 0)
        throw ring_mismatch_error("characteristic polynomial recursion needs characteristic 0");
    size_t d = m.rows();
    std::vector<Coeff> a(d + 1, Coeff::zero(ring));
    a[d] = Coeff::one(ring);
    Mat n = m;
    for (size_t k = 1; k <= d; ++k) {
        Coeff ck = (-trace(n)).div(Coeff::from_int(ring, static_cast<long long>(k)));
        a[d - k] = ck;
        if (k < d) {
            Mat shifted = n + Mat::identity(ring, d).scaled(ck);
            n = m * shifted;
        }
    }
    return a;
}

Decomposition gen_eigendecomp(const LinOp& op, DecompKind kind,
                              const std::optional<std::vector<Coeff>>& eigenvalues) {
    const Mat& m = op.mat;
    Ring ring = m.ring();
    size_t d = m.rows();

    std::vector<Coeff> eigs;
    if (eigenvalues) {
        for (const Coeff& l : *eigenvalues)
            if (std::find(eigs.begin(), eigs.end(), l) == eigs.end()) eigs.push_back(l);
    } else if (ring.tag == Ring::Tag::Fp) {
        if (ring.p > (1u << 20)) throw budget_exceeded_error("eigenvalue scan over large F_p");
        for (uint64_t r = 0; r < ring.p; ++r) {
            Coeff l = Coeff::from_int(ring, static_cast<long long>(r));
            Mat shifted = Mat::identity(ring, d).scaled(l) - m;
            if (shifted.rank() < d) eigs.push_back(l);
        }
    } else {
        QPoly cp = char_poly(m);
        QPoly sf = qp_quot(cp, qp_gcd(cp, qp_derivative(cp, ring), ring), ring);
        eigs = rational_roots(sf, ring);
    }
    std::sort(eigs.begin(), eigs.end(), coeff_less);

    Decomposition dec;
    dec.kind = kind;
    for (const Coeff& l : eigs) {
        Mat shifted = Mat::identity(ring, d).scaled(l) - m;
        Mat block = stabilized_kernel(shifted);
        if (block.rows() == 0) continue;
        dec.eigenvalues.push_back(l);
        dec.blocks.push_back(std::move(block));
    }

    if (dec.total_dim() != d)
        throw non_split_error("generalized eigenspaces cover dimension " +
                              std::to_string(dec.total_dim()) + " of " + std::to_string(d) +
                              "; unfactored degree " + std::to_string(d - dec.total_dim()));

    // direct-sum sanity: stacked bases must have full rank
    std::vector<Elem> stacked;
    for (const Mat& b : dec.blocks)
        for (size_t i = 0; i < b.rows(); ++i) {
            Elem row;
            for (size_t j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j));
            stacked.push_back(std::move(row));
        }
    if (row_space(ring, stacked, d).rows() != d)
        throw decomposition_mismatch_error("blocks do not form a direct sum");
    return dec;
}

bool grading_check(const StructAlgebra& a, const Decomposition& dec) {
    for (size_t bi = 0; bi < dec.blocks.size(); ++bi)
        for (size_t bj = 0; bj < dec.blocks.size(); ++bj) {
            Coeff target = dec.kind == DecompKind::Additive
                               ? dec.eigenvalues[bi] + dec.eigenvalues[bj]
                               : dec.eigenvalues[bi] * dec.eigenvalues[bj];
            auto it = std::find(dec.eigenvalues.begin(), dec.eigenvalues.end(), target);
            const Mat* target_block =
                it == dec.eigenvalues.end()
                    ? nullptr
                    : &dec.blocks[static_cast<size_t>(it - dec.eigenvalues.begin())];

            const Mat& bu = dec.blocks[bi];
            const Mat& bv = dec.blocks[bj];
            for (size_t i = 0; i < bu.rows(); ++i)
                for (size_t j = 0; j < bv.rows(); ++j) {
                    Elem u, v;
                    for (size_t k = 0; k < bu.cols(); ++k) u.push_back(bu.at(i, k));
                    for (size_t k = 0; k < bv.cols(); ++k) v.push_back(bv.at(j, k));
                    Elem w = a.mul(u, v);
                    if (target_block == nullptr) {
                        if (!a.is_zero_elem(w)) return false;
                    } else if (!in_row_space(*target_block, w)) {
                        return false;
                    }
                }
        }
    return true;
}

CoordSubspace image_decomp(const Mat& op, const Decomposition& dec, const Coeff& distinguished) {
    std::vector<Elem> rows;
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
        const Mat& block = dec.blocks[b];
        bool is_dist = dec.eigenvalues[b] == distinguished;
        for (size_t i = 0; i < block.rows(); ++i) {
            Elem v;
            for (size_t j = 0; j < block.cols(); ++j) v.push_back(block.at(i, j));
            rows.push_back(is_dist ? op.apply(v) : v);
        }
    }
    Mat assembled = row_space(op.ring(), rows, op.cols());
    Mat direct = op.colspace();
    if (!(assembled == direct))
        throw decomposition_mismatch_error("assembled image differs from the column space");
    return CoordSubspace{op.ring(), op.cols(), assembled};
}

CoordSubspace kernel_chain(const Mat& op) {
    Mat kernel = stabilized_kernel(op);
    return CoordSubspace{op.ring(), op.cols(), kernel};
}

CoordSubspace nilradical_commutative(const StructAlgebra& a, size_t budget) {
    if (!a.is_commutative()) throw not_commutative_error();

    if (a.field.tag == Ring::Tag::Fp) {
        std::vector<Elem> nils = nilpotent_set(a, budget);
        return CoordSubspace::from_vectors(a.field, a.dim, nils);
    }

    // characteristic zero: kernel of the trace form tr(L_{xy})
    Mat t(a.field, a.dim, a.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            Elem prod = a.mul(a.basis_elem(i), a.basis_elem(j));
            t.at(i, j) = trace(a.left_mult_matrix(prod));
        }
    Mat kernel = t.nullspace();
    for (size_t i = 0; i < kernel.rows(); ++i) {
        Elem v;
        for (size_t j = 0; j < kernel.cols(); ++j) v.push_back(kernel.at(i, j));
        if (!a.is_zero_elem(a.power(v, static_cast<unsigned>(a.dim + 1))))
            throw error("trace form kernel contains a non-nilpotent element");
    }
    return CoordSubspace{a.field, a.dim, kernel};
}

std::vector<Coeff> newton_to_elementary(const std::vector<Coeff>& power_sums) {
    if (power_sums.empty()) return {};
    Ring ring = power_sums[0].ring();
    if (!ring.is_field())
        throw ring_mismatch_error("Newton's identities need field coefficients");
    size_t n = power_sums.size();
    uint64_t ch = ring.characteristic();
    if (ch != 0 && ch <= n)
        throw characteristic_too_small_error("need characteristic 0 or > " + std::to_string(n));

    std::vector<Coeff> e{Coeff::one(ring)};  // e_0 = 1
    for (size_t k = 1; k <= n; ++k) {
        Coeff acc = Coeff::zero(ring);
        int sign = 1;
        for (size_t i = 1; i <= k; ++i) {
            Coeff term = e[k - i] * power_sums[i - 1];
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        e.push_back(acc.div(Coeff::from_int(ring, static_cast<long long>(k))));
    }
    return std::vector<Coeff>(e.begin() + 1, e.end());
}

bool power_sum_system_check(const std::vector<Coeff>& values, const std::vector<Coeff>& coeffs,
                            int max_power) {
    if (values.size() != coeffs.size()) throw error("values and coefficients must align");
    if (values.empty()) return true;
    Ring ring = values[0].ring();
    std::vector<Coeff> powers = values;
    for (int m = 1; m <= max_power; ++m) {
        Coeff acc = Coeff::zero(ring);
        for (size_t i = 0; i < values.size(); ++i) acc = acc + coeffs[i] * powers[i];
        if (!acc.is_zero()) return false;
        for (size_t i = 0; i < values.size(); ++i) powers[i] = powers[i] * values[i];
    }
    return true;
}

std::optional<Elem> idempotent_anomaly_scan(const StructAlgebra& a, const Mat& delta,
                                            size_t budget) {
    Mat kernel = delta.nullspace();
    Mat image = delta.colspace();
    for (const Elem& e : idempotents(a, budget)) {
        if (a.is_zero_elem(e)) continue;
        if (in_row_space(kernel, e) && in_row_space(image, e)) return e;
    }
    return std::nullopt;
}

StructAlgebra parse_struct_algebra(std::istream& in) {
    std::string line;
    Ring field = Ring::q();
    size_t dim = 0;
    bool have_header = false;
    std::vector<Coeff> constants;
    std::optional<Elem> unit;
    bool split = false;

    auto parse_field = [](const std::string& s) {
        if (s == "q" || s == "z") return Ring::q();  // z is realized over Q
        if (s.rfind("fp:", 0) == 0) return Ring::fp(std::stoull(s.substr(3)));
        throw error("unknown field spec '" + s + "'");
    };
    auto parse_coeff = [&](const std::string& s) {
        mpq_class v(s);
        v.canonicalize();
        return Coeff::from_mpq(field, v);
    };

    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "dim") {
            std::string fieldkw, fieldspec;
            if (!(ls >> dim >> fieldkw >> fieldspec) || fieldkw != "field")
                throw error("malformed header on line " + std::to_string(lineno));
            field = parse_field(fieldspec);
            constants.assign(dim * dim * dim, Coeff::zero(field));
            have_header = true;
        } else if (first == "unit") {
            if (!have_header) throw error("unit line before header");
            Elem u;
            std::string tok;
            while (ls >> tok) u.push_back(parse_coeff(tok));
            if (u.size() != dim) throw error("unit vector has wrong length");
            unit = std::move(u);
        } else if (first == "split") {
            split = true;
        } else {
            if (!have_header) throw error("structure constants before header");
            size_t i = std::stoull(first), j = 0, k = 0;
            std::string coeff;
            if (!(ls >> j >> k >> coeff))
                throw error("malformed constant on line " + std::to_string(lineno));
            if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
                throw error("index out of range on line " + std::to_string(lineno));
            constants[((i - 1) * dim + (j - 1)) * dim + (k - 1)] = parse_coeff(coeff);
        }
    }
    if (!have_header) throw error("missing 'dim d field ...' header");
    return StructAlgebra::from_constants(field, dim, std::move(constants), std::move(unit),
                                         split);
}

}  // namespace mzlab
