#include "mzlab/subspace.hpp"

#include <algorithm>

namespace mzlab {

std::vector<Coeff> poly_coords(const Poly& f, const Window& w, const Ring& field) {
    if (!fits(f, w)) throw out_of_window_error(out_of_window_terms(f, w));
    std::vector<Coeff> v(w.size(), Coeff::zero(field));
    for (const auto& [e, c] : f.terms) {
        Coeff fc = Coeff::zero(field);
        if (f.ring == field)
            fc = c;
        else if (f.ring.tag == Ring::Tag::Z && field.tag == Ring::Tag::Q)
            fc = Coeff::from_mpz(field, c.z());
        else
            throw ring_mismatch_error("cannot view " + f.ring.name() + " coefficients over " +
                                      field.name());
        v[*w.index(e)] = fc;
    }
    return v;
}

std::vector<mpz_class> poly_coords_z(const Poly& f, const Window& w) {
    if (f.ring.tag != Ring::Tag::Z)
        throw ring_mismatch_error("lattice coordinates need Z coefficients, got " + f.ring.name());
    if (!fits(f, w)) throw out_of_window_error(out_of_window_terms(f, w));
    std::vector<mpz_class> v(w.size(), 0);
    for (const auto& [e, c] : f.terms) v[*w.index(e)] = c.z();
    return v;
}

Subspace span(const std::vector<Poly>& vectors, const Window& w, const Ring& field,
              Exactness exact) {
    if (!field.is_field()) throw ring_mismatch_error(field.name() + " is not a field");
    std::vector<std::vector<Coeff>> rows;
    rows.reserve(vectors.size());
    for (const Poly& f : vectors) rows.push_back(poly_coords(f, w, field));
    return Subspace{w, field, row_space(field, rows, w.size()), exact};
}

Lattice lattice_span(const std::vector<Poly>& vectors, const Window& w, Exactness exact) {
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(vectors.size());
    for (const Poly& f : vectors) rows.push_back(poly_coords_z(f, w));
    return Lattice{w, hnf_span(rows, w.size()), exact};
}

bool contains(const Subspace& s, const Poly& f) {
    return in_row_space(s.basis, poly_coords(f, s.window, s.field));
}

bool contains(const Lattice& s, const Poly& f) {
    return in_lattice(s.basis, poly_coords_z(f, s.window));
}

namespace {

template <typename MakeSpan>
auto image_over_window(const AlgebraMap& m, const Window& source, const Window& target,
                       MakeSpan&& make_span) {
    const Poly& shape = std::visit(
        [](const auto& mm) -> const Poly& {
            if constexpr (std::is_same_v<std::decay_t<decltype(mm)>, EDeriv>)
                return mm.phi.shape();
            else
                return mm.shape();
        },
        m);
    std::vector<Poly> images;
    images.reserve(source.size());
    for (size_t i = 0; i < source.size(); ++i) {
        ExpVec e = source.at(i);
        Poly mono = Poly::monomial(shape.ring, shape.vars, shape.laurent, e,
                                   Coeff::one(shape.ring));
        Poly img = mzlab::apply(m, mono);
        if (!fits(img, target)) throw target_overflow_error(expvec_to_string(e, shape.vars));
        images.push_back(std::move(img));
    }
    Exactness exact = is_graded(m) ? Exactness::WindowExact : Exactness::BoundedEvidence;
    return make_span(images, exact);
}

}  // namespace

Subspace map_image(const AlgebraMap& m, const Window& source, const Window& target,
                   const Ring& field) {
    return image_over_window(m, source, target,
                             [&](const std::vector<Poly>& imgs, Exactness exact) {
                                 return span(imgs, target, field, exact);
                             });
}

Lattice map_image_lattice(const AlgebraMap& m, const Window& source, const Window& target) {
    return image_over_window(m, source, target,
                             [&](const std::vector<Poly>& imgs, Exactness exact) {
                                 return lattice_span(imgs, target, exact);
                             });
}

Subspace span_image(const AlgebraMap& m, const std::vector<Poly>& gens, const Window& target,
                    const Ring& field, Exactness exact) {
    std::vector<Poly> images;
    images.reserve(gens.size());
    for (const Poly& g : gens) {
        Poly img = mzlab::apply(m, g);
        if (!fits(img, target)) throw target_overflow_error(to_string(g));
        images.push_back(std::move(img));
    }
    return span(images, target, field, exact);
}

Lattice span_image_lattice(const AlgebraMap& m, const std::vector<Poly>& gens,
                           const Window& target, Exactness exact) {
    std::vector<Poly> images;
    images.reserve(gens.size());
    for (const Poly& g : gens) {
        Poly img = mzlab::apply(m, g);
        if (!fits(img, target)) throw target_overflow_error(to_string(g));
        images.push_back(std::move(img));
    }
    return lattice_span(images, target, exact);
}

namespace {

template <typename S>
RadicalVerdict radical_probe_impl(const S& s, const Poly& a, int max_power) {
    RadicalVerdict v;
    v.candidate = a;
    v.max_power = max_power;
    v.exact = s.exact;
    Poly p = Poly::constant(a.ring, a.vars, a.laurent, Coeff::one(a.ring));
    for (int m = 1; m <= max_power; ++m) {
        p = p * a;
        if (!fits(p, s.window))
            throw out_of_window_error("power m=" + std::to_string(m) + " of candidate: " +
                                      out_of_window_terms(p, s.window));
        if (!contains(s, p)) v.fails.push_back(m);
    }
    return v;
}

template <typename S>
FalsifyCertificate ms_falsify_impl(const S& s, const Poly& a, const Poly& left,
                                   const Poly& right, int max_power, std::string note) {
    FalsifyCertificate cert;
    cert.max_power = max_power;
    cert.exact = s.exact;
    cert.note = std::move(note);
    cert.established = true;
    Poly p = Poly::constant(a.ring, a.vars, a.laurent, Coeff::one(a.ring));
    for (int m = 1; m <= max_power; ++m) {
        p = p * a;
        if (!contains(s, p)) throw not_in_radical_error(m);
        Poly translated = left * p * right;
        if (contains(s, translated)) {
            if (cert.established) cert.first_violation = m;
            cert.established = false;
        }
    }
    return cert;
}

}  // namespace

RadicalVerdict radical_probe(const Subspace& s, const Poly& a, int max_power) {
    return radical_probe_impl(s, a, max_power);
}
RadicalVerdict radical_probe(const Lattice& s, const Poly& a, int max_power) {
    return radical_probe_impl(s, a, max_power);
}

FalsifyCertificate ms_falsify(const Subspace& s, const Poly& a, const Poly& left,
                              const Poly& right, int max_power, std::string note) {
    return ms_falsify_impl(s, a, left, right, max_power, std::move(note));
}
FalsifyCertificate ms_falsify(const Lattice& s, const Poly& a, const Poly& left,
                              const Poly& right, int max_power, std::string note) {
    return ms_falsify_impl(s, a, left, right, max_power, std::move(note));
}

bool verify_split(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    size_t n = a.rows();
    const Mat* ms[4] = {&a, &b, &c, &d};
    const char* names[4] = {"A", "B", "C", "D"};
    for (const Mat* m : ms)
        if (m->rows() != n || m->cols() != n)
            throw precondition_failed_error("matrices must be square of equal dimension");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!((*ms[i]) * (*ms[j]) == (*ms[j]) * (*ms[i])))
                throw precondition_failed_error(std::string(names[i]) + names[j] + " != " +
                                                names[j] + names[i]);
    if (!(a * b).is_zero()) throw precondition_failed_error("AB != 0");
    if (!(a * d + b * c == Mat::identity(a.ring(), n)))
        throw precondition_failed_error("AD + BC != I");
    return a.colspace() == b.nullspace();
}

Mat window_matrix(const AlgebraMap& m, const Window& w, const Ring& field) {
    const Poly& shape = std::visit(
        [](const auto& mm) -> const Poly& {
            if constexpr (std::is_same_v<std::decay_t<decltype(mm)>, EDeriv>)
                return mm.phi.shape();
            else
                return mm.shape();
        },
        m);
    Mat out(field, w.size(), w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        Poly mono = Poly::monomial(shape.ring, shape.vars, shape.laurent, w.at(j),
                                   Coeff::one(shape.ring));
        Poly img = mzlab::apply(m, mono);
        if (!fits(img, w)) throw target_overflow_error(expvec_to_string(w.at(j), shape.vars));
        std::vector<Coeff> col = poly_coords(img, w, field);
        for (size_t i = 0; i < w.size(); ++i) out.at(i, j) = col[i];
    }
    return out;
}

bool lemma13_spot_check(const Subspace& s, const std::vector<Poly>& ideal_gens,
                        const std::vector<Poly>& candidates, int max_power) {
    for (const Poly& g : ideal_gens)
        if (!contains(s, g)) return false;
    Subspace ideal = span(ideal_gens, s.window, s.field, s.exact);

    for (const Poly& a : candidates) {
        RadicalVerdict in_ideal = radical_probe(ideal, a, max_power);
        RadicalVerdict in_s = radical_probe(s, a, max_power);
        if (in_ideal.fails != in_s.fails) return false;
        if (!in_s.all_in()) continue;
        // MS-style spot check: translates by the generating family stay in S
        Poly p = Poly::constant(a.ring, a.vars, a.laurent, Coeff::one(a.ring));
        for (int m = 1; m <= max_power; ++m) {
            p = p * a;
            for (const Poly& w : ideal_gens) {
                Poly t = w * p;
                if (!fits(t, s.window)) continue;  // spot check only where computable
                if (!contains(s, t)) return false;
            }
        }
    }
    return true;
}

}  // namespace mzlab
