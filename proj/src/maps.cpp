#include "mzlab/maps.hpp"

#include <algorithm>
#include <map>

namespace mzlab {

MapSpec MapSpec::derivation(std::vector<Poly> images) {
    if (images.empty()) throw error("a map needs at least one generator image");
    for (size_t i = 0; i + 1 < images.size(); ++i) require_compatible(images[i], images[i + 1]);
    if (images.size() != images[0].nvars())
        throw error("need one image per variable");
    return {MapKind::Derivation, std::move(images)};
}

MapSpec MapSpec::endomorphism(std::vector<Poly> images) {
    MapSpec m = derivation(std::move(images));
    m.kind = MapKind::Endomorphism;
    return m;
}

EDeriv::EDeriv(MapSpec phi_) : phi(std::move(phi_)) {
    if (phi.kind != MapKind::Endomorphism)
        throw error("an E-derivation is I - phi for an endomorphism phi");
}

namespace {

// D(x^e) = sum_i e_i x^{e - u_i} D(x_i), valid for negative e_i as well.
Poly derive_monomial(const MapSpec& d, const ExpVec& e, const Coeff& c) {
    Poly out = d.shape().shape_zero();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        Coeff k = Coeff::from_int(out.ring, e[i]) * c;
        if (k.is_zero()) continue;
        ExpVec shifted = e;
        shifted[i] -= 1;
        Poly part = scale(d.images[i], k);
        Poly mono = Poly::monomial(out.ring, out.vars, out.laurent, shifted, Coeff::one(out.ring));
        out = out + mono * part;
    }
    return out;
}

}  // namespace

Poly apply(const MapSpec& m, const Poly& f) {
    require_compatible(m.shape(), f);
    if (m.kind == MapKind::Endomorphism) return substitute(f, m.images);
    Poly out = f.shape_zero();
    for (const auto& [e, c] : f.terms) out = out + derive_monomial(m, e, c);
    return out;
}

Poly apply(const EDeriv& m, const Poly& f) { return f - apply(m.phi, f); }

Poly apply(const AlgebraMap& m, const Poly& f) {
    return std::visit([&](const auto& mm) { return apply(mm, f); }, m);
}

Poly iterate(const AlgebraMap& m, Poly f, unsigned k) {
    for (unsigned i = 0; i < k; ++i) f = mzlab::apply(m, f);
    return f;
}

Poly exp_derivation(const MapSpec& d, const Poly& f, int cap) {
    if (d.kind != MapKind::Derivation) throw error("exp_derivation expects a derivation");
    if (d.shape().ring.characteristic() != 0)
        throw ring_mismatch_error("exp of a derivation needs characteristic-zero coefficients");
    Poly sum = f;
    Poly term = f;
    mpz_class factorial = 1;
    for (int i = 1; i <= cap; ++i) {
        term = apply(d, term);
        if (term.is_zero()) return sum;
        factorial *= i;
        Coeff inv_fact = Coeff::from_mpq(f.ring, mpq_class(1, factorial));
        sum = sum + scale(term, inv_fact);
    }
    throw not_locally_nilpotent_error(to_string(f), cap);
}

std::optional<std::pair<int, int>> orbit_collision(const MapSpec& phi, const Poly& a, int bound) {
    if (phi.kind != MapKind::Endomorphism) throw error("orbit_collision expects an endomorphism");
    std::vector<Poly> orbit{a};
    for (int k = 1; k <= bound; ++k) orbit.push_back(apply(phi, orbit.back()));
    for (int i = 0; i <= bound; ++i)
        for (int j = i + 1; j <= bound; ++j)
            if (orbit[i] == orbit[j]) return std::make_pair(i, j);
    return std::nullopt;
}

std::optional<std::pair<int, int>> endo_period_detect(const MapSpec& phi, int bound) {
    if (phi.kind != MapKind::Endomorphism)
        throw error("endo_period_detect expects an endomorphism");
    const Poly& shape = phi.shape();

    int i = 1;
    long long period = 1;
    std::vector<Poly> gens;
    for (size_t v = 0; v < shape.nvars(); ++v) {
        Poly g = Poly::variable(shape.ring, shape.vars, shape.laurent, v);
        gens.push_back(g);
        auto col = orbit_collision(phi, g, bound);
        if (!col) return std::nullopt;
        i = std::max(i, col->first);
        period *= col->second - col->first;
        if (period > 100000) throw budget_exceeded_error("combined period exceeds 100000");
    }
    int j = i + static_cast<int>(period);

    // certificate check by re-application on every generator
    for (const auto& g : gens) {
        Poly gi = iterate(AlgebraMap{phi}, g, static_cast<unsigned>(i));
        Poly gj = iterate(AlgebraMap{phi}, g, static_cast<unsigned>(j));
        if (gi != gj) return std::nullopt;
    }
    return std::make_pair(i, j);
}

LnVerdict ln_probe(const AlgebraMap& m, const std::vector<Poly>& probes, int cap) {
    LnVerdict v;
    v.cap = cap;
    v.nilpotent = true;
    for (const Poly& p : probes) {
        Poly g = p;
        int found = -1;
        for (int k = 1; k <= cap; ++k) {
            g = mzlab::apply(m, g);
            if (g.is_zero()) {
                found = k;
                break;
            }
        }
        v.per_probe.push_back(found);
        if (found < 0)
            v.nilpotent = false;
        else
            v.k = std::max(v.k, found);
    }
    return v;
}

namespace {

// Sparse incremental echelon basis over the fraction field of the
// coefficients; rows keyed by their leading exponent.
class SparseEchelon {
  public:
    // reduces f against the basis; if independent, inserts it and returns
    // true, otherwise returns false
    bool insert(Poly f) {
        for (;;) {
            f = reduce_once(std::move(f));
            if (f.is_zero()) return false;
            ExpVec lead = f.terms.rbegin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                Coeff inv = f.terms.rbegin()->second.inv();
                rows_.emplace(lead, scale(f, inv));
                return true;
            }
        }
    }

    size_t dim() const { return rows_.size(); }

  private:
    Poly reduce_once(Poly f) {
        bool changed = true;
        while (changed && !f.is_zero()) {
            changed = false;
            ExpVec lead = f.terms.rbegin()->first;
            auto it = rows_.find(lead);
            if (it != rows_.end()) {
                f = f - scale(it->second, f.terms.rbegin()->second);
                changed = true;
            }
        }
        return f;
    }

    std::map<ExpVec, Poly> rows_;
};

}  // namespace

LfVerdict lf_probe(const AlgebraMap& m, const Poly& f, int cap) {
    LfVerdict v;
    v.cap = cap;
    Poly g = f;
    if (g.ring.tag == Ring::Tag::Z) g = to_rational_coeffs(g);
    if (!g.ring.is_field())
        throw ring_mismatch_error("lf_probe needs field-backed coefficients, got " +
                                  g.ring.name());

    AlgebraMap mm = m;
    if (f.ring.tag == Ring::Tag::Z) {
        // run the whole orbit over Q
        auto lift = [](const MapSpec& s) {
            std::vector<Poly> imgs;
            for (const auto& p : s.images) imgs.push_back(to_rational_coeffs(p));
            MapSpec out = s;
            out.images = std::move(imgs);
            return out;
        };
        if (std::holds_alternative<MapSpec>(m))
            mm = lift(std::get<MapSpec>(m));
        else
            mm = EDeriv(lift(std::get<EDeriv>(m).phi));
    }

    SparseEchelon basis;
    for (int k = 0; k <= cap; ++k) {
        if (!basis.insert(g)) {
            v.stabilized = true;
            v.dim = basis.dim();
            return v;
        }
        g = mzlab::apply(mm, g);
    }
    return v;
}

namespace {

bool single_term_images(const MapSpec& m) {
    return std::all_of(m.images.begin(), m.images.end(),
                       [](const Poly& p) { return p.terms.size() <= 1; });
}

}  // namespace

bool is_graded(const MapSpec& m) {
    if (!single_term_images(m)) return false;
    if (m.kind == MapKind::Endomorphism) return true;
    // derivation: require one common exponent shift across all variables
    bool have_shift = false;
    ExpVec shift;
    for (size_t i = 0; i < m.images.size(); ++i) {
        if (m.images[i].is_zero()) continue;
        ExpVec s = m.images[i].terms.begin()->first;
        s[i] -= 1;
        if (!have_shift) {
            shift = s;
            have_shift = true;
        } else if (s != shift) {
            return false;
        }
    }
    return true;
}

bool is_graded(const EDeriv& m) { return is_graded(m.phi); }

bool is_graded(const AlgebraMap& m) {
    return std::visit([](const auto& mm) { return is_graded(mm); }, m);
}

}  // namespace mzlab
