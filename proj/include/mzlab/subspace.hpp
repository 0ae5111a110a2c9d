#ifndef MZLAB_SUBSPACE_HPP
#define MZLAB_SUBSPACE_HPP

#include <string>
#include <vector>

#include "mzlab/maps.hpp"
#include "mzlab/matrix.hpp"
#include "mzlab/window.hpp"

namespace mzlab {

// Whether a windowed verdict is provably stable under window enlargement
// (graded operators) or only evidence at the computed bounds.
enum class Exactness { WindowExact, BoundedEvidence };

inline const char* to_string(Exactness e) {
    return e == Exactness::WindowExact ? "window-exact" : "bounded-evidence";
}

// Span over a field inside a monomial window; rows of `basis` are in RREF
// with respect to the window's canonical monomial coordinates.
struct Subspace {
    Window window;
    Ring field;
    Mat basis;
    Exactness exact = Exactness::WindowExact;

    size_t dim() const { return basis.rows(); }
    bool operator==(const Subspace& o) const {
        return window == o.window && field == o.field && basis == o.basis;
    }
};

// Z-module span inside a window; rows of `basis` are in HNF.
struct Lattice {
    Window window;
    IntMat basis;
    Exactness exact = Exactness::WindowExact;

    size_t dim() const { return basis.rows(); }
    bool operator==(const Lattice& o) const {
        return window == o.window && basis == o.basis;
    }
};

std::vector<Coeff> poly_coords(const Poly& f, const Window& w, const Ring& field);
std::vector<mpz_class> poly_coords_z(const Poly& f, const Window& w);

Subspace span(const std::vector<Poly>& vectors, const Window& w, const Ring& field,
              Exactness exact = Exactness::WindowExact);
Lattice lattice_span(const std::vector<Poly>& vectors, const Window& w,
                     Exactness exact = Exactness::WindowExact);

bool contains(const Subspace& s, const Poly& f);
bool contains(const Lattice& s, const Poly& f);

// Span of {m(x^alpha) : alpha in source}; exactness follows the graded
// shortcut.  Throws target_overflow_error naming the first monomial whose
// image escapes.
Subspace map_image(const AlgebraMap& m, const Window& source, const Window& target,
                   const Ring& field);
Lattice map_image_lattice(const AlgebraMap& m, const Window& source, const Window& target);

// Span of {m(g) : g in gens}, e.g. the image of an ideal given by the
// generators g = u * x^alpha.  Non-monomial generators make the truncation
// evidence-only.
Subspace span_image(const AlgebraMap& m, const std::vector<Poly>& gens, const Window& target,
                    const Ring& field, Exactness exact = Exactness::BoundedEvidence);
Lattice span_image_lattice(const AlgebraMap& m, const std::vector<Poly>& gens,
                           const Window& target, Exactness exact = Exactness::BoundedEvidence);

struct RadicalVerdict {
    Poly candidate;
    int max_power = 0;
    std::vector<int> fails;  // powers m with a^m not in the subspace
    Exactness exact = Exactness::WindowExact;

    bool all_in() const { return fails.empty(); }
};

RadicalVerdict radical_probe(const Subspace& s, const Poly& a, int max_power);
RadicalVerdict radical_probe(const Lattice& s, const Poly& a, int max_power);

// Bounded falsification of the two-sided MS property: a^m in S while
// left*a^m*right stays out, for m = 1..max_power.
struct FalsifyCertificate {
    bool established = false;
    int first_violation = 0;  // smallest m with left*a^m*right in S, when not established
    int max_power = 0;
    Exactness exact = Exactness::WindowExact;
    std::string note;  // external argument for "a^m in S for all m", when one exists
};

FalsifyCertificate ms_falsify(const Subspace& s, const Poly& a, const Poly& left,
                              const Poly& right, int max_power, std::string note = {});
FalsifyCertificate ms_falsify(const Lattice& s, const Poly& a, const Poly& left,
                              const Poly& right, int max_power, std::string note = {});

// Executable witness of the splitting lemma: for commuting A, B, C, D with
// AB = 0 and AD + BC = I, the column space of A equals the null space of B.
bool verify_split(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

// Matrix of a window-preserving map on the window's monomial coordinates
// (columns indexed by source monomials).  Throws target_overflow_error if an
// image escapes.
Mat window_matrix(const AlgebraMap& m, const Window& w, const Ring& field);

// Diagnostic: given an ideal truncation contained in S whose radical probe
// agrees with S's on a generating family, run MS-style spot checks on S.
bool lemma13_spot_check(const Subspace& s, const std::vector<Poly>& ideal_gens,
                        const std::vector<Poly>& candidates, int max_power);

}  // namespace mzlab

#endif
