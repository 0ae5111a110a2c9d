#ifndef MZLAB_MAPS_HPP
#define MZLAB_MAPS_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mzlab/poly.hpp"

namespace mzlab {

enum class MapKind { Derivation, Endomorphism };

// A derivation or endomorphism of a (Laurent) polynomial algebra, given by
// the images of the generators.  Derivations extend by the Leibniz rule,
// endomorphisms multiplicatively.
struct MapSpec {
    MapKind kind = MapKind::Derivation;
    std::vector<Poly> images;  // one per variable

    static MapSpec derivation(std::vector<Poly> images);
    static MapSpec endomorphism(std::vector<Poly> images);

    const Poly& shape() const { return images.at(0); }
};

// delta = I - phi for an algebra endomorphism phi.
struct EDeriv {
    MapSpec phi;

    explicit EDeriv(MapSpec phi_);
};

using AlgebraMap = std::variant<MapSpec, EDeriv>;

Poly apply(const MapSpec& m, const Poly& f);
Poly apply(const EDeriv& m, const Poly& f);
Poly apply(const AlgebraMap& m, const Poly& f);

Poly iterate(const AlgebraMap& m, Poly f, unsigned k);

inline constexpr int kDefaultProbeCap = 64;

// e^D(f) as the finite sum of D^i(f)/i!, for derivations whose series
// terminates on f.  Char-0 coefficients only.
Poly exp_derivation(const MapSpec& d, const Poly& f, int cap = kDefaultProbeCap);

// Least-lexicographic pair 0 <= i < j <= bound with phi^i(a) = phi^j(a).
std::optional<std::pair<int, int>> orbit_collision(const MapSpec& phi, const Poly& a, int bound);

// Combines per-generator orbit collisions into a verified certificate
// (i, j) with 1 <= i < j and phi^i = phi^j as maps.
std::optional<std::pair<int, int>> endo_period_detect(const MapSpec& phi,
                                                      int bound = kDefaultProbeCap);

struct LnVerdict {
    bool nilpotent = false;
    int k = 0;    // least power annihilating every probe, when nilpotent
    int cap = 0;
    std::vector<int> per_probe;  // -1 where the probe did not vanish
};

LnVerdict ln_probe(const AlgebraMap& m, const std::vector<Poly>& probes,
                   int cap = kDefaultProbeCap);

struct LfVerdict {
    bool stabilized = false;
    size_t dim = 0;  // dimension of the stabilized iterate span
    int cap = 0;
};

// Tracks the span of f, m(f), m^2(f), ... by exact rank over the fraction
// field of the coefficients; reports the dimension where it stabilizes.
LfVerdict lf_probe(const AlgebraMap& m, const Poly& f, int cap = kDefaultProbeCap);

// Graded shortcut: maps sending each monomial to a support compatible with a
// fixed exponent translation (derivations) or a single monomial
// (endomorphisms).  Windowed images of graded maps give verdicts that are
// stable under window enlargement.
bool is_graded(const MapSpec& m);
bool is_graded(const EDeriv& m);
bool is_graded(const AlgebraMap& m);

}  // namespace mzlab

#endif
