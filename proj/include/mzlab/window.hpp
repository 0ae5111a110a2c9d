#ifndef MZLAB_WINDOW_HPP
#define MZLAB_WINDOW_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/poly.hpp"

namespace mzlab {

// Finite exponent box truncating a polynomial algebra.  Monomials are
// enumerated in a fixed canonical order (mixed radix from the low corner,
// first variable slowest).
struct Window {
    bool laurent = false;
    std::vector<std::pair<int, int>> bounds;  // per-variable lo <= hi

    // [0, n] per variable, or [-n, n] when laurent.
    static Window box(size_t nvars, int n, bool laurent);

    size_t nvars() const { return bounds.size(); }
    size_t size() const;
    bool contains(const ExpVec& e) const;
    std::optional<size_t> index(const ExpVec& e) const;
    ExpVec at(size_t i) const;

    bool operator==(const Window&) const = default;
};

bool fits(const Poly& f, const Window& w);

// Offending terms formatted for error messages.
std::string out_of_window_terms(const Poly& f, const Window& w);

}  // namespace mzlab

#endif
