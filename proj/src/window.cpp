#include "mzlab/window.hpp"

#include <sstream>

namespace mzlab {

Window Window::box(size_t nvars, int n, bool laurent) {
    Window w;
    w.laurent = laurent;
    w.bounds.assign(nvars, laurent ? std::make_pair(-n, n) : std::make_pair(0, n));
    return w;
}

size_t Window::size() const {
    size_t s = 1;
    for (const auto& [lo, hi] : bounds) s *= static_cast<size_t>(hi - lo + 1);
    return s;
}

bool Window::contains(const ExpVec& e) const {
    if (e.size() != bounds.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < bounds[i].first || e[i] > bounds[i].second) return false;
    return true;
}

std::optional<size_t> Window::index(const ExpVec& e) const {
    if (!contains(e)) return std::nullopt;
    size_t idx = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        size_t width = static_cast<size_t>(bounds[i].second - bounds[i].first + 1);
        idx = idx * width + static_cast<size_t>(e[i] - bounds[i].first);
    }
    return idx;
}

ExpVec Window::at(size_t i) const {
    ExpVec e(bounds.size(), 0);
    for (size_t k = bounds.size(); k-- > 0;) {
        size_t width = static_cast<size_t>(bounds[k].second - bounds[k].first + 1);
        e[k] = bounds[k].first + static_cast<int>(i % width);
        i /= width;
    }
    return e;
}

bool fits(const Poly& f, const Window& w) {
    for (const auto& [e, c] : f.terms)
        if (!w.contains(e)) return false;
    return true;
}

std::string out_of_window_terms(const Poly& f, const Window& w) {
    std::ostringstream os;
    bool any = false;
    for (const auto& [e, c] : f.terms) {
        if (w.contains(e)) continue;
        if (any) os << ", ";
        os << expvec_to_string(e, f.vars);
        any = true;
    }
    return os.str();
}

}  // namespace mzlab
