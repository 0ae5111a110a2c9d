#ifndef MZLAB_TEST_UTIL_HPP
#define MZLAB_TEST_UTIL_HPP

#include "mzlab/parse.hpp"
#include "mzlab/poly.hpp"
#include "mzlab/rng.hpp"

namespace mztest {

inline mzlab::Coeff random_coeff(mzlab::Rng& rng, const mzlab::Ring& ring) {
    using mzlab::Coeff;
    switch (ring.tag) {
        case mzlab::Ring::Tag::Fp:
            return Coeff::from_int(ring, rng.range(0, static_cast<long long>(ring.p) - 1));
        case mzlab::Ring::Tag::QLaurent: {
            mzlab::TPoly tp;
            int nterms = static_cast<int>(rng.range(1, 2));
            for (int i = 0; i < nterms; ++i)
                tp[rng.range(-2, 2)] += static_cast<long>(rng.range(-3, 3));
            return Coeff::from_tpoly(tp);
        }
        case mzlab::Ring::Tag::Q:
            return Coeff::from_mpq(ring, mpq_class(static_cast<long>(rng.range(-6, 6)),
                                                   static_cast<long>(rng.range(1, 3))));
        case mzlab::Ring::Tag::Z:
        default:
            return Coeff::from_int(ring, rng.range(-6, 6));
    }
}

inline mzlab::Poly random_poly(mzlab::Rng& rng, const mzlab::Ring& ring,
                               const std::vector<std::string>& vars, bool laurent,
                               int max_terms = 3, int max_exp = 2) {
    mzlab::Poly f = mzlab::Poly::zero(ring, vars, laurent);
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        mzlab::ExpVec e(vars.size());
        for (size_t i = 0; i < vars.size(); ++i)
            e[i] = static_cast<int>(rng.range(laurent ? -max_exp : 0, max_exp));
        f.add_term(e, random_coeff(rng, ring));
    }
    return f;
}

}  // namespace mztest

#endif
