#pragma once

#include <random>

#include "crahlfors/poly.hpp"

namespace testutil {

inline cra::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    cra::Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline cra::Radical random_radical(std::mt19937& rng) {
    std::uniform_int_distribution<int> surd(0, 3);
    static const unsigned long surds[] = {1, 2, 3, 6};
    cra::Radical r;
    for (int k = 0; k < 2; ++k) {
        cra::Gaussian g(random_rational(rng), random_rational(rng));
        r = r + cra::Radical(g) * cra::Radical::sqrt_of(cra::Rational((long)surds[surd(rng)]));
    }
    return r;
}

inline cra::Poly random_poly(std::mt19937& rng, int nvars = 2, int terms = 4,
                             int max_exp = 2) {
    std::uniform_int_distribution<int> e(0, max_exp);
    cra::Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        cra::Monomial m(nvars);
        for (int j = 0; j < nvars; ++j) {
            m.holo[j] = e(rng);
            m.anti[j] = e(rng);
        }
        p.add_term(m, random_radical(rng));
    }
    return p;
}

}  // namespace testutil
