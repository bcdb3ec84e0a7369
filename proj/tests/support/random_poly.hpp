#pragma once

#include <random>

#include "charnum/ring.hpp"

namespace testsupport {

// Small random ring element (already normalized).  Raw lambda exponents may
// exceed n-1 before normalization so the reduction path is exercised.
inline charnum::Polynomial random_polynomial(std::mt19937& rng, const charnum::RingSpec& spec,
                                             int max_terms = 6, bool raw = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expa(0, raw ? 5 : 3);
    std::uniform_int_distribution<int> expl(0, spec.n + 3);
    std::uniform_int_distribution<int> exph(0, raw ? 5 : 3);
    std::uniform_int_distribution<long long> coef(-9, 9);
    charnum::Polynomial p(spec.k);
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        charnum::Monomial m;
        m.a = static_cast<std::uint8_t>(expa(rng));
        m.lam = static_cast<std::uint16_t>(expl(rng));
        for (int i = 0; i < spec.k; ++i)
            m.h[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exph(rng));
        p.add_term(m, charnum::Int(coef(rng)));
    }
    return raw ? p : charnum::normalize(p, spec);
}

} // namespace testsupport
