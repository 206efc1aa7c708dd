#ifndef CHARP_TESTS_UTIL_HPP
#define CHARP_TESTS_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "charp/parse.hpp"
#include "charp/polynomial.hpp"

namespace testutil {

inline charp::RingPtr ring(const std::string& desc,
                           charp::MonomialOrder order = charp::MonomialOrder::grevlex,
                           charp::Limits limits = {}) {
    return charp::parse_ring(desc, order, limits);
}

inline charp::Polynomial P(const std::string& text, const charp::RingPtr& R) {
    return charp::parse_poly(text, R);
}

/// Seeded random polynomial: `nterms` draws with per-variable exponents in
/// [0, var_cap] and coefficients in [0, p); duplicate monomials merge, so
/// the result may have fewer terms or be zero.
inline charp::Polynomial random_poly(std::mt19937_64& rng, const charp::RingPtr& R,
                                     std::int32_t var_cap, int nterms) {
    std::vector<charp::Polynomial::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        charp::Monomial m(R->nvars());
        for (std::size_t i = 0; i < R->nvars(); ++i)
            m[i] = static_cast<std::int32_t>(rng() % (var_cap + 1));
        terms.push_back({m, static_cast<std::int64_t>(rng() % R->p())});
    }
    return charp::Polynomial::from_terms(R, std::move(terms));
}

/// Like random_poly but never returns zero.
inline charp::Polynomial random_nonzero_poly(std::mt19937_64& rng, const charp::RingPtr& R,
                                             std::int32_t var_cap, int nterms) {
    for (;;) {
        charp::Polynomial f = random_poly(rng, R, var_cap, nterms);
        if (!f.is_zero()) return f;
    }
}

}  // namespace testutil

#endif
