#include <algorithm>
#include <optional>
#include <vector>

#include "charp/error.hpp"
#include "charp/polynomial.hpp"

// Multivariate GCD over GF(p) by primitive pseudo-remainder sequences,
// recursing on the last variable present. Everything is normalized monic
// so results are canonical.

namespace charp {

namespace {

// f viewed as univariate in variable v: coefficients indexed by the
// exponent of v, each free of v.
std::vector<Polynomial> univ_coeffs(const Polynomial& f, std::size_t v) {
    std::vector<Polynomial> cs(static_cast<std::size_t>(f.degree_in(v)) + 1, Polynomial(f.ring()));
    std::vector<std::vector<Polynomial::Term>> buckets(cs.size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        auto k = static_cast<std::size_t>(m[v]);
        m[v] = 0;
        buckets[k].push_back({std::move(m), t.coeff});
    }
    for (std::size_t k = 0; k < cs.size(); ++k)
        cs[k] = Polynomial::from_terms(f.ring(), std::move(buckets[k]));
    return cs;
}

Polynomial shift_by_var(const Polynomial& f, std::size_t v, std::int64_t k) {
    Monomial m(f.ring()->nvars());
    m[v] = static_cast<std::int32_t>(k);
    return f.times_term(m, 1);
}

std::optional<std::size_t> main_variable(const Polynomial& f, const Polynomial& g) {
    for (std::size_t i = f.ring()->nvars(); i-- > 0;) {
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) return i;
    }
    return std::nullopt;
}

Polynomial gcd_monic(const Polynomial& f, const Polynomial& g);

// gcd of the coefficients of f with respect to v (monic).
Polynomial content_wrt(const Polynomial& f, std::size_t v) {
    Polynomial c(f.ring());
    for (const auto& coeff : univ_coeffs(f, v)) {
        if (coeff.is_zero()) continue;
        c = gcd_monic(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

Polynomial primitive_part(const Polynomial& f, std::size_t v, const Polynomial& content) {
    auto q = divide_exact(f, content);
    if (!q) throw DomainError("content does not divide its polynomial");
    (void)v;
    return *q;
}

// Pseudo-remainder of a by b in variable v (deg_v(a) >= deg_v(b) not
// required; returns a if deg_v(a) < deg_v(b)).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::size_t v) {
    const auto db = b.degree_in(v);
    auto bs = univ_coeffs(b, v);
    const Polynomial& lcb = bs.back();
    while (!a.is_zero() && a.degree_in(v) >= db) {
        auto as = univ_coeffs(a, v);
        const Polynomial& lca = as.back();
        const std::int64_t da = static_cast<std::int64_t>(as.size()) - 1;
        a = a * lcb - shift_by_var(lca * b, v, da - db);
    }
    return a;
}

Polynomial gcd_monic(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    auto mv = main_variable(f, g);
    if (!mv) return Polynomial::constant(f.ring(), 1);  // two nonzero constants
    const std::size_t v = *mv;
    if (f.degree_in(v) == 0) return gcd_monic(f, content_wrt(g, v));
    if (g.degree_in(v) == 0) return gcd_monic(content_wrt(f, v), g);

    Polynomial cf = content_wrt(f, v);
    Polynomial cg = content_wrt(g, v);
    Polynomial a = primitive_part(f, v, cf);
    Polynomial b = primitive_part(g, v, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        Polynomial r = pseudo_rem(a, b, v);
        if (r.is_zero()) break;
        a = std::move(b);
        b = primitive_part(r, v, content_wrt(r, v));
    }
    Polynomial result = primitive_part(b, v, content_wrt(b, v)) * gcd_monic(cf, cg);
    return result.monic();
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_compatible(*f.ring(), *g.ring());
    if (f.ring()->has_modulus() || g.ring()->has_modulus())
        throw DomainError("gcd is defined on the polynomial ring, not a quotient");
    return gcd_monic(f, g);
}

}  // namespace charp
