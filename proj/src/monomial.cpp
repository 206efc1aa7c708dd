#include "charp/monomial.hpp"

#include <algorithm>

namespace charp {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.nvars(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.nvars(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

namespace {

// grevlex: higher total degree wins; on equal degree the monomial whose
// last nonzero exponent difference is negative is the larger one.
int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t from) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = from; i < a.nvars(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > from;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::grevlex:
            return cmp_grevlex(a, b, 0);
        case MonomialOrder::lex:
            return cmp_lex(a, b);
        case MonomialOrder::elim_first:
            if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
            return cmp_grevlex(a, b, 1);
    }
    return 0;
}

namespace {

void enumerate(std::size_t nvars, std::size_t i, std::int64_t remaining, Monomial& current,
               std::vector<Monomial>& out) {
    if (i + 1 == nvars) {
        current[i] = static_cast<std::int32_t>(remaining);
        out.push_back(current);
        current[i] = 0;
        return;
    }
    for (std::int64_t e = remaining; e >= 0; --e) {
        current[i] = static_cast<std::int32_t>(e);
        enumerate(nvars, i + 1, remaining - e, current, out);
    }
    current[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d, MonomialOrder order) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    Monomial current(nvars);
    enumerate(nvars, 0, d, current, out);
    std::sort(out.begin(), out.end(),
              [order](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, order) > 0; });
    return out;
}

}  // namespace charp
