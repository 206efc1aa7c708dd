#include "charp/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "charp/error.hpp"

namespace charp {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_compatible(*ring_, *g.ring());
        gens_.push_back(std::move(g));
    }
}

namespace {

// Full reduction of f by a divisor list. Single-term divisors annihilate
// matching terms outright, so they are applied eagerly at insertion; for a
// Groebner basis the normal form is unique and unaffected by this.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const auto ring = f.ring();
    const auto p = ring->p();
    const auto order = ring->order();

    std::vector<const Polynomial*> mono_divs, poly_divs;
    for (const auto& d : divisors) {
        (d.num_terms() == 1 ? mono_divs : poly_divs).push_back(&d);
    }
    auto killed = [&](const Monomial& m) {
        for (const auto* d : mono_divs)
            if (d->leading_monomial().divides(m)) return true;
        return false;
    };

    auto greater = [order](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, order) > 0;
    };
    std::map<Monomial, std::int64_t, decltype(greater)> work(greater);
    for (const auto& t : f.terms())
        if (!killed(t.mono)) work.emplace(t.mono, t.coeff);

    std::vector<Polynomial::Term> rem;
    const auto cap = ring->limits().max_terms;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mono = it->first;
        std::int64_t coeff = it->second;
        work.erase(it);
        if (coeff == 0) continue;
        const Polynomial* divisor = nullptr;
        for (const auto* d : poly_divs) {
            if (d->leading_monomial().divides(mono)) {
                divisor = d;
                break;
            }
        }
        if (!divisor) {
            rem.push_back({std::move(mono), coeff});
            continue;
        }
        Monomial qm = mono / divisor->leading_monomial();
        std::int64_t qc = (Fp(coeff, p) / divisor->leading_coefficient()).value();
        auto dt = divisor->terms().begin();
        for (++dt; dt != divisor->terms().end(); ++dt) {
            Monomial m2 = dt->mono * qm;
            if (killed(m2)) continue;
            auto [wit, ins] = work.try_emplace(std::move(m2), 0);
            wit->second = ((wit->second - qc * dt->coeff) % p + p) % p;
        }
        if (static_cast<std::int64_t>(work.size()) > cap)
            throw ResourceLimitError("reduction working set exceeds term cap");
    }
    return Polynomial::from_terms(ring, std::move(rem));
}

struct Pair {
    std::size_t i, j;
};

// Degree-first pair selection: smallest lcm degree, then smallest lcm
// under the ring order, then smallest indices. Deterministic.
std::size_t select_pair(const std::vector<Pair>& pairs, const std::vector<Polynomial>& basis,
                        MonomialOrder order) {
    std::size_t best = 0;
    auto key = [&](const Pair& pr) {
        return mono_lcm(basis[pr.i].leading_monomial(), basis[pr.j].leading_monomial());
    };
    Monomial best_lcm = key(pairs[0]);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        Monomial m = key(pairs[k]);
        auto da = m.total_degree(), db = best_lcm.total_degree();
        bool better = da < db || (da == db && mono_cmp(m, best_lcm, order) < 0);
        if (better) {
            best = k;
            best_lcm = std::move(m);
        }
    }
    return best;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const RingPtr& ring) {
    // drop elements whose leading monomial another element divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = basis[i].leading_monomial();
            const auto& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce every element against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) break;
            Polynomial r = reduce_full(minimal[i], others);
            if (r != minimal[i]) {
                changed = true;
                minimal[i] = std::move(r);
            }
        }
        minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                     [](const Polynomial& f) { return f.is_zero(); }),
                      minimal.end());
    }
    for (auto& f : minimal) f = f.monic();
    const auto order = ring->order();
    std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) > 0;
    });
    return minimal;
}

}  // namespace

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    require_compatible(*f.ring(), *g.ring());
    if (f.is_zero() || g.is_zero()) throw DomainError("s-polynomial of zero");
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(l / f.leading_monomial(),
                                f.leading_coefficient().inverse().value());
    Polynomial b = g.times_term(l / g.leading_monomial(),
                                g.leading_coefficient().inverse().value());
    return a - b;
}

GroebnerBasis buchberger(const Ideal& ideal) {
    const auto& ring = ideal.ring();
    if (ring->has_modulus())
        throw DomainError("buchberger runs in the polynomial ring; adjoin the modulus instead");
    std::vector<Polynomial> basis;
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> alive;  // mirrors `pending`

    auto add_element = [&](Polynomial f) {
        std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i) {
            pending.push_back({i, n});
            alive.insert({i, n});
        }
        basis.push_back(std::move(f));
    };

    for (const auto& g : ideal.gens()) add_element(g.monic());

    const auto order = ring->order();
    std::int64_t processed = 0;
    while (!pending.empty()) {
        if (++processed > ring->limits().max_pairs)
            throw ResourceLimitError("buchberger pair queue budget exceeded");
        std::size_t k = select_pair(pending, basis, order);
        Pair pr = pending[k];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k));
        alive.erase({pr.i, pr.j});

        const auto& lmi = basis[pr.i].leading_monomial();
        const auto& lmj = basis[pr.j].leading_monomial();
        Monomial l = mono_lcm(lmi, lmj);
        // coprimality criterion
        if (l == lmi * lmj) continue;
        // chain criterion: a third element divides the lcm and both of its
        // pairs with i and j have already been treated
        bool skip = false;
        for (std::size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == pr.i || t == pr.j) continue;
            if (!basis[t].leading_monomial().divides(l)) continue;
            auto key1 = std::minmax(pr.i, t);
            auto key2 = std::minmax(pr.j, t);
            if (!alive.count({key1.first, key1.second}) &&
                !alive.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial r = reduce_full(spoly(basis[pr.i], basis[pr.j]), basis);
        if (!r.is_zero()) add_element(r.monic());
    }

    return GroebnerBasis(ring, interreduce(std::move(basis), ring));
}

const GroebnerBasis& Ideal::groebner() const {
    std::call_once(cache_->once, [this] { cache_->gb = buchberger(*this); });
    return *cache_->gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    require_compatible(*f.ring(), *basis.ring());
    if (basis.elements().empty()) return f;
    return reduce_full(f, basis.elements());
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
    require_compatible(*f.ring(), *ideal.ring());
    return normal_form(f, ideal.groebner()).is_zero();
}

Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs) {
    require_compatible(*lhs.ring(), *rhs.ring());
    const auto base = lhs.ring()->poly_ring();
    if (lhs.ring()->has_modulus())
        throw DomainError("intersection runs in the polynomial ring");
    std::vector<std::string> vars;
    vars.reserve(base->nvars() + 1);
    vars.push_back("@t");
    for (const auto& v : base->vars()) vars.push_back(v);
    auto ext = RingCtx::make(base->p(), std::move(vars), MonomialOrder::elim_first,
                             base->limits());

    auto lift = [&](const Polynomial& f) {
        std::vector<Polynomial::Term> terms;
        terms.reserve(f.num_terms());
        for (const auto& t : f.terms()) {
            std::vector<std::int32_t> e;
            e.reserve(t.mono.nvars() + 1);
            e.push_back(0);
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) e.push_back(t.mono[i]);
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ext, std::move(terms));
    };
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : lhs.gens()) gens.push_back(t * lift(f));
    for (const auto& g : rhs.gens()) gens.push_back(one_minus_t * lift(g));
    GroebnerBasis gb = Ideal(ext, std::move(gens)).groebner();

    std::vector<Polynomial> result;
    for (const auto& f : gb.elements()) {
        if (f.leading_monomial()[0] != 0) continue;  // involves t
        std::vector<Polynomial::Term> terms;
        terms.reserve(f.num_terms());
        for (const auto& tm : f.terms()) {
            std::vector<std::int32_t> e(tm.mono.exponents().begin() + 1,
                                        tm.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), tm.coeff});
        }
        result.push_back(Polynomial::from_terms(base, std::move(terms)));
    }
    return Ideal(base, std::move(result));
}

Ideal colon_ideal(const Ideal& ideal, const Polynomial& f) {
    require_compatible(*ideal.ring(), *f.ring());
    const auto ring = ideal.ring();
    if (f.is_zero()) return Ideal(ring, {Polynomial::constant(ring, 1)});
    Ideal inter = ideal_intersect(ideal, Ideal(ring, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.gens()) {
        auto q = divide_exact(g, f);
        if (!q) throw DomainError("intersection generator not divisible in colon");
        gens.push_back(q->monic());
    }
    return Ideal(ring, std::move(gens));
}

Ideal frobenius_power_ideal(const Ideal& ideal, int e) {
    if (e < 1) throw DomainError("bracket Frobenius power needs e >= 1");
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) gens.push_back(frobenius_power(g, e));
    return Ideal(ideal.ring(), std::move(gens));
}

bool quotient_member(const Polynomial& f, const Ideal& ideal, const RingCtx& ctx) {
    if (!ctx.has_modulus()) throw DomainError("quotient membership needs a modulus");
    require_compatible(*f.ring(), ctx);
    require_compatible(*ideal.ring(), ctx);
    auto base = ctx.poly_ring();
    std::vector<Polynomial> gens = ideal.gens();
    gens.push_back(ctx.modulus());
    return ideal_member(f, Ideal(base, std::move(gens)));
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs) {
    for (const auto& g : lhs.gens())
        if (!ideal_member(g, rhs)) return false;
    for (const auto& g : rhs.gens())
        if (!ideal_member(g, lhs)) return false;
    return true;
}

}  // namespace charp
