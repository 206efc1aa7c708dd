#include "charp/fsing.hpp"

#include <random>

#include "charp/error.hpp"
#include "charp/perfection.hpp"

namespace charp {

namespace {

const Polynomial& require_modulus(const RingCtx& ctx, const char* what) {
    if (!ctx.has_modulus()) throw DomainError(std::string(what) + " needs a hypersurface quotient");
    return ctx.modulus();
}

bool exponents_below_p(const Monomial& m, std::int64_t p) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] > p - 1) return false;
    return true;
}

}  // namespace

FedderResult fedder_is_fpure(const RingCtx& ctx) {
    const Polynomial& f = require_modulus(ctx, "Fedder's criterion");
    for (const auto& t : f.terms())
        if (t.mono.is_one())
            throw DomainError("Fedder's criterion needs a modulus vanishing at the origin");
    const auto p = ctx.p();
    Polynomial power = Polynomial::constant(f.ring(), 1);
    for (std::int64_t i = 0; i < p - 1; ++i) power = power * f;
    for (const auto& t : power.terms())
        if (exponents_below_p(t.mono, p)) return {true, t.mono};
    return {false, std::nullopt};
}

namespace {

struct DiagonalShape {
    std::vector<std::size_t> vars;       // variables appearing in F
    std::vector<std::int64_t> coeffs;    // matching coefficients
    std::int64_t d;                      // common exponent
};

std::optional<DiagonalShape> diagonal_shape(const Polynomial& f) {
    DiagonalShape shape;
    shape.d = 0;
    for (const auto& t : f.terms()) {
        std::optional<std::size_t> var;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (var) return std::nullopt;
            var = i;
        }
        if (!var) return std::nullopt;  // constant term
        std::int64_t d = t.mono[*var];
        if (shape.d == 0) shape.d = d;
        if (d != shape.d) return std::nullopt;
        shape.vars.push_back(*var);
        shape.coeffs.push_back(t.coeff);
    }
    if (shape.vars.empty()) return std::nullopt;
    return shape;
}

}  // namespace

std::optional<DiagonalFedderResult> fedder_diagonal(const RingCtx& ctx) {
    const Polynomial& f = require_modulus(ctx, "Fedder's criterion");
    auto shape = diagonal_shape(f);
    if (!shape) return std::nullopt;
    const auto p = ctx.p();
    const std::int64_t part_cap = (p - 1) / shape->d;
    const std::size_t nparts = shape->vars.size();

    // factorials up to p-1 for multinomial coefficients mod p
    std::vector<Fp> fact;
    fact.reserve(static_cast<std::size_t>(p));
    fact.emplace_back(1, p);
    for (std::int64_t i = 1; i < p; ++i) fact.push_back(fact.back() * Fp(i, p));

    DiagonalFedderResult result{false, std::nullopt, std::nullopt};
    std::vector<std::int64_t> parts(nparts, 0);
    Monomial best;
    // walk every composition of p-1 with parts bounded by (p-1)/d; each
    // yields a distinct monomial of F^{p-1}, and none of their multinomial
    // coefficients can vanish mod p (all factorials involved are prime to p)
    auto visit = [&](auto&& self, std::size_t idx, std::int64_t remaining) -> void {
        if (idx + 1 == nparts) {
            if (remaining > part_cap) return;
            parts[idx] = remaining;
            Monomial m(ctx.nvars());
            for (std::size_t i = 0; i < nparts; ++i)
                m[shape->vars[i]] = static_cast<std::int32_t>(parts[i] * shape->d);
            if (!result.f_pure || mono_cmp(m, best, ctx.order()) > 0) {
                Fp c = fact[static_cast<std::size_t>(p - 1)];
                for (std::size_t i = 0; i < nparts; ++i) {
                    c = c / fact[static_cast<std::size_t>(parts[i])];
                    c = c * Fp(shape->coeffs[i], p).pow(static_cast<std::uint64_t>(parts[i]));
                }
                result.f_pure = true;
                result.coefficient = c.value();
                best = m;
            }
            return;
        }
        std::int64_t lo = remaining - part_cap * static_cast<std::int64_t>(nparts - idx - 1);
        for (std::int64_t k = std::max<std::int64_t>(0, lo); k <= std::min(part_cap, remaining); ++k) {
            parts[idx] = k;
            self(self, idx + 1, remaining - k);
        }
    };
    visit(visit, 0, p - 1);
    if (result.f_pure) result.witness = best;
    return result;
}

TightClosureEvidence tight_closure_verify(const Polynomial& c, const Polynomial& r,
                                          const Ideal& ideal, const RingCtx& ctx, int bound) {
    const Polynomial& f = require_modulus(ctx, "tight-closure verification");
    if (bound < 1) throw DomainError("verification bound must be at least 1");
    require_compatible(*c.ring(), ctx);
    require_compatible(*r.ring(), ctx);
    require_compatible(*ideal.ring(), ctx);

    TightClosureEvidence ev;
    ev.witness = c;
    ev.bound = bound;
    if (divide_exact(c, f).has_value()) {
        ev.verdict = TightClosureEvidence::Verdict::not_applicable;
        return ev;
    }
    for (int e = 1; e <= bound; ++e) {
        Polynomial lhs = c * frobenius_power(r, e);
        bool member = quotient_member(lhs, frobenius_power_ideal(ideal, e), ctx);
        ev.trace.emplace_back(e, member);
        if (!member) {
            ev.failed_e = e;
            ev.verdict = TightClosureEvidence::Verdict::witness_not_found;
            return ev;
        }
        ev.checked_e.push_back(e);
    }
    ev.verdict = TightClosureEvidence::Verdict::verified;
    return ev;
}

TightClosureEvidence tight_witness_search(const Polynomial& r, const Ideal& ideal,
                                          const RingCtx& ctx, int bound, std::int64_t degree_cap,
                                          std::int64_t* candidates_tried) {
    const Polynomial& f = require_modulus(ctx, "tight-closure search");
    if (degree_cap < 0) throw DomainError("degree cap must be non-negative");
    auto ring = ctx.poly_ring();
    std::int64_t tried = 0;
    for (std::int64_t d = 0; d <= degree_cap; ++d) {
        for (const auto& m : monomials_of_degree(ring->nvars(), d, ring->order())) {
            Polynomial c = Polynomial::term(ring, m, 1);
            if (divide_exact(c, f).has_value()) continue;
            ++tried;
            TightClosureEvidence ev = tight_closure_verify(c, r, ideal, ctx, bound);
            if (ev.verdict == TightClosureEvidence::Verdict::verified) {
                if (candidates_tried) *candidates_tried = tried;
                return ev;
            }
        }
    }
    if (candidates_tried) *candidates_tried = tried;
    TightClosureEvidence ev;
    ev.bound = bound;
    ev.verdict = TightClosureEvidence::Verdict::witness_not_found;
    return ev;
}

SpotCheckReport cyclic_fpurity_spot_check(const RingCtx& ctx, const std::vector<Ideal>& ideals,
                                          int bound, std::int64_t degree_cap) {
    if (bound < 1) throw DomainError("closure bound must be at least 1");
    auto ring = ctx.poly_ring();
    SpotCheckReport report{bound, degree_cap, 0, {}};
    for (std::size_t idx = 0; idx < ideals.size(); ++idx) {
        const Ideal& ideal = ideals[idx];
        require_compatible(*ideal.ring(), ctx);
        for (std::int64_t d = 1; d <= degree_cap; ++d) {
            for (const auto& m : monomials_of_degree(ring->nvars(), d, ring->order())) {
                // candidates are normal-form monomials: skip anything the
                // modulus already rewrites
                if (ctx.has_modulus() &&
                    ctx.modulus().leading_monomial().divides(m))
                    continue;
                Polynomial f = Polynomial::term(ring, m, 1);
                bool inside = ctx.has_modulus() ? quotient_member(f, ideal, ctx)
                                                : ideal_member(f, ideal);
                if (inside) continue;
                ++report.elements_checked;
                ClosureResult res = frobenius_closure_member(f, ideal, ctx, bound);
                if (res.found()) report.failures.push_back({idx, f, *res.e});
            }
        }
    }
    return report;
}

namespace {

bool remark_identity_holds(const RingPtr& base, const Polynomial& f, const Polynomial& g,
                           int e, const Polynomial* modulus) {
    std::vector<Polynomial> lhs_gens{f};
    if (modulus) lhs_gens.push_back(*modulus);
    Ideal colon = colon_ideal(Ideal(base, std::move(lhs_gens)), g);
    std::vector<Polynomial> lhs;
    for (const auto& c : colon.gens()) lhs.push_back(frobenius_power(c, e));
    if (modulus) lhs.push_back(*modulus);

    std::vector<Polynomial> rhs_gens{frobenius_power(f, e)};
    if (modulus) rhs_gens.push_back(*modulus);
    Ideal rhs = colon_ideal(Ideal(base, std::move(rhs_gens)), frobenius_power(g, e));
    return ideal_equal(Ideal(base, std::move(lhs)), rhs);
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, std::int64_t degree_cap) {
    const auto p = ring->p();
    for (;;) {
        std::vector<Polynomial::Term> terms;
        for (std::int64_t d = 0; d <= degree_cap; ++d) {
            for (const auto& m : monomials_of_degree(ring->nvars(), d, ring->order())) {
                auto c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
                if (c != 0) terms.push_back({m, c});
            }
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero()) return f;
    }
}

}  // namespace

RemarkReport colon_frobenius_experiment(const RingPtr& ctx, std::int64_t trials,
                                        std::uint64_t seed, int e) {
    if (e < 1) throw DomainError("Frobenius exponent must be at least 1");
    RemarkReport report{ctx->has_modulus(), e, seed, trials, 0, 0, std::nullopt};
    auto base = ctx->poly_ring();

    if (ctx->has_modulus()) {
        const Polynomial& modulus = ctx->modulus();
        std::vector<Polynomial> candidates;
        for (std::int64_t d = 1; d <= 2; ++d)
            for (const auto& m : monomials_of_degree(base->nvars(), d, base->order()))
                candidates.push_back(Polynomial::term(base, m, 1));
        for (const auto& f : candidates) {
            for (const auto& g : candidates) {
                ++report.pairs_checked;
                if (!remark_identity_holds(base, f, g, e, &modulus)) {
                    report.violations = 1;
                    report.first_violation = {f, g};
                    return report;
                }
            }
        }
        return report;
    }

    std::mt19937_64 rng(seed);
    for (std::int64_t t = 0; t < trials; ++t) {
        Polynomial f = random_poly(rng, base, 3);
        Polynomial g = random_poly(rng, base, 3);
        ++report.pairs_checked;
        if (!remark_identity_holds(base, f, g, e, nullptr)) {
            report.violations = 1;
            report.first_violation = {f, g};
            return report;
        }
    }
    return report;
}

}  // namespace charp
