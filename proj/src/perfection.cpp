#include "charp/perfection.hpp"

#include <utility>

#include "charp/error.hpp"

namespace charp {

PerfElement::PerfElement(Polynomial body, int level) : body_(std::move(body)), level_(level) {
    if (level_ < 0) throw DomainError("perfection level must be non-negative");
    const auto& ring = *body_.ring();
    if (ring.has_modulus())
        throw DomainError("perfection arithmetic needs a polynomial ring base");
    if (body_.is_zero()) {
        level_ = 0;
        return;
    }
    while (level_ > 0) {
        auto root = pth_root(body_);
        if (!root) break;
        body_ = std::move(*root);
        --level_;
    }
    if (level_ > ring.limits().max_level)
        throw ResourceLimitError("perfection level cap exceeded");
}

Polynomial PerfElement::body_at_level(int n) const {
    if (n < level_) throw DomainError("cannot lower a representative level");
    return frobenius_power(body_, n - level_);
}

namespace {

int common_level(const PerfElement& a, const PerfElement& b) {
    require_compatible(*a.ring(), *b.ring());
    return std::max(a.level(), b.level());
}

}  // namespace

PerfElement perf_add(const PerfElement& a, const PerfElement& b) {
    int n = common_level(a, b);
    return PerfElement(a.body_at_level(n) + b.body_at_level(n), n);
}

PerfElement perf_mul(const PerfElement& a, const PerfElement& b) {
    int n = common_level(a, b);
    return PerfElement(a.body_at_level(n) * b.body_at_level(n), n);
}

PerfElement perf_frobenius(const PerfElement& a) {
    if (a.level() > 0) return PerfElement(a.body(), a.level() - 1);
    return PerfElement(frobenius_power(a.body(), 1), 0);
}

PerfElement perf_root(const PerfElement& a) {
    return PerfElement(a.body(), a.level() + 1);
}

bool perf_divides(const PerfElement& a, const PerfElement& b) {
    if (a.is_zero()) return b.is_zero();
    int n = common_level(a, b);
    return divide_exact(b.body_at_level(n), a.body_at_level(n)).has_value();
}

PerfElement perf_gcd(const PerfElement& a, const PerfElement& b) {
    if (a.is_zero() && b.is_zero()) return a;
    int n = common_level(a, b);
    return PerfElement(poly_gcd(a.body_at_level(n), b.body_at_level(n)), n);
}

PerfElement perf_lcm(const PerfElement& a, const PerfElement& b) {
    if (a.is_zero() || b.is_zero())
        return PerfElement(Polynomial(a.ring()->poly_ring()), 0);
    int n = common_level(a, b);
    Polynomial an = a.body_at_level(n), bn = b.body_at_level(n);
    auto q = divide_exact(an * bn, poly_gcd(an, bn));
    return PerfElement(q->monic(), n);
}

PerfElement perf_colon(const PerfElement& a, const PerfElement& b) {
    if (a.is_zero() && b.is_zero())
        throw DegenerateInputError("colon of zero by zero");
    if (b.is_zero()) return PerfElement(Polynomial::constant(a.ring(), 1), 0);
    if (a.is_zero()) return a;
    int n = common_level(a, b);
    Polynomial an = a.body_at_level(n), bn = b.body_at_level(n);
    auto c = divide_exact(an, poly_gcd(an, bn));
    return PerfElement(c->monic(), n);
}

ClosureResult frobenius_closure_member(const Polynomial& r, const Ideal& ideal,
                                       const RingCtx& ctx, int bound) {
    if (bound < 1) throw DomainError("closure search bound must be at least 1");
    require_compatible(*r.ring(), ctx);
    require_compatible(*ideal.ring(), ctx);
    for (int e = 1; e <= bound; ++e) {
        Polynomial re = frobenius_power(r, e);
        Ideal bracket = frobenius_power_ideal(ideal, e);
        bool member = ctx.has_modulus() ? quotient_member(re, bracket, ctx)
                                        : ideal_member(re, bracket);
        if (member) return {e, bound};
    }
    return {std::nullopt, bound};
}

std::string to_string(const PerfElement& a) {
    return "root(" + to_string(a.body()) + "," + std::to_string(a.level()) + ")";
}

}  // namespace charp
