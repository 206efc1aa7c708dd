#include "charp/ring.hpp"

#include <set>

#include "charp/error.hpp"
#include "charp/polynomial.hpp"

namespace charp {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

RingCtx::RingCtx(std::int64_t p, std::vector<std::string> vars, MonomialOrder order, Limits limits)
    : p_(p), vars_(std::move(vars)), order_(order), limits_(limits) {}

RingCtx::~RingCtx() = default;

RingPtr RingCtx::make(std::int64_t p, std::vector<std::string> vars, MonomialOrder order,
                      Limits limits) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (p > (std::int64_t{1} << 31)) throw DomainError("characteristic too large");
    if (vars.empty()) throw DomainError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name: " + v);
    }
    return RingPtr(new RingCtx(p, std::move(vars), order, limits));
}

RingPtr RingCtx::quotient(const RingPtr& base, const Polynomial& modulus) {
    if (base->has_modulus()) throw DomainError("iterated quotients are not supported");
    if (modulus.is_zero() || modulus.is_constant())
        throw DomainError("hypersurface modulus must be nonzero and non-constant");
    require_compatible(*base, *modulus.ring());
    auto ctx = new RingCtx(base->p_, base->vars_, base->order_, base->limits_);
    ctx->modulus_ = std::make_shared<const Polynomial>(modulus);
    ctx->base_ = base;
    return RingPtr(ctx);
}

std::optional<std::size_t> RingCtx::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

const Polynomial& RingCtx::modulus() const {
    if (!modulus_) throw DomainError("ring has no modulus");
    return *modulus_;
}

RingPtr RingCtx::poly_ring() const {
    if (base_) return base_;
    return shared_from_this();
}

bool RingCtx::compatible_with(const RingCtx& other) const {
    return p_ == other.p_ && order_ == other.order_ && vars_ == other.vars_;
}

std::string RingCtx::descriptor() const {
    std::string s = "GF(" + std::to_string(p_) + ")[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ',';
        s += vars_[i];
    }
    s += ']';
    if (modulus_) s += "/(" + to_string(*modulus_) + ")";
    return s;
}

void require_compatible(const RingCtx& a, const RingCtx& b) {
    if (!a.compatible_with(b))
        throw ContextMismatchError("ring contexts differ: " + a.descriptor() + " vs " +
                                   b.descriptor());
}

}  // namespace charp
