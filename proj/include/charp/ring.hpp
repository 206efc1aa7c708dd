#ifndef CHARP_RING_HPP
#define CHARP_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/monomial.hpp"

namespace charp {

class Polynomial;
class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

/// Configurable guard rails for every computation attached to a ring.
struct Limits {
    std::int64_t max_degree = 600;   // total degree of any polynomial
    int max_level = 6;               // p-th root depth of perfection elements
    std::int64_t max_pairs = 200000; // Buchberger pair queue budget
    std::int64_t max_terms = 2000000;
};

/// Immutable description of the ambient ring: GF(p)[vars] under a monomial
/// order, optionally modulo a single hypersurface polynomial F. Quotient
/// contexts do not change polynomial arithmetic; operations that work
/// modulo F fetch it from here and adjoin it on the ideal side.
class RingCtx : public std::enable_shared_from_this<RingCtx> {
public:
    static RingPtr make(std::int64_t p, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex, Limits limits = {});

    /// Quotient of `base` by the hypersurface (F). F must be a nonzero,
    /// non-constant polynomial attached to `base`.
    static RingPtr quotient(const RingPtr& base, const Polynomial& modulus);

    ~RingCtx();

    std::int64_t p() const { return p_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> var_index(const std::string& name) const;
    MonomialOrder order() const { return order_; }
    const Limits& limits() const { return limits_; }

    bool has_modulus() const { return modulus_ != nullptr; }
    /// The hypersurface equation; throws DomainError on a plain polynomial ring.
    const Polynomial& modulus() const;
    /// The underlying polynomial ring (self if there is no modulus).
    RingPtr poly_ring() const;

    /// Same characteristic, variables and order; the modulus is ignored so
    /// that representatives of a quotient mix with ambient polynomials.
    bool compatible_with(const RingCtx& other) const;

    /// "GF(p)[v1,v2,...]" or "GF(p)[v1,...]/(F)".
    std::string descriptor() const;

private:
    RingCtx(std::int64_t p, std::vector<std::string> vars, MonomialOrder order, Limits limits);

    std::int64_t p_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    Limits limits_;
    std::shared_ptr<const Polynomial> modulus_;
    RingPtr base_;
};

/// Throws ContextMismatchError unless the two contexts are compatible.
void require_compatible(const RingCtx& a, const RingCtx& b);

}  // namespace charp

#endif
