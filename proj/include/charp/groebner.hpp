#ifndef CHARP_GROEBNER_HPP
#define CHARP_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted by descending
/// leading monomial. Unique for a given ideal and order.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), elements_(std::move(elements)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    MonomialOrder order() const { return ring_->order(); }
    std::size_t size() const { return elements_.size(); }

private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

/// Finitely generated ideal. Generators are pruned of zeros (an empty list
/// is the zero ideal). The reduced Groebner basis is computed once per
/// value and shared between copies; concurrent readers see a single
/// consistent basis.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// Reduced Groebner basis under the ring's order (cached).
    const GroebnerBasis& groebner() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::once_flag once;
        std::optional<GroebnerBasis> gb;
    };
    std::shared_ptr<Cache> cache_;
};

/// The S-polynomial of a pair (exposed for the basis criterion checks).
Polynomial spoly(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the coprimality and chain criteria and
/// degree-first pair selection. Requires a polynomial ring context.
GroebnerBasis buchberger(const Ideal& ideal);

/// Unique remainder of f modulo a Groebner basis; zero iff f lies in the
/// ideal the basis generates.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const Ideal& ideal);

/// I cap J by elimination of a fresh leading variable t from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& lhs, const Ideal& rhs);

/// (I : f) = { g : g*f in I }. By convention (I : 0) is the unit ideal.
Ideal colon_ideal(const Ideal& ideal, const Polynomial& f);

/// Bracket Frobenius power I^{[p^e]}, generated by the p^e-th powers of
/// the generators; e >= 1.
Ideal frobenius_power_ideal(const Ideal& ideal, int e);

/// Membership of f in I modulo the context's hypersurface: f in I + (F)
/// in the ambient polynomial ring. Requires a quotient context.
bool quotient_member(const Polynomial& f, const Ideal& ideal, const RingCtx& ctx);

/// Mutual membership of generators (same ring, same order).
bool ideal_equal(const Ideal& lhs, const Ideal& rhs);

}  // namespace charp

#endif
