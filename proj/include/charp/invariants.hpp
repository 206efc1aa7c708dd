#ifndef CHARP_INVARIANTS_HPP
#define CHARP_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// The cyclic permutation action sigma(x_i) = x_{i+1 mod n} on a
/// polynomial ring in n variables. sigma is a ring automorphism of order
/// n, so invariance questions reduce to exponent-vector rotations.
class CyclicAction {
public:
    explicit CyclicAction(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    int order() const { return static_cast<int>(ring_->nvars()); }

private:
    RingPtr ring_;
};

/// sigma^k applied to f (k may be negative).
Polynomial apply_action(const Polynomial& f, const CyclicAction& action, int k);

Monomial rotate_monomial(const Monomial& m, int k);

bool is_invariant(const Polynomial& f, const CyclicAction& action);

/// One orbit sum per sigma-orbit of degree-d monomials, sorted by
/// descending leading monomial. Orbit sums are linearly independent and
/// span the degree-d invariants in every characteristic, including when
/// the characteristic divides the group order.
std::vector<Polynomial> orbit_sum_basis(const CyclicAction& action, std::int64_t d);

/// Number of sigma-orbits of degree-d monomials, by Burnside's lemma:
/// average over the group of the fixed-monomial counts. Equals the
/// dimension of the degree-d invariant space.
std::int64_t hilbert_burnside(const CyclicAction& action, std::int64_t d);

/// The same dimension computed independently: kernel dimension of
/// (sigma - id) on the degree-d coefficient space over GF(p), by exact
/// Gaussian elimination.
std::int64_t hilbert_linear(const CyclicAction& action, std::int64_t d);

struct GeneratesRow {
    std::int64_t d;
    std::int64_t span;  // dimension spanned by products of the generators
    std::int64_t dim;   // dimension of the invariants
};

struct GeneratesReport {
    bool success;
    std::optional<std::int64_t> first_deficient_degree;
    std::vector<GeneratesRow> rows;
};

/// Degreewise check whether products of the proposed generators span the
/// invariants up to degree D. Generators must be invariant, homogeneous
/// and non-constant.
GeneratesReport generates_up_to(const CyclicAction& action, const std::vector<Polynomial>& gens,
                                std::int64_t max_degree);

}  // namespace charp

#endif
