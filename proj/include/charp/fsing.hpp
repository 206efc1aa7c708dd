#ifndef CHARP_FSING_HPP
#define CHARP_FSING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/polynomial.hpp"

namespace charp {

struct FedderResult {
    bool f_pure;
    /// Largest monomial of F^{p-1} with every exponent <= p-1, when one
    /// exists; its presence is what makes the quotient F-pure.
    std::optional<Monomial> witness;
};

/// Fedder's criterion for the hypersurface cut out by the context's
/// modulus F, at the origin: F-pure iff F^{p-1} lies outside the bracket
/// Frobenius power of the maximal ideal, i.e. some monomial of the full
/// expansion of F^{p-1} has all exponents <= p-1. F must have no constant
/// term.
FedderResult fedder_is_fpure(const RingCtx& ctx);

struct DiagonalFedderResult {
    bool f_pure;
    std::optional<Monomial> witness;
    /// Multinomial coefficient of the witness monomial, reduced mod p.
    std::optional<std::int64_t> coefficient;
};

/// Closed-form evaluation of the criterion for diagonal F = sum of c_i *
/// x_i^d: the monomials of F^{p-1} are indexed by compositions k of p-1
/// and never collide, so the witness hunt is a walk over compositions
/// with d*k_i <= p-1. Returns nullopt when F is not diagonal. Serves as
/// an independent oracle for the expansion path.
std::optional<DiagonalFedderResult> fedder_diagonal(const RingCtx& ctx);

struct TightClosureEvidence {
    enum class Verdict { verified, witness_not_found, not_applicable };

    std::optional<Polynomial> witness;  // the multiplier c
    std::vector<int> checked_e;         // exponents that passed
    std::vector<std::pair<int, bool>> trace;
    Verdict verdict;
    int bound;                          // E
    std::optional<int> failed_e;
};

/// Checks c*r^{p^e} in I^{[p^e]} modulo F for every 1 <= e <= E. Verified
/// evidence supports (never proves) membership of r in the tight closure
/// of I; the quantifier "for all e >> 0" stays out of reach. A multiplier
/// inside (F) sits in the minimal prime of the hypersurface and yields
/// NotApplicable.
TightClosureEvidence tight_closure_verify(const Polynomial& c, const Polynomial& r,
                                          const Ideal& ideal, const RingCtx& ctx, int bound);

/// Enumerates candidate multipliers over monomials of total degree <= cap
/// (degree first, then descending under the ring order), skipping those
/// inside (F), and returns the first Verified evidence, if any.
TightClosureEvidence tight_witness_search(const Polynomial& r, const Ideal& ideal,
                                          const RingCtx& ctx, int bound, std::int64_t degree_cap,
                                          std::int64_t* candidates_tried = nullptr);

struct SpotCheckFailure {
    std::size_t ideal_index;
    Polynomial element;  // in the Frobenius closure but not the ideal
    int e;
};

struct SpotCheckReport {
    int bound;
    std::int64_t degree_cap;
    std::int64_t elements_checked;
    std::vector<SpotCheckFailure> failures;

    bool clean() const { return failures.empty(); }
};

/// Probes cyclic F-purity: for monomials of degree <= cap outside each
/// ideal, searches for Frobenius-closure membership. Any hit certifies
/// I != I^F; a clean report is only "no failure found up to bounds".
SpotCheckReport cyclic_fpurity_spot_check(const RingCtx& ctx, const std::vector<Ideal>& ideals,
                                          int bound, std::int64_t degree_cap = 3);

struct RemarkReport {
    bool quotient_mode;
    int e;
    std::uint64_t seed;
    std::int64_t trials;  // requested sample count (random mode)
    std::int64_t pairs_checked;
    std::int64_t violations;
    std::optional<std::pair<Polynomial, Polynomial>> first_violation;
};

/// Probes the identity (f : g)^{[p^e]} = (f^{p^e} : g^{p^e}) on principal
/// ideals. In a polynomial ring it holds and random pairs are sampled to
/// confirm; in a hypersurface quotient it can fail, and monomial pairs of
/// degree <= 2 are swept exhaustively for the first violation. Stops at
/// the first violation either way.
RemarkReport colon_frobenius_experiment(const RingPtr& ctx, std::int64_t trials,
                                        std::uint64_t seed, int e);

}  // namespace charp

#endif
