#ifndef CHARP_PERFECTION_HPP
#define CHARP_PERFECTION_HPP

#include <optional>
#include <string>

#include "charp/groebner.hpp"
#include "charp/polynomial.hpp"

namespace charp {

/// An element f^{1/p^e} of the perfection of a polynomial ring over GF(p),
/// the direct limit of the ring under the Frobenius endomorphism. Kept in
/// normal form: either the level e is zero or the body f is not a p-th
/// power, so equality is componentwise. The base ring must be a plain
/// polynomial ring.
class PerfElement {
public:
    /// Normalizes (f, e): extracts p-th roots of the body while possible,
    /// decrementing the level, stopping at level 0.
    PerfElement(Polynomial body, int level);

    const Polynomial& body() const { return body_; }
    int level() const { return level_; }
    const RingPtr& ring() const { return body_.ring(); }
    bool is_zero() const { return body_.is_zero(); }
    bool is_one() const { return level_ == 0 && body_.is_one(); }

    /// The representative at a level n >= level(): body^{p^{n - level}}.
    Polynomial body_at_level(int n) const;

    bool operator==(const PerfElement& o) const {
        return level_ == o.level_ && body_ == o.body_;
    }
    bool operator!=(const PerfElement& o) const { return !(*this == o); }

private:
    Polynomial body_;
    int level_;
};

PerfElement perf_add(const PerfElement& a, const PerfElement& b);
PerfElement perf_mul(const PerfElement& a, const PerfElement& b);

/// a^p. Drops one level, or raises a level-0 body to the p-th power.
PerfElement perf_frobenius(const PerfElement& a);

/// a^{1/p}; every element of the perfection has one. Bounded by the ring's
/// level cap.
PerfElement perf_root(const PerfElement& a);

/// Divisibility in the perfection, decided at the common level. Sound
/// because the base ring is normal: a root of a quotient that lands back
/// in the fraction field is already in the ring.
bool perf_divides(const PerfElement& a, const PerfElement& b);

/// Monic gcd at the common level. gcd(0, 0) = 0.
PerfElement perf_gcd(const PerfElement& a, const PerfElement& b);

/// lcm = a*b / gcd(a,b), monic; lcm with 0 is 0.
PerfElement perf_lcm(const PerfElement& a, const PerfElement& b);

/// The principal generator of (a : b) = { t : t*b in (a) }, namely
/// a' / gcd(a', b') at the common level, made monic. Conventions:
/// (0 : b) = 0 for b != 0, (a : 0) = 1; both zero is a degenerate input.
PerfElement perf_colon(const PerfElement& a, const PerfElement& b);

struct ClosureResult {
    std::optional<int> e;  // least verified exponent, if any
    int bound;

    bool found() const { return e.has_value(); }
};

/// Least e <= E with r^{p^e} in I^{[p^e]} (modulo the context's modulus if
/// present). A hit certifies membership of r in the Frobenius closure of
/// I; no hit up to E is inconclusive.
ClosureResult frobenius_closure_member(const Polynomial& r, const Ideal& ideal,
                                       const RingCtx& ctx, int bound);

/// "root(<poly>,<e>)".
std::string to_string(const PerfElement& a);

}  // namespace charp

#endif
