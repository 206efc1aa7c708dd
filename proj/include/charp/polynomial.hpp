#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charp/fp.hpp"
#include "charp/monomial.hpp"
#include "charp/ring.hpp"

namespace charp {

/// Sparse multivariate polynomial over GF(p). Terms are kept sorted in
/// descending monomial order with nonzero, fully reduced coefficients, so
/// equality is plain term-list equality and terms().front() is the leading
/// term. The zero polynomial has no terms.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        std::int64_t coeff;  // in [1, p)

        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    /// The zero polynomial.
    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t var);
    static Polynomial term(RingPtr ring, Monomial m, std::int64_t c);
    /// Canonicalizes: merges duplicate monomials, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
    bool is_monomial() const { return terms_.size() == 1; }

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::size_t var) const;

    const Monomial& leading_monomial() const;
    Fp leading_coefficient() const;

    /// Coefficient of a monomial (zero if absent).
    Fp coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial scaled(Fp c) const;
    /// Multiplication by a single term.
    Polynomial times_term(const Monomial& m, std::int64_t c) const;

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Polynomial monic() const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// True if every monomial has the same total degree (zero counts as
    /// homogeneous).
    bool is_homogeneous() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    friend Polynomial frobenius_power(const Polynomial&, int);
    void check_caps() const;
};

/// f^{p^e}: exponent vectors scale by p^e, coefficients are fixed by
/// Frobenius on the prime field.
Polynomial frobenius_power(const Polynomial& f, int e);

/// The unique g with g^p = f, if every exponent of f is divisible by p;
/// std::nullopt otherwise. Coefficients are their own p-th roots in GF(p).
std::optional<Polynomial> pth_root(const Polynomial& f);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Classic multivariate division: f = sum quotients[i]*divisors[i] + r
/// where no term of r is divisible by any divisor's leading monomial.
/// Reduction always uses the first divisor in list order whose leading
/// monomial divides the current term, so the result is deterministic.
DivisionResult multivariate_divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Quotient f/g when the division is exact, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor in GF(p)[vars] via primitive PRS recursion
/// on the last variable present. gcd(f, 0) is monic f; gcd(0, 0) = 0.
/// Rejects quotient contexts (gcd lives in the UFD polynomial ring).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Canonical text form: terms descending under the ring order, explicit
/// '*', '^' for exponents >= 2. The zero polynomial prints as "0".
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingCtx& ring);

}  // namespace charp

#endif
