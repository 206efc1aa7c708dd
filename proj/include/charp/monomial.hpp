#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace charp {

enum class MonomialOrder {
    grevlex,
    lex,
    /// Block order used internally for elimination: the first variable
    /// forms its own block (compared first), ties broken by grevlex on
    /// the remaining variables.
    elim_first,
};

/// Exponent vector of a power product; one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e_)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
        return r;
    }

    /// Exact quotient; caller must ensure m divides *this.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
        return r;
    }

    Monomial pow(std::int64_t k) const {
        Monomial r(*this);
        for (auto& x : r.e_) x = static_cast<std::int32_t>(x * k);
        return r;
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    bool operator!=(const Monomial& m) const { return e_ != m.e_; }

private:
    std::vector<std::int32_t> e_;
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/// Three-way comparison under the given order: negative if a < b, zero if
/// equal, positive if a > b. All orders here are total well-orders.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return mono_cmp(a, b, order) < 0;
}

/// All monomials in `nvars` variables of total degree exactly `d`,
/// sorted descending under `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d, MonomialOrder order);

}  // namespace charp

#endif
