#include "charp/polynomial.hpp"

#include <algorithm>
#include <map>

#include "charp/error.hpp"

namespace charp {

namespace {

std::int64_t reduce_mod(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw DomainError("polynomial needs a ring context");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Polynomial f(std::move(ring));
    c = reduce_mod(c, f.ring_->p());
    if (c != 0) f.terms_.push_back({Monomial(f.ring_->nvars()), c});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
    Polynomial f(std::move(ring));
    if (var >= f.ring_->nvars()) throw DomainError("variable index out of range");
    Monomial m(f.ring_->nvars());
    m[var] = 1;
    f.terms_.push_back({std::move(m), 1});
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::int64_t c) {
    Polynomial f(std::move(ring));
    if (m.nvars() != f.ring_->nvars()) throw DomainError("monomial has wrong variable count");
    c = reduce_mod(c, f.ring_->p());
    if (c != 0) f.terms_.push_back({std::move(m), c});
    f.check_caps();
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    const auto p = f.ring_->p();
    const auto order = f.ring_->order();
    std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, order) > 0;
    });
    for (auto& t : terms) {
        if (t.mono.nvars() != f.ring_->nvars())
            throw DomainError("monomial has wrong variable count");
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            f.terms_.back().coeff = reduce_mod(f.terms_.back().coeff + t.coeff, p);
        } else {
            t.coeff = reduce_mod(t.coeff, p);
            f.terms_.push_back(std::move(t));
        }
    }
    f.terms_.erase(std::remove_if(f.terms_.begin(), f.terms_.end(),
                                  [](const Term& t) { return t.coeff == 0; }),
                   f.terms_.end());
    f.check_caps();
    return f;
}

void Polynomial::check_caps() const {
    const auto& lim = ring_->limits();
    if (static_cast<std::int64_t>(terms_.size()) > lim.max_terms)
        throw ResourceLimitError("term count exceeds cap of " + std::to_string(lim.max_terms));
    for (const auto& t : terms_) {
        if (t.mono.total_degree() > lim.max_degree)
            throw ResourceLimitError("total degree exceeds cap of " +
                                     std::to_string(lim.max_degree));
    }
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].mono.is_one();
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mono[var]);
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
    return terms_.front().mono;
}

Fp Polynomial::leading_coefficient() const {
    if (terms_.empty()) return Fp(0, ring_->p());
    return Fp(terms_.front().coeff, ring_->p());
}

Fp Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return Fp(t.coeff, ring_->p());
    return Fp(0, ring_->p());
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_compatible(*ring_, *g.ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    const auto p = ring_->p();
    const auto order = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, g.terms_[j].mono, order);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            std::int64_t s = reduce_mod(terms_[i].coeff + g.terms_[j].coeff, p);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    r.check_caps();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    const auto p = ring_->p();
    for (auto& t : r.terms_) t.coeff = p - t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scaled(Fp c) const {
    if (c.characteristic() != ring_->p())
        throw ContextMismatchError("scalar from a different prime field");
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    const auto p = ring_->p();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c.value() % p});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::int64_t c) const {
    const auto p = ring_->p();
    c = reduce_mod(c, p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c % p});
    r.check_caps();
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_compatible(*ring_, *g.ring_);
    Polynomial r(ring_);
    if (terms_.empty() || g.terms_.empty()) return r;
    const auto& lim = ring_->limits();
    if (total_degree() + g.total_degree() > lim.max_degree)
        throw ResourceLimitError("product degree exceeds cap of " +
                                 std::to_string(lim.max_degree));
    const auto p = ring_->p();
    const auto order = ring_->order();
    auto greater = [order](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, order) > 0;
    };
    std::map<Monomial, std::int64_t, decltype(greater)> acc(greater);
    for (const auto& a : terms_) {
        for (const auto& b : g.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, inserted] = acc.try_emplace(std::move(m), 0);
            it->second = (it->second + a.coeff * b.coeff) % p;
        }
        if (static_cast<std::int64_t>(acc.size()) > lim.max_terms)
            throw ResourceLimitError("product term count exceeds cap");
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& g) const {
    return ring_->compatible_with(*g.ring_) && terms_ == g.terms_;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Polynomial frobenius_power(const Polynomial& f, int e) {
    if (e < 0) throw DomainError("frobenius power needs e >= 0");
    if (e == 0) return f;
    std::int64_t q = 1;
    const auto p = f.ring()->p();
    const auto cap = f.ring()->limits().max_degree;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > cap + 1) break;  // degree check below will reject anyway
    }
    if (f.total_degree() * q > cap)
        throw ResourceLimitError("frobenius power exceeds degree cap of " + std::to_string(cap));
    Polynomial r(f.ring());
    // Coefficients are fixed: c^{p^e} = c in GF(p) by Fermat. Scaling all
    // exponents by q preserves every supported monomial order, so the term
    // list stays sorted.
    r.terms_.reserve(f.terms().size());
    for (const auto& t : f.terms()) r.terms_.push_back({t.mono.pow(q), t.coeff});
    return r;
}

std::optional<Polynomial> pth_root(const Polynomial& f) {
    const auto p = f.ring()->p();
    Polynomial r(f.ring());
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] % p != 0) return std::nullopt;
            m[i] = static_cast<std::int32_t>(m[i] / p);
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

DivisionResult multivariate_divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    if (divisors.empty()) throw DomainError("division needs at least one divisor");
    for (const auto& d : divisors) {
        if (d.is_zero()) throw DomainError("zero divisor in division");
        require_compatible(*f.ring(), *d.ring());
    }
    const auto ring = f.ring();
    const auto p = ring->p();
    const auto order = ring->order();
    auto greater = [order](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, order) > 0;
    };
    std::map<Monomial, std::int64_t, decltype(greater)> work(greater);
    for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);

    std::vector<std::vector<Polynomial::Term>> quot(divisors.size());
    std::vector<Polynomial::Term> rem;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial mono = it->first;
        std::int64_t coeff = it->second;
        work.erase(it);
        if (coeff == 0) continue;
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const auto& d = divisors[i];
            if (!d.leading_monomial().divides(mono)) continue;
            Monomial qm = mono / d.leading_monomial();
            std::int64_t qc =
                (Fp(coeff, p) / d.leading_coefficient()).value();
            quot[i].push_back({qm, qc});
            // subtract qc * x^qm * d; the leading term cancels by construction
            auto dt = d.terms().begin();
            for (++dt; dt != d.terms().end(); ++dt) {
                Monomial m2 = dt->mono * qm;
                auto [wit, ins] = work.try_emplace(std::move(m2), 0);
                wit->second = ((wit->second - qc * dt->coeff) % p + p) % p;
            }
            reduced = true;
            break;
        }
        if (!reduced) rem.push_back({std::move(mono), coeff});
    }
    DivisionResult out{{}, Polynomial(ring)};
    out.quotients.reserve(divisors.size());
    for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
    out.remainder = Polynomial::from_terms(ring, std::move(rem));
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Polynomial(f.ring());
    auto res = multivariate_divide(f, {g});
    if (!res.remainder.is_zero()) return std::nullopt;
    return res.quotients[0];
}

std::string to_string(const Monomial& m, const RingCtx& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.var_name(i);
        if (m[i] >= 2) s += '^' + std::to_string(m[i]);
    }
    if (s.empty()) s = "1";
    return s;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += '+';
        if (t.mono.is_one()) {
            s += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            s += to_string(t.mono, *f.ring());
        } else {
            s += std::to_string(t.coeff) + '*' + to_string(t.mono, *f.ring());
        }
    }
    return s;
}

}  // namespace charp
