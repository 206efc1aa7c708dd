#ifndef CHARP_FP_HPP
#define CHARP_FP_HPP

#include <cstdint>

#include "charp/error.hpp"

namespace charp {

/// An element of the prime field GF(p). The value is kept fully reduced,
/// 0 <= value < p.
class Fp {
public:
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        if (p < 2) throw DomainError("field characteristic must be a prime >= 2");
        value %= p;
        if (value < 0) value += p;
        v_ = value;
    }

    std::int64_t value() const { return v_; }
    std::int64_t characteristic() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.same(p_).v_, p_); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.same(p_).v_, p_); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.same(p_).v_, p_); }
    Fp operator-() const { return Fp(-v_, p_); }

    Fp inverse() const {
        if (v_ == 0) throw DomainError("division by zero in GF(p)");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, p_);
    }

    Fp operator/(const Fp& o) const { return *this * o.same(p_).inverse(); }

    Fp pow(std::uint64_t e) const {
        Fp result(1, p_), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    const Fp& same(std::int64_t p) const {
        if (p_ != p) throw ContextMismatchError("field elements over different characteristics");
        return *this;
    }

    std::int64_t v_;
    std::int64_t p_;
};

}  // namespace charp

#endif
