#include "tor3/fp.hpp"

#include <ostream>

namespace tor3 {

namespace {
constexpr long long kMaxModulus = (1LL << 31) - 1;  // keeps products inside long long
}

bool PrimeField::is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(long long p) : p_(p) {
    if (p < 2 || p > kMaxModulus)
        throw BadCharacteristic("characteristic must be a prime in [2, 2^31)");
    if (!is_prime(p))
        throw BadCharacteristic("characteristic " + std::to_string(p) + " is not prime");
}

Fp PrimeField::element(long long value) const {
    long long v = value % p_;
    if (v < 0) v += p_;
    return Fp(v, p_);
}

Fp PrimeField::zero() const { return Fp(0, p_); }
Fp PrimeField::one() const { return Fp(1 % p_, p_); }

Fp::Fp(long long value, long long p) : v_(value), p_(p) {
    if (p != 0) {
        v_ %= p;
        if (v_ < 0) v_ += p;
    }
}

long long Fp::common_modulus(const Fp& o) const {
    if (p_ == o.p_) return p_;
    if (p_ == 0) return o.p_;
    if (o.p_ == 0) return p_;
    throw Error("mixed prime-field moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

Fp Fp::operator-() const {
    if (v_ == 0) return *this;
    return Fp(p_ - v_, p_);
}

long long pow_mod(long long x, long long e, long long p) {
    long long r = 1 % p;
    x %= p;
    if (x < 0) x += p;
    while (e > 0) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return r;
}

Fp Fp::inv() const {
    if (v_ == 0) throw DivisionByZero();
    // p prime, so Fermat gives the inverse.
    return Fp(pow_mod(v_, p_ - 2, p_), p_);
}

Fp& Fp::operator+=(const Fp& o) {
    long long p = common_modulus(o);
    if (p == 0) return *this;  // both neutral zeros
    v_ = (v_ + o.v_) % p;
    p_ = p;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    long long p = common_modulus(o);
    if (p == 0) return *this;
    v_ = (v_ - o.v_ + p) % p;
    p_ = p;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    long long p = common_modulus(o);
    if (p == 0) return *this;
    v_ = v_ * o.v_ % p;
    p_ = p;
    return *this;
}

Fp& Fp::operator/=(const Fp& o) {
    long long p = common_modulus(o);
    if (o.v_ == 0) throw DivisionByZero();
    if (p == 0) return *this;
    Fp t(o.v_, p);
    v_ = v_ * t.inv().value() % p;
    p_ = p;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

}  // namespace tor3
