#ifndef TOR3_FP_HPP
#define TOR3_FP_HPP

#include <cstdint>
#include <iosfwd>

#include "tor3/errors.hpp"

namespace tor3 {

class Fp;

/// Arithmetic context for the prime field F_p. Validates primality once;
/// elements carry the modulus so mixed-field operations are caught early.
class PrimeField {
  public:
    explicit PrimeField(long long p);

    long long modulus() const { return p_; }

    /// Reduce an arbitrary signed integer into [0, p).
    Fp element(long long value) const;
    Fp zero() const;
    Fp one() const;

    static bool is_prime(long long n);

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

  private:
    long long p_;
};

/// Element of F_p. Value-semantic; the modulus rides along. A default
/// constructed element is the neutral zero and combines with any modulus.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long long value, long long p);

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const;
    Fp inv() const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  private:
    long long common_modulus(const Fp& o) const;

    long long v_;
    long long p_;  // 0 only for the neutral zero
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// x^e mod p by binary exponentiation.
long long pow_mod(long long x, long long e, long long p);

}  // namespace tor3

#endif
