#pragma once

#include <array>
#include <string>

#include "su2free/rational.hpp"

namespace su2free {

// Element of the real field Q(sqrt2, sqrt5), stored as
//   c1 + c2*sqrt2 + c5*sqrt5 + c10*sqrt10.
// 1, sqrt2, sqrt5, sqrt10 are linearly independent over Q, so the coefficient
// vector is a canonical form: two values are equal iff all four coefficients
// match.
class SurdValue {
 public:
  constexpr SurdValue() = default;
  SurdValue(Rational rational) : c1_(rational) {}  // NOLINT
  SurdValue(long long n) : c1_(Rational(n)) {}     // NOLINT
  SurdValue(Rational c1, Rational c2, Rational c5, Rational c10)
      : c1_(c1), c2_(c2), c5_(c5), c10_(c10) {}

  static SurdValue sqrt2() { return SurdValue(0, 1, 0, 0); }
  static SurdValue sqrt5() { return SurdValue(0, 0, 1, 0); }
  static SurdValue sqrt10() { return SurdValue(0, 0, 0, 1); }

  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  const Rational& c5() const { return c5_; }
  const Rational& c10() const { return c10_; }

  bool is_zero() const {
    return c1_.is_zero() && c2_.is_zero() && c5_.is_zero() && c10_.is_zero();
  }
  bool is_rational() const { return c2_.is_zero() && c5_.is_zero() && c10_.is_zero(); }

  friend SurdValue operator+(const SurdValue& a, const SurdValue& b) {
    return SurdValue(a.c1_ + b.c1_, a.c2_ + b.c2_, a.c5_ + b.c5_, a.c10_ + b.c10_);
  }
  friend SurdValue operator-(const SurdValue& a, const SurdValue& b) {
    return SurdValue(a.c1_ - b.c1_, a.c2_ - b.c2_, a.c5_ - b.c5_, a.c10_ - b.c10_);
  }
  SurdValue operator-() const { return SurdValue(-c1_, -c2_, -c5_, -c10_); }

  // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2.
  friend SurdValue operator*(const SurdValue& a, const SurdValue& b) {
    const Rational two(2), five(5), ten(10);
    return SurdValue(
        a.c1_ * b.c1_ + two * a.c2_ * b.c2_ + five * a.c5_ * b.c5_ + ten * a.c10_ * b.c10_,
        a.c1_ * b.c2_ + a.c2_ * b.c1_ + five * (a.c5_ * b.c10_ + a.c10_ * b.c5_),
        a.c1_ * b.c5_ + a.c5_ * b.c1_ + two * (a.c2_ * b.c10_ + a.c10_ * b.c2_),
        a.c1_ * b.c10_ + a.c10_ * b.c1_ + a.c2_ * b.c5_ + a.c5_ * b.c2_);
  }

  SurdValue& operator+=(const SurdValue& o) { return *this = *this + o; }
  SurdValue& operator-=(const SurdValue& o) { return *this = *this - o; }
  SurdValue& operator*=(const SurdValue& o) { return *this = *this * o; }

  // Galois conjugates: flip the sign of sqrt2 resp. sqrt5 (sqrt10 follows).
  SurdValue conj2() const { return SurdValue(c1_, -c2_, c5_, -c10_); }
  SurdValue conj5() const { return SurdValue(c1_, c2_, -c5_, -c10_); }

  SurdValue inverse() const {
    if (is_zero()) throw DomainError("inversion of zero in Q(sqrt2,sqrt5)");
    // x * conj2(x) * conj5(x) * conj2(conj5(x)) is the field norm, a rational.
    SurdValue cofactor = conj2() * conj5() * conj2().conj5();
    SurdValue norm = *this * cofactor;
    if (!norm.is_rational() || norm.c1().is_zero())
      throw Error("field norm computation failed");
    Rational inv_norm = Rational(1) / norm.c1();
    return SurdValue(cofactor.c1_ * inv_norm, cofactor.c2_ * inv_norm,
                     cofactor.c5_ * inv_norm, cofactor.c10_ * inv_norm);
  }

  friend SurdValue operator/(const SurdValue& a, const SurdValue& b) { return a * b.inverse(); }

  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c5_ == b.c5_ && a.c10_ == b.c10_;
  }
  friend std::strong_ordering operator<=>(const SurdValue& a, const SurdValue& b) {
    if (auto c = a.c1_ <=> b.c1_; c != 0) return c;
    if (auto c = a.c2_ <=> b.c2_; c != 0) return c;
    if (auto c = a.c5_ <=> b.c5_; c != 0) return c;
    return a.c10_ <=> b.c10_;
  }

  double value() const {
    return c1_.value() + c2_.value() * 1.4142135623730950488 +
           c5_.value() * 2.2360679774997896964 + c10_.value() * 3.1622776601683793320;
  }

  std::string str() const;

 private:
  Rational c1_, c2_, c5_, c10_;
};

inline std::size_t hash_value(const SurdValue& v) {
  std::size_t h = hash_value(v.c1());
  h = hash_mix(h, hash_value(v.c2()));
  h = hash_mix(h, hash_value(v.c5()));
  h = hash_mix(h, hash_value(v.c10()));
  return h;
}

// Golden ratio (1+sqrt5)/2 and its inverse (sqrt5-1)/2.
inline SurdValue golden() { return SurdValue(Rational(1, 2), 0, Rational(1, 2), 0); }
inline SurdValue golden_inv() { return SurdValue(Rational(-1, 2), 0, Rational(1, 2), 0); }

}  // namespace su2free
