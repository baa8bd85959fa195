#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "su2free/surd.hpp"

namespace su2free {

// Canonical real part of a unit quaternion: either cos(2*pi*angle) with a
// rational angle in [0, 1/2], or an explicit value in Q(sqrt2, sqrt5).
//
// Canonicalization rules:
//  * angles are reduced mod 1 and folded into [0, 1/2] via cos(2pi a) = cos(2pi(1-a));
//  * an angle whose cosine is rational (denominator dividing 1,2,3,4,6, so the
//    value is one of 0, +-1, +-1/2) is stored in surd form.
// Equality of canonical values is decided symbolically by realpart_equal below.
class RealPart {
 public:
  RealPart() : value_(SurdValue(1)) {}

  static RealPart cos2pi(Rational angle) {
    angle = angle.mod1();
    if (angle > Rational(1, 2)) angle = Rational(1) - angle;
    if (angle == Rational(0)) return surd(SurdValue(1));
    if (angle == Rational(1, 2)) return surd(SurdValue(-1));
    if (angle == Rational(1, 4)) return surd(SurdValue(0));
    if (angle == Rational(1, 3)) return surd(SurdValue(Rational(-1, 2)));
    if (angle == Rational(1, 6)) return surd(SurdValue(Rational(1, 2)));
    RealPart r;
    r.angle_ = angle;
    return r;
  }

  static RealPart surd(SurdValue v) {
    RealPart r;
    r.value_ = std::move(v);
    return r;
  }

  static RealPart one() { return surd(SurdValue(1)); }

  bool is_rat_cos() const { return angle_.has_value(); }
  const Rational& angle() const { return *angle_; }
  const SurdValue& surd_value() const { return value_; }
  bool is_one() const { return !angle_ && value_ == SurdValue(1); }

  // Cross-representation canonical form: the six rational angles whose cosine
  // lands in Q(sqrt2, sqrt5) are rewritten in surd form, so equal real parts
  // become structurally identical.  By the Niven-type theorem a rational
  // cos(2pi p/q) lies in {0, +-1, +-1/2} (already folded away above), and by
  // the two-cosine classification the only irrational values of cos(2pi p/q)
  // inside Q(sqrt2, sqrt5) are +-sqrt2/2 (q = 8) and (+-1 +- sqrt5)/4
  // (q = 5, 10).  Every other RatCos/Surd pair is unequal.
  RealPart unified() const {
    if (!angle_) return *this;
    const Rational& a = *angle_;
    if (a == Rational(1, 8)) return surd(SurdValue(0, Rational(1, 2), 0, 0));
    if (a == Rational(3, 8)) return surd(SurdValue(0, Rational(-1, 2), 0, 0));
    if (a == Rational(1, 10)) return surd(SurdValue(Rational(1, 4), 0, Rational(1, 4), 0));
    if (a == Rational(1, 5)) return surd(SurdValue(Rational(-1, 4), 0, Rational(1, 4), 0));
    if (a == Rational(3, 10)) return surd(SurdValue(Rational(1, 4), 0, Rational(-1, 4), 0));
    if (a == Rational(2, 5)) return surd(SurdValue(Rational(-1, 4), 0, Rational(-1, 4), 0));
    return *this;
  }

  friend bool operator==(const RealPart& a, const RealPart& b) {
    if (a.angle_.has_value() != b.angle_.has_value()) return false;
    if (a.angle_) return *a.angle_ == *b.angle_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const RealPart& a, const RealPart& b) {
    if (a.angle_.has_value() != b.angle_.has_value())
      return a.angle_.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.angle_) return *a.angle_ <=> *b.angle_;
    return a.value_ <=> b.value_;
  }

  double value() const {
    if (angle_) return std::cos(6.2831853071795864769 * angle_->value());
    return value_.value();
  }

  std::string str() const;

 private:
  std::optional<Rational> angle_;
  SurdValue value_;
};

// Sound symbolic equality on canonical real parts.
inline bool realpart_equal(const RealPart& a, const RealPart& b) {
  return a.unified() == b.unified();
}

inline std::size_t hash_value(const RealPart& r) {
  RealPart u = r.unified();
  if (u.is_rat_cos()) return hash_mix(1, hash_value(u.angle()));
  return hash_mix(2, hash_value(u.surd_value()));
}

// Solutions of cos(2*pi*x/n) = b over the integers: solvable iff divisor | n,
// with x(n) = residue * n (mod n) for each listed residue.
struct CosineCondition {
  bool has_rational_angle = false;
  long long divisor = 0;
  std::vector<Rational> residues;
};

// The condition tables for rational-angle cosines: rational targets (Niven)
// and the quadratic targets over Q(sqrt5) plus +-sqrt2/2 (two-cosine
// classification).  Values outside the candidate list, e.g. 1/(2*sqrt2), have
// no rational angle.
CosineCondition rational_cos_table(const SurdValue& b);

}  // namespace su2free
