#pragma once

#include <variant>

#include "su2free/realpart.hpp"

namespace su2free {

// Exact unit quaternion in one of two representations:
//   angle form  j^jexp * e^{2*pi*i*theta}   (jexp in {0,1}, theta rational mod 1)
//   surd form   w + x*i + y*j + z*k         (coordinates in Q(sqrt2, sqrt5))
// The two representations are never mixed inside one group; qmul refuses
// mixed operands.
class UnitQuaternion {
 public:
  struct AngleForm {
    int jexp = 0;
    Rational theta;
    friend bool operator==(const AngleForm&, const AngleForm&) = default;
  };
  struct SurdForm {
    SurdValue w, x, y, z;
    friend bool operator==(const SurdForm&, const SurdForm&) = default;
  };

  UnitQuaternion() : rep_(AngleForm{0, Rational(0)}) {}

  static UnitQuaternion angle(int jexp, Rational theta) {
    UnitQuaternion q;
    q.rep_ = AngleForm{jexp & 1, theta.mod1()};
    return q;
  }

  static UnitQuaternion surd(SurdValue w, SurdValue x, SurdValue y, SurdValue z) {
    SurdValue norm = w * w + x * x + y * y + z * z;
    if (!(norm == SurdValue(1))) throw DomainError("quaternion norm is not 1");
    UnitQuaternion q;
    q.rep_ = SurdForm{std::move(w), std::move(x), std::move(y), std::move(z)};
    return q;
  }

  static UnitQuaternion one_surd() { return surd(1, 0, 0, 0); }
  static UnitQuaternion i() { return surd(0, 1, 0, 0); }
  static UnitQuaternion j() { return surd(0, 0, 1, 0); }
  static UnitQuaternion k() { return surd(0, 0, 0, 1); }

  bool is_angle_form() const { return std::holds_alternative<AngleForm>(rep_); }
  const AngleForm& angle_form() const { return std::get<AngleForm>(rep_); }
  const SurdForm& surd_form() const { return std::get<SurdForm>(rep_); }

  bool is_identity() const {
    if (is_angle_form()) {
      const auto& a = angle_form();
      return a.jexp == 0 && a.theta.is_zero();
    }
    const auto& s = surd_form();
    return s.w == SurdValue(1) && s.x.is_zero() && s.y.is_zero() && s.z.is_zero();
  }

  friend bool operator==(const UnitQuaternion& a, const UnitQuaternion& b) {
    return a.rep_ == b.rep_;
  }

  friend std::strong_ordering operator<=>(const UnitQuaternion& a, const UnitQuaternion& b) {
    bool aa = a.is_angle_form(), bb = b.is_angle_form();
    if (aa != bb) return aa ? std::strong_ordering::less : std::strong_ordering::greater;
    if (aa) {
      const auto &x = a.angle_form(), &y = b.angle_form();
      if (auto c = x.jexp <=> y.jexp; c != 0) return c;
      return x.theta <=> y.theta;
    }
    const auto &x = a.surd_form(), &y = b.surd_form();
    if (auto c = x.w <=> y.w; c != 0) return c;
    if (auto c = x.x <=> y.x; c != 0) return c;
    if (auto c = x.y <=> y.y; c != 0) return c;
    return x.z <=> y.z;
  }

  std::string str() const;

 private:
  std::variant<AngleForm, SurdForm> rep_;
};

UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b);
UnitQuaternion qinv(const UnitQuaternion& a);
RealPart qre(const UnitQuaternion& a);

inline std::size_t hash_value(const UnitQuaternion& q) {
  if (q.is_angle_form()) {
    const auto& a = q.angle_form();
    return hash_mix(hash_mix(17, std::size_t(a.jexp)), hash_value(a.theta));
  }
  const auto& s = q.surd_form();
  std::size_t h = 31;
  h = hash_mix(h, hash_value(s.w));
  h = hash_mix(h, hash_value(s.x));
  h = hash_mix(h, hash_value(s.y));
  h = hash_mix(h, hash_value(s.z));
  return h;
}

struct QuatHash {
  std::size_t operator()(const UnitQuaternion& q) const { return hash_value(q); }
};

}  // namespace su2free
