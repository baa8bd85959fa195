#include "su2free/quaternion.hpp"

namespace su2free {

UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b) {
  if (a.is_angle_form() != b.is_angle_form())
    throw RepresentationError("qmul on mixed quaternion representations");
  if (a.is_angle_form()) {
    // j^p e^{2pi i s} * j^q e^{2pi i t}: pull e^{2pi i s} across j^q using
    // e^{i s} j = j e^{-i s}, then fold j^2 = e^{i pi}.
    const auto& x = a.angle_form();
    const auto& y = b.angle_form();
    Rational theta = (y.jexp ? -x.theta : x.theta) + y.theta;
    int jexp = x.jexp + y.jexp;
    if (jexp >= 2) {
      jexp -= 2;
      theta += Rational(1, 2);
    }
    return UnitQuaternion::angle(jexp, theta);
  }
  const auto& p = a.surd_form();
  const auto& q = b.surd_form();
  return UnitQuaternion::surd(
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
}

UnitQuaternion qinv(const UnitQuaternion& a) {
  if (a.is_angle_form()) {
    const auto& x = a.angle_form();
    if (x.jexp == 0) return UnitQuaternion::angle(0, -x.theta);
    // (j e^{2pi i t})^{-1} = j e^{2pi i (t + 1/2)}.
    return UnitQuaternion::angle(1, x.theta + Rational(1, 2));
  }
  const auto& s = a.surd_form();
  return UnitQuaternion::surd(s.w, -s.x, -s.y, -s.z);
}

RealPart qre(const UnitQuaternion& a) {
  if (a.is_angle_form()) {
    const auto& x = a.angle_form();
    if (x.jexp == 0) return RealPart::cos2pi(x.theta);
    return RealPart::surd(SurdValue(0));
  }
  return RealPart::surd(a.surd_form().w);
}

std::string UnitQuaternion::str() const {
  if (is_angle_form()) {
    const auto& a = angle_form();
    std::string e = "e(" + a.theta.str() + ")";
    return a.jexp ? "j*" + e : e;
  }
  const auto& s = surd_form();
  return "q(" + s.w.str() + ", " + s.x.str() + ", " + s.y.str() + ", " + s.z.str() + ")";
}

}  // namespace su2free
