#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace su2free;
using namespace su2free::testutil;

namespace {

UnitQuaternion half_unit(int sw, int sx, int sy, int sz) {
  Rational h(1, 2);
  return UnitQuaternion::surd(SurdValue(sw < 0 ? -h : h), SurdValue(sx < 0 ? -h : h),
                              SurdValue(sy < 0 ? -h : h), SurdValue(sz < 0 ? -h : h));
}

}  // namespace

TEST_CASE("hamilton relations") {
  CHECK(qmul(UnitQuaternion::i(), UnitQuaternion::j()) == UnitQuaternion::k());
  CHECK(qmul(UnitQuaternion::j(), UnitQuaternion::i()) == qinv(UnitQuaternion::k()));
  CHECK(qmul(UnitQuaternion::i(), UnitQuaternion::i()) == UnitQuaternion::surd(-1, 0, 0, 0));
}

TEST_CASE("binary tetrahedral generator product") {
  // s = (1+i)(1+j)/2 = (1+i+j+k)/2, t = (1+j)(1+i)/2 = (1+i+j-k)/2, s t = j
  UnitQuaternion s = half_unit(+1, +1, +1, +1);
  UnitQuaternion t = half_unit(+1, +1, +1, -1);
  CHECK(qmul(s, t) == UnitQuaternion::j());
  CHECK(num_close(num(qmul(s, t)), num_mul(num(s), num(t))));
}

TEST_CASE("angle form algebra") {
  // (j e^{i pi/3})^2 = j^2 = e^{i pi}
  UnitQuaternion a = UnitQuaternion::angle(1, Rational(1, 6));
  CHECK(qmul(a, a) == UnitQuaternion::angle(0, Rational(1, 2)));
  // e^{i t} j = j e^{-i t}
  UnitQuaternion e = UnitQuaternion::angle(0, Rational(1, 5));
  UnitQuaternion j = UnitQuaternion::angle(1, Rational(0));
  CHECK(qmul(e, j) == UnitQuaternion::angle(1, Rational(-1, 5)));
  CHECK(qmul(j, e) == UnitQuaternion::angle(1, Rational(1, 5)));
}

TEST_CASE("qmul agrees with numeric quaternion product") {
  std::mt19937 rng(99);
  auto i2 = build_group(AdeKind::icosahedral());
  auto bd = build_group(AdeKind::binary_dihedral(7));
  for (int trial = 0; trial < 400; ++trial) {
    const FiniteSubgroup& g = trial % 2 ? *i2 : *bd;
    int a = static_cast<int>(rng() % g.order());
    int b = static_cast<int>(rng() % g.order());
    CHECK(num_close(num(qmul(g.quat(a), g.quat(b))), num_mul(num(g.quat(a)), num(g.quat(b)))));
  }
}

TEST_CASE("qre examples") {
  // Re(q) = (1+sqrt5)/4 for q = (phi + phi^{-1} i + j)/2
  Rational q4(1, 4);
  UnitQuaternion q = UnitQuaternion::surd(SurdValue(q4, 0, q4, 0), SurdValue(-q4, 0, q4, 0),
                                          SurdValue(Rational(1, 2)), SurdValue(0));
  CHECK(qre(q) == RealPart::surd(SurdValue(q4, 0, q4, 0)));
  // j-component quaternions are purely imaginary
  CHECK(qre(UnitQuaternion::angle(1, Rational(3, 7))) == RealPart::surd(SurdValue(0)));
  // cos(2 pi/3) = -1/2 in canonical surd form
  CHECK(qre(UnitQuaternion::angle(0, Rational(1, 3))) ==
        RealPart::surd(SurdValue(Rational(-1, 2))));
  CHECK(qre(UnitQuaternion::angle(0, Rational(1, 7))) == RealPart::cos2pi(Rational(1, 7)));
}

TEST_CASE("qinv") {
  CHECK(qinv(UnitQuaternion::i()) == UnitQuaternion::surd(0, -1, 0, 0));
  UnitQuaternion a = UnitQuaternion::angle(1, Rational(2, 7));
  CHECK(qinv(a) == UnitQuaternion::angle(1, Rational(2, 7) + Rational(1, 2)));
  CHECK(qmul(a, qinv(a)).is_identity());
  CHECK(qinv(UnitQuaternion::angle(0, Rational(0))).is_identity());
  CHECK(qinv(UnitQuaternion::one_surd()).is_identity());
  auto t2 = build_group(AdeKind::tetrahedral());
  for (int i = 0; i < t2->order(); ++i)
    CHECK(qmul(t2->quat(i), qinv(t2->quat(i))).is_identity());
}

TEST_CASE("mixed representations are rejected") {
  CHECK_THROWS_AS(qmul(UnitQuaternion::i(), UnitQuaternion::angle(0, Rational(1, 4))),
                  RepresentationError);
  CHECK(!(UnitQuaternion::one_surd() == UnitQuaternion::angle(0, Rational(0))));
}

TEST_CASE("associativity on the binary octahedral group") {
  auto o = build_group(AdeKind::octahedral());
  bool ok = true;
  for (int a = 0; a < o->order() && ok; ++a)
    for (int b = 0; b < o->order() && ok; ++b)
      for (int c = 0; c < o->order() && ok; ++c)
        ok = o->mul(o->mul(a, b), c) == o->mul(a, o->mul(b, c));
  CHECK(ok);
}

TEST_CASE("real part is invariant under conjugation") {
  for (const AdeKind& kind : {AdeKind::icosahedral(), AdeKind::binary_dihedral(30)}) {
    auto g = build_group(kind);
    bool ok = true;
    for (int x = 0; x < g->order() && ok; ++x)
      for (int c = 0; c < g->order() && ok; ++c) {
        int y = g->mul(g->mul(c, x), g->inv(c));
        ok = g->re(x) == g->re(y);
      }
    CHECK(ok);
  }
}

TEST_CASE("surd products stay on the unit sphere") {
  // the constructor rejects non-unit quaternions, so a bad product would throw
  auto i2 = build_group(AdeKind::icosahedral());
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& a = i2->quat(static_cast<int>(rng() % i2->order()));
    const auto& b = i2->quat(static_cast<int>(rng() % i2->order()));
    UnitQuaternion c = qmul(a, b);
    const auto& s = c.surd_form();
    CHECK(s.w * s.w + s.x * s.x + s.y * s.y + s.z * s.z == SurdValue(1));
  }
}

TEST_CASE("element text round trips") {
  CHECK(UnitQuaternion::angle(0, Rational(2, 7)).str() == "e(2/7)");
  CHECK(UnitQuaternion::angle(1, Rational(2, 7)).str() == "j*e(2/7)");
  CHECK(UnitQuaternion::i().str() == "q(0, 1, 0, 0)");
}
