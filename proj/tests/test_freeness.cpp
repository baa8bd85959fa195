#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace su2free;
using namespace su2free::testutil;

namespace {

GroupPtr Z(long long n) { return build_group(AdeKind::cyclic(n)); }
GroupPtr BD(long long n) { return build_group(AdeKind::binary_dihedral(n)); }

bool witness_valid(const Witness& w) {
  return realpart_equal(qre(w.els[0]), qre(w.els[1])) &&
         realpart_equal(qre(w.els[1]), qre(w.els[2])) &&
         !(qre(w.els[0]) == RealPart::one());
}

}  // namespace

TEST_CASE("freeness of basic splittable products") {
  auto v1 = is_free(ProductGroup3::splittable(Z(2), Z(2), Z(2)));
  CHECK(!v1.free);
  REQUIRE(v1.witness.has_value());
  CHECK(v1.witness->els[0] == UnitQuaternion::angle(0, Rational(1, 2)));
  CHECK(witness_valid(*v1.witness));

  auto i2 = build_group(AdeKind::icosahedral());
  CHECK(is_free(ProductGroup3::splittable(Z(7), i2, i2)).free);
  CHECK(!is_free(ProductGroup3::splittable(Z(5), i2, i2)).free);
  CHECK(is_free(ProductGroup3::splittable(Z(1), Z(4), BD(6))).free);  // trivial factor
}

TEST_CASE("simple family oracle") {
  CHECK(is_free(ProductGroup3::simple(7, 2, 4)).free);
  CHECK(!is_free(ProductGroup3::simple(7, 1, 1)).free);
  CHECK(is_free(ProductGroup3::simple(5, 2, 2)).free);
  CHECK(is_free(ProductGroup3::simple(5, 2, 3)).free);
  CHECK_THROWS_AS(is_free(ProductGroup3::simple(6, 1, 1)), DomainError);
  CHECK_THROWS_AS(is_free(ProductGroup3::simple(7, 0, 1)), DomainError);
}

TEST_CASE("coincidence sets") {
  // W(phi, 2O) = {1, -1, 1/2, -1/2, 0}
  auto o2 = build_group(AdeKind::octahedral());
  auto w = coincidence_set(graph_of(AutomorphismSpec::outer_2O(), o2));
  std::vector<RealPart> expected = {
      RealPart::surd(SurdValue(-1)), RealPart::surd(SurdValue(Rational(-1, 2))),
      RealPart::surd(SurdValue(0)), RealPart::surd(SurdValue(Rational(1, 2))),
      RealPart::surd(SurdValue(1))};
  std::sort(expected.begin(), expected.end());
  CHECK(w == expected);

  // the diagonal of any A has W = Re(A)
  auto t2 = build_group(AdeKind::tetrahedral());
  CHECK(coincidence_set(graph_of(AutomorphismSpec::identity(), t2)) == t2->real_part_set());

  // G(2D_{4k}, 2D_{2k}, Z_2, {1}, id) has W = {1}
  auto bd4 = BD(4);
  auto q = make_quintuple(bd4, bd_subgroup_of_bd(*bd4, 4), Z(2), trivial_subgroup(*Z(2)),
                          AutomorphismSpec::identity());
  auto c = build_goursat(q);
  CHECK(coincidence_set(c) == std::vector<RealPart>{RealPart::one()});
}

TEST_CASE("splittable free test") {
  auto t2 = build_group(AdeKind::tetrahedral());
  auto o2 = build_group(AdeKind::octahedral());
  CHECK(splittable_free_test(*Z(7), *t2, *o2));
  CHECK(!splittable_free_test(*Z(2), *Z(2), *Z(2)));
  CHECK(splittable_free_test(*Z(3), *Z(5), *Z(15)));
  CHECK(!splittable_free_test(*Z(3), *Z(6), *Z(15)));
}

TEST_CASE("splittable free test agrees with the oracle") {
  std::vector<GroupPtr> groups;
  for (long long n = 2; n <= 8; ++n) groups.push_back(Z(n));
  for (long long n = 2; n <= 6; ++n) groups.push_back(BD(n));
  groups.push_back(build_group(AdeKind::tetrahedral()));
  groups.push_back(build_group(AdeKind::octahedral()));
  groups.push_back(build_group(AdeKind::icosahedral()));
  std::size_t disagreements = 0;
  for (const auto& a : groups)
    for (const auto& b : groups)
      for (const auto& c : groups) {
        bool s = splittable_free_test(*a, *b, *c);
        bool o = is_free(ProductGroup3::splittable(a, b, c)).free;
        if (s != o) ++disagreements;
      }
  CHECK(disagreements == 0);
}

TEST_CASE("oracle agrees with numeric brute force on small instances") {
  std::vector<ProductGroup3> specs;
  specs.push_back(ProductGroup3::splittable(Z(3), Z(4), BD(3)));
  specs.push_back(ProductGroup3::splittable(Z(5), build_group(AdeKind::tetrahedral()), Z(7)));
  specs.push_back(ProductGroup3::simple(11, 3, 9));
  specs.push_back(ProductGroup3::simple(13, 5, 8));
  for (const auto& q : quintuple_library()) {
    auto c = build_goursat(q);
    if (c.order() * 7 > 100000) continue;
    specs.push_back(ProductGroup3::semi(c, Z(7)));
    specs.push_back(ProductGroup3::semi(c, Z(12), 0));
  }
  for (const auto& spec : specs) {
    CAPTURE(spec.str());
    CHECK(is_free(spec).free == brute_force_free(spec));
  }
}

TEST_CASE("semi-splittable freeness via coincidence sets") {
  // free iff W(C) meets Re(D) only in 1
  std::vector<GroupPtr> partners = {Z(3), Z(5), Z(8), BD(3), build_group(AdeKind::tetrahedral()),
                                    build_group(AdeKind::icosahedral())};
  for (const auto& q : quintuple_library()) {
    auto c = build_goursat(q);
    auto w = coincidence_set(c);
    for (const auto& d : partners) {
      if (c.order() * d->order() > 100000) continue;
      auto re = d->real_part_set();
      bool predicted = true;
      for (const auto& v : w) {
        if (v == RealPart::one()) continue;
        for (const auto& u : re)
          if (v == u) predicted = false;
      }
      CHECK(is_free(ProductGroup3::semi(c, d)).free == predicted);
    }
  }
}

TEST_CASE("permutation invariance and witness validity") {
  std::mt19937 rng(4242);
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto random_group = [&]() -> GroupPtr {
    switch (rng() % 4) {
      case 0: return Z(2 + rng() % 11);
      case 1: return BD(2 + rng() % 7);
      case 2: return build_group(AdeKind::tetrahedral());
      default: return build_group(AdeKind::octahedral());
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    ProductGroup3 spec = ProductGroup3::splittable(random_group(), random_group(), random_group());
    auto base = is_free(spec);
    if (base.witness) CHECK(witness_valid(*base.witness));
    for (const auto& p : perms) {
      auto v = is_free(spec.permuted(p));
      CHECK(v.free == base.free);
      if (v.witness) CHECK(witness_valid(*v.witness));
    }
  }
  // semi-splittable and simple shapes under permutation
  auto o2 = build_group(AdeKind::octahedral());
  ProductGroup3 semi = ProductGroup3::semi(graph_of(AutomorphismSpec::outer_2O(), o2), Z(5));
  auto base = is_free(semi);
  for (const auto& p : perms) CHECK(is_free(semi.permuted(p)).free == base.free);
  ProductGroup3 simple = ProductGroup3::simple(11, 4, 5);
  auto sbase = is_free(simple);
  for (const auto& p : perms) CHECK(is_free(simple.permuted(p)).free == sbase.free);
}

TEST_CASE("conjugating one factor does not change freeness") {
  auto o2 = build_group(AdeKind::octahedral());
  auto i2 = build_group(AdeKind::icosahedral());
  // subgroup of 2O generated by e^{i pi/4} in surd form
  const SurdValue h2(0, Rational(1, 2), 0, 0);
  int e8 = o2->index_of(UnitQuaternion::surd(h2, h2, 0, 0));
  auto base_sub = closure_of(*o2, {e8});
  for (const auto& ambient : {o2, i2}) {
    Subgroup sub;
    if (ambient == o2) {
      sub = base_sub;
    } else {
      // order-10 cyclic subgroup of 2I
      Rational q4(1, 4);
      int t = i2->index_of(UnitQuaternion::surd(SurdValue(q4, 0, q4, 0), SurdValue(-q4, 0, q4, 0),
                                                SurdValue(Rational(1, 2)), SurdValue(0)));
      sub = closure_of(*i2, {t});
    }
    auto a = std::make_shared<const FiniteSubgroup>(restrict_to(*ambient, sub, "A"));
    bool base = is_free(ProductGroup3::splittable(a, Z(7), Z(9))).free;
    for (int g = 0; g < ambient->order(); g += 3) {
      Subgroup conj;
      for (int x : sub.members)
        conj.members.push_back(ambient->mul(ambient->mul(g, x), ambient->inv(g)));
      std::sort(conj.members.begin(), conj.members.end());
      auto ag = std::make_shared<const FiniteSubgroup>(restrict_to(*ambient, conj, "gAg"));
      CHECK(is_free(ProductGroup3::splittable(ag, Z(7), Z(9))).free == base);
    }
  }
}

TEST_CASE("budget errors") {
  auto i2 = build_group(AdeKind::icosahedral());
  CHECK_THROWS_AS(is_free(ProductGroup3::splittable(i2, i2, i2), 100000), BudgetError);
  CHECK(is_free(ProductGroup3::splittable(i2, i2, i2)).free == false);  // default budget is enough
}

TEST_CASE("explicit triple groups") {
  // the graph {(x, 2x, 4x)} in Z_7^3 as an explicit list
  auto z7 = Z(7);
  TripleGroup t;
  t.ambient = {z7, z7, z7};
  for (int x = 0; x < 7; ++x)
    t.elems.push_back({x, (2 * x) % 7, (4 * x) % 7});
  std::sort(t.elems.begin(), t.elems.end());
  t.verify_closed();
  ProductGroup3 g{ProductGroup3::Explicit{t}};
  CHECK(is_free(g).free == is_free(ProductGroup3::simple(7, 2, 4)).free);

  TripleGroup bad = t;
  bad.elems.pop_back();
  CHECK_THROWS_AS(bad.verify_closed(), ValidationError);
}
