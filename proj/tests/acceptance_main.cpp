// Acceptance suite: one check per classification-level guarantee, each
// printed as a PASS/FAIL line.  Returns the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "su2free/classify.hpp"
#include "su2free/textio.hpp"

using namespace su2free;

namespace {

int failures = 0;

void criterion(int number, double time_limit, const char* what,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= time_limit) {
    ok = false;
    note += " (time limit exceeded)";
  }
  std::printf("[%d] %s  %s (%.2fs, limit %.0fs)%s%s\n", number, ok ? "PASS" : "FAIL", what, secs,
              time_limit, note.empty() ? "" : "  -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

GroupPtr Z(long long n) { return build_group(AdeKind::cyclic(n)); }
GroupPtr BD(long long n) { return build_group(AdeKind::binary_dihedral(n)); }

SurdValue frac(long long n, long long d) { return SurdValue(Rational(n, d)); }
SurdValue s2frac(long long n, long long d) { return SurdValue(0, Rational(n, d), 0, 0); }
SurdValue gold(long long a, long long b) { return SurdValue(Rational(a, 4), 0, Rational(b, 4), 0); }

std::vector<RealPart> sorted_set(std::vector<RealPart> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool generators_generate(const AdeKind& kind) {
  auto g = build_group(kind);
  std::vector<UnitQuaternion> gens;
  const Rational h(1, 2);
  const SurdValue hs2(0, h, 0, 0);
  switch (kind.family) {
    case AdeKind::Family::Cyclic:
      gens = {UnitQuaternion::angle(0, Rational(1 % kind.n, kind.n))};
      break;
    case AdeKind::Family::BinaryDihedral:
      gens = {UnitQuaternion::angle(1, Rational(0)),
              UnitQuaternion::angle(0, Rational(1, 2 * kind.n))};
      break;
    case AdeKind::Family::BinaryTetrahedral:
      gens = {UnitQuaternion::surd(frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)),
              UnitQuaternion::surd(frac(1, 2), frac(1, 2), frac(1, 2), frac(-1, 2))};
      break;
    case AdeKind::Family::BinaryOctahedral:
      gens = {UnitQuaternion::surd(frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)),
              UnitQuaternion::surd(hs2, hs2, 0, 0)};
      break;
    case AdeKind::Family::BinaryIcosahedral: {
      Rational q4(1, 4);
      gens = {UnitQuaternion::surd(frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)),
              UnitQuaternion::surd(SurdValue(q4, 0, q4, 0), SurdValue(-q4, 0, q4, 0),
                                   SurdValue(h), SurdValue(0))};
      break;
    }
  }
  std::vector<int> idx;
  for (const auto& q : gens) {
    int i = g->index_of(q);
    if (i < 0) return false;
    idx.push_back(i);
  }
  return closure_of(*g, idx).order() == g->order();
}

bool crosscheck_ok(const char* theorem, std::string& note) {
  auto sum = crosscheck_stream(families_for(theorem), theorem_bounds(theorem), kDefaultBudget, 0,
                               nullptr);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%s: %zu instances, %zu mismatches (%zu expected, %zu unexpected, %zu missing)",
                theorem, sum.instances, sum.mismatches, sum.expected_mismatches,
                sum.unexpected_mismatches, sum.missing_expected);
  if (!note.empty()) note += "; ";
  note += buf;
  return sum.ok() && sum.budget_errors == 0;
}

}  // namespace

int main() {
  // 1. ADE catalog: orders, closure, inverses, generators.
  criterion(1, 5, "ADE catalog orders and closure", [](std::string&) {
    std::vector<AdeKind> kinds;
    for (long long n = 1; n <= 30; ++n) kinds.push_back(AdeKind::cyclic(n));
    for (long long n = 2; n <= 15; ++n) kinds.push_back(AdeKind::binary_dihedral(n));
    kinds.push_back(AdeKind::tetrahedral());
    kinds.push_back(AdeKind::octahedral());
    kinds.push_back(AdeKind::icosahedral());
    for (const auto& kind : kinds) {
      auto g = build_group(kind);
      if (g->order() != kind.order()) return false;
      g->verify_closure();
      for (int i = 0; i < g->order(); ++i)
        if (g->mul(i, g->inv(i)) != g->id()) return false;
      if (kind.family != AdeKind::Family::Cyclic || kind.n > 1)
        if (!generators_generate(kind)) return false;
    }
    return true;
  });

  // 2. Real-part tables and symbolic equality vs numerics.
  criterion(2, 30, "real-part tables and 1e-9 numeric agreement (parameters <= 120)",
            [](std::string& note) {
    auto expect = [](std::vector<SurdValue> vals) {
      std::vector<RealPart> out;
      for (auto& v : vals) out.push_back(RealPart::surd(v));
      return sorted_set(std::move(out));
    };
    if (build_group(AdeKind::tetrahedral())->real_part_set() !=
        expect({frac(0, 1), frac(1, 1), frac(-1, 1), frac(1, 2), frac(-1, 2)}))
      return false;
    if (build_group(AdeKind::octahedral())->real_part_set() !=
        expect({frac(0, 1), frac(1, 1), frac(-1, 1), frac(1, 2), frac(-1, 2), s2frac(1, 2),
                s2frac(-1, 2)}))
      return false;
    if (build_group(AdeKind::icosahedral())->real_part_set() !=
        expect({frac(0, 1), frac(1, 1), frac(-1, 1), frac(1, 2), frac(-1, 2), gold(1, 1),
                gold(-1, 1), gold(1, -1), gold(-1, -1)}))
      return false;
    // documented discrepancy: the printed 2O row also lists +-1/(2 sqrt2);
    // no element of 2O has that real part (its conjugacy table agrees)
    auto o2 = build_group(AdeKind::octahedral());
    for (int i = 0; i < o2->order(); ++i)
      if (o2->re(i) == RealPart::surd(s2frac(1, 4)) || o2->re(i) == RealPart::surd(s2frac(-1, 4)))
        return false;
    note = "2O row: computed set omits the printed +-1/(2*s2) entries (documented)";
    for (long long n = 2; n <= 120; ++n) {
      auto z = build_group(AdeKind::cyclic(n));
      std::set<RealPart> want;
      for (long long x = 0; x < n; ++x) want.insert(RealPart::cos2pi(Rational(x, n)).unified());
      if (z->real_part_set() != std::vector<RealPart>(want.begin(), want.end())) return false;
      auto d = build_group(AdeKind::binary_dihedral(std::max<long long>(2, n)));
      std::set<RealPart> wantd;
      wantd.insert(RealPart::surd(SurdValue(0)));
      long long nn = std::max<long long>(2, n);
      for (long long x = 0; x < 2 * nn; ++x)
        wantd.insert(RealPart::cos2pi(Rational(x, 2 * nn)).unified());
      if (d->real_part_set() != std::vector<RealPart>(wantd.begin(), wantd.end())) return false;
    }
    // all pairs of real parts from groups with parameter <= 120
    std::set<RealPart> values;
    for (long long n = 1; n <= 120; ++n) {
      for (long long x = 0; x < n; ++x) values.insert(RealPart::cos2pi(Rational(x, n)));
      for (long long x = 0; x < 2 * n; ++x) values.insert(RealPart::cos2pi(Rational(x, 2 * n)));
    }
    values.insert(RealPart::surd(SurdValue(0)));
    for (const char* name : {"2T", "2O", "2I"}) {
      auto g = build_group(parse_group_desc(name));
      for (int i = 0; i < g->order(); ++i) values.insert(g->re(i));
    }
    std::vector<RealPart> vals(values.begin(), values.end());
    std::vector<double> num(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) num[i] = vals[i].value();
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i; j < vals.size(); ++j) {
        bool sym = realpart_equal(vals[i], vals[j]);
        bool close = std::abs(num[i] - num[j]) < 1e-9;
        if (sym != close) ++disagreements;
      }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "; %zu distinct values, 0 of %zu pairs disagree", vals.size(),
                  vals.size() * (vals.size() + 1) / 2);
    note += buf;
    return disagreements == 0;
  });

  // 3. Conjugacy tables.
  criterion(3, 1, "conjugacy tables of 2I and 2O", [](std::string& note) {
    auto i2 = build_group(AdeKind::icosahedral());
    auto ic = conjugacy_classes(*i2);
    if (ic.size() != 9) return false;
    std::multiset<int> sizes;
    std::multiset<std::pair<int, std::string>> size_re;
    for (const auto& c : ic) {
      sizes.insert(c.size);
      size_re.emplace(c.size, i2->re(c.rep).unified().str());
    }
    if (sizes != std::multiset<int>{1, 1, 12, 12, 12, 12, 20, 20, 30}) return false;
    std::multiset<std::pair<int, std::string>> expected = {
        {1, "1"},
        {1, "-1"},
        {12, "1/4 + 1/4*s5"},
        {12, "-1/4 + 1/4*s5"},
        {12, "1/4 - 1/4*s5"},
        {12, "-1/4 - 1/4*s5"},
        {20, "1/2"},
        {20, "-1/2"},
        {30, "0"}};
    if (size_re != expected) return false;

    auto o2 = build_group(AdeKind::octahedral());
    auto oc = conjugacy_classes(*o2);
    if (oc.size() != 8) return false;
    int total = 0;
    std::multiset<int> osizes;
    for (const auto& c : oc) {
      total += c.size;
      osizes.insert(c.size);
    }
    if (total != 48) return false;
    if (osizes != std::multiset<int>{1, 1, 6, 6, 6, 8, 8, 12}) return false;
    // the printed table gives the order-4 axis class (t^2) size 8, total 50;
    // the computed class of i has size 6
    auto cls = class_index_of(*o2);
    int iidx = o2->index_of(UnitQuaternion::i());
    int isize = 0;
    for (int x = 0; x < o2->order(); ++x)
      if (cls[x] == cls[iidx]) ++isize;
    note = "2O: computed t^2 class has size 6 where the printed table says 8 (documented)";
    return isize == 6;
  });

  // 4. Goursat round trips over the quintuple library.
  criterion(4, 5, "Goursat correspondence round trips (library covers all subgroup rows)",
            [](std::string& note) {
    // the library is defined in the unit-test helper; rebuild it here
    // from the same table rows
    std::vector<GoursatQuintuple> lib;
    auto T2 = build_group(AdeKind::tetrahedral());
    auto O2 = build_group(AdeKind::octahedral());
    auto I2 = build_group(AdeKind::icosahedral());
    auto id = AutomorphismSpec::identity();
    auto cyc_sub = [](const FiniteSubgroup& g, long long n, long long d) {
      Subgroup s;
      for (long long u = 0; u < d; ++u)
        s.members.push_back(g.index_of(UnitQuaternion::angle(0, Rational(u * (n / d), n))));
      std::sort(s.members.begin(), s.members.end());
      return s;
    };
    auto torus_sub = [](const FiniteSubgroup& g, long long n, long long d) {
      Subgroup s;
      for (long long u = 0; u < d; ++u)
        s.members.push_back(
            g.index_of(UnitQuaternion::angle(0, Rational(u * (2 * n / d), 2 * n))));
      std::sort(s.members.begin(), s.members.end());
      return s;
    };
    auto bd_sub = [](const FiniteSubgroup& g, long long two_k) {
      Subgroup s;
      for (long long x = 0; x < 2 * two_k; x += 2) {
        s.members.push_back(g.index_of(UnitQuaternion::angle(0, Rational(x, 2 * two_k))));
        s.members.push_back(g.index_of(UnitQuaternion::angle(1, Rational(x, 2 * two_k))));
      }
      std::sort(s.members.begin(), s.members.end());
      return s;
    };
    auto q8 = [](const FiniteSubgroup& g) {
      Subgroup s;
      const SurdValue one(1);
      for (int c = 0; c < 4; ++c)
        for (int sgn = 0; sgn < 2; ++sgn) {
          SurdValue v = sgn ? -one : one;
          s.members.push_back(
              g.index_of(UnitQuaternion::surd(c == 0 ? v : SurdValue(0), c == 1 ? v : SurdValue(0),
                                              c == 2 ? v : SurdValue(0), c == 3 ? v : SurdValue(0))));
        }
      std::sort(s.members.begin(), s.members.end());
      return s;
    };
    auto center = [](const FiniteSubgroup& g) {
      int mo = g.index_of(UnitQuaternion::surd(-1, 0, 0, 0));
      return Subgroup{{std::min(g.id(), mo), std::max(g.id(), mo)}};
    };
    auto twoT_in_2O = [&] {
      Subgroup s;
      for (int i = 0; i < T2->order(); ++i) s.members.push_back(O2->index_of(T2->quat(i)));
      std::sort(s.members.begin(), s.members.end());
      return s;
    }();
    lib.push_back(make_quintuple(Z(6), cyc_sub(*Z(6), 6, 2), Z(3), trivial_subgroup(*Z(3)), id));
    lib.push_back(make_quintuple(Z(12), cyc_sub(*Z(12), 12, 4), Z(9), cyc_sub(*Z(9), 9, 3),
                                 AutomorphismSpec::power(2)));
    lib.push_back(make_quintuple(Z(10), cyc_sub(*Z(10), 10, 2), Z(5), trivial_subgroup(*Z(5)),
                                 AutomorphismSpec::power(2)));
    lib.push_back(make_quintuple(Z(8), cyc_sub(*Z(8), 8, 2), Z(4), trivial_subgroup(*Z(4)), id));
    lib.push_back(make_quintuple(BD(6), torus_sub(*BD(6), 6, 4), O2, q8(*O2), id));
    lib.push_back(make_quintuple(BD(8), torus_sub(*BD(8), 8, 4), BD(8), torus_sub(*BD(8), 8, 4),
                                 id));
    lib.push_back(make_quintuple(BD(9), torus_sub(*BD(9), 9, 3), BD(3), trivial_subgroup(*BD(3)),
                                 id));
    lib.push_back(make_quintuple(BD(15), torus_sub(*BD(15), 15, 5), BD(3),
                                 trivial_subgroup(*BD(3)), AutomorphismSpec::affine(1, 1)));
    lib.push_back(make_quintuple(BD(3), torus_sub(*BD(3), 3, 3), Z(4), trivial_subgroup(*Z(4)),
                                 AutomorphismSpec::power(3)));
    lib.push_back(make_quintuple(BD(5), torus_sub(*BD(5), 5, 5), Z(8), cyc_sub(*Z(8), 8, 2), id));
    lib.push_back(make_quintuple(BD(4), bd_sub(*BD(4), 4), Z(2), trivial_subgroup(*Z(2)), id));
    lib.push_back(make_quintuple(BD(6), bd_sub(*BD(6), 6), O2, twoT_in_2O, id));
    lib.push_back(make_quintuple(T2, center(*T2), T2, center(*T2), id));
    lib.push_back(make_quintuple(T2, q8(*T2), Z(3), trivial_subgroup(*Z(3)), id));
    lib.push_back(make_quintuple(T2, q8(*T2), Z(9), cyc_sub(*Z(9), 9, 3),
                                 AutomorphismSpec::power(2)));
    lib.push_back(make_quintuple(O2, center(*O2), O2, center(*O2), id));
    lib.push_back(make_quintuple(O2, q8(*O2), O2, q8(*O2), id));
    lib.push_back(make_quintuple(O2, twoT_in_2O, Z(2), trivial_subgroup(*Z(2)), id));
    lib.push_back(make_quintuple(I2, center(*I2), I2, center(*I2), id));
    lib.push_back(make_quintuple(Z(5), trivial_subgroup(*Z(5)), Z(5), trivial_subgroup(*Z(5)),
                                 AutomorphismSpec::power(2)));
    lib.push_back(make_quintuple(T2, full_subgroup(*T2), Z(5), full_subgroup(*Z(5)), id));
    lib.push_back(make_quintuple(BD(2), trivial_subgroup(*BD(2)), BD(2),
                                 trivial_subgroup(*BD(2)), AutomorphismSpec::affine(3, 1)));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%zu quintuples", lib.size());
    note = buf;
    if (lib.size() < 20) return false;
    for (const auto& q : lib) {
      auto c = build_goursat(q);
      if (c.order() != static_cast<long long>(q.A->order()) * q.B0.order()) return false;
      if (c.order() != static_cast<long long>(q.B->order()) * q.A0.order()) return false;
      c.verify_closed();
      auto q2 = decompose(c);
      auto c2 = build_goursat(q2);
      if (!(c2 == c)) return false;
      if (!quintuple_data_equal(q, q2)) return false;
    }
    return true;
  });

  // 5. Simple-group theorem.
  criterion(5, 10, "simple-group theorem: predicate equals oracle for p <= 31",
            [](std::string& note) { return crosscheck_ok("simple", note); });

  // 6. Splittable theorem.
  criterion(6, 600, "splittable theorem: rows <= 12 and free-test/oracle agreement <= 20",
            [](std::string& note) {
    if (!crosscheck_ok("main", note)) return false;
    std::vector<GroupPtr> groups;
    for (long long n = 2; n <= 20; ++n) groups.push_back(Z(n));
    for (long long n = 2; n <= 20; ++n) groups.push_back(BD(n));
    groups.push_back(build_group(AdeKind::tetrahedral()));
    groups.push_back(build_group(AdeKind::octahedral()));
    groups.push_back(build_group(AdeKind::icosahedral()));
    for (const auto& a : groups)
      for (const auto& b : groups)
        for (const auto& c : groups)
          if (splittable_free_test(*a, *b, *c) !=
              is_free(ProductGroup3::splittable(a, b, c)).free)
            return false;
    return true;
  });

  // 7. Type I/II/III theorems.
  criterion(7, 1800, "type I/II/III theorems match the oracle up to the shipped discrepancy list",
            [](std::string& note) {
    bool ok = true;
    for (const char* theorem : {"typeB", "type3", "qfinal", "qfinal2"})
      ok = crosscheck_ok(theorem, note) && ok;
    return ok;
  });

  // 8. Congruence lemma property suites.
  criterion(8, 60, "congruence lemmas: exhaustive window checks", [](std::string&) {
    // solve_linear completeness
    for (long long a = -20; a <= 20; ++a)
      for (long long b = -20; b <= 20; ++b) {
        if (a == 0 || b == 0) continue;
        for (long long c = -40; c <= 40; ++c) {
          auto s = solve_linear(a, b, c);
          if (s.has_value() != (c % std::gcd(a, b) == 0)) return false;
          for (long long x = -200; x <= 200; ++x) {
            if ((c - a * x) % b != 0) continue;
            long long y = (c - a * x) / b;
            if (std::llabs(y) > 200) continue;
            if (!s.has_value() || !s->contains(x, y)) return false;
          }
        }
      }
    // neg_congruence scans
    for (long long n = 2; n <= 200; ++n)
      for (long long r = 1; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        long long n1 = neg_congruence(n, r);
        for (long long x = 0; x < n; ++x)
          if (((1 + r) * x % n == 0) != (x % n1 == 0)) return false;
      }
    // cos equality lattice grids
    for (long long n = 2; n <= 48; ++n)
      for (long long m = 2; m <= 48; ++m) {
        auto lat = cos_equality_lattice(n, m);
        for (long long x = 0; x < n; ++x)
          for (long long y = 0; y < m; ++y)
            if (lat.contains(x, y) != realpart_equal(RealPart::cos2pi(Rational(x, n)),
                                                     RealPart::cos2pi(Rational(y, m))))
              return false;
      }
    // res_solvable scans
    for (long long n = 2; n <= 300; ++n)
      for (int residue : {1, 2})
        for (int sign : {1, -1}) {
          bool brute = false;
          for (long long x = 0; x < 3 * n && !brute; ++x)
            if (x % 3 == residue &&
                realpart_equal(RealPart::cos2pi(Rational(x, 3 * n)),
                               RealPart::surd(SurdValue(Rational(sign, 2)))))
              brute = true;
          if (res_solvable(n, residue, sign) != brute) return false;
        }
    return true;
  });

  // 9. Permutation symmetry of the oracle and witness validity.
  criterion(9, 60, "freeness symmetry on 100 random specs; witnesses verified",
            [](std::string&) {
    std::mt19937 rng(20260810);
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto random_group = [&]() -> GroupPtr {
      switch (rng() % 5) {
        case 0: return Z(2 + rng() % 14);
        case 1: return BD(2 + rng() % 9);
        case 2: return build_group(AdeKind::tetrahedral());
        case 3: return build_group(AdeKind::octahedral());
        default: return build_group(AdeKind::icosahedral());
      }
    };
    auto check_witness = [](const FreeVerdict& v) {
      if (v.free) return true;
      if (!v.witness) return false;
      const auto& w = *v.witness;
      return realpart_equal(qre(w.els[0]), qre(w.els[1])) &&
             realpart_equal(qre(w.els[1]), qre(w.els[2])) && !(qre(w.els[0]) == RealPart::one());
    };
    for (int trial = 0; trial < 100; ++trial) {
      ProductGroup3 spec = [&]() -> ProductGroup3 {
        switch (trial % 3) {
          case 0:
            return ProductGroup3::splittable(random_group(), random_group(), random_group());
          case 1: {
            static const long long primes[] = {3, 5, 7, 11, 13, 17};
            long long p = primes[rng() % 6];
            return ProductGroup3::simple(p, 1 + rng() % (p - 1), 1 + rng() % (p - 1));
          }
          default: {
            auto g = random_group();
            AutomorphismSpec aut = AutomorphismSpec::identity();
            if (g->ade_kind()->family == AdeKind::Family::Cyclic) {
              long long n = g->ade_kind()->n, r = 1 + rng() % n;
              while (std::gcd(r, n) != 1) r = 1 + rng() % n;
              aut = AutomorphismSpec::power(r);
            } else if (g->ade_kind()->family == AdeKind::Family::BinaryDihedral) {
              long long n2 = 2 * g->ade_kind()->n, a = 1 + rng() % n2;
              while (std::gcd(a, n2) != 1) a = 1 + rng() % n2;
              aut = AutomorphismSpec::affine(a, rng() % n2);
            } else if (g->ade_kind()->family == AdeKind::Family::BinaryOctahedral) {
              aut = AutomorphismSpec::outer_2O();
            } else if (g->ade_kind()->family == AdeKind::Family::BinaryIcosahedral) {
              aut = AutomorphismSpec::outer_2I();
            } else {
              aut = AutomorphismSpec::outer_2T();
            }
            return ProductGroup3::semi(graph_of(aut, g), random_group(), rng() % 3);
          }
        }
      }();
      auto base = is_free(spec);
      if (!check_witness(base)) return false;
      for (const auto& p : perms) {
        auto v = is_free(spec.permuted(p));
        if (v.free != base.free) return false;
        if (!check_witness(v)) return false;
      }
    }
    return true;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures;
}
