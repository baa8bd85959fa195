#include "su2free/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace su2free {

void TripleGroup::verify_closed() const {
  std::set<std::array<int, 3>> have(elems.begin(), elems.end());
  std::array<int, 3> id{ambient[0]->id(), ambient[1]->id(), ambient[2]->id()};
  if (!have.count(id)) throw ValidationError("triple group does not contain the identity");
  for (const auto& e : elems) {
    std::array<int, 3> inv{ambient[0]->inv(e[0]), ambient[1]->inv(e[1]), ambient[2]->inv(e[2])};
    if (!have.count(inv)) throw ValidationError("triple group not closed under inversion");
    for (const auto& f : elems) {
      std::array<int, 3> p{ambient[0]->mul(e[0], f[0]), ambient[1]->mul(e[1], f[1]),
                           ambient[2]->mul(e[2], f[2])};
      if (!have.count(p)) throw ValidationError("triple group not closed under multiplication");
    }
  }
}

long long ProductGroup3::order() const {
  return std::visit(
      [](const auto& g) -> long long {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Splittable>) {
          return static_cast<long long>(g.g[0]->order()) * g.g[1]->order() * g.g[2]->order();
        } else if constexpr (std::is_same_v<T, SemiSplittable>) {
          return g.pair.order() * g.single->order();
        } else if constexpr (std::is_same_v<T, Simple>) {
          return g.p;
        } else {
          return static_cast<long long>(g.t.elems.size());
        }
      },
      v);
}

namespace {

long long mod_pos(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = mod_pos(a, p);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw DomainError("not a unit");
  return mod_pos(t, p);
}

}  // namespace

ProductGroup3 ProductGroup3::permuted(const std::array<int, 3>& perm) const {
  return std::visit(
      [&](const auto& g) -> ProductGroup3 {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Splittable>) {
          return ProductGroup3(Splittable{{g.g[perm[0]], g.g[perm[1]], g.g[perm[2]]}});
        } else if constexpr (std::is_same_v<T, SemiSplittable>) {
          // Old positions of the pair components: the two non-single slots in
          // ascending order.
          std::array<int, 3> comp{-1, -1, -1};
          int pc = 0;
          for (int pos = 0; pos < 3; ++pos)
            comp[pos] = (pos == g.single_pos) ? 2 : pc++;  // 0=left, 1=right, 2=single
          std::array<int, 3> newcomp{comp[perm[0]], comp[perm[1]], comp[perm[2]]};
          SemiSplittable out;
          for (int pos = 0; pos < 3; ++pos)
            if (newcomp[pos] == 2) out.single_pos = pos;
          out.single = g.single;
          // Orientation of the pair in the new arrangement.
          int left_new = -1, right_new = -1;
          for (int pos = 0; pos < 3; ++pos) {
            if (newcomp[pos] == 0) left_new = pos;
            if (newcomp[pos] == 1) right_new = pos;
          }
          out.pair = g.pair;
          if (left_new > right_new) {
            std::swap(out.pair.left, out.pair.right);
            for (auto& e : out.pair.elems) std::swap(e.first, e.second);
            std::sort(out.pair.elems.begin(), out.pair.elems.end());
          }
          return ProductGroup3(std::move(out));
        } else if constexpr (std::is_same_v<T, Simple>) {
          std::array<long long, 3> u{1, mod_pos(g.r, g.p), mod_pos(g.s, g.p)};
          std::array<long long, 3> w{u[perm[0]], u[perm[1]], u[perm[2]]};
          long long inv = mod_inverse(w[0], g.p);
          return ProductGroup3(Simple{g.p, mod_pos(w[1] * inv, g.p), mod_pos(w[2] * inv, g.p)});
        } else {
          Explicit out;
          out.t.ambient = {g.t.ambient[perm[0]], g.t.ambient[perm[1]], g.t.ambient[perm[2]]};
          out.t.elems.reserve(g.t.elems.size());
          for (const auto& e : g.t.elems) out.t.elems.push_back({e[perm[0]], e[perm[1]], e[perm[2]]});
          std::sort(out.t.elems.begin(), out.t.elems.end());
          return ProductGroup3(std::move(out));
        }
      },
      v);
}

std::string ProductGroup3::str() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Splittable>) {
          return g.g[0]->name() + " x " + g.g[1]->name() + " x " + g.g[2]->name();
        } else if constexpr (std::is_same_v<T, SemiSplittable>) {
          std::string pair = "C(" + g.pair.left->name() + "," + g.pair.right->name() + ",|" +
                             std::to_string(g.pair.order()) + "|)";
          switch (g.single_pos) {
            case 0: return g.single->name() + " x " + pair;
            case 1: return "(" + pair + " with " + g.single->name() + " inserted)";
            default: return pair + " x " + g.single->name();
          }
        } else if constexpr (std::is_same_v<T, Simple>) {
          return "C(" + std::to_string(g.p) + "," + std::to_string(g.r) + "," +
                 std::to_string(g.s) + ")";
        } else {
          return "explicit(" + std::to_string(g.t.elems.size()) + " triples)";
        }
      },
      v);
}

std::string Witness::str() const {
  return "(" + els[0].str() + ", " + els[1].str() + ", " + els[2].str() + ")";
}

namespace {

// First element index per unified real-part value.
std::map<RealPart, int> value_map(const FiniteSubgroup& g) {
  std::map<RealPart, int> m;
  for (int i = 0; i < g.order(); ++i) m.emplace(g.re_unified(i), i);
  return m;
}

FreeVerdict free_splittable(const ProductGroup3::Splittable& s, long long budget,
                            long long total) {
  if (total > budget) throw BudgetError("element budget exceeded");
  auto m0 = value_map(*s.g[0]);
  auto m1 = value_map(*s.g[1]);
  auto m2 = value_map(*s.g[2]);
  const RealPart one = RealPart::one();
  for (const auto& [val, i0] : m0) {
    if (val == one) continue;
    auto it1 = m1.find(val);
    if (it1 == m1.end()) continue;
    auto it2 = m2.find(val);
    if (it2 == m2.end()) continue;
    Witness w{{s.g[0]->quat(i0), s.g[1]->quat(it1->second), s.g[2]->quat(it2->second)}};
    return FreeVerdict{false, std::move(w)};
  }
  return FreeVerdict{true, std::nullopt};
}

FreeVerdict free_semi(const ProductGroup3::SemiSplittable& s, long long budget, long long total) {
  if (total > budget) throw BudgetError("element budget exceeded");
  auto ms = value_map(*s.single);
  const RealPart one = RealPart::one();
  const auto& L = *s.pair.left;
  const auto& R = *s.pair.right;
  for (const auto& [x, y] : s.pair.elems) {
    const RealPart& vx = L.re_unified(x);
    if (!(vx == R.re_unified(y))) continue;
    if (vx == one) continue;  // Re = 1 forces the identity in every slot
    auto it = ms.find(vx);
    if (it == ms.end()) continue;
    std::array<UnitQuaternion, 3> els;
    int pc = 0;
    for (int pos = 0; pos < 3; ++pos) {
      if (pos == s.single_pos)
        els[pos] = s.single->quat(it->second);
      else
        els[pos] = (pc++ == 0) ? L.quat(x) : R.quat(y);
    }
    return FreeVerdict{false, Witness{els}};
  }
  return FreeVerdict{true, std::nullopt};
}

FreeVerdict free_simple(const ProductGroup3::Simple& s, long long budget) {
  if (s.p > budget) throw BudgetError("element budget exceeded");
  if (s.p < 2) throw DomainError("p must be a prime");
  for (long long q = 2; q * q <= s.p; ++q)
    if (s.p % q == 0) throw DomainError("p must be a prime");
  long long r = mod_pos(s.r, s.p), t = mod_pos(s.s, s.p);
  if (std::gcd(r, s.p) != 1 || std::gcd(t, s.p) != 1)
    throw DomainError("r and s must be units mod p");
  for (long long x = 1; x < s.p; ++x) {
    RealPart a = RealPart::cos2pi(Rational(x, s.p));
    RealPart b = RealPart::cos2pi(Rational(mod_pos(r * x, s.p), s.p));
    RealPart c = RealPart::cos2pi(Rational(mod_pos(t * x, s.p), s.p));
    if (realpart_equal(a, b) && realpart_equal(b, c)) {
      Witness w{{UnitQuaternion::angle(0, Rational(x, s.p)),
                 UnitQuaternion::angle(0, Rational(mod_pos(r * x, s.p), s.p)),
                 UnitQuaternion::angle(0, Rational(mod_pos(t * x, s.p), s.p))}};
      return FreeVerdict{false, std::move(w)};
    }
  }
  return FreeVerdict{true, std::nullopt};
}

FreeVerdict free_explicit(const ProductGroup3::Explicit& e, long long budget) {
  if (static_cast<long long>(e.t.elems.size()) > budget)
    throw BudgetError("element budget exceeded");
  const RealPart one = RealPart::one();
  for (const auto& el : e.t.elems) {
    const RealPart& a = e.t.ambient[0]->re_unified(el[0]);
    if (a == one) continue;  // identity triple or no coincidence at 1
    if (!(a == e.t.ambient[1]->re_unified(el[1]))) continue;
    if (!(a == e.t.ambient[2]->re_unified(el[2]))) continue;
    Witness w{{e.t.ambient[0]->quat(el[0]), e.t.ambient[1]->quat(el[1]),
               e.t.ambient[2]->quat(el[2])}};
    return FreeVerdict{false, std::move(w)};
  }
  return FreeVerdict{true, std::nullopt};
}

}  // namespace

FreeVerdict is_free(const ProductGroup3& g, long long budget) {
  long long total = g.order();
  return std::visit(
      [&](const auto& s) -> FreeVerdict {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ProductGroup3::Splittable>) {
          return free_splittable(s, budget, total);
        } else if constexpr (std::is_same_v<T, ProductGroup3::SemiSplittable>) {
          return free_semi(s, budget, total);
        } else if constexpr (std::is_same_v<T, ProductGroup3::Simple>) {
          return free_simple(s, budget);
        } else {
          return free_explicit(s, budget);
        }
      },
      g.v);
}

std::vector<RealPart> coincidence_set(const PairSubgroup& c) {
  std::set<RealPart> vals;
  vals.insert(RealPart::one());
  const auto& L = *c.left;
  const auto& R = *c.right;
  for (const auto& [x, y] : c.elems)
    if (L.re_unified(x) == R.re_unified(y)) vals.insert(L.re_unified(x));
  return std::vector<RealPart>(vals.begin(), vals.end());
}

bool splittable_free_test(const FiniteSubgroup& g1, const FiniteSubgroup& g2,
                          const FiniteSubgroup& g3) {
  auto s1 = g1.real_part_set();
  auto s2 = g2.real_part_set();
  auto s3 = g3.real_part_set();
  std::vector<RealPart> i12, i123;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(i12));
  std::set_intersection(i12.begin(), i12.end(), s3.begin(), s3.end(), std::back_inserter(i123));
  return i123.size() == 1 && i123[0] == RealPart::one();
}

}  // namespace su2free
