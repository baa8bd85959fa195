#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "su2free/classify.hpp"

namespace su2free {

namespace {

long long mpos(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}
bool coprime(long long a, long long b) { return std::gcd(a, b) == 1; }
bool no23(long long x) { return x % 2 != 0 && x % 3 != 0; }
bool no235(long long x) { return x % 2 != 0 && x % 3 != 0 && x % 5 != 0; }
long long gcd3(long long a, long long b, long long c) {
  return std::gcd(std::gcd(a < 0 ? -a : a, b), c);
}

// ---------------------------------------------------------------------------
// Third factors: Z(m), BD(m), 2T, 2O, 2I encoded as (kind, m).

enum PartnerKind { kZ = 0, kBD = 1, k2T = 2, k2O = 3, k2I = 4 };

struct Partner {
  int kind;
  long long m;
};

std::vector<Partner> partner_list(const Bounds& b) {
  std::vector<Partner> out;
  for (long long m = 2; m <= b.partner_cyclic; ++m) out.push_back({kZ, m});
  for (long long m = 2; m <= b.partner_bd; ++m) out.push_back({kBD, m});
  if (b.partner_exceptional) {
    out.push_back({k2T, 0});
    out.push_back({k2O, 0});
    out.push_back({k2I, 0});
  }
  return out;
}

GroupPtr partner_group(const Partner& p) {
  switch (p.kind) {
    case kZ: return build_group(AdeKind::cyclic(p.m));
    case kBD: return build_group(AdeKind::binary_dihedral(p.m));
    case k2T: return build_group(AdeKind::tetrahedral());
    case k2O: return build_group(AdeKind::octahedral());
    default: return build_group(AdeKind::icosahedral());
  }
}

Partner partner_of(const FamilyInstance& inst) {
  return Partner{static_cast<int>(inst.get("dk")), inst.get("dm")};
}

// ---------------------------------------------------------------------------
// Ambient layout helpers.  Elements of build_group are sorted structurally,
// which for angle-form groups means: torus elements by angle, then the
// j-elements by angle.  verify once per group, then use index arithmetic.

std::set<const FiniteSubgroup*>& verified_layouts() {
  static std::set<const FiniteSubgroup*> s;
  return s;
}
std::mutex layout_mu;

struct ZLayout {
  GroupPtr g;
  long long n;
  int at(long long x) const { return static_cast<int>(mpos(x, n)); }
};

ZLayout z_layout(long long n) {
  auto g = build_group(AdeKind::cyclic(n));
  {
    std::lock_guard<std::mutex> lock(layout_mu);
    if (!verified_layouts().count(g.get())) {
      for (long long x = 0; x < n; ++x)
        if (!(g->quat(static_cast<int>(x)) == UnitQuaternion::angle(0, Rational(x, n))))
          throw Error("unexpected cyclic element layout");
      verified_layouts().insert(g.get());
    }
  }
  return ZLayout{g, n};
}

struct BdLayout {
  GroupPtr g;
  long long two_n;
  int torus(long long x) const { return static_cast<int>(mpos(x, two_n)); }
  int refl(long long x) const { return static_cast<int>(two_n + mpos(x, two_n)); }
};

BdLayout bd_layout(long long n) {
  auto g = build_group(AdeKind::binary_dihedral(n));
  {
    std::lock_guard<std::mutex> lock(layout_mu);
    if (!verified_layouts().count(g.get())) {
      for (long long x = 0; x < 2 * n; ++x) {
        if (!(g->quat(static_cast<int>(x)) == UnitQuaternion::angle(0, Rational(x, 2 * n))))
          throw Error("unexpected binary dihedral layout");
        if (!(g->quat(static_cast<int>(2 * n + x)) == UnitQuaternion::angle(1, Rational(x, 2 * n))))
          throw Error("unexpected binary dihedral layout");
      }
      verified_layouts().insert(g.get());
    }
  }
  return BdLayout{g, 2 * n};
}

// Coset labels of 2D_4 in 2T: z in w^c 2D_4 with w = (-1+i+j+k)/2.  Verified
// once to be a homomorphism onto Z_3.
const std::vector<int>& tetra_labels() {
  static std::vector<int> labels = [] {
    auto t = build_group(AdeKind::tetrahedral());
    const Rational h(1, 2);
    UnitQuaternion w = UnitQuaternion::surd(SurdValue(-h), SurdValue(h), SurdValue(h), SurdValue(h));
    UnitQuaternion w2 = qmul(w, w);
    std::vector<int> out(t->order());
    auto in_2d4 = [&](const UnitQuaternion& q) {
      const auto& s = q.surd_form();
      auto unitish = [](const SurdValue& v) {
        return v.is_zero() || v == SurdValue(1) || v == SurdValue(-1);
      };
      return unitish(s.w) && unitish(s.x) && unitish(s.y) && unitish(s.z);
    };
    for (int i = 0; i < t->order(); ++i) {
      const auto& q = t->quat(i);
      if (in_2d4(q))
        out[i] = 0;
      else if (in_2d4(qmul(qinv(w), q)))
        out[i] = 1;
      else if (in_2d4(qmul(qinv(w2), q)))
        out[i] = 2;
      else
        throw Error("tetra label computation failed");
    }
    for (int a = 0; a < t->order(); ++a)
      for (int b = 0; b < t->order(); ++b)
        if (out[t->mul(a, b)] != (out[a] + out[b]) % 3)
          throw Error("tetra labels are not a homomorphism");
    return out;
  }();
  return labels;
}

// 0 for the 2T part of 2O, 1 for the e^{i pi/4} coset.
const std::vector<int>& octa_labels() {
  static std::vector<int> labels = [] {
    auto o = build_group(AdeKind::octahedral());
    auto t = build_group(AdeKind::tetrahedral());
    std::vector<int> out(o->order());
    for (int i = 0; i < o->order(); ++i) out[i] = t->index_of(o->quat(i)) >= 0 ? 0 : 1;
    for (int a = 0; a < o->order(); ++a)
      for (int b = 0; b < o->order(); ++b)
        if (out[o->mul(a, b)] != (out[a] ^ out[b]))
          throw Error("octa labels are not a homomorphism");
    return out;
  }();
  return labels;
}

// The Q8 subgroup {+-1, +-i, +-j, +-k} of 2O.
Subgroup q8_subgroup(const FiniteSubgroup& g) {
  Subgroup s;
  const SurdValue one(1);
  for (int c = 0; c < 4; ++c)
    for (int sgn = 0; sgn < 2; ++sgn) {
      SurdValue v = sgn ? -one : one;
      SurdValue w = c == 0 ? v : SurdValue(0), x = c == 1 ? v : SurdValue(0),
                y = c == 2 ? v : SurdValue(0), z = c == 3 ? v : SurdValue(0);
      int idx = g.index_of(UnitQuaternion::surd(w, x, y, z));
      if (idx < 0) throw Error("Q8 subgroup not present");
      s.members.push_back(idx);
    }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

Subgroup center_subgroup(const FiniteSubgroup& g) {
  int mo = g.index_of(UnitQuaternion::surd(-1, 0, 0, 0));
  if (mo < 0) throw Error("central -1 not present");
  Subgroup s{{std::min(g.id(), mo), std::max(g.id(), mo)}};
  return s;
}

// ---------------------------------------------------------------------------
// Pair caching: families rebuild the SU(2)^2 part only when the non-partner
// parameters change (the partner sweep is innermost in enumeration order).

std::vector<long long> pair_key(const FamilyInstance& inst) {
  std::vector<long long> key;
  const auto& names = inst.fam->param_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != "dk" && names[i] != "dm") key.push_back(inst.values[i]);
  return key;
}

// ---------------------------------------------------------------------------
// Base classes.

class FamilyBase : public Family {
 public:
  FamilyBase(std::string id, std::vector<std::string> names)
      : id_(std::move(id)), names_(std::move(names)) {}
  const std::string& id() const override { return id_; }
  const std::vector<std::string>& param_names() const override { return names_; }

 protected:
  FamilyInstance make(std::vector<long long> values) const {
    return FamilyInstance{this, std::move(values)};
  }

 private:
  std::string id_;
  std::vector<std::string> names_;
};

// Families whose group is pair x partner.
class PairFamily : public FamilyBase {
 public:
  using FamilyBase::FamilyBase;

  Evaluation evaluate(const FamilyInstance& inst) const override {
    Evaluation ev;
    const PairSubgroup& pair = cached_pair(inst);
    Partner d = partner_of(inst);
    ev.table_condition = table_condition(inst, d);
    ev.splittable_fallback =
        splittable_free_test(*pair.left, *pair.right, *partner_group(d));
    ev.group = ProductGroup3::semi(pair, partner_group(d));
    return ev;
  }

 protected:
  virtual PairSubgroup build_pair(const FamilyInstance& inst) const = 0;
  virtual bool table_condition(const FamilyInstance& inst, const Partner& d) const = 0;

  const PairSubgroup& cached_pair(const FamilyInstance& inst) const {
    thread_local std::map<const Family*, std::pair<std::vector<long long>, PairSubgroup>> cache;
    auto key = pair_key(inst);
    auto& slot = cache[this];
    if (slot.first != key || slot.second.left == nullptr) {
      slot.second = build_pair(inst);
      slot.first = std::move(key);
    }
    return slot.second;
  }
};

// ---------------------------------------------------------------------------
// Theorem on simple subgroups: C(p, r, s) = {(x, r x, s x)}.

class SimpleFamily : public FamilyBase {
 public:
  SimpleFamily() : FamilyBase("simple", {"p", "r", "s"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long p = 2; p <= b.simple_p; ++p) {
      bool prime = p >= 2;
      for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      for (long long r = 1; r < p; ++r)
        for (long long s = 1; s < p; ++s) out.push_back(make({p, r, s}));
    }
    return out;
  }

  Evaluation evaluate(const FamilyInstance& inst) const override {
    Evaluation ev;
    long long p = inst.get("p"), r = inst.get("r"), s = inst.get("s");
    ev.table_condition = simple_system_trivial_only(p, r, s);
    ev.splittable_fallback = false;
    ev.group = ProductGroup3::simple(p, r, s);
    return ev;
  }
};

// ---------------------------------------------------------------------------
// Splittable classification rows.

struct SplitRowSpec {
  std::string id;
  // factor kinds: first is always Z(n); others are kZ/kBD with their own
  // parameter, or an exceptional kind
  std::vector<int> kinds;                  // kinds[0] == kZ
  std::function<bool(const std::vector<long long>&)> cond;  // on the parameter list
};

class SplittableRowFamily : public FamilyBase {
 public:
  explicit SplittableRowFamily(SplitRowSpec spec)
      : FamilyBase("main:" + spec.id, names_for(spec)), spec_(std::move(spec)) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    std::vector<long long> params(n_params());
    enumerate_rec(b, 0, params, out);
    return out;
  }

  Evaluation evaluate(const FamilyInstance& inst) const override {
    Evaluation ev;
    std::array<GroupPtr, 3> g;
    std::size_t pi = 0;
    for (std::size_t f = 0; f < 3; ++f) {
      switch (spec_.kinds[f]) {
        case kZ: g[f] = build_group(AdeKind::cyclic(inst.values[pi++])); break;
        case kBD: g[f] = build_group(AdeKind::binary_dihedral(inst.values[pi++])); break;
        case k2T: g[f] = build_group(AdeKind::tetrahedral()); break;
        case k2O: g[f] = build_group(AdeKind::octahedral()); break;
        default: g[f] = build_group(AdeKind::icosahedral()); break;
      }
    }
    ev.table_condition = spec_.cond(inst.values);
    ev.splittable_fallback = false;  // the group itself is the splittable product
    ev.group = ProductGroup3::splittable(g[0], g[1], g[2]);
    return ev;
  }

  const SplitRowSpec& spec() const { return spec_; }

 private:
  static std::vector<std::string> names_for(const SplitRowSpec& spec) {
    static const char* names[] = {"n", "m", "l"};
    std::vector<std::string> out;
    int c = 0;
    for (int k : spec.kinds)
      if (k == kZ || k == kBD) out.push_back(names[c++]);
    return out;
  }

  std::size_t n_params() const { return param_names().size(); }

  void enumerate_rec(const Bounds& b, std::size_t i, std::vector<long long>& params,
                     std::vector<FamilyInstance>& out) const {
    if (i == n_params()) {
      out.push_back(make(params));
      return;
    }
    for (long long v = 2; v <= b.splittable_param; ++v) {
      params[i] = v;
      enumerate_rec(b, i + 1, params, out);
    }
  }

  SplitRowSpec spec_;
};

std::vector<SplitRowSpec> splittable_rows() {
  auto n0 = [](const std::vector<long long>& p) { return p[0]; };
  return {
      {"Zn.2I.2I", {kZ, k2I, k2I}, [=](const auto& p) { return no235(n0(p)); }},
      {"Zn.2O.2I", {kZ, k2O, k2I}, [=](const auto& p) { return no23(n0(p)); }},
      {"Zn.2O.2O", {kZ, k2O, k2O}, [=](const auto& p) { return no23(n0(p)); }},
      {"Zn.2T.2O", {kZ, k2T, k2O}, [=](const auto& p) { return no23(n0(p)); }},
      {"Zn.2T.2I", {kZ, k2T, k2I}, [=](const auto& p) { return no23(n0(p)); }},
      {"Zn.2T.2T", {kZ, k2T, k2T}, [=](const auto& p) { return no23(n0(p)); }},
      {"Zn.Zm.Zl", {kZ, kZ, kZ}, [](const auto& p) { return gcd3(p[0], p[1], p[2]) == 1; }},
      {"Zn.Zm.BDl", {kZ, kZ, kBD}, [](const auto& p) { return gcd3(p[0], p[1], 2 * p[2]) == 1; }},
      {"Zn.BDm.BDl", {kZ, kBD, kBD},
       [](const auto& p) { return gcd3(p[0], 2 * p[1], 2 * p[2]) == 1; }},
      {"Zn.Zm.2T", {kZ, kZ, k2T}, [](const auto& p) { return no23(std::gcd(p[0], p[1])); }},
      {"Zn.Zm.2O", {kZ, kZ, k2O}, [](const auto& p) { return no23(std::gcd(p[0], p[1])); }},
      {"Zn.BDm.2T", {kZ, kBD, k2T}, [](const auto& p) { return no23(std::gcd(p[0], 2 * p[1])); }},
      {"Zn.BDm.2O", {kZ, kBD, k2O}, [](const auto& p) { return no23(std::gcd(p[0], 2 * p[1])); }},
      // printed condition as in the table; the oracle flags the missing
      // 5-divisibility case (see expected_discrepancies)
      {"Zn.BDm.2I", {kZ, kBD, k2I}, [](const auto& p) { return no23(std::gcd(p[0], 2 * p[1])); }},
      {"Zn.Zm.2I", {kZ, kZ, k2I}, [](const auto& p) { return no235(std::gcd(p[0], p[1])); }},
  };
}

// ---------------------------------------------------------------------------
// Type I: graphs of outer automorphisms of E groups.

class TypeIGraphEFamily : public PairFamily {
 public:
  TypeIGraphEFamily() : PairFamily("typeB:gammaE", {"ek", "mode", "gi", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long ek = k2T; ek <= k2I; ++ek) {
      auto g = partner_group({static_cast<int>(ek), 0});
      long long classes = static_cast<long long>(conjugacy_classes(*g).size());
      for (long long mode = 0; mode <= 1; ++mode)
        for (long long gi = 0; gi < classes; ++gi)
          for (const auto& d : partners) out.push_back(make({ek, mode, gi, d.kind, d.m}));
    }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    int ek = static_cast<int>(inst.get("ek"));
    auto g = partner_group({ek, 0});
    auto classes = conjugacy_classes(*g);
    UnitQuaternion rep = g->quat(classes[inst.get("gi")].rep);
    AutomorphismSpec inner = AutomorphismSpec::inner(rep);
    AutomorphismSpec spec =
        inst.get("mode") == 0
            ? AutomorphismSpec::compose(
                  {AutomorphismSpec(AutomorphismSpec::OuterE{ade_family(ek)}), inner})
            : inner;
    return graph_of(spec, g);
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    // The only printed type I row for E groups: Gamma(psi, 2I) x Z_n, 3 not| n.
    return inst.get("ek") == k2I && inst.get("mode") == 0 && d.kind == kZ && d.m % 3 != 0;
  }

 private:
  static AdeKind::Family ade_family(int ek) {
    switch (ek) {
      case k2T: return AdeKind::Family::BinaryTetrahedral;
      case k2O: return AdeKind::Family::BinaryOctahedral;
      default: return AdeKind::Family::BinaryIcosahedral;
    }
  }
};

// Gamma(tau_{a,b}, BD(n)) x B.
class TypeITauFamily : public PairFamily {
 public:
  TypeITauFamily() : PairFamily("typeB:tau", {"n", "a", "b", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long n = 3; n <= b.typeI_n; ++n)
      for (long long a = 1; a < 2 * n; ++a) {
        if (std::gcd(a, 2 * n) != 1) continue;
        for (long long bb = 0; bb < 2 * n; ++bb)
          for (const auto& d : partners) out.push_back(make({n, a, bb, d.kind, d.m}));
      }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long n = inst.get("n"), a = inst.get("a"), b = inst.get("b");
    auto bd = bd_layout(n);
    PairSubgroup c;
    c.left = bd.g;
    c.right = bd.g;
    c.elems.reserve(4 * n);
    for (long long x = 0; x < 2 * n; ++x) {
      c.elems.emplace_back(bd.torus(x), bd.torus(a * x));
      // j e^{i pi x / n} = s t^{x-1} -> s t^{a(x-1)+b} = j e^{i pi (a(x-1)+b+1)/n}
      c.elems.emplace_back(bd.refl(x), bd.refl(a * (x - 1) + b + 1));
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long n = inst.get("n"), a = inst.get("a");
    if (a % (2 * n) == 1 || (a + 1) % (2 * n) == 0) return false;  // outside the row domain
    if (d.kind != kZ) return false;                                // rows list Z_m only
    long long k1 = std::gcd(mpos(1 + a, 2 * n), 2 * n);
    long long k2 = std::gcd(mpos(1 - a, 2 * n), 2 * n);
    long long m = d.m;
    if (m % 4 == 0) return false;
    bool y1 = k1 > 1, y2 = k2 > 1;
    if (y1 && y2) return coprime(k1, m) && coprime(k2, m);
    if (y1) return coprime(k1, m);
    if (y2) return coprime(k2, m);
    return true;
  }
};

// Gamma(phi(r), Z_n) x B.
class TypeIPowFamily : public PairFamily {
 public:
  TypeIPowFamily() : PairFamily("typeB:pow", {"n", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long n = 2; n <= b.typeI_n; ++n)
      for (long long r = 1; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        for (const auto& d : partners) out.push_back(make({n, r, d.kind, d.m}));
      }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long n = inst.get("n"), r = inst.get("r");
    auto z = z_layout(n);
    PairSubgroup c;
    c.left = z.g;
    c.right = z.g;
    c.elems.reserve(n);
    for (long long x = 0; x < n; ++x) c.elems.emplace_back(z.at(x), z.at(r * x));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long n = inst.get("n"), r = inst.get("r");
    if (r == 1 || r == n - 1) return false;  // row domain needs r != +-1 (mod n)
    long long k1 = std::gcd(mpos(1 + r, n), n);
    long long k2 = std::gcd(mpos(1 - r, n), n);
    return pow_row_condition(k1, k2, d);
  }

 public:
  // Shared with the type II Z_{kl} row, which prints the same table.  The
  // no/yes 2I entry tests k1 exactly as printed (the oracle flags it).
  static bool pow_row_condition(long long k1, long long k2, const Partner& d) {
    bool y1 = k1 > 1, y2 = k2 > 1;
    switch (d.kind) {
      case kZ:
        if (y1 && y2) return coprime(d.m, k1) && coprime(d.m, k2);
        if (y1) return coprime(k1, d.m);
        if (y2) return coprime(k2, d.m);
        return true;
      case kBD:
        if (y1 && y2) return coprime(2 * d.m, k2) && coprime(2 * d.m, k1);
        if (y1) return coprime(k1, 2 * d.m);
        if (y2) return coprime(k2, 2 * d.m);
        return true;
      case k2T:
      case k2O:
        if (y1 && y2) return no23(k1) && no23(k2);
        if (y1) return no23(k1);
        if (y2) return no23(k2);
        return true;
      default:  // 2I
        if (y1 && y2) return no235(k1) && no235(k2);
        if (y1) return no235(k1);
        if (y2) return no235(k1);  // printed as k1 in the table
        return true;
    }
  }
};

// ---------------------------------------------------------------------------
// Type II families (quintuples with B0 trivial).

// G(2T, 2D_4, Z_3, {1}, phi(r)) x D.
class TypeII2TFamily : public PairFamily {
 public:
  TypeII2TFamily() : PairFamily("type3:2T-Z3", {"r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long r = 1; r <= 2; ++r)
      for (const auto& d : partner_list(b)) out.push_back(make({r, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long r = inst.get("r");
    auto t = build_group(AdeKind::tetrahedral());
    auto z = z_layout(3);
    const auto& labels = tetra_labels();
    PairSubgroup c;
    c.left = t;
    c.right = z.g;
    for (int i = 0; i < t->order(); ++i) c.elems.emplace_back(i, z.at(r * labels[i]));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner& d) const override {
    if (d.kind == kZ) return d.m % 3 != 0;
    if (d.kind == kBD) return (2 * d.m) % 3 != 0;
    return false;
  }
};

// G(2D_{4k}, 2D_{2k}, Z_2, {1}, id) x D  -- unconditional.
class TypeIIBD4kFamily : public PairFamily {
 public:
  TypeIIBD4kFamily() : PairFamily("type3:BD4k-Z2", {"k", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long k = 1; k <= b.typeII_param; ++k)
      for (const auto& d : partner_list(b)) out.push_back(make({k, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k");
    auto bd = bd_layout(2 * k);
    auto z = z_layout(2);
    PairSubgroup c;
    c.left = bd.g;
    c.right = z.g;
    for (long long x = 0; x < 4 * k; ++x) {
      c.elems.emplace_back(bd.torus(x), z.at(x));
      c.elems.emplace_back(bd.refl(x), z.at(x));
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return true; }
};

// G(2O, 2T, Z_2, {1}, id) x D  -- unconditional.
class TypeII2OFamily : public PairFamily {
 public:
  TypeII2OFamily() : PairFamily("type3:2O-Z2", {"dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (const auto& d : partner_list(b)) out.push_back(make({d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance&) const override {
    auto o = build_group(AdeKind::octahedral());
    auto z = z_layout(2);
    const auto& labels = octa_labels();
    PairSubgroup c;
    c.left = o;
    c.right = z.g;
    for (int i = 0; i < o->order(); ++i) c.elems.emplace_back(i, z.at(labels[i]));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return true; }
};

// G(2D_{2k}, Z_{2k}, Z_2, {1}, id) x D  -- unconditional.
class TypeIIBD2kFamily : public PairFamily {
 public:
  TypeIIBD2kFamily() : PairFamily("type3:BD2k-Z2", {"k", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long k = 2; k <= b.typeII_param; ++k)
      for (const auto& d : partner_list(b)) out.push_back(make({k, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k");
    auto bd = bd_layout(k);
    auto z = z_layout(2);
    PairSubgroup c;
    c.left = bd.g;
    c.right = z.g;
    for (long long x = 0; x < 2 * k; ++x) {
      c.elems.emplace_back(bd.torus(x), z.at(0));
      c.elems.emplace_back(bd.refl(x), z.at(1));
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return true; }
};

// G(Z_{kl}, Z_l, Z_k, {1}, phi(r)) x D.
class TypeIIZklFamily : public PairFamily {
 public:
  TypeIIZklFamily() : PairFamily("type3:Zkl-Zk", {"k", "l", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 2; k <= b.typeII_param; ++k)
      for (long long l = 2; l <= b.typeII_param; ++l)
        for (long long r = 1; r < k; ++r) {
          if (std::gcd(r, k) != 1) continue;
          for (const auto& d : partners) out.push_back(make({k, l, r, d.kind, d.m}));
        }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), l = inst.get("l"), r = inst.get("r");
    auto zkl = z_layout(k * l);
    auto zk = z_layout(k);
    PairSubgroup c;
    c.left = zkl.g;
    c.right = zk.g;
    for (long long x = 0; x < k * l; ++x) c.elems.emplace_back(zkl.at(x), zk.at(r * x));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long k = inst.get("k"), l = inst.get("l"), r = inst.get("r");
    long long kl = k * l;
    long long lr = mpos(l * r, kl);
    if (lr == 1 || lr == kl - 1) return false;  // needs l r != +-1 (mod l k)
    long long k1 = std::gcd(mpos(1 + l * r, kl), kl);
    long long k2 = std::gcd(mpos(1 - l * r, kl), kl);
    return TypeIPowFamily::pow_row_condition(k1, k2, d);
  }
};

// G(2D_{2l(2k+1)}, Z_{2k+1}, 2D_{2l}, {1}, c_g tau_{a,b}) x D.
class TypeIIBDTauFamily : public PairFamily {
 public:
  TypeIIBDTauFamily() : PairFamily("type3:BDtau", {"l", "k", "a", "b", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long l = 3; l <= b.typeII_param; ++l)
      for (long long k = 1; k <= b.typeII_param; ++k)
        for (long long a = 1; a < 2 * l; ++a) {
          if (std::gcd(a, 2 * l) != 1) continue;
          for (long long bb = 0; bb < 2 * l; ++bb)
            for (const auto& d : partners) out.push_back(make({l, k, a, bb, d.kind, d.m}));
        }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long l = inst.get("l"), k = inst.get("k"), a = inst.get("a"), b = inst.get("b");
    long long K = 2 * k + 1;
    auto big = bd_layout(l * K);
    auto small = bd_layout(l);
    PairSubgroup c;
    c.left = big.g;
    c.right = small.g;
    for (long long x = 0; x < 2 * l * K; ++x) {
      c.elems.emplace_back(big.torus(x), small.torus(a * x));
      c.elems.emplace_back(big.refl(x), small.refl(a * (x - 1) + b + 1));
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long l = inst.get("l"), k = inst.get("k"), a = inst.get("a");
    long long K = 2 * k + 1;
    long long N = 2 * l * K;
    long long aK = mpos(a * K, N);
    if (aK == 1 || aK == N - 1) return false;  // needs a(2k+1) != +-1 (mod 2l(2k+1))
    if (d.kind != kZ) return false;
    long long m = d.m;
    if (m % 4 == 0) return false;
    long long k1 = std::gcd(mpos(1 - a * K, N), N);
    long long k2 = std::gcd(mpos(1 + a * K, N), N);
    bool y1 = k1 > 1, y2 = k2 > 1;
    if (y1 && y2) return coprime(k1, m) && coprime(k2, m);
    if (y1) return coprime(k1, m);
    if (y2) return coprime(k2, m);
    return true;
  }
};

}  // namespace

// Defined in classify.cpp.
const std::vector<DiscrepancyRule>& expected_discrepancies();

namespace {

// ---------------------------------------------------------------------------
// Type III families (both kernels nontrivial).

// G(Z_{kl}, Z_k, Z_{pl}, Z_p, phi(r)) x D.
class TypeIIIAFamily : public PairFamily {
 public:
  TypeIIIAFamily() : PairFamily("qfinal:a", {"k", "l", "p", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 2; k <= b.typeIII_klp; ++k)
      for (long long l = 2; l <= b.typeIII_klp; ++l)
        for (long long p = 2; p <= b.typeIII_klp; ++p)
          for (long long r = 1; r < l; ++r) {
            if (std::gcd(r, l) != 1) continue;
            for (const auto& d : partners) out.push_back(make({k, l, p, r, d.kind, d.m}));
          }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), l = inst.get("l"), p = inst.get("p"), r = inst.get("r");
    auto za = z_layout(k * l);
    auto zb = z_layout(p * l);
    PairSubgroup c;
    c.left = za.g;
    c.right = zb.g;
    c.elems.reserve(k * l * p);
    for (long long x = 0; x < k * l; ++x) {
      long long y0 = mpos(r * x, l);
      for (long long t = 0; t < p; ++t) c.elems.emplace_back(za.at(x), zb.at(y0 + l * t));
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long k = inst.get("k"), l = inst.get("l"), p = inst.get("p"), r = inst.get("r");
    long long s = (k * l) / std::gcd(k * l, l * p * k);
    for (long long eps : {1LL, -1LL}) {
      long long ms = gcd3(p - eps * k * r, k * l, l * p * k) * s;
      bool ok;
      switch (d.kind) {
        case kZ: ok = coprime(d.m, ms); break;
        case kBD: ok = coprime(2 * d.m, ms); break;
        case k2T:
        case k2O: ok = no23(ms); break;
        default: ok = no235(ms); break;
      }
      if (!ok) return false;
    }
    return true;
  }
};

// G(Z_{3n}, Z_n, 2T, 2D_4, phi(r)) x D.
class TypeIIIBFamily : public PairFamily {
 public:
  TypeIIIBFamily() : PairFamily("qfinal:b", {"n", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long n = 2; n <= b.partner_cyclic; ++n)
      for (long long r = 1; r <= 2; ++r)
        for (const auto& d : partners) out.push_back(make({n, r, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long n = inst.get("n"), r = inst.get("r");
    auto z = z_layout(3 * n);
    auto t = build_group(AdeKind::tetrahedral());
    const auto& labels = tetra_labels();
    std::array<std::vector<int>, 3> by_label;
    for (int i = 0; i < t->order(); ++i) by_label[labels[i]].push_back(i);
    PairSubgroup c;
    c.left = z.g;
    c.right = t;
    c.elems.reserve(3 * n * 8);
    for (long long x = 0; x < 3 * n; ++x)
      for (int i : by_label[mpos(r * x, 3)]) c.elems.emplace_back(z.at(x), i);
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long n = inst.get("n");
    long long m = d.m;
    if (n % 2 == 0) {
      // even n: D = Z_m with m odd, and 3 must not divide n-1, n+1, n-2, n+2
      return d.kind == kZ && m % 2 != 0 && (n - 1) % 3 != 0 && (n + 1) % 3 != 0 &&
             (n + 2) % 3 != 0 && (n - 2) % 3 != 0;
    }
    bool col1 = (n - 2) % 6 == 0 || (n + 2) % 6 == 0 || (n - 4) % 6 == 0 || (n + 4) % 6 == 0;
    bool col2 = (n - 1) % 3 == 0 || (n + 1) % 3 == 0 || (n - 2) % 3 == 0 || (n + 2) % 3 == 0;
    if (!col1 && !col2) return true;  // "All" row
    if (d.kind == kZ) return col1 && !col2 ? m % 6 != 0 : m % 3 != 0;
    if (d.kind == kBD) return m % 3 != 0;
    return false;
  }
};

// G(2D_{2l(2k+1)}, Z_{2k+1}, 2D_{2l(2p+1)}, Z_{2p+1}, c_g tau_{a,b}) x Z_{m'}.
class TypeIIICFamily : public PairFamily {
 public:
  TypeIIICFamily() : PairFamily("qfinal:c", {"l", "k", "p", "a", "b", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long l = 3; l <= b.typeIII_klp; ++l)
      for (long long k = 1; k <= b.typeIII_klp; ++k)
        for (long long p = 1; p <= b.typeIII_klp; ++p)
          for (long long a = 1; a < 2 * l; ++a) {
            if (std::gcd(a, 2 * l) != 1) continue;
            for (long long bb = 0; bb < 2 * l; ++bb)
              for (const auto& d : partners) out.push_back(make({l, k, p, a, bb, d.kind, d.m}));
          }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long l = inst.get("l"), k = inst.get("k"), p = inst.get("p"), a = inst.get("a"),
              b = inst.get("b");
    long long K = 2 * k + 1, P = 2 * p + 1;
    auto A = bd_layout(l * K);
    auto B = bd_layout(l * P);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    c.elems.reserve(4 * l * K * P);
    for (long long x = 0; x < 2 * l * K; ++x) {
      long long y0 = mpos(a * x, 2 * l);
      long long y1 = mpos(a * (x - 1) + b + 1, 2 * l);
      for (long long t = 0; t < P; ++t) {
        c.elems.emplace_back(A.torus(x), B.torus(y0 + 2 * l * t));
        c.elems.emplace_back(A.refl(x), B.refl(y1 + 2 * l * t));
      }
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long l = inst.get("l"), k = inst.get("k"), p = inst.get("p"), a = inst.get("a");
    long long K = 2 * k + 1, P = 2 * p + 1;
    if (d.kind != kZ || d.m % 4 == 0) return false;
    long long s = (2 * l * K) / std::gcd(2 * l * K, 2 * l * P * K);
    for (long long eps : {1LL, -1LL}) {
      long long m_eps = gcd3(P - eps * K * a, 2 * l * K, 2 * l * P * K);
      if (!coprime(d.m, m_eps * s)) return false;
    }
    return true;
  }
};

// l = 2 case: quotients are Q8, automorphisms by octahedral conjugation.
class TypeIIIC2Family : public PairFamily {
 public:
  TypeIIIC2Family() : PairFamily("qfinal:c2", {"k", "p", "w", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (long long w = 0; w < 24; ++w)
          for (const auto& d : partners) out.push_back(make({k, p, w, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), p = inst.get("p"), w = inst.get("w");
    long long K = 2 * k + 1, P = 2 * p + 1;
    auto A = build_group(AdeKind::binary_dihedral(2 * K));
    auto B = build_group(AdeKind::binary_dihedral(2 * P));
    Subgroup a0, b0;
    for (long long u = 0; u < K; ++u)
      a0.members.push_back(A->index_of(UnitQuaternion::angle(0, Rational(4 * u, 4 * K))));
    for (long long u = 0; u < P; ++u)
      b0.members.push_back(B->index_of(UnitQuaternion::angle(0, Rational(4 * u, 4 * P))));
    std::sort(a0.members.begin(), a0.members.end());
    std::sort(b0.members.begin(), b0.members.end());
    auto da = cosets(*A, a0);
    auto db = cosets(*B, b0);
    auto qa = quotient(*A, a0);
    auto qb = quotient(*B, b0);
    auto iso = find_isomorphism(qa.group, qb.group);
    if (!iso) throw Error("Q8 quotients must be isomorphic");
    auto auts = all_automorphisms(qb.group);
    const auto& aut = auts.at(w);
    PairSubgroup c;
    c.left = A;
    c.right = B;
    for (int x = 0; x < A->order(); ++x)
      for (int y : db.members[aut[(*iso)[da.coset_of[x]]]]) c.elems.emplace_back(x, y);
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override {
    return false;  // l = 2 yields no groups beyond splittable containment
  }
};

// G(2D_{2(2k+1)}, Z_{2k+1}, Z_{4p}, Z_p, phi(r)) x D.
class TypeIIIDFamily : public PairFamily {
 public:
  TypeIIIDFamily() : PairFamily("qfinal:d", {"k", "p", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (long long r : {1LL, 3LL})
          for (const auto& d : partners) out.push_back(make({k, p, r, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), p = inst.get("p"), r = inst.get("r");
    long long K = 2 * k + 1;
    auto A = bd_layout(K);
    auto B = z_layout(4 * p);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    c.elems.reserve(4 * K * p);
    for (long long x = 0; x < 2 * K; ++x) {
      long long ct = x % 2 == 0 ? 0 : 2;  // torus label in Z_4
      long long cj = x % 2 == 0 ? 1 : 3;  // j-element label
      for (long long t = 0; t < p; ++t) {
        c.elems.emplace_back(A.torus(x), B.at(mpos(r * ct, 4) + 4 * t));
        c.elems.emplace_back(A.refl(x), B.at(mpos(r * cj, 4) + 4 * t));
      }
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long k = inst.get("k"), p = inst.get("p");
    if (p % 2 != 0) return false;  // the table covers p even
    long long g = std::gcd(2 * k + 1, p);
    switch (d.kind) {
      case kZ:
      case kBD: return std::gcd(g, d.m) == 1;
      case k2T:
      case k2O: return no23(g);
      default: return no235(g);
    }
  }
};

// G(2D_{2(2k+1)}, Z_{2k+1}, 2D_{2(2p+1)}, Z_{2p+1}, phi(r)) x D: always inside
// a splittable group.
class TypeIIIEFamily : public PairFamily {
 public:
  TypeIIIEFamily() : PairFamily("qfinal:e", {"k", "p", "r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (long long r : {1LL, 3LL})
          for (const auto& d : partners) out.push_back(make({k, p, r, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), p = inst.get("p"), r = inst.get("r");
    long long K = 2 * k + 1, P = 2 * p + 1;
    auto A = bd_layout(K);
    auto B = bd_layout(P);
    auto label4 = [](long long x, bool refl) { return refl ? (x % 2 == 0 ? 1 : 3) : (x % 2 == 0 ? 0 : 2); };
    std::array<std::vector<int>, 4> by_label;
    for (long long y = 0; y < 2 * P; ++y) {
      by_label[label4(y, false)].push_back(B.torus(y));
      by_label[label4(y, true)].push_back(B.refl(y));
    }
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    c.elems.reserve(4 * K * P);
    for (long long x = 0; x < 2 * K; ++x) {
      for (int y : by_label[mpos(r * label4(x, false), 4)]) c.elems.emplace_back(A.torus(x), y);
      for (int y : by_label[mpos(r * label4(x, true), 4)]) c.elems.emplace_back(A.refl(x), y);
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(Z_{2(2k+1)}, Z_{2k+1}, 2O, 2T, id) x D.
class TypeIIIFFamily : public PairFamily {
 public:
  TypeIIIFFamily() : PairFamily("qfinal:f", {"k", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (const auto& d : partner_list(b)) out.push_back(make({k, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long K = 2 * inst.get("k") + 1;
    auto A = z_layout(2 * K);
    auto o = build_group(AdeKind::octahedral());
    const auto& labels = octa_labels();
    std::array<std::vector<int>, 2> by_label;
    for (int i = 0; i < o->order(); ++i) by_label[labels[i]].push_back(i);
    PairSubgroup c;
    c.left = A.g;
    c.right = o;
    c.elems.reserve(2 * K * 24);
    for (long long x = 0; x < 2 * K; ++x)
      for (int i : by_label[x % 2]) c.elems.emplace_back(A.at(x), i);
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long K = 2 * inst.get("k") + 1;
    if (K % 3 != 0) return true;  // any D acts freely
    return (d.kind == kZ || d.kind == kBD) && d.m % 3 != 0;
  }
};

// G(Z_{2(2k+1)}, Z_{2k+1}, 2D_{4p}, 2D_{2p}, id) x D: claimed to stay inside
// splittable groups; the oracle disagrees (see expected_discrepancies).
class TypeIIIGFamily : public PairFamily {
 public:
  TypeIIIGFamily() : PairFamily("qfinal:g", {"k", "p", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (const auto& d : partners) out.push_back(make({k, p, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long K = 2 * inst.get("k") + 1, p = inst.get("p");
    auto A = z_layout(2 * K);
    auto B = bd_layout(2 * p);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    c.elems.reserve(2 * K * 4 * p);
    for (long long x = 0; x < 2 * K; ++x)
      for (long long y = 0; y < 4 * p; ++y) {
        if ((y ^ x) & 1) continue;
        c.elems.emplace_back(A.at(x), B.torus(y));
        c.elems.emplace_back(A.at(x), B.refl(y));
      }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// ---------------------------------------------------------------------------
// Final theorem families (remaining quadruples).

// Shared helper: fiber product through quotient isomorphism composed with a
// quotient automorphism.
PairSubgroup quotient_fiber(GroupPtr A, const Subgroup& a0, GroupPtr B, const Subgroup& b0,
                            std::size_t aut_index) {
  auto da = cosets(*A, a0);
  auto db = cosets(*B, b0);
  auto qa = quotient(*A, a0);
  auto qb = quotient(*B, b0);
  auto iso = find_isomorphism(qa.group, qb.group);
  if (!iso) throw Error("quotients are not isomorphic");
  auto auts = all_automorphisms(qb.group);
  const auto& aut = auts.at(aut_index);
  PairSubgroup c;
  c.left = std::move(A);
  c.right = std::move(B);
  for (int x = 0; x < c.left->order(); ++x)
    for (int y : db.members[aut[(*iso)[da.coset_of[x]]]]) c.elems.emplace_back(x, y);
  std::sort(c.elems.begin(), c.elems.end());
  return c;
}

// How many automorphisms a model has, for enumeration.
std::size_t aut_count(const std::string& which) {
  static std::map<std::string, std::size_t> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(which);
  if (it != cache.end()) return it->second;
  std::size_t n = 0;
  if (which == "I")
    n = all_automorphisms(*model_icosa_rotation()).size();
  else if (which == "T")
    n = all_automorphisms(*model_tetra_rotation()).size();
  else if (which == "O")
    n = all_automorphisms(*model_octa_rotation()).size();
  else if (which == "D6")
    n = all_automorphisms(*model_dihedral(3)).size();
  cache[which] = n;
  return n;
}

// G(2I, Z_2, 2I, Z_2, theta) x Z_m.
class Final2IFamily : public PairFamily {
 public:
  Final2IFamily() : PairFamily("qfinal2:2I", {"ti", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    long long n = static_cast<long long>(aut_count("I"));
    for (long long ti = 0; ti < n; ++ti)
      for (const auto& d : partner_list(b)) out.push_back(make({ti, d.kind, d.m}));
    return out;
  }

  static bool aut_is_outer(std::size_t ti) {
    static std::vector<char> outer = [] {
      auto g = build_group(AdeKind::icosahedral());
      auto q = quotient(*g, center_subgroup(*g));
      auto auts = all_automorphisms(q.group);
      std::set<std::vector<int>> inners;
      for (int h = 0; h < q.group.order(); ++h) {
        std::vector<int> perm(q.group.order());
        for (int x = 0; x < q.group.order(); ++x)
          perm[x] = q.group.mul(q.group.mul(h, x), q.group.inv(h));
        inners.insert(std::move(perm));
      }
      std::vector<char> out(auts.size());
      for (std::size_t i = 0; i < auts.size(); ++i) out[i] = inners.count(auts[i]) ? 0 : 1;
      return out;
    }();
    return outer.at(ti);
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    auto g = build_group(AdeKind::icosahedral());
    return quotient_fiber(g, center_subgroup(*g), g, center_subgroup(*g), inst.get("ti"));
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    return aut_is_outer(inst.get("ti")) && d.kind == kZ && d.m % 2 != 0 && d.m % 3 != 0;
  }
};

// G(2D_{6k}, Z_{2k}, 2O, 2D_4, c_g tau_{a,b}) x Z_m with 3 | k.
class FinalBD6kFamily : public PairFamily {
 public:
  FinalBD6kFamily() : PairFamily("qfinal2:BD6k-2O", {"k", "ai", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    long long n = static_cast<long long>(aut_count("D6"));
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long ai = 0; ai < n; ++ai)
        for (const auto& d : partner_list(b)) out.push_back(make({k, ai, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k");
    auto A = build_group(AdeKind::binary_dihedral(3 * k));
    Subgroup a0;
    for (long long u = 0; u < 2 * k; ++u)
      a0.members.push_back(A->index_of(UnitQuaternion::angle(0, Rational(3 * u, 6 * k))));
    std::sort(a0.members.begin(), a0.members.end());
    auto B = build_group(AdeKind::octahedral());
    return quotient_fiber(A, a0, B, q8_subgroup(*B), inst.get("ai"));
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    return inst.get("k") % 3 == 0 && d.kind == kZ && d.m % 2 != 0;
  }
};

// G(2D_{2kl}, Z_{2k}, 2D_{2pl}, Z_{2p}, c_w tau_{a,b}) x Z_m.
class FinalBDklFamily : public PairFamily {
 public:
  FinalBDklFamily() : PairFamily("qfinal2:BDkl-BDpl", {"l", "k", "p", "a", "b", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long l = 3; l <= b.typeIII_klp; ++l)
      for (long long k = 1; k <= b.typeIII_klp; ++k)
        for (long long p = 1; p <= b.typeIII_klp; ++p)
          for (long long a = 1; a < l; ++a) {
            if (std::gcd(a, l) != 1) continue;
            for (long long bb = 0; bb < l; ++bb)
              for (const auto& d : partners) out.push_back(make({l, k, p, a, bb, d.kind, d.m}));
          }
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long l = inst.get("l"), k = inst.get("k"), p = inst.get("p"), a = inst.get("a"),
              b = inst.get("b");
    auto A = bd_layout(k * l);
    auto B = bd_layout(p * l);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    c.elems.reserve(4 * k * l * p);
    for (long long x = 0; x < 2 * k * l; ++x) {
      long long y0 = mpos(a * x, l);
      long long y1 = mpos(a * x + b, l);
      for (long long t = 0; t < 2 * p; ++t) {
        c.elems.emplace_back(A.torus(x), B.torus(y0 + l * t));
        c.elems.emplace_back(A.refl(x), B.refl(y1 + l * t));
      }
    }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance& inst, const Partner& d) const override {
    long long l = inst.get("l"), k = inst.get("k"), p = inst.get("p"), a = inst.get("a");
    if (d.kind != kZ || d.m % 2 == 0) return false;
    long long s = (k * l) / std::gcd(k * l, l * p * k);
    for (long long eps : {1LL, -1LL}) {
      long long mt = gcd3(p - eps * k * a, k * l, l * p * k);
      if (!coprime(mt * s, d.m)) return false;
    }
    return true;
  }
};

// The quadruples whose analysis shows no groups beyond splittable
// containment: quotient-model fibers with every automorphism swept.
class FinalQuotientFamily : public PairFamily {
 public:
  enum Shape { k2T_T, k2O_O, k2O_D6 };

  FinalQuotientFamily(std::string id, Shape shape, std::string model)
      : PairFamily(std::move(id), {"ti", "dk", "dm"}), shape_(shape), model_(std::move(model)) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    long long n = static_cast<long long>(aut_count(model_));
    for (long long ti = 0; ti < n; ++ti)
      for (const auto& d : partner_list(b)) out.push_back(make({ti, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    switch (shape_) {
      case k2T_T: {
        auto g = build_group(AdeKind::tetrahedral());
        return quotient_fiber(g, center_subgroup(*g), g, center_subgroup(*g), inst.get("ti"));
      }
      case k2O_O: {
        auto g = build_group(AdeKind::octahedral());
        return quotient_fiber(g, center_subgroup(*g), g, center_subgroup(*g), inst.get("ti"));
      }
      default: {
        auto g = build_group(AdeKind::octahedral());
        return quotient_fiber(g, q8_subgroup(*g), g, q8_subgroup(*g), inst.get("ti"));
      }
    }
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }

 private:
  Shape shape_;
  std::string model_;
};

// G(2O, 2T, Z_{2k}, Z_k, id) x D with k even (odd k appears, with the factors
// swapped, in the 2O/2T row of the preceding theorem).
class Final2OZ2kFamily : public PairFamily {
 public:
  Final2OZ2kFamily() : PairFamily("qfinal2:2O-Z2k", {"k", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long k = 2; k <= b.typeIII_klp; k += 2)
      for (const auto& d : partner_list(b)) out.push_back(make({k, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k");
    auto o = build_group(AdeKind::octahedral());
    auto z = z_layout(2 * k);
    const auto& labels = octa_labels();
    PairSubgroup c;
    c.left = o;
    c.right = z.g;
    for (int i = 0; i < o->order(); ++i)
      for (long long t = 0; t < k; ++t) c.elems.emplace_back(i, z.at(labels[i] + 2 * t));
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(2D_{4k}, 2D_{2k}, 2O, 2T, id) x D.
class FinalBD4k2OFamily : public PairFamily {
 public:
  FinalBD4k2OFamily() : PairFamily("qfinal2:BD4k-2O", {"k", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (const auto& d : partner_list(b)) out.push_back(make({k, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k");
    auto A = bd_layout(2 * k);
    auto o = build_group(AdeKind::octahedral());
    const auto& labels = octa_labels();
    std::array<std::vector<int>, 2> by_label;
    for (int i = 0; i < o->order(); ++i) by_label[labels[i]].push_back(i);
    PairSubgroup c;
    c.left = A.g;
    c.right = o;
    c.elems.reserve(4 * k * 48);
    for (long long x = 0; x < 4 * k; ++x)
      for (int i : by_label[x % 2]) {
        c.elems.emplace_back(A.torus(x), i);
        c.elems.emplace_back(A.refl(x), i);
      }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(Z_{2k}, Z_k, 2D_{4p}, 2D_{2p}, id) x D with k even (odd k is the swapped
// form of the Z/BD row of the preceding theorem).
class FinalZ2kBD4pFamily : public PairFamily {
 public:
  FinalZ2kBD4pFamily() : PairFamily("qfinal2:Z2k-BD4p", {"k", "p", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 2; k <= b.typeIII_klp; k += 2)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (const auto& d : partners) out.push_back(make({k, p, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), p = inst.get("p");
    auto A = z_layout(2 * k);
    auto B = bd_layout(2 * p);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    for (long long x = 0; x < 2 * k; ++x)
      for (long long y = 0; y < 4 * p; ++y) {
        if ((x ^ y) & 1) continue;
        c.elems.emplace_back(A.at(x), B.torus(y));
        c.elems.emplace_back(A.at(x), B.refl(y));
      }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(2D_{4k}, 2D_{2k}, 2D_{4p}, 2D_{2p}, id) x D.
class FinalBD4kBD4pFamily : public PairFamily {
 public:
  FinalBD4kBD4pFamily() : PairFamily("qfinal2:BD4k-BD4p", {"k", "p", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    auto partners = partner_list(b);
    for (long long k = 1; k <= b.typeIII_klp; ++k)
      for (long long p = 1; p <= b.typeIII_klp; ++p)
        for (const auto& d : partners) out.push_back(make({k, p, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long k = inst.get("k"), p = inst.get("p");
    auto A = bd_layout(2 * k);
    auto B = bd_layout(2 * p);
    PairSubgroup c;
    c.left = A.g;
    c.right = B.g;
    for (long long x = 0; x < 4 * k; ++x)
      for (long long y = 0; y < 4 * p; ++y) {
        if ((x ^ y) & 1) continue;
        c.elems.emplace_back(A.torus(x), B.torus(y));
        c.elems.emplace_back(A.torus(x), B.refl(y));
        c.elems.emplace_back(A.refl(x), B.torus(y));
        c.elems.emplace_back(A.refl(x), B.refl(y));
      }
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(2T, 2D_4, 2T, 2D_4, phi(r)) x D.
class Final2T2TFamily : public PairFamily {
 public:
  Final2T2TFamily() : PairFamily("qfinal2:2T-Z3", {"r", "dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (long long r = 1; r <= 2; ++r)
      for (const auto& d : partner_list(b)) out.push_back(make({r, d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance& inst) const override {
    long long r = inst.get("r");
    auto t = build_group(AdeKind::tetrahedral());
    const auto& labels = tetra_labels();
    std::array<std::vector<int>, 3> by_label;
    for (int i = 0; i < t->order(); ++i) by_label[labels[i]].push_back(i);
    PairSubgroup c;
    c.left = t;
    c.right = t;
    for (int i = 0; i < t->order(); ++i)
      for (int j : by_label[mpos(r * labels[i], 3)]) c.elems.emplace_back(i, j);
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// G(2O, 2T, 2O, 2T, id) x D.
class Final2O2OFamily : public PairFamily {
 public:
  Final2O2OFamily() : PairFamily("qfinal2:2O-2T", {"dk", "dm"}) {}

  std::vector<FamilyInstance> enumerate(const Bounds& b) const override {
    std::vector<FamilyInstance> out;
    for (const auto& d : partner_list(b)) out.push_back(make({d.kind, d.m}));
    return out;
  }

 protected:
  PairSubgroup build_pair(const FamilyInstance&) const override {
    auto o = build_group(AdeKind::octahedral());
    const auto& labels = octa_labels();
    std::array<std::vector<int>, 2> by_label;
    for (int i = 0; i < o->order(); ++i) by_label[labels[i]].push_back(i);
    PairSubgroup c;
    c.left = o;
    c.right = o;
    for (int i = 0; i < o->order(); ++i)
      for (int j : by_label[labels[i]]) c.elems.emplace_back(i, j);
    std::sort(c.elems.begin(), c.elems.end());
    return c;
  }

  bool table_condition(const FamilyInstance&, const Partner&) const override { return false; }
};

// ---------------------------------------------------------------------------
// Registry.

struct Registry {
  std::vector<std::unique_ptr<Family>> owned;
  std::map<std::string, std::vector<const Family*>> by_theorem;
  std::map<std::string, const Family*> by_id;

  template <typename T, typename... Args>
  void add(const std::string& theorem, Args&&... args) {
    owned.push_back(std::make_unique<T>(std::forward<Args>(args)...));
    const Family* f = owned.back().get();
    by_theorem[theorem].push_back(f);
    by_id[f->id()] = f;
  }
};

const Registry& registry() {
  static Registry reg = [] {
    Registry r;
    r.add<SimpleFamily>("simple");
    for (auto& row : splittable_rows()) r.add<SplittableRowFamily>("main", row);
    r.add<TypeIGraphEFamily>("typeB");
    r.add<TypeITauFamily>("typeB");
    r.add<TypeIPowFamily>("typeB");
    r.add<TypeII2TFamily>("type3");
    r.add<TypeIIBD4kFamily>("type3");
    r.add<TypeII2OFamily>("type3");
    r.add<TypeIIBD2kFamily>("type3");
    r.add<TypeIIZklFamily>("type3");
    r.add<TypeIIBDTauFamily>("type3");
    r.add<TypeIIIAFamily>("qfinal");
    r.add<TypeIIIBFamily>("qfinal");
    r.add<TypeIIICFamily>("qfinal");
    r.add<TypeIIIC2Family>("qfinal");
    r.add<TypeIIIDFamily>("qfinal");
    r.add<TypeIIIEFamily>("qfinal");
    r.add<TypeIIIFFamily>("qfinal");
    r.add<TypeIIIGFamily>("qfinal");
    r.add<Final2IFamily>("qfinal2");
    r.add<FinalBD6kFamily>("qfinal2");
    r.add<FinalBDklFamily>("qfinal2");
    r.add<FinalQuotientFamily>("qfinal2", "qfinal2:2O-2D4", FinalQuotientFamily::k2O_D6, "D6");
    r.add<FinalQuotientFamily>("qfinal2", "qfinal2:2T-T", FinalQuotientFamily::k2T_T, "T");
    r.add<FinalQuotientFamily>("qfinal2", "qfinal2:2O-O", FinalQuotientFamily::k2O_O, "O");
    r.add<Final2OZ2kFamily>("qfinal2");
    r.add<FinalBD4k2OFamily>("qfinal2");
    r.add<FinalZ2kBD4pFamily>("qfinal2");
    r.add<FinalBD4kBD4pFamily>("qfinal2");
    r.add<Final2T2TFamily>("qfinal2");
    r.add<Final2O2OFamily>("qfinal2");
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<const Family*>& families_for(const std::string& theorem) {
  auto it = registry().by_theorem.find(theorem);
  if (it == registry().by_theorem.end()) throw DomainError("unknown theorem id: " + theorem);
  return it->second;
}

const Family* family_by_id(const std::string& id) {
  auto it = registry().by_id.find(id);
  return it == registry().by_id.end() ? nullptr : it->second;
}

std::vector<const Family*> all_families() {
  std::vector<const Family*> out;
  for (const auto& f : registry().owned) out.push_back(f.get());
  return out;
}

bool predicate_simple(long long p, long long r, long long s) {
  return simple_system_trivial_only(p, r, s);
}

std::vector<std::string> splittable_row_ids() {
  std::vector<std::string> out;
  for (const auto& row : splittable_rows()) out.push_back(row.id);
  return out;
}

bool predicate_splittable(const std::string& row, const std::vector<long long>& params) {
  for (const auto& spec : splittable_rows())
    if (spec.id == row) {
      std::size_t want = 0;
      for (int k : spec.kinds)
        if (k == kZ || k == kBD) ++want;
      if (params.size() != want) throw DomainError("wrong parameter count for row " + row);
      return spec.cond(params);
    }
  throw DomainError("unknown splittable row: " + row);
}

}  // namespace su2free
