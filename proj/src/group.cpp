#include "su2free/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace su2free {

long long AdeKind::order() const {
  switch (family) {
    case Family::Cyclic: return n;
    case Family::BinaryDihedral: return 4 * n;
    case Family::BinaryTetrahedral: return 24;
    case Family::BinaryOctahedral: return 48;
    case Family::BinaryIcosahedral: return 120;
  }
  return 0;
}

std::string AdeKind::str() const {
  switch (family) {
    case Family::Cyclic: return "Z(" + std::to_string(n) + ")";
    case Family::BinaryDihedral: return "BD(" + std::to_string(n) + ")";
    case Family::BinaryTetrahedral: return "2T";
    case Family::BinaryOctahedral: return "2O";
    case Family::BinaryIcosahedral: return "2I";
  }
  return "?";
}

void FiniteSubgroup::finish_init() {
  size_ = quats_.empty() ? labels_.size() : quats_.size();
  if (quaternionic()) {
    index_.reserve(size_ * 2);
    for (std::size_t i = 0; i < size_; ++i) {
      if (!index_.emplace(quats_[i], static_cast<int>(i)).second)
        throw ValidationError("duplicate element in group");
    }
    re_.reserve(size_);
    re_unified_.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      re_.push_back(qre(quats_[i]));
      re_unified_.push_back(re_.back().unified());
    }
    id_ = -1;
    for (std::size_t i = 0; i < size_; ++i)
      if (quats_[i].is_identity()) id_ = static_cast<int>(i);
    if (id_ < 0) throw ValidationError("group without identity");
    if (labels_.empty()) {
      labels_.reserve(size_);
      for (std::size_t i = 0; i < size_; ++i) labels_.push_back(quats_[i].str());
    }
    inv_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      int v = index_of(qinv(quats_[i]));
      if (v < 0) throw ValidationError("group not closed under inversion");
      inv_[i] = v;
    }
  } else {
    if (table_.size() != size_ * size_) throw ValidationError("bad multiplication table");
    id_ = -1;
    for (std::size_t e = 0; e < size_; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < size_ && ok; ++x)
        ok = table_[e * size_ + x] == static_cast<int>(x) && table_[x * size_ + e] == static_cast<int>(x);
      if (ok) {
        id_ = static_cast<int>(e);
        break;
      }
    }
    if (id_ < 0) throw ValidationError("table group without identity");
    inv_.assign(size_, -1);
    for (std::size_t x = 0; x < size_; ++x) {
      for (std::size_t y = 0; y < size_; ++y)
        if (table_[x * size_ + y] == id_) {
          inv_[x] = static_cast<int>(y);
          break;
        }
      if (inv_[x] < 0) throw ValidationError("table group without inverses");
    }
  }
}

int FiniteSubgroup::mul_direct(int a, int b) const {
  auto it = index_.find(qmul(quats_[a], quats_[b]));
  if (it == index_.end()) throw ValidationError("group is not closed under multiplication");
  return it->second;
}

std::shared_ptr<const std::vector<int>> FiniteSubgroup::build_cayley() const {
  auto table = std::make_shared<std::vector<int>>(size_ * size_);
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      (*table)[a * size_ + b] = mul_direct(static_cast<int>(a), static_cast<int>(b));
  std::shared_ptr<const std::vector<int>> out = table;
  std::atomic_store_explicit(&cayley_, out, std::memory_order_release);
  return out;
}

FiniteSubgroup FiniteSubgroup::from_quats(std::vector<UnitQuaternion> elements, std::string name) {
  std::sort(elements.begin(), elements.end());
  FiniteSubgroup g;
  g.name_ = std::move(name);
  g.quats_ = std::move(elements);
  g.finish_init();
  return g;
}

FiniteSubgroup FiniteSubgroup::from_table(std::vector<std::string> labels, std::vector<int> table,
                                          std::string name) {
  FiniteSubgroup g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.size_ = g.labels_.size();
  g.table_ = std::move(table);
  g.finish_init();
  return g;
}

int FiniteSubgroup::power(int a, long long e) const {
  int ord = element_order(a);
  e %= ord;
  if (e < 0) e += ord;
  int acc = id_;
  for (long long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteSubgroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != id_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<RealPart> FiniteSubgroup::real_part_set() const {
  if (!quaternionic()) throw ValidationError("real parts of an abstract group");
  std::set<RealPart> s(re_unified_.begin(), re_unified_.end());
  return std::vector<RealPart>(s.begin(), s.end());
}

void FiniteSubgroup::verify_closure() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) (void)mul(a, b);  // throws if not closed
}

namespace {

std::vector<UnitQuaternion> binary_tetrahedral_elements() {
  std::vector<UnitQuaternion> els;
  const SurdValue zero(0), one(1), half(Rational(1, 2));
  // 2D_4 = {+-1, +-i, +-j, +-k}
  for (int s = 0; s < 2; ++s) {
    SurdValue c = s ? SurdValue(-1) : one;
    els.push_back(UnitQuaternion::surd(c, zero, zero, zero));
    els.push_back(UnitQuaternion::surd(zero, c, zero, zero));
    els.push_back(UnitQuaternion::surd(zero, zero, c, zero));
    els.push_back(UnitQuaternion::surd(zero, zero, zero, c));
  }
  // (+-1 +- i +- j +- k) / 2
  for (int m = 0; m < 16; ++m) {
    auto pick = [&](int bit) { return (m >> bit) & 1 ? -half : half; };
    els.push_back(UnitQuaternion::surd(pick(0), pick(1), pick(2), pick(3)));
  }
  return els;
}

std::vector<UnitQuaternion> coset_times(const UnitQuaternion& q,
                                        const std::vector<UnitQuaternion>& set) {
  std::vector<UnitQuaternion> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(qmul(q, x));
  return out;
}

struct KindKey {
  int fam;
  long long n;
  bool operator<(const KindKey& o) const { return fam != o.fam ? fam < o.fam : n < o.n; }
};

}  // namespace

GroupPtr build_group(const AdeKind& kind) {
  static std::map<KindKey, GroupPtr> cache;
  static std::mutex mu;
  KindKey key{static_cast<int>(kind.family), kind.n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  FiniteSubgroup g;
  using F = AdeKind::Family;
  switch (kind.family) {
    case F::Cyclic: {
      if (kind.n < 1) throw DomainError("cyclic parameter must be >= 1");
      std::vector<UnitQuaternion> els;
      for (long long x = 0; x < kind.n; ++x)
        els.push_back(UnitQuaternion::angle(0, Rational(x, kind.n)));
      g = FiniteSubgroup::from_quats(std::move(els), kind.str());
      g.kind_ = kind;
      g.gen_t_ = g.index_of(UnitQuaternion::angle(0, Rational(1 % kind.n, kind.n)));
      break;
    }
    case F::BinaryDihedral: {
      if (kind.n < 2) throw DomainError("binary dihedral parameter must be >= 2");
      std::vector<UnitQuaternion> els;
      for (long long x = 0; x < 2 * kind.n; ++x) {
        els.push_back(UnitQuaternion::angle(0, Rational(x, 2 * kind.n)));
        els.push_back(UnitQuaternion::angle(1, Rational(x, 2 * kind.n)));
      }
      g = FiniteSubgroup::from_quats(std::move(els), kind.str());
      g.kind_ = kind;
      // presentation s = j e^{i pi/n}, t = e^{i pi/n}
      g.gen_t_ = g.index_of(UnitQuaternion::angle(0, Rational(1, 2 * kind.n)));
      g.gen_s_ = g.index_of(UnitQuaternion::angle(1, Rational(1, 2 * kind.n)));
      break;
    }
    case F::BinaryTetrahedral: {
      g = FiniteSubgroup::from_quats(binary_tetrahedral_elements(), kind.str());
      g.kind_ = kind;
      break;
    }
    case F::BinaryOctahedral: {
      auto base = binary_tetrahedral_elements();
      const SurdValue h2(0, Rational(1, 2), 0, 0);  // sqrt2/2
      UnitQuaternion e8 = UnitQuaternion::surd(h2, h2, 0, 0);
      auto extra = coset_times(e8, base);
      base.insert(base.end(), extra.begin(), extra.end());
      g = FiniteSubgroup::from_quats(std::move(base), kind.str());
      g.kind_ = kind;
      break;
    }
    case F::BinaryIcosahedral: {
      auto base = binary_tetrahedral_elements();
      const Rational q4(1, 4);
      // q = (phi + phi^{-1} i + j) / 2
      UnitQuaternion q = UnitQuaternion::surd(SurdValue(q4, 0, q4, 0),
                                              SurdValue(-q4, 0, q4, 0), SurdValue(Rational(1, 2)),
                                              SurdValue(0));
      std::vector<UnitQuaternion> els = base;
      auto cos = base;
      for (int a = 1; a <= 4; ++a) {
        cos = coset_times(q, cos);
        els.insert(els.end(), cos.begin(), cos.end());
      }
      g = FiniteSubgroup::from_quats(std::move(els), kind.str());
      g.kind_ = kind;
      break;
    }
  }
  auto ptr = std::make_shared<const FiniteSubgroup>(std::move(g));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, ptr);
  return it->second;
}

GroupPtr model_dihedral(long long l) {
  static std::map<long long, GroupPtr> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
  }
  if (l < 1) throw DomainError("dihedral parameter must be >= 1");
  const int n = static_cast<int>(2 * l);
  std::vector<std::string> labels(n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int refl, long long p) { return static_cast<int>(refl * l + ((p % l + l) % l)); };
  for (long long p = 0; p < l; ++p) {
    labels[idx(0, p)] = "y^" + std::to_string(p);
    labels[idx(1, p)] = "x*y^" + std::to_string(p);
  }
  for (int r1 = 0; r1 < 2; ++r1)
    for (long long p = 0; p < l; ++p)
      for (int r2 = 0; r2 < 2; ++r2)
        for (long long q = 0; q < l; ++q) {
          // y^p * y^q = y^{p+q}; y^p * x y^q = x y^{q-p};
          // x y^p * y^q = x y^{p+q}; x y^p * x y^q = y^{q-p}
          int a = idx(r1, p), b = idx(r2, q);
          long long e = r2 ? q - p : p + q;
          table[static_cast<std::size_t>(a) * n + b] = idx(r1 ^ r2, e);
        }
  auto g = FiniteSubgroup::from_table(std::move(labels), std::move(table),
                                      "D(" + std::to_string(l) + ")");
  g.gen_t_ = idx(0, 1 % l);
  g.gen_s_ = idx(1, 0);
  auto ptr = std::make_shared<const FiniteSubgroup>(std::move(g));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(l, ptr);
  return it->second;
}

namespace {
GroupPtr central_quotient(const AdeKind& kind, const std::string& name) {
  auto g = build_group(kind);
  int minus_one = g->index_of(UnitQuaternion::surd(-1, 0, 0, 0));
  Subgroup center{{std::min(g->id(), minus_one), std::max(g->id(), minus_one)}};
  auto q = quotient(*g, center);
  std::vector<std::string> labels;
  for (int i = 0; i < q.group.order(); ++i) labels.push_back(q.group.label(i));
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(q.group.order()) * q.group.order());
  for (int a = 0; a < q.group.order(); ++a)
    for (int b = 0; b < q.group.order(); ++b) table.push_back(q.group.mul(a, b));
  return std::make_shared<const FiniteSubgroup>(
      FiniteSubgroup::from_table(std::move(labels), std::move(table), name));
}
}  // namespace

GroupPtr model_tetra_rotation() {
  static GroupPtr p = central_quotient(AdeKind::tetrahedral(), "T");
  return p;
}
GroupPtr model_octa_rotation() {
  static GroupPtr p = central_quotient(AdeKind::octahedral(), "O");
  return p;
}
GroupPtr model_icosa_rotation() {
  static GroupPtr p = central_quotient(AdeKind::icosahedral(), "I");
  return p;
}

Subgroup trivial_subgroup(const FiniteSubgroup& g) { return Subgroup{{g.id()}}; }

Subgroup full_subgroup(const FiniteSubgroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.members[i] = i;
  return s;
}

Subgroup closure_of(const FiniteSubgroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> work{g.id()};
  in[g.id()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (int x : gens) {
      int y = g.mul(work[i], x);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
      y = g.mul(x, work[i]);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  std::sort(work.begin(), work.end());
  return Subgroup{std::move(work)};
}

bool is_subgroup(const FiniteSubgroup& g, const Subgroup& s) {
  std::vector<char> in(g.order(), 0);
  for (int x : s.members) in[x] = 1;
  if (!in[g.id()]) return false;
  for (int a : s.members)
    for (int b : s.members)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteSubgroup& g, const Subgroup& s) {
  std::vector<char> in(g.order(), 0);
  for (int x : s.members) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (int x : s.members)
      if (!in[g.mul(g.mul(a, x), g.inv(a))]) return false;
  return true;
}

std::vector<int> class_index_of(const FiniteSubgroup& g) {
  std::vector<int> cls(g.order(), -1);
  int next = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (cls[i] >= 0) continue;
    for (int a = 0; a < g.order(); ++a) {
      int y = g.mul(g.mul(a, i), g.inv(a));
      cls[y] = next;
    }
    ++next;
  }
  return cls;
}

std::vector<ConjClass> conjugacy_classes(const FiniteSubgroup& g) {
  auto cls = class_index_of(g);
  int count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<ConjClass> out(count, ConjClass{-1, 0});
  for (int i = 0; i < g.order(); ++i) {
    auto& c = out[cls[i]];
    if (c.rep < 0) c.rep = i;
    ++c.size;
  }
  return out;
}

std::vector<NormalSubgroup> normal_subgroups(const FiniteSubgroup& g) {
  auto cls = class_index_of(g);
  int count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<int>> class_members(count);
  for (int i = 0; i < g.order(); ++i) class_members[cls[i]].push_back(i);

  std::set<std::vector<int>> normals;
  normals.insert(trivial_subgroup(g).members);
  // Normal closures of single classes, then close under join.
  for (int c = 0; c < count; ++c)
    normals.insert(closure_of(g, class_members[c]).members);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(normals.begin(), normals.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> both = cur[i];
        both.insert(both.end(), cur[j].begin(), cur[j].end());
        auto joined = closure_of(g, both).members;
        if (normals.insert(joined).second) grew = true;
      }
  }

  std::vector<NormalSubgroup> out;
  for (const auto& members : normals) {
    Subgroup s{members};
    auto q = quotient(g, s);
    out.push_back(NormalSubgroup{std::move(s), identify_group(q.group)});
  }
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.sub.members.size() != b.sub.members.size())
      return a.sub.members.size() < b.sub.members.size();
    return a.sub.members < b.sub.members;
  });
  return out;
}

CosetDecomposition cosets(const FiniteSubgroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) throw ValidationError("coset decomposition of a non-subgroup");
  if (!is_normal(g, n)) throw ValidationError("coset decomposition of a non-normal subgroup");
  CosetDecomposition dec;
  dec.coset_of.assign(g.order(), -1);
  std::vector<int> reps;
  for (int i = 0; i < g.order(); ++i) {
    if (dec.coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    int best = i;
    std::vector<int> members;
    for (int x : n.members) {
      int y = g.mul(i, x);
      dec.coset_of[y] = c;
      members.push_back(y);
      if (g.quaternionic() ? g.quat(y) < g.quat(best) : y < best) best = y;
    }
    std::sort(members.begin(), members.end());
    reps.push_back(best);
    dec.members.push_back(std::move(members));
  }
  // Order cosets deterministically by representative index (identity coset
  // comes wherever its rep falls; callers use ids consistently).
  std::vector<int> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return reps[a] < reps[b]; });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  CosetDecomposition out;
  out.coset_of.resize(g.order());
  out.rep.resize(reps.size());
  out.members.resize(reps.size());
  for (int i = 0; i < g.order(); ++i) out.coset_of[i] = rank[dec.coset_of[i]];
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.rep[rank[i]] = reps[i];
    out.members[rank[i]] = std::move(dec.members[i]);
  }
  return out;
}

QuotientResult quotient(const FiniteSubgroup& g, const Subgroup& n) {
  auto dec = cosets(g, n);
  int m = dec.count();
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) labels[c] = "[" + g.label(dec.rep[c]) + "]";
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] = dec.coset_of[g.mul(dec.rep[a], dec.rep[b])];
  QuotientResult res{FiniteSubgroup::from_table(std::move(labels), std::move(table),
                                                g.name() + "/N" + std::to_string(n.order())),
                     dec.coset_of};
  // The images of presentation generators still present a quotient: every
  // coset is [t]^p or [s][t]^p.
  if (g.gen_t() >= 0)
    res.group.set_presentation(dec.coset_of[g.gen_t()],
                               g.gen_s() >= 0 ? dec.coset_of[g.gen_s()] : -1);
  return res;
}

FiniteSubgroup restrict_to(const FiniteSubgroup& g, const Subgroup& s, std::string name) {
  if (!g.quaternionic()) throw ValidationError("restriction needs a quaternionic group");
  std::vector<UnitQuaternion> els;
  els.reserve(s.members.size());
  for (int i : s.members) els.push_back(g.quat(i));
  return FiniteSubgroup::from_quats(std::move(els), std::move(name));
}

namespace {

// Greedy minimal generating sequence (by element index).
std::vector<int> generating_sequence(const FiniteSubgroup& g) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < g.order()) {
    std::vector<char> in(g.order(), 0);
    for (int x : cur.members) in[x] = 1;
    int pick = -1;
    for (int i = 0; i < g.order(); ++i)
      if (!in[i]) {
        pick = i;
        break;
      }
    gens.push_back(pick);
    auto with = cur.members;
    with.push_back(pick);
    cur = closure_of(g, with);
  }
  return gens;
}

// Extends generator images to a full map; empty result when inconsistent.
std::vector<int> try_extend(const FiniteSubgroup& from, const FiniteSubgroup& to,
                            const std::vector<int>& gens, const std::vector<int>& imgs) {
  std::vector<int> img(from.order(), -1);
  img[from.id()] = to.id();
  std::vector<int> work{from.id()};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (img[gens[k]] == -1) {
      img[gens[k]] = imgs[k];
      work.push_back(gens[k]);
    } else if (img[gens[k]] != imgs[k]) {
      return {};
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int x = from.mul(work[i], gens[k]);
      int y = to.mul(img[work[i]], imgs[k]);
      if (img[x] == -1) {
        img[x] = y;
        work.push_back(x);
      } else if (img[x] != y) {
        return {};
      }
    }
  }
  if (work.size() != static_cast<std::size_t>(from.order())) return {};
  // Verify multiplicativity and bijectivity.
  std::vector<char> hit(to.order(), 0);
  for (int i = 0; i < from.order(); ++i) {
    if (hit[img[i]]) return {};
    hit[img[i]] = 1;
  }
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (img[from.mul(a, b)] != to.mul(img[a], img[b])) return {};
  return img;
}

bool search_iso(const FiniteSubgroup& from, const FiniteSubgroup& to, const std::vector<int>& gens,
                std::vector<int>& imgs, std::size_t k, const std::vector<std::vector<int>>& cand,
                std::vector<std::vector<int>>* collect, std::vector<int>* found) {
  if (k == gens.size()) {
    auto img = try_extend(from, to, gens, imgs);
    if (img.empty()) return false;
    if (collect) {
      collect->push_back(img);
      return false;  // keep searching
    }
    *found = img;
    return true;
  }
  for (int c : cand[k]) {
    imgs[k] = c;
    if (search_iso(from, to, gens, imgs, k + 1, cand, collect, found)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSubgroup& from,
                                                 const FiniteSubgroup& to) {
  if (from.order() != to.order()) return std::nullopt;
  std::vector<int> ord_to(to.order());
  for (int i = 0; i < to.order(); ++i) ord_to[i] = to.element_order(i);
  {
    std::multiset<int> a, b(ord_to.begin(), ord_to.end());
    for (int i = 0; i < from.order(); ++i) a.insert(from.element_order(i));
    if (a != b) return std::nullopt;
  }
  auto gens = generating_sequence(from);
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int o = from.element_order(gens[k]);
    for (int i = 0; i < to.order(); ++i)
      if (ord_to[i] == o) cand[k].push_back(i);
  }
  std::vector<int> imgs(gens.size(), -1), found;
  if (search_iso(from, to, gens, imgs, 0, cand, nullptr, &found)) return found;
  return std::nullopt;
}

std::vector<std::vector<int>> all_automorphisms(const FiniteSubgroup& g) {
  auto gens = generating_sequence(g);
  std::vector<int> ord(g.order());
  for (int i = 0; i < g.order(); ++i) ord[i] = g.element_order(i);
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < g.order(); ++i)
      if (ord[i] == ord[gens[k]]) cand[k].push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> imgs(gens.size(), -1), found;
  search_iso(g, g, gens, imgs, 0, cand, &out, &found);
  return out;
}

std::string identify_group(const FiniteSubgroup& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    if (g.element_order(i) == n) return "Z(" + std::to_string(n) + ")";
  if (n % 2 == 0 && n >= 4) {
    if (find_isomorphism(g, *model_dihedral(n / 2))) return "D(" + std::to_string(n / 2) + ")";
  }
  if (n == 12 && find_isomorphism(g, *model_tetra_rotation())) return "T";
  if (n == 24 && find_isomorphism(g, *model_octa_rotation())) return "O";
  if (n == 60 && find_isomorphism(g, *model_icosa_rotation())) return "I";
  if (n % 4 == 0 && n >= 8) {
    if (find_isomorphism(g, *build_group(AdeKind::binary_dihedral(n / 4))))
      return "BD(" + std::to_string(n / 4) + ")";
  }
  if (n == 24 && find_isomorphism(g, *build_group(AdeKind::tetrahedral()))) return "2T";
  if (n == 48 && find_isomorphism(g, *build_group(AdeKind::octahedral()))) return "2O";
  if (n == 120 && find_isomorphism(g, *build_group(AdeKind::icosahedral()))) return "2I";
  return "G" + std::to_string(n);
}

}  // namespace su2free
