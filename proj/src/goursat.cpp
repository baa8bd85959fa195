#include "su2free/goursat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace su2free {

namespace {

// theta as a coset-id map, validated as an isomorphism of the quotients.
std::vector<int> theta_coset_map(const GoursatQuintuple& q, const CosetDecomposition& da,
                                 const CosetDecomposition& db) {
  if (da.count() != db.count()) throw ValidationError("theta between quotients of different order");
  std::vector<int> map(da.count(), -1);
  for (auto [a, b] : q.theta) {
    int ca = da.coset_of[a], cb = db.coset_of[b];
    if (map[ca] != -1 && map[ca] != cb) throw ValidationError("theta is not well-defined");
    map[ca] = cb;
  }
  std::vector<char> hit(db.count(), 0);
  for (int c = 0; c < da.count(); ++c) {
    if (map[c] < 0) throw ValidationError("theta does not cover every coset");
    if (hit[map[c]]) throw ValidationError("theta is not injective");
    hit[map[c]] = 1;
  }
  const FiniteSubgroup& A = *q.A;
  const FiniteSubgroup& B = *q.B;
  for (int c1 = 0; c1 < da.count(); ++c1)
    for (int c2 = 0; c2 < da.count(); ++c2) {
      int prod = da.coset_of[A.mul(da.rep[c1], da.rep[c2])];
      int img = db.coset_of[B.mul(db.rep[map[c1]], db.rep[map[c2]])];
      if (map[prod] != img) throw ValidationError("theta is not a homomorphism");
    }
  return map;
}

}  // namespace

std::string GoursatQuintuple::str() const {
  return "{A=" + A->name() + ", |A0|=" + std::to_string(A0.order()) + ", B=" + B->name() +
         ", |B0|=" + std::to_string(B0.order()) + "}";
}

int PairSubgroup::mul_index(int i, int j) const {
  std::pair<int, int> p{left->mul(elems[i].first, elems[j].first),
                        right->mul(elems[i].second, elems[j].second)};
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || *it != p) return -1;
  return static_cast<int>(it - elems.begin());
}

void PairSubgroup::verify_closed() const {
  std::pair<int, int> id{left->id(), right->id()};
  if (!std::binary_search(elems.begin(), elems.end(), id))
    throw ValidationError("pair subgroup does not contain the identity");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::pair<int, int> inv{left->inv(elems[i].first), right->inv(elems[i].second)};
    if (!std::binary_search(elems.begin(), elems.end(), inv))
      throw ValidationError("pair subgroup is not closed under inversion");
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (mul_index(static_cast<int>(i), static_cast<int>(j)) < 0)
        throw ValidationError("pair subgroup is not closed under multiplication");
  }
}

bool operator==(const PairSubgroup& a, const PairSubgroup& b) {
  if (a.elems.size() != b.elems.size()) return false;
  // Same ambient objects: direct comparison; otherwise compare quaternions.
  if (a.left == b.left && a.right == b.right) return a.elems == b.elems;
  std::set<std::pair<UnitQuaternion, UnitQuaternion>> sa, sb;
  for (auto [x, y] : a.elems) sa.emplace(a.left->quat(x), a.right->quat(y));
  for (auto [x, y] : b.elems) sb.emplace(b.left->quat(x), b.right->quat(y));
  return sa == sb;
}

PairSubgroup build_goursat(const GoursatQuintuple& q) {
  auto da = cosets(*q.A, q.A0);
  auto db = cosets(*q.B, q.B0);
  auto map = theta_coset_map(q, da, db);
  PairSubgroup c;
  c.left = q.A;
  c.right = q.B;
  c.elems.reserve(static_cast<std::size_t>(q.A->order()) * q.B0.order());
  for (int a = 0; a < q.A->order(); ++a)
    for (int b : db.members[map[da.coset_of[a]]]) c.elems.emplace_back(a, b);
  std::sort(c.elems.begin(), c.elems.end());
  return c;
}

GoursatQuintuple decompose(const PairSubgroup& c) {
  if (c.elems.empty()) throw ValidationError("decompose of an empty pair set");
  std::set<int> firsts, seconds;
  std::vector<int> a0, b0;
  std::map<int, int> theta_by_first;  // first -> some second
  for (auto [x, y] : c.elems) {
    firsts.insert(x);
    seconds.insert(y);
    if (y == c.right->id()) a0.push_back(x);
    if (x == c.left->id()) b0.push_back(y);
    theta_by_first.emplace(x, y);
  }
  GoursatQuintuple q;
  Subgroup sa{std::vector<int>(firsts.begin(), firsts.end())};
  Subgroup sb{std::vector<int>(seconds.begin(), seconds.end())};
  auto A = std::make_shared<FiniteSubgroup>(restrict_to(*c.left, sa, "pi1"));
  auto B = std::make_shared<FiniteSubgroup>(restrict_to(*c.right, sb, "pi2"));
  auto reindex = [](const FiniteSubgroup& parent, const FiniteSubgroup& sub,
                    const std::vector<int>& members) {
    Subgroup out;
    for (int m : members) out.members.push_back(sub.index_of(parent.quat(m)));
    std::sort(out.members.begin(), out.members.end());
    return out;
  };
  q.A = A;
  q.B = B;
  q.A0 = reindex(*c.left, *A, a0);
  q.B0 = reindex(*c.right, *B, b0);
  if (!is_subgroup(*A, q.A0) || !is_normal(*A, q.A0))
    throw ValidationError("kernel is not a normal subgroup (input not a subgroup?)");
  if (!is_subgroup(*B, q.B0) || !is_normal(*B, q.B0))
    throw ValidationError("kernel is not a normal subgroup (input not a subgroup?)");
  auto da = cosets(*A, q.A0);
  for (int coset = 0; coset < da.count(); ++coset) {
    int rep = da.rep[coset];
    int parent_rep = c.left->index_of(A->quat(rep));
    auto it = theta_by_first.find(parent_rep);
    if (it == theta_by_first.end()) throw ValidationError("projection is incomplete");
    q.theta.emplace_back(rep, B->index_of(c.right->quat(it->second)));
  }
  // Validate before returning.
  auto db = cosets(*B, q.B0);
  theta_coset_map(q, da, db);
  return q;
}

PairSubgroup graph_of(const AutomorphismSpec& f, const GroupPtr& g) {
  auto img = apply_automorphism(f, *g);
  PairSubgroup c;
  c.left = g;
  c.right = g;
  c.elems.reserve(g->order());
  for (int i = 0; i < g->order(); ++i) c.elems.emplace_back(i, img[i]);
  std::sort(c.elems.begin(), c.elems.end());
  return c;
}

namespace {

std::set<UnitQuaternion> quat_set(const FiniteSubgroup& g, const Subgroup& s) {
  std::set<UnitQuaternion> out;
  for (int i : s.members) out.insert(g.quat(i));
  return out;
}

std::set<UnitQuaternion> quat_set_mapped(const FiniteSubgroup& g, const Subgroup& s,
                                         const std::vector<int>& img) {
  std::set<UnitQuaternion> out;
  for (int i : s.members) out.insert(g.quat(img[i]));
  return out;
}

}  // namespace

bool quintuple_data_equal(const GoursatQuintuple& q1, const GoursatQuintuple& q2,
                          const AutomorphismSpec* f1, const AutomorphismSpec* f2) {
  std::vector<int> m1(q2.A->order()), m2(q2.B->order());
  for (int i = 0; i < q2.A->order(); ++i) m1[i] = i;
  for (int i = 0; i < q2.B->order(); ++i) m2[i] = i;
  if (f1) m1 = apply_automorphism(*f1, *q2.A);
  if (f2) m2 = apply_automorphism(*f2, *q2.B);

  if (quat_set(*q1.A, full_subgroup(*q1.A)) != quat_set_mapped(*q2.A, full_subgroup(*q2.A), m1))
    return false;
  if (quat_set(*q1.B, full_subgroup(*q1.B)) != quat_set_mapped(*q2.B, full_subgroup(*q2.B), m2))
    return false;
  if (quat_set(*q1.A, q1.A0) != quat_set_mapped(*q2.A, q2.A0, m1)) return false;
  if (quat_set(*q1.B, q1.B0) != quat_set_mapped(*q2.B, q2.B0, m2)) return false;

  // theta1([f1 a]) must equal [f2 theta2(a)] for every A-coset of q2.
  auto da1 = cosets(*q1.A, q1.A0);
  auto db1 = cosets(*q1.B, q1.B0);
  auto map1 = theta_coset_map(q1, da1, db1);
  for (auto [a2, b2] : q2.theta) {
    int a1 = q1.A->index_of(q2.A->quat(m1[a2]));
    int b1 = q1.B->index_of(q2.B->quat(m2[b2]));
    if (a1 < 0 || b1 < 0) return false;
    if (map1[da1.coset_of[a1]] != db1.coset_of[b1]) return false;
  }
  return true;
}

GoursatQuintuple make_quintuple_images(GroupPtr A, Subgroup A0, GroupPtr B, Subgroup B0,
                                       const std::vector<std::pair<int, int>>& images) {
  GoursatQuintuple q{std::move(A), std::move(B), std::move(A0), std::move(B0), {}};
  auto da = cosets(*q.A, q.A0);
  auto db = cosets(*q.B, q.B0);
  if (da.count() != db.count())
    throw ValidationError("quotients have different orders; no isomorphism possible");
  // Interpret the images as generator images at the coset level and extend.
  auto qa = quotient(*q.A, q.A0);
  auto qb = quotient(*q.B, q.B0);
  std::vector<std::pair<int, int>> coset_images;
  for (auto [a, b] : images) coset_images.emplace_back(da.coset_of[a], db.coset_of[b]);
  // Extend across the quotient via a one-sided BFS (images live in qb).
  std::vector<int> map(da.count(), -1);
  map[da.coset_of[q.A->id()]] = db.coset_of[q.B->id()];
  std::vector<int> work{da.coset_of[q.A->id()]};
  for (auto [ca, cb] : coset_images) {
    if (map[ca] == -1) {
      map[ca] = cb;
      work.push_back(ca);
    } else if (map[ca] != cb) {
      throw ValidationError("conflicting theta images");
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (auto [ca, cb] : coset_images) {
      int x = qa.group.mul(work[i], ca);
      int y = qb.group.mul(map[work[i]], cb);
      if (map[x] == -1) {
        map[x] = y;
        work.push_back(x);
      } else if (map[x] != y) {
        throw ValidationError("theta images are not a homomorphism");
      }
    }
  if (work.size() != static_cast<std::size_t>(da.count()))
    throw ValidationError("theta images do not generate the quotient");
  for (int c = 0; c < da.count(); ++c) q.theta.emplace_back(da.rep[c], db.rep[map[c]]);
  theta_coset_map(q, da, db);  // final validation
  return q;
}

GoursatQuintuple make_quintuple(GroupPtr A, Subgroup A0, GroupPtr B, Subgroup B0,
                                const AutomorphismSpec& f_on_model) {
  auto qa = quotient(*A, A0);
  auto qb = quotient(*B, B0);
  auto iso = find_isomorphism(qa.group, qb.group);
  if (!iso) throw ValidationError("quotients are not isomorphic");
  auto f = apply_automorphism(f_on_model, qb.group);
  auto da = cosets(*A, A0);
  auto db = cosets(*B, B0);
  GoursatQuintuple q{std::move(A), std::move(B), std::move(A0), std::move(B0), {}};
  for (int c = 0; c < da.count(); ++c) q.theta.emplace_back(da.rep[c], db.rep[f[(*iso)[c]]]);
  theta_coset_map(q, da, db);
  return q;
}

}  // namespace su2free
