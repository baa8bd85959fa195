#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "su2free/quaternion.hpp"

namespace su2free {

// The finite subgroups of SU(2) up to conjugacy.
struct AdeKind {
  enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

  Family family = Family::Cyclic;
  long long n = 1;  // parameter for Cyclic (order n) and BinaryDihedral (order 4n)

  static AdeKind cyclic(long long n) { return {Family::Cyclic, n}; }
  static AdeKind binary_dihedral(long long n) { return {Family::BinaryDihedral, n}; }
  static AdeKind tetrahedral() { return {Family::BinaryTetrahedral, 0}; }
  static AdeKind octahedral() { return {Family::BinaryOctahedral, 0}; }
  static AdeKind icosahedral() { return {Family::BinaryIcosahedral, 0}; }

  long long order() const;
  std::string str() const;

  friend bool operator==(const AdeKind&, const AdeKind&) = default;
};

// A finite group given either by an explicit list of unit quaternions (an
// actual subgroup of SU(2)) or by a multiplication table with labels
// (quotients and abstract comparison models).
class FiniteSubgroup {
 public:
  int order() const { return static_cast<int>(size_); }
  bool quaternionic() const { return !quats_.empty(); }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
    if (size_ <= kCayleyLimit) {
      auto t = std::atomic_load_explicit(&cayley_, std::memory_order_acquire);
      if (!t) t = build_cayley();
      return (*t)[static_cast<std::size_t>(a) * size_ + b];
    }
    return mul_direct(a, b);
  }
  int inv(int a) const { return inv_[a]; }
  int id() const { return id_; }
  int power(int a, long long e) const;
  int element_order(int a) const;

  const UnitQuaternion& quat(int i) const { return quats_[i]; }
  int index_of(const UnitQuaternion& q) const {
    auto it = index_.find(q);
    return it == index_.end() ? -1 : it->second;
  }
  const RealPart& re(int i) const { return re_[i]; }
  const RealPart& re_unified(int i) const { return re_unified_[i]; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::string& name() const { return name_; }

  const std::optional<AdeKind>& ade_kind() const { return kind_; }
  // Presentation generators for affine automorphisms: every element is
  // t^p or s*t^p.  Set for binary dihedral groups, dihedral models, and
  // inherited by their quotients.
  int gen_t() const { return gen_t_; }
  int gen_s() const { return gen_s_; }
  void set_presentation(int t, int s) {
    gen_t_ = t;
    gen_s_ = s;
  }

  // Deduplicated canonical real parts, sorted structurally.
  std::vector<RealPart> real_part_set() const;

  void verify_closure() const;  // throws ValidationError

  static FiniteSubgroup from_quats(std::vector<UnitQuaternion> elements, std::string name);
  static FiniteSubgroup from_table(std::vector<std::string> labels, std::vector<int> table,
                                   std::string name);

 private:
  friend std::shared_ptr<const FiniteSubgroup> build_group(const AdeKind&);
  friend std::shared_ptr<const FiniteSubgroup> model_dihedral(long long l);

  static constexpr std::size_t kCayleyLimit = 1024;

  void finish_init();
  int mul_direct(int a, int b) const;
  std::shared_ptr<const std::vector<int>> build_cayley() const;

  std::string name_;
  std::size_t size_ = 0;
  std::vector<UnitQuaternion> quats_;
  std::vector<std::string> labels_;
  std::vector<int> table_;  // row-major, abstract groups only
  mutable std::shared_ptr<const std::vector<int>> cayley_;  // lazy, quaternionic groups
  std::unordered_map<UnitQuaternion, int, QuatHash> index_;
  std::vector<RealPart> re_, re_unified_;
  std::vector<int> inv_;
  int id_ = 0;
  std::optional<AdeKind> kind_;
  int gen_t_ = -1, gen_s_ = -1;
};

using GroupPtr = std::shared_ptr<const FiniteSubgroup>;

// Memoized construction of the ADE groups in their exact element form:
// cyclic and binary dihedral in angle form, the three exceptional groups in
// surd form.
GroupPtr build_group(const AdeKind& kind);

// Abstract comparison models: the dihedral group D_{2l} of order 2l, and the
// rotation groups T, O, I realized as central quotients of 2T, 2O, 2I.
GroupPtr model_dihedral(long long l);
GroupPtr model_tetra_rotation();
GroupPtr model_octa_rotation();
GroupPtr model_icosa_rotation();

// A subgroup as a sorted list of element indices of its parent.
struct Subgroup {
  std::vector<int> members;
  int order() const { return static_cast<int>(members.size()); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup trivial_subgroup(const FiniteSubgroup& g);
Subgroup full_subgroup(const FiniteSubgroup& g);
Subgroup closure_of(const FiniteSubgroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteSubgroup& g, const Subgroup& s);
bool is_normal(const FiniteSubgroup& g, const Subgroup& s);

// All normal subgroups (including trivial and full), each annotated with the
// isomorphism type of its quotient.  Exhaustive: normal closures of the
// conjugacy classes, closed under join.
struct NormalSubgroup {
  Subgroup sub;
  std::string quotient_name;
};
std::vector<NormalSubgroup> normal_subgroups(const FiniteSubgroup& g);

// Coset decomposition modulo a normal subgroup, with canonical (structurally
// smallest) representatives; cosets are ordered by representative.
struct CosetDecomposition {
  std::vector<int> coset_of;  // element -> coset id
  std::vector<int> rep;       // coset id -> element
  std::vector<std::vector<int>> members;
  int count() const { return static_cast<int>(rep.size()); }
};
CosetDecomposition cosets(const FiniteSubgroup& g, const Subgroup& n);

struct QuotientResult {
  FiniteSubgroup group;
  std::vector<int> proj;  // element of g -> element of quotient
};
QuotientResult quotient(const FiniteSubgroup& g, const Subgroup& n);

FiniteSubgroup restrict_to(const FiniteSubgroup& g, const Subgroup& s, std::string name);

struct ConjClass {
  int rep;   // smallest element index in the class
  int size;
};
std::vector<ConjClass> conjugacy_classes(const FiniteSubgroup& g);
std::vector<int> class_index_of(const FiniteSubgroup& g);

// Explicit isomorphism (element map) or nullopt.  Deterministic.
std::optional<std::vector<int>> find_isomorphism(const FiniteSubgroup& from,
                                                 const FiniteSubgroup& to);

// Every automorphism as an element permutation (small groups only).
std::vector<std::vector<int>> all_automorphisms(const FiniteSubgroup& g);

// Recognize a group against the named models used by the subgroup/quotient
// tables: "Z(n)", "D(l)" (order 2l), "BD(n)" (order 4n), "T", "O", "I",
// "2T", "2O", "2I"; otherwise "G<order>".
std::string identify_group(const FiniteSubgroup& g);

}  // namespace su2free
