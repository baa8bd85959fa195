#pragma once

#include <array>

#include "su2free/goursat.hpp"

namespace su2free {

inline constexpr long long kDefaultBudget = 10'000'000;

// Explicit subgroup of SU(2)^3: index triples into three ambient groups.
struct TripleGroup {
  std::array<GroupPtr, 3> ambient;
  std::vector<std::array<int, 3>> elems;
  void verify_closed() const;
};

// A finite subgroup of SU(2)^3 in one of the shapes the classification works
// with.
class ProductGroup3 {
 public:
  struct Splittable {
    std::array<GroupPtr, 3> g;
  };
  struct SemiSplittable {
    int single_pos;  // 0, 1 or 2: position of the SU(2) factor
    PairSubgroup pair;
    GroupPtr single;
  };
  struct Simple {
    long long p, r, s;  // {(x, r x, s x) : x in Z_p}, p prime, r and s units
  };
  struct Explicit {
    TripleGroup t;
  };
  using Variant = std::variant<Splittable, SemiSplittable, Simple, Explicit>;

  ProductGroup3() : v(Simple{2, 1, 1}) {}
  ProductGroup3(Variant var) : v(std::move(var)) {}  // NOLINT

  static ProductGroup3 splittable(GroupPtr a, GroupPtr b, GroupPtr c) {
    return ProductGroup3(Splittable{{std::move(a), std::move(b), std::move(c)}});
  }
  static ProductGroup3 semi(PairSubgroup pair, GroupPtr single, int single_pos = 2) {
    return ProductGroup3(SemiSplittable{single_pos, std::move(pair), std::move(single)});
  }
  static ProductGroup3 simple(long long p, long long r, long long s) {
    return ProductGroup3(Simple{p, r, s});
  }

  long long order() const;
  ProductGroup3 permuted(const std::array<int, 3>& perm) const;  // new[i] = old[perm[i]]
  std::string str() const;

  Variant v;
};

struct Witness {
  std::array<UnitQuaternion, 3> els;
  std::string str() const;
};

struct FreeVerdict {
  bool free = true;
  std::optional<Witness> witness;
};

// The real-part criterion: the group acts freely on S^3 x S^3 iff no
// nontrivial element has three equal real parts.  Decided symbolically;
// non-free verdicts always carry a witness.  Throws BudgetError when the
// total element count exceeds the budget.
FreeVerdict is_free(const ProductGroup3& g, long long budget = kDefaultBudget);

// W(C) = {Re(x) : (x, y) in C, Re(x) = Re(y)}, canonical and sorted; always
// contains 1.
std::vector<RealPart> coincidence_set(const PairSubgroup& c);

// Re(g1) n Re(g2) n Re(g3) = {1}; must agree with is_free on splittable
// triples.
bool splittable_free_test(const FiniteSubgroup& g1, const FiniteSubgroup& g2,
                          const FiniteSubgroup& g3);

}  // namespace su2free
