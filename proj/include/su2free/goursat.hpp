#pragma once

#include "su2free/automorphism.hpp"

namespace su2free {

// Goursat data for a subgroup of a product of two groups: A0 normal in A,
// B0 normal in B, and an isomorphism A/A0 -> B/B0 stored as a
// coset-representative map (one (a, b) pair per A0-coset, canonical reps).
struct GoursatQuintuple {
  GroupPtr A, B;
  Subgroup A0, B0;
  std::vector<std::pair<int, int>> theta;

  std::string str() const;
};

// Subgroup of SU(2) x SU(2): index pairs into two ambient factor groups,
// sorted.  Stores explicit elements rather than generators.
struct PairSubgroup {
  GroupPtr left, right;
  std::vector<std::pair<int, int>> elems;

  long long order() const { return static_cast<long long>(elems.size()); }
  int mul_index(int i, int j) const;  // index into elems, or -1
  void verify_closed() const;         // throws ValidationError

  friend bool operator==(const PairSubgroup& a, const PairSubgroup& b);
};

// The fiber product {(a, b) : theta(a A0) = b B0}; order |A| * |B0|.
PairSubgroup build_goursat(const GoursatQuintuple& q);

// Inverse direction: projections, kernels, and the induced coset map.
GoursatQuintuple decompose(const PairSubgroup& c);

// Graph {(x, f(x))} of a verified automorphism.
PairSubgroup graph_of(const AutomorphismSpec& f, const GroupPtr& g);

// Quintuple-data comparison: subgroups and theta agree after applying the
// optional identifications f1 (A-side of q2) and f2 (B-side of q2).  A
// sufficient conjugacy test, not an exhaustive one.
bool quintuple_data_equal(const GoursatQuintuple& q1, const GoursatQuintuple& q2,
                          const AutomorphismSpec* f1 = nullptr,
                          const AutomorphismSpec* f2 = nullptr);

// theta resolved through a named quotient model: both quotients are
// identified with the recognized model by a deterministic isomorphism, and f
// acts on the model.
GoursatQuintuple make_quintuple(GroupPtr A, Subgroup A0, GroupPtr B, Subgroup B0,
                                const AutomorphismSpec& f_on_model);

// theta given directly by coset-representative image pairs (a, b), completed
// and verified.
GoursatQuintuple make_quintuple_images(GroupPtr A, Subgroup A0, GroupPtr B, Subgroup B0,
                                       const std::vector<std::pair<int, int>>& images);

}  // namespace su2free
