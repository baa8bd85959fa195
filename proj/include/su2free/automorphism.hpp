#pragma once

#include <variant>
#include <vector>

#include "su2free/group.hpp"

namespace su2free {

// Symbolic automorphism descriptions.  apply_automorphism materializes one as
// an element permutation and verifies that it is a bijective homomorphism of
// the given group; invalid specs throw ValidationError.
class AutomorphismSpec {
 public:
  struct Identity {};
  // x -> x^r (cyclic groups, gcd(r, n) = 1)
  struct Power {
    long long r;
  };
  // t^p -> t^{ap}, s t^p -> s t^{ap+b} on groups with an (s, t) presentation
  struct Affine {
    long long a, b;
  };
  // conjugation by a quaternion, possibly outside the group
  struct InnerByQuat {
    UnitQuaternion u;
  };
  // conjugation by a group element (works for abstract groups too)
  struct InnerByIndex {
    int g;
  };
  // the named outer involutions of 2T, 2O, 2I
  struct OuterE {
    AdeKind::Family which;
  };
  // explicit images of a generating set (element index -> element index)
  struct GeneratorImages {
    std::vector<std::pair<int, int>> images;
  };
  struct GeneratorImagesQ {
    std::vector<std::pair<UnitQuaternion, UnitQuaternion>> images;
  };
  // composition, applied left to right
  struct Compose {
    std::vector<AutomorphismSpec> parts;
  };

  using Variant = std::variant<Identity, Power, Affine, InnerByQuat, InnerByIndex, OuterE,
                               GeneratorImages, GeneratorImagesQ, Compose>;

  AutomorphismSpec() : v(Identity{}) {}
  AutomorphismSpec(Variant var) : v(std::move(var)) {}  // NOLINT

  static AutomorphismSpec identity() { return AutomorphismSpec(Identity{}); }
  static AutomorphismSpec power(long long r) { return AutomorphismSpec(Power{r}); }
  static AutomorphismSpec affine(long long a, long long b) { return AutomorphismSpec(Affine{a, b}); }
  static AutomorphismSpec inner(UnitQuaternion u) { return AutomorphismSpec(InnerByQuat{std::move(u)}); }
  static AutomorphismSpec outer_2T() { return AutomorphismSpec(OuterE{AdeKind::Family::BinaryTetrahedral}); }
  static AutomorphismSpec outer_2O() { return AutomorphismSpec(OuterE{AdeKind::Family::BinaryOctahedral}); }
  static AutomorphismSpec outer_2I() { return AutomorphismSpec(OuterE{AdeKind::Family::BinaryIcosahedral}); }
  static AutomorphismSpec compose(std::vector<AutomorphismSpec> parts) {
    return AutomorphismSpec(Compose{std::move(parts)});
  }

  std::string str() const;

  Variant v;
};

// Element permutation implementing the spec on g; verified bijective
// homomorphism.
std::vector<int> apply_automorphism(const AutomorphismSpec& spec, const FiniteSubgroup& g);

// Extends images of a generating set to the whole group and verifies the
// result; used by apply_automorphism and by theta construction.
std::vector<int> extend_generator_images(const FiniteSubgroup& g,
                                         const std::vector<std::pair<int, int>>& images);

}  // namespace su2free
