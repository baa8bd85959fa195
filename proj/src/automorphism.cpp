#include "su2free/automorphism.hpp"

#include <algorithm>

namespace su2free {

namespace {

void verify_automorphism(const FiniteSubgroup& g, const std::vector<int>& img) {
  std::vector<char> hit(g.order(), 0);
  for (int i = 0; i < g.order(); ++i) {
    if (img[i] < 0 || img[i] >= g.order() || hit[img[i]])
      throw ValidationError("automorphism image is not a bijection");
    hit[img[i]] = 1;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (img[g.mul(a, b)] != g.mul(img[a], img[b]))
        throw ValidationError("automorphism image is not multiplicative");
}

std::vector<int> power_map(const FiniteSubgroup& g, long long r) {
  std::vector<int> img(g.order());
  for (int i = 0; i < g.order(); ++i) img[i] = g.power(i, r);
  return img;
}

std::vector<int> affine_map(const FiniteSubgroup& g, long long a, long long b) {
  if (g.gen_t() < 0 || g.gen_s() < 0)
    throw ValidationError("affine automorphism needs an (s, t) presentation");
  const int t = g.gen_t(), s = g.gen_s();
  const int ord_t = g.element_order(t);
  std::vector<int> img(g.order(), -1);
  // enumerate t^p and s t^p
  int x = g.id();
  std::vector<int> tp(ord_t);
  for (int p = 0; p < ord_t; ++p) {
    tp[p] = x;
    x = g.mul(x, t);
  }
  auto tpow = [&](long long e) { return tp[((e % ord_t) + ord_t) % ord_t]; };
  for (int p = 0; p < ord_t; ++p) {
    if (img[tp[p]] >= 0) throw ValidationError("presentation does not cover the group");
    img[tp[p]] = tpow(a * p);
    int sp = g.mul(s, tp[p]);
    if (img[sp] >= 0) throw ValidationError("presentation does not cover the group");
    img[sp] = g.mul(s, tpow(a * p + b));
  }
  for (int i = 0; i < g.order(); ++i)
    if (img[i] < 0) throw ValidationError("presentation does not cover the group");
  return img;
}

std::vector<int> conj_by_quat(const FiniteSubgroup& g, const UnitQuaternion& u) {
  if (!g.quaternionic()) throw ValidationError("quaternion conjugation on an abstract group");
  std::vector<int> img(g.order());
  UnitQuaternion ui = qinv(u);
  for (int i = 0; i < g.order(); ++i) {
    int y = g.index_of(qmul(qmul(u, g.quat(i)), ui));
    if (y < 0) throw ValidationError("conjugation does not preserve the group");
    img[i] = y;
  }
  return img;
}

std::vector<int> outer_map(const FiniteSubgroup& g, AdeKind::Family which) {
  using F = AdeKind::Family;
  if (!g.ade_kind() || g.ade_kind()->family != which)
    throw ValidationError("named outer automorphism applied to the wrong group");
  const SurdValue h(Rational(1, 2)), h2(0, Rational(1, 2), 0, 0);
  switch (which) {
    case F::BinaryTetrahedral: {
      // conjugation by (1+j)/sqrt2 in 2O
      return conj_by_quat(g, UnitQuaternion::surd(h2, 0, h2, 0));
    }
    case F::BinaryOctahedral: {
      // fixes s = (1+i+j+k)/2, sends t = e^{i pi/4} to -t
      UnitQuaternion s = UnitQuaternion::surd(h, h, h, h);
      UnitQuaternion t = UnitQuaternion::surd(h2, h2, 0, 0);
      UnitQuaternion mt = UnitQuaternion::surd(-h2, -h2, 0, 0);
      return extend_generator_images(
          g, {{g.index_of(s), g.index_of(s)}, {g.index_of(t), g.index_of(mt)}});
    }
    case F::BinaryIcosahedral: {
      // fixes s = (1+i+j+k)/2, sends t = (phi + phi^{-1} i + j)/2 to
      // (-phi^{-1} - phi i + k)/2
      const Rational q4(1, 4);
      UnitQuaternion s = UnitQuaternion::surd(h, h, h, h);
      UnitQuaternion t = UnitQuaternion::surd(SurdValue(q4, 0, q4, 0), SurdValue(-q4, 0, q4, 0),
                                              h, 0);
      UnitQuaternion t2 = UnitQuaternion::surd(SurdValue(q4, 0, -q4, 0),
                                               SurdValue(-q4, 0, -q4, 0), 0, h);
      return extend_generator_images(
          g, {{g.index_of(s), g.index_of(s)}, {g.index_of(t), g.index_of(t2)}});
    }
    default:
      throw ValidationError("no named outer automorphism for this kind");
  }
}

}  // namespace

std::vector<int> extend_generator_images(const FiniteSubgroup& g,
                                         const std::vector<std::pair<int, int>>& images) {
  std::vector<int> img(g.order(), -1);
  img[g.id()] = g.id();
  std::vector<int> work{g.id()};
  for (auto [a, b] : images) {
    if (a < 0 || b < 0) throw ValidationError("generator image refers to a missing element");
    if (img[a] == -1) {
      img[a] = b;
      work.push_back(a);
    } else if (img[a] != b) {
      throw ValidationError("conflicting generator images");
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (auto [a, b] : images) {
      int x = g.mul(work[i], a);
      int y = g.mul(img[work[i]], b);
      if (img[x] == -1) {
        img[x] = y;
        work.push_back(x);
      } else if (img[x] != y) {
        throw ValidationError("generator images are not a homomorphism");
      }
    }
  }
  if (work.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("given elements do not generate the group");
  verify_automorphism(g, img);
  return img;
}

std::vector<int> apply_automorphism(const AutomorphismSpec& spec, const FiniteSubgroup& g) {
  using S = AutomorphismSpec;
  std::vector<int> img = std::visit(
      [&](const auto& s) -> std::vector<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, S::Identity>) {
          std::vector<int> id(g.order());
          for (int i = 0; i < g.order(); ++i) id[i] = i;
          return id;
        } else if constexpr (std::is_same_v<T, S::Power>) {
          return power_map(g, s.r);
        } else if constexpr (std::is_same_v<T, S::Affine>) {
          return affine_map(g, s.a, s.b);
        } else if constexpr (std::is_same_v<T, S::InnerByQuat>) {
          return conj_by_quat(g, s.u);
        } else if constexpr (std::is_same_v<T, S::InnerByIndex>) {
          std::vector<int> img2(g.order());
          for (int i = 0; i < g.order(); ++i) img2[i] = g.mul(g.mul(s.g, i), g.inv(s.g));
          return img2;
        } else if constexpr (std::is_same_v<T, S::OuterE>) {
          return outer_map(g, s.which);
        } else if constexpr (std::is_same_v<T, S::GeneratorImages>) {
          return extend_generator_images(g, s.images);
        } else if constexpr (std::is_same_v<T, S::GeneratorImagesQ>) {
          std::vector<std::pair<int, int>> idx;
          for (const auto& [a, b] : s.images) idx.emplace_back(g.index_of(a), g.index_of(b));
          return extend_generator_images(g, idx);
        } else {
          static_assert(std::is_same_v<T, S::Compose>);
          std::vector<int> acc(g.order());
          for (int i = 0; i < g.order(); ++i) acc[i] = i;
          for (const auto& part : s.parts) {
            auto m = apply_automorphism(part, g);
            for (int i = 0; i < g.order(); ++i) acc[i] = m[acc[i]];
          }
          return acc;
        }
      },
      spec.v);
  verify_automorphism(g, img);
  return img;
}

std::string AutomorphismSpec::str() const {
  using S = AutomorphismSpec;
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, S::Identity>) {
          return "id";
        } else if constexpr (std::is_same_v<T, S::Power>) {
          return "pow(" + std::to_string(s.r) + ")";
        } else if constexpr (std::is_same_v<T, S::Affine>) {
          return "aff(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
        } else if constexpr (std::is_same_v<T, S::InnerByQuat>) {
          return "inner(" + s.u.str() + ")";
        } else if constexpr (std::is_same_v<T, S::InnerByIndex>) {
          return "inner(#" + std::to_string(s.g) + ")";
        } else if constexpr (std::is_same_v<T, S::OuterE>) {
          switch (s.which) {
            case AdeKind::Family::BinaryTetrahedral: return "out2T";
            case AdeKind::Family::BinaryOctahedral: return "out2O";
            default: return "out2I";
          }
        } else if constexpr (std::is_same_v<T, S::GeneratorImages>) {
          return "images(" + std::to_string(s.images.size()) + ")";
        } else if constexpr (std::is_same_v<T, S::GeneratorImagesQ>) {
          std::string out = "images(";
          for (std::size_t i = 0; i < s.images.size(); ++i) {
            if (i) out += "; ";
            out += s.images[i].first.str() + " -> " + s.images[i].second.str();
          }
          return out + ")";
        } else {
          static_assert(std::is_same_v<T, S::Compose>);
          std::string out;
          for (std::size_t i = 0; i < s.parts.size(); ++i) {
            if (i) out += "*";
            out += s.parts[i].str();
          }
          return out.empty() ? "id" : out;
        }
      },
      v);
}

}  // namespace su2free
