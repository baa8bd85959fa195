#include "su2free/textio.hpp"

#include <algorithm>

#include <json.hpp>

namespace su2free {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits on a separator at paren depth 0.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

long long parse_int(const std::string& s, std::size_t pos_hint) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("trailing characters after integer '" + s + "'", pos_hint);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("expected an integer, got '" + s + "'", pos_hint);
  }
}

}  // namespace

AdeKind parse_group_desc(const std::string& raw) {
  std::string s = trim(raw);
  if (s == "2T") return AdeKind::tetrahedral();
  if (s == "2O") return AdeKind::octahedral();
  if (s == "2I") return AdeKind::icosahedral();
  auto paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    std::string head = s.substr(0, paren);
    long long n = parse_int(s.substr(paren + 1, s.size() - paren - 2), paren + 1);
    if (head == "Z") return AdeKind::cyclic(n);
    if (head == "BD") return AdeKind::binary_dihedral(n);
  }
  throw ParseError("unknown group descriptor '" + s + "'", 0);
}

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, 0));
  return Rational(parse_int(s.substr(0, slash), 0), parse_int(s.substr(slash + 1), slash + 1));
}

SurdValue parse_surd(const std::string& raw) {
  // terms: coefficient, optionally * s2 / s5 / s10, joined by + or -
  std::string s = trim(raw);
  SurdValue acc(0);
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = trim(s.substr(i, j - i));
    if (term.empty()) throw ParseError("empty term in field value", i);
    Rational coeff(1);
    std::string radical;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      radical = trim(term.substr(star + 1));
    } else if (term == "s2" || term == "s5" || term == "s10") {
      radical = term;
    } else {
      coeff = parse_rational(term);
    }
    if (neg) coeff = -coeff;
    if (radical.empty())
      acc += SurdValue(coeff);
    else if (radical == "s2")
      acc += SurdValue(0, coeff, 0, 0);
    else if (radical == "s5")
      acc += SurdValue(0, 0, coeff, 0);
    else if (radical == "s10")
      acc += SurdValue(0, 0, 0, coeff);
    else
      throw ParseError("unknown radical '" + radical + "'", i);
    if (j < s.size()) neg = s[j] == '-';
    i = j + 1;
  }
  return acc;
}

UnitQuaternion parse_element(const std::string& raw) {
  std::string s = trim(raw);
  int jexp = 0;
  if (s.rfind("j*", 0) == 0) {
    jexp = 1;
    s = trim(s.substr(2));
  }
  if (s.rfind("e(", 0) == 0 && s.back() == ')')
    return UnitQuaternion::angle(jexp, parse_rational(s.substr(2, s.size() - 3)));
  if (jexp == 0 && s.rfind("q(", 0) == 0 && s.back() == ')') {
    auto parts = split_top(s.substr(2, s.size() - 3), ',');
    if (parts.size() != 4) throw ParseError("q(...) needs four coordinates", 0);
    return UnitQuaternion::surd(parse_surd(parts[0]), parse_surd(parts[1]), parse_surd(parts[2]),
                                parse_surd(parts[3]));
  }
  throw ParseError("unknown element syntax '" + raw + "'", 0);
}

AutomorphismSpec parse_automorphism(const std::string& raw) {
  std::string s = trim(raw);
  // composition: split on '*' at depth 0, or on the UTF-8 ring operator
  static const std::string ring = "\xe2\x88\x98";
  std::string norm;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, ring.size(), ring) == 0) {
      norm += '*';
      i += ring.size();
    } else {
      norm += s[i++];
    }
  }
  auto parts = split_top(norm, '*');
  if (parts.size() > 1) {
    std::vector<AutomorphismSpec> specs;
    for (const auto& p : parts) specs.push_back(parse_automorphism(p));
    return AutomorphismSpec::compose(std::move(specs));
  }
  s = trim(parts[0]);
  if (s == "id") return AutomorphismSpec::identity();
  if (s == "out2T") return AutomorphismSpec::outer_2T();
  if (s == "out2O") return AutomorphismSpec::outer_2O();
  if (s == "out2I") return AutomorphismSpec::outer_2I();
  auto paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    std::string head = s.substr(0, paren);
    std::string body = s.substr(paren + 1, s.size() - paren - 2);
    if (head == "pow") return AutomorphismSpec::power(parse_int(body, paren));
    if (head == "aff") {
      auto args = split_top(body, ',');
      if (args.size() != 2) throw ParseError("aff(a,b) needs two arguments", paren);
      return AutomorphismSpec::affine(parse_int(args[0], paren), parse_int(args[1], paren));
    }
    if (head == "inner") return AutomorphismSpec::inner(parse_element(body));
  }
  throw ParseError("unknown automorphism '" + raw + "'", 0);
}

namespace {

Subgroup resolve_subgroup(const FiniteSubgroup& g, const std::string& desc) {
  std::string d = trim(desc);
  if (d == "trivial" || d == "Z(1)") return trivial_subgroup(g);
  if (d == "full" || d == g.name()) return full_subgroup(g);
  std::vector<Subgroup> matches;
  for (const auto& ns : normal_subgroups(g)) {
    auto sub = restrict_to(g, ns.sub, "sub");
    if (identify_group(sub) == d) matches.push_back(ns.sub);
  }
  if (matches.empty())
    throw ParseError("no normal subgroup of " + g.name() + " matches '" + d + "'", 0);
  // several copies can match (e.g. the two BD(k) inside BD(2k)); take the
  // structurally first
  return matches.front();
}

GoursatQuintuple quintuple_from_json(const json& doc) {
  auto A = build_group(parse_group_desc(doc.at("A").get<std::string>()));
  auto B = build_group(parse_group_desc(doc.at("B").get<std::string>()));
  Subgroup A0 = resolve_subgroup(*A, doc.value("A0", std::string("trivial")));
  Subgroup B0 = resolve_subgroup(*B, doc.value("B0", std::string("trivial")));
  const json& theta = doc.at("theta");
  if (theta.is_string())
    return make_quintuple(A, A0, B, B0, parse_automorphism(theta.get<std::string>()));
  if (theta.is_object() && theta.contains("images")) {
    std::vector<std::pair<int, int>> images;
    for (const auto& entry : theta.at("images")) {
      int a = A->index_of(parse_element(entry.at(0).get<std::string>()));
      int b = B->index_of(parse_element(entry.at(1).get<std::string>()));
      if (a < 0 || b < 0) throw ParseError("theta image element is not in the group", 0);
      images.emplace_back(a, b);
    }
    return make_quintuple_images(A, A0, B, B0, images);
  }
  throw ParseError("theta must be an automorphism string or {\"images\": [...]}", 0);
}

PairSubgroup pair_from_json(const json& doc) {
  if (doc.contains("graph")) {
    const json& g = doc.at("graph");
    auto grp = build_group(parse_group_desc(g.at("group").get<std::string>()));
    return graph_of(parse_automorphism(g.value("aut", std::string("id"))), grp);
  }
  if (doc.contains("product")) {
    auto a = build_group(parse_group_desc(doc.at("product").at(0).get<std::string>()));
    auto b = build_group(parse_group_desc(doc.at("product").at(1).get<std::string>()));
    PairSubgroup c;
    c.left = a;
    c.right = b;
    for (int i = 0; i < a->order(); ++i)
      for (int j = 0; j < b->order(); ++j) c.elems.emplace_back(i, j);
    return c;
  }
  return build_goursat(quintuple_from_json(doc));
}

// --- goursat3: a fiber product between a subgroup of SU(2)^2 and a subgroup
// of SU(2), yielding an explicit subgroup of SU(2)^3.

struct PairIndex {
  std::map<std::pair<int, int>, int> index;
  explicit PairIndex(const PairSubgroup& p) {
    for (std::size_t i = 0; i < p.elems.size(); ++i)
      index.emplace(p.elems[i], static_cast<int>(i));
  }
  int at(const std::pair<int, int>& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
};

std::vector<int> pair_subset_indices(const PairSubgroup& big, const PairSubgroup& small) {
  PairIndex idx(big);
  std::vector<int> out;
  for (auto e : small.elems) {
    // match through quaternions in case the ambients differ
    std::pair<int, int> mapped{big.left->index_of(small.left->quat(e.first)),
                               big.right->index_of(small.right->quat(e.second))};
    int i = idx.at(mapped);
    if (i < 0) throw ParseError("pair0 is not contained in pair", 0);
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProductGroup3 goursat3_from_json(const json& doc) {
  PairSubgroup P = pair_from_json(doc.at("pair"));
  P.verify_closed();
  auto B = build_group(parse_group_desc(doc.at("single").get<std::string>()));
  Subgroup B0 = resolve_subgroup(*B, doc.value("single0", std::string("trivial")));

  // pair0: "trivial", "full", or a pair document
  std::vector<int> p0;
  const json& pk = doc.at("pair0");
  if (pk.is_string() && pk.get<std::string>() == "trivial") {
    PairIndex idx(P);
    p0 = {idx.at({P.left->id(), P.right->id()})};
  } else if (pk.is_string() && pk.get<std::string>() == "full") {
    p0.resize(P.elems.size());
    for (std::size_t i = 0; i < p0.size(); ++i) p0[i] = static_cast<int>(i);
  } else {
    PairSubgroup sub = pair_from_json(pk);
    sub.verify_closed();
    p0 = pair_subset_indices(P, sub);
  }

  // cosets of pair0 in P
  PairIndex idx(P);
  auto pmul = [&](int i, int j) {
    return idx.at({P.left->mul(P.elems[i].first, P.elems[j].first),
                   P.right->mul(P.elems[i].second, P.elems[j].second)});
  };
  auto pinv = [&](int i) {
    return idx.at({P.left->inv(P.elems[i].first), P.right->inv(P.elems[i].second)});
  };
  // normality of pair0
  {
    std::vector<char> in(P.elems.size(), 0);
    for (int x : p0) in[x] = 1;
    for (std::size_t a = 0; a < P.elems.size(); ++a)
      for (int x : p0) {
        int y = pmul(pmul(static_cast<int>(a), x), pinv(static_cast<int>(a)));
        if (y < 0 || !in[y]) throw ParseError("pair0 is not a normal subgroup of pair", 0);
      }
  }
  std::vector<int> coset_of(P.elems.size(), -1);
  std::vector<int> reps;
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < P.elems.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    std::vector<int> mem;
    for (int x : p0) {
      int y = pmul(static_cast<int>(i), x);
      coset_of[y] = c;
      mem.push_back(y);
    }
    std::sort(mem.begin(), mem.end());
    reps.push_back(mem.front());
    members.push_back(std::move(mem));
  }
  const int qn = static_cast<int>(reps.size());
  std::vector<int> qtable(static_cast<std::size_t>(qn) * qn);
  std::vector<std::string> qlabels(qn);
  for (int a = 0; a < qn; ++a) {
    qlabels[a] = "[" + P.left->label(P.elems[reps[a]].first) + "," +
                 P.right->label(P.elems[reps[a]].second) + "]";
    for (int b = 0; b < qn; ++b)
      qtable[static_cast<std::size_t>(a) * qn + b] = coset_of[pmul(reps[a], reps[b])];
  }
  FiniteSubgroup QP = FiniteSubgroup::from_table(std::move(qlabels), std::move(qtable), "pair/pair0");
  auto qb = quotient(*B, B0);
  auto db = cosets(*B, B0);

  // theta: automorphism string applied on the single-side quotient model
  auto iso = find_isomorphism(QP, qb.group);
  if (!iso) throw ParseError("pair/pair0 and single/single0 are not isomorphic", 0);
  std::vector<int> theta(qn);
  const json& th = doc.at("theta");
  if (!th.is_string()) throw ParseError("goursat3 theta must be an automorphism string", 0);
  auto aut = apply_automorphism(parse_automorphism(th.get<std::string>()), qb.group);
  for (int c = 0; c < qn; ++c) theta[c] = aut[(*iso)[c]];

  TripleGroup t;
  t.ambient = {P.left, P.right, B};
  for (std::size_t i = 0; i < P.elems.size(); ++i)
    for (int b : db.members[theta[coset_of[i]]])
      t.elems.push_back({P.elems[i].first, P.elems[i].second, b});
  std::sort(t.elems.begin(), t.elems.end());
  t.verify_closed();
  return ProductGroup3(ProductGroup3::Explicit{std::move(t)});
}

ProductGroup3 product_from_json(const json& doc) {
  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "splittable") {
    const auto& f = doc.at("factors");
    if (f.size() != 3) throw ParseError("splittable needs three factors", 0);
    return ProductGroup3::splittable(build_group(parse_group_desc(f.at(0).get<std::string>())),
                                     build_group(parse_group_desc(f.at(1).get<std::string>())),
                                     build_group(parse_group_desc(f.at(2).get<std::string>())));
  }
  if (kind == "simple") {
    return ProductGroup3::simple(doc.at("p").get<long long>(), doc.at("r").get<long long>(),
                                 doc.at("s").get<long long>());
  }
  if (kind == "semisplittable") {
    PairSubgroup pair = pair_from_json(doc.at("pair"));
    auto single = build_group(parse_group_desc(doc.at("single").get<std::string>()));
    int pos = doc.value("position", 3);
    if (pos < 1 || pos > 3) throw ParseError("position must be 1, 2 or 3", 0);
    return ProductGroup3::semi(std::move(pair), single, pos - 1);
  }
  if (kind == "goursat3") return goursat3_from_json(doc);
  throw ParseError("unknown spec kind '" + kind + "'", 0);
}

}  // namespace

PairSubgroup parse_pair_spec(const std::string& text) {
  json doc = json::parse(text, nullptr, true, true);
  return pair_from_json(doc);
}

ProductGroup3 parse_product_spec(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty specification", 0);
  if (s[0] == '{') {
    json doc;
    try {
      doc = json::parse(s, nullptr, true, true);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), 0);
    }
    try {
      return product_from_json(doc);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad spec document: ") + e.what(), 0);
    }
  }
  if (s.rfind("simple(", 0) == 0 && s.back() == ')') {
    auto args = split_top(s.substr(7, s.size() - 8), ',');
    if (args.size() != 3) throw ParseError("simple(p,r,s) needs three arguments", 0);
    return ProductGroup3::simple(parse_int(args[0], 7), parse_int(args[1], 7),
                                 parse_int(args[2], 7));
  }
  // infix splittable: factors separated by 'x'
  auto parts = split_top(s, 'x');
  if (parts.size() != 3)
    throw ParseError("expected 'A x B x C', 'simple(p,r,s)' or a JSON document", 0);
  return ProductGroup3::splittable(build_group(parse_group_desc(parts[0])),
                                   build_group(parse_group_desc(parts[1])),
                                   build_group(parse_group_desc(parts[2])));
}

std::string format_realpart_set(const std::vector<RealPart>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += set[i].str();
  }
  return out + "}";
}

}  // namespace su2free
