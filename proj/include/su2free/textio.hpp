#pragma once

#include "su2free/classify.hpp"

namespace su2free {

// Group descriptors: "Z(n)", "BD(n)" (order 4n), "2T", "2O", "2I".
AdeKind parse_group_desc(const std::string& text);

// Elements: "e(p/q)" for e^{2 pi i p/q}, "j*e(p/q)", or "q(w,x,y,z)" with
// coefficients like "1/2 + 1/4*s5".
UnitQuaternion parse_element(const std::string& text);
Rational parse_rational(const std::string& text);
SurdValue parse_surd(const std::string& text);

// Automorphisms: "id", "pow(r)", "aff(a,b)", "inner(<element>)", "out2T",
// "out2O", "out2I", and compositions joined by "*" (or the ring operator).
AutomorphismSpec parse_automorphism(const std::string& text);

// Product-group specifications.  Accepted forms:
//   infix      "Z(7) x 2I x 2I"
//   simple     "simple(7,2,4)"
//   JSON       {"kind": "splittable"|"simple"|"semisplittable"|"goursat3", ...}
ProductGroup3 parse_product_spec(const std::string& text);

// Quintuple documents {"A":..., "A0":..., "B":..., "B0":..., "theta":...},
// graphs {"graph": {...}} and full products {"product": [...]}.
PairSubgroup parse_pair_spec(const std::string& json_text);

std::string format_realpart_set(const std::vector<RealPart>& set);

}  // namespace su2free
