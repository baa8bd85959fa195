#include "su2free/realpart.hpp"

namespace su2free {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string SurdValue::str() const {
  struct Term {
    const Rational* coeff;
    const char* suffix;
  };
  const Term terms[] = {{&c1_, ""}, {&c2_, "*s2"}, {&c5_, "*s5"}, {&c10_, "*s10"}};
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff->is_zero()) continue;
    if (out.empty()) {
      out = t.coeff->str() + t.suffix;
    } else if (t.coeff->num() < 0) {
      out += " - " + (-*t.coeff).str() + t.suffix;
    } else {
      out += " + " + t.coeff->str() + t.suffix;
    }
  }
  return out.empty() ? "0" : out;
}

std::string RealPart::str() const {
  if (angle_) return "cos(" + angle_->str() + ")";
  return value_.str();
}

CosineCondition rational_cos_table(const SurdValue& b) {
  struct Row {
    SurdValue target;
    long long divisor;
    Rational r1, r2;
  };
  static const std::vector<Row> rows = {
      {SurdValue(1), 1, Rational(0), Rational(0)},
      {SurdValue(-1), 2, Rational(1, 2), Rational(1, 2)},
      {SurdValue(Rational(1, 2)), 6, Rational(1, 6), Rational(5, 6)},
      {SurdValue(Rational(-1, 2)), 3, Rational(1, 3), Rational(2, 3)},
      {SurdValue(0), 4, Rational(1, 4), Rational(3, 4)},
      {SurdValue(0, Rational(1, 2), 0, 0), 8, Rational(1, 8), Rational(7, 8)},
      {SurdValue(0, Rational(-1, 2), 0, 0), 8, Rational(3, 8), Rational(5, 8)},
      {SurdValue(Rational(1, 4), 0, Rational(1, 4), 0), 10, Rational(1, 10), Rational(9, 10)},
      {SurdValue(Rational(-1, 4), 0, Rational(1, 4), 0), 5, Rational(1, 5), Rational(4, 5)},
      {SurdValue(Rational(1, 4), 0, Rational(-1, 4), 0), 10, Rational(3, 10), Rational(7, 10)},
      {SurdValue(Rational(-1, 4), 0, Rational(-1, 4), 0), 5, Rational(2, 5), Rational(3, 5)},
  };
  for (const auto& row : rows) {
    if (b == row.target) {
      CosineCondition c;
      c.has_rational_angle = true;
      c.divisor = row.divisor;
      c.residues.push_back(row.r1);
      if (!(row.r2 == row.r1)) c.residues.push_back(row.r2);
      return c;
    }
  }
  return CosineCondition{};
}

}  // namespace su2free
