#include "laurent.hpp"

#include <sstream>

namespace hivemv {

LaurentPoly LaurentPoly::term(Int exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms[exp] = c;
  return p;
}

std::optional<Int> LaurentPoly::valuation() const {
  if (terms.empty()) return std::nullopt;
  return terms.begin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms)
      out += term(e1 + e2, c1 * c2);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

}  // namespace hivemv
