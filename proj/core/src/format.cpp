#include "qboole/format.hpp"

#include <sstream>

namespace qboole {

std::string to_string(const BigRational& r) { return r.str(); }

namespace {
/* One monomial, e.g. "q", "-q^3", "3/2*x^2", "7". */
void append_term(std::ostringstream& out, bool first, const BigRational& c, std::size_t deg,
                 std::string_view var) {
  BigRational a = c;
  if (first) {
    if (a.sign() < 0) {
      out << "-";
      a = -a;
    }
  } else {
    out << (a.sign() < 0 ? " - " : " + ");
    if (a.sign() < 0) a = -a;
  }
  if (deg == 0) {
    out << a.str();
    return;
  }
  if (!a.is_one()) out << a.str() << "*";
  out << var;
  if (deg > 1) out << "^" << deg;
}
}  // namespace

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const BigRational& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    append_term(out, first, c, i, var);
    first = false;
  }
  return out.str();
}

std::string to_string(const QRatFunc& v) {
  if (v.is_polynomial()) return to_string(v.num());
  return "(" + to_string(v.num()) + ")/(" + to_string(v.den()) + ")";
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const QRatFunc& c = p.coefficients()[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << to_string(c);
      continue;
    }
    if (!c.is_one()) out << "(" << to_string(c) << ")*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::vector<std::string> coefficient_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const BigRational& c : p.coefficients()) out.push_back(c.str());
  return out;
}

QPoly qpoly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (const std::string& s : coeffs) v.push_back(BigRational::from_string(s));
  return QPoly(std::move(v));
}

}  // namespace qboole
