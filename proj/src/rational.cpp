#include "toledo/rational.hpp"

#include <sstream>

#include "toledo/errors.hpp"

namespace toledo {

std::string fraction_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q) << "/" << denominator(q);
  return out.str();
}

std::string decimal_string(const Rational& q, int digits) {
  Int num = numerator(q);
  Int den = denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Int scaled = (num * scale * 2 + den) / (den * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::ostringstream out;
  if (negative && (whole != 0 || frac != 0)) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(digits - f.size(), '0') << f;
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

}  // namespace toledo
