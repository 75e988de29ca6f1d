#include "spherical/rational.hpp"

#include <stdexcept>

namespace spherical {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

Rational parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Rational(mpz_class(std::string(s), 10));
}

// Decimal literal with optional fraction and exponent, e.g. "-1.25e3".
Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    if (!is_integer_literal(exp_text)) throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(exp_text));
  }
  std::string digits;
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  auto dot = mantissa.find('.');
  std::string_view whole = mantissa.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : mantissa.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("empty number");
  digits.append(whole);
  digits.append(frac);
  if (digits.empty() || !is_integer_literal(digits)) throw std::invalid_argument("bad decimal '" + std::string(s) + "'");
  exponent -= static_cast<long>(frac.size());
  if (exponent > 4096 || exponent < -4096) throw std::invalid_argument("exponent out of range");
  mpz_class num(digits, 10);
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(text.substr(0, slash));
    Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num / den);
  }
  if (is_integer_literal(text)) return parse_integer(text);
  return parse_decimal(text);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value has no rational form");
  Rational out(v);  // mpq_set_d is exact
  out.canonicalize();
  return out;
}

}  // namespace spherical
