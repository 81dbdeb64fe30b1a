#include "conepack/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "conepack/errors.hpp"

namespace conepack {

Rational rational_of(double value) {
  if (!std::isfinite(value)) {
    fail(Errc::InvalidArgument, "cannot lift non-finite double to a rational");
  }
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

double double_below(const Rational& q) {
  double d = q.get_d();
  if (sgn(q) >= 0) return d;  // truncation rounds toward zero
  // Negative values truncate upward; step down if needed.
  if (rational_of(d) > q) d = std::nextafter(d, -HUGE_VAL);
  return d;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  // [sign] digits [. digits] [e [sign] digits]
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view exppart = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool expneg = false;
    if (!exppart.empty() && (exppart.front() == '+' || exppart.front() == '-')) {
      expneg = exppart.front() == '-';
      exppart.remove_prefix(1);
    }
    if (!all_digits(exppart) || exppart.size() > 6) {
      fail(Errc::ParseError, "bad exponent in rational literal '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exppart));
    if (expneg) exponent = -exponent;
  }
  std::string digits;
  auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(body);
  } else {
    std::string_view intpart = body.substr(0, dot);
    std::string_view fracpart = body.substr(dot + 1);
    if (intpart.empty() && fracpart.empty()) {
      fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
    }
    digits = std::string(intpart) + std::string(fracpart);
    exponent -= static_cast<long>(fracpart.size());
  }
  if (!all_digits(digits)) {
    fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
  }
  Integer num(digits, 10);
  Rational value(num);
  if (exponent != 0) {
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent > 0) {
      value *= Rational(pow10);
    } else {
      value /= Rational(pow10);
    }
  }
  if (negative) value = -value;
  value.canonicalize();
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view numdigits = num;
    if (!numdigits.empty() && (numdigits.front() == '+' || numdigits.front() == '-')) numdigits.remove_prefix(1);
    if (!all_digits(numdigits) || !all_digits(den)) {
      fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
    }
    Rational value(std::string(text), 10);
    if (value.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace conepack
