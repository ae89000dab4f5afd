#include "rational.hpp"

#include <cctype>

#include "error.hpp"

namespace itsec {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::parse,
              "cannot parse rational \"" + std::string(text) + "\": " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class integer_from_digits(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) parse_fail(text, "empty string");

  if (s.find("...") != std::string_view::npos || s.find('(') != std::string_view::npos) {
    parse_fail(text,
               "repeating decimals are not exactly representable; "
               "write the value as a fraction p/q");
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) parse_fail(text, "missing digits after sign");
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      parse_fail(text, "expected integer numerator and denominator");
    }
    mpz_class d = integer_from_digits(den);
    if (d == 0) parse_fail(text, "zero denominator");
    value = Rational(integer_from_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || !all_digits(frac) || (!whole.empty() && !all_digits(whole))) {
      parse_fail(text, "expected a finite decimal");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class numerator =
        (whole.empty() ? mpz_class(0) : integer_from_digits(whole)) * scale +
        integer_from_digits(frac);
    value = Rational(numerator, scale);
  } else {
    if (!all_digits(s)) parse_fail(text, "expected digits");
    value = Rational(integer_from_digits(s));
  }

  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace itsec
