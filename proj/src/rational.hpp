#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace itsec {

// Exact rational scalar. Every probability and every epsilon in the library
// is an mpq_class in canonical form; the helpers here are the only string
// entry and exit points, so canonicalization happens exactly once.
using Rational = mpq_class;

// Accepts "p/q", an integer "p", or a finite decimal such as "0.25" or
// "-1.5". Repeating-decimal notation ("0.333...", "0.1(6)") is rejected with
// a hint to use p/q. Throws Error(ErrorKind::parse).
Rational rational_from_string(std::string_view text);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

inline Rational rational_abs(const Rational& value) {
  return value >= 0 ? value : Rational(-value);
}

}  // namespace itsec
