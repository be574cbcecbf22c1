#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dialg/error.hpp"

namespace dialg {

/// Exact rationals. gmpxx keeps results of arithmetic in lowest terms with a
/// positive denominator; values built from parts go through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace detail

/// Parses "p/q" or "p". A zero denominator or any stray character is a
/// parse error.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, num)) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
  } else {
    auto den_text = text.substr(slash + 1);
    if (!detail::parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !detail::parse_integer(den_text, den)) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
inline std::string format_rational(const Rational& value) { return value.get_str(); }

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace dialg
