#include "qcat/scalar.hpp"

#include "qcat/error.hpp"

#include <cctype>

namespace qcat {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotComplementary: return "NotComplementary";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ComponentCountMismatch: return "ComponentCountMismatch";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::RepeatedCoefficient: return "RepeatedCoefficient";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar power(const Scalar& x, long e) {
  if (e < 0) {
    if (x == 0) throw Error(ErrorKind::BadParameters, "negative power of zero");
    Scalar inv = 1 / x;
    return power(inv, -e);
  }
  Scalar result = 1;
  Scalar base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace qcat
