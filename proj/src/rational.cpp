#include "zkq/rational.hpp"

#include <cctype>

namespace zkq {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::domain_error("Rational: malformed literal '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace zkq
