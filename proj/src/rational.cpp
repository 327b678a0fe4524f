#include "schubss/rational.hpp"

#include "schubss/error.hpp"

#include <cctype>

namespace schubss {

EnumerationLimitError::EnumerationLimitError(std::uint64_t required, std::uint64_t limit)
    : Error("enumeration refused: |W| = " + std::to_string(required) + " exceeds limit " +
            std::to_string(limit)),
      required_(required),
      limit_(limit) {}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw UsageError("not an exact rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q;
  q.get_num() = Integer(n);
  q.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace schubss
