#include "pathlab/rational.hpp"

#include <cctype>

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  if (!is_integer_literal(numerator))
    throw Error(ErrorKind::MalformedInput, "not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(Integer(std::string(numerator)));

  const auto denominator = text.substr(slash + 1);
  if (!is_integer_literal(denominator) || denominator[0] == '-')
    throw Error(ErrorKind::MalformedInput, "not a rational: '" + std::string(text) + "'");
  const Integer num{std::string(numerator)};
  const Integer den{std::string(denominator)};
  if (den == 0)
    throw Error(ErrorKind::MalformedInput, "zero denominator: '" + std::string(text) + "'");
  Rational value;
  mpz_set(value.get_num_mpz_t(), num.get_mpz_t());
  mpz_set(value.get_den_mpz_t(), den.get_mpz_t());
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_num() != value.get_num() || canonical.get_den() != value.get_den())
    throw Error(ErrorKind::MalformedInput,
                "rational not in lowest terms: '" + std::string(text) + "'");
  return canonical;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational coordinate_sum(const RationalVector& x) {
  Rational sum = 0;
  for (const auto& v : x) sum += v;
  return sum;
}

}  // namespace pathlab
