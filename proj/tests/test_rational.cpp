#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathlab/error.hpp"
#include "pathlab/rational.hpp"

using namespace pathlab;

namespace {
Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("parse integers and fractions") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("3/4") == frac(3, 4));
  CHECK(parse_rational("-1/2") == frac(-1, 2));
  CHECK(parse_rational("5/1") == 5);
  CHECK(parse_rational("123456789012345678901234567891/7") ==
        Rational(Integer("123456789012345678901234567891"), Integer(7)));
}

TEST_CASE("reject malformed rationals") {
  for (const char* bad : {"", "-", "1/", "/2", "2/4", "1/0", "1/-2", "1.5", " 1", "1 ", "a", "1/2/3"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedInput);
    }
  }
}

TEST_CASE("format round-trips in lowest terms") {
  for (const Rational& r : {Rational(0), frac(3, 9), frac(-5, 10), Rational(7)}) {
    const auto s = format_rational(r);
    CHECK(parse_rational(s) == r);
  }
  CHECK(format_rational(frac(6, 4)) == "3/2");
  CHECK(format_rational(frac(4, 2)) == "2");
}

TEST_CASE("coordinate sum") {
  CHECK(coordinate_sum({frac(1, 2), frac(1, 3)}) == frac(5, 6));
  CHECK(coordinate_sum({}) == 0);
}
