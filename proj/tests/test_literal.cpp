#include <random>

#include "doctest.h"
#include "padlab/literal.hpp"

using namespace padlab;

TEST_CASE("rational literals delegate to from_rational") {
  PadicContext c3(3, 10);
  auto parsed = parse_literal("13/4", c3);
  CHECK(parsed.same_representation(PadicNumber::from_rational(13, 4, c3)));
  CHECK(parse_literal("-9", c3).same_representation(
      PadicNumber::from_integer(-9, c3)));
  CHECK(parse_literal("0", c3).is_exact_zero());
}

TEST_CASE("expansion literal with explicit cap") {
  PadicContext c5(5, 12);
  auto x = parse_literal("2 + 3*5 + O(5^6)", c5);
  CHECK(x.finite_valuation() == 0);
  CHECK(x.unit_residue(6) == 17);  // 2 + 15
  CHECK(x.absolute_precision() == 6);
}

TEST_CASE("expansion literal errors") {
  PadicContext c5(5, 12);
  CHECK_THROWS_AS(parse_literal("7 + 3*5", c5), ParseError);       // digit >= p
  CHECK_THROWS_AS(parse_literal("2 + 3*7", c5), ParseError);       // base mismatch
  CHECK_THROWS_AS(parse_literal("2 + 3", c5), ParseError);         // duplicate exponent
  CHECK_THROWS_AS(parse_literal("3*5 + 2", c5), ParseError);       // decreasing exponent
  CHECK_THROWS_AS(parse_literal("2*5^x", c5), ParseError);         // malformed exponent
  CHECK_THROWS_AS(parse_literal("2*5 + O(5^1)", c5), ParseError);  // cap <= valuation
  CHECK_THROWS_AS(parse_literal("O(5^3) + 2", c5), ParseError);    // cap not last
  CHECK_THROWS_AS(parse_literal("", c5), ParseError);
  CHECK_THROWS_AS(parse_literal("2 + 3*5^9 + O(5^6)", c5), ParseError);
}

TEST_CASE("format/parse round trip") {
  PadicContext c5(5, 12);
  SUBCASE("worked example") {
    auto x = parse_literal("2 + 3*5 + O(5^6)", c5);
    CHECK(format_literal(x) == "2 + 3*5 + O(5^6)");
  }
  SUBCASE("zeros") {
    CHECK(format_literal(PadicNumber::zero(c5)) == "0");
    auto z = PadicNumber::zero_below(c5, 6);
    CHECK(format_literal(z) == "0 + O(5^6)");
    CHECK(parse_literal(format_literal(z), c5).same_representation(z));
  }
  SUBCASE("negative valuation digits") {
    auto x = PadicNumber::from_rational(7, 25, c5);
    auto back = parse_literal(format_literal(x), c5);
    CHECK(back.same_representation(x));
  }
  SUBCASE("1000 random values round-trip to the same representation") {
    std::mt19937_64 rng(42u);
    for (int i = 0; i < 1000; ++i) {
      long val = static_cast<long>(rng() % 9) - 4;
      int rel = 1 + static_cast<int>(rng() % 12);
      mpz_class u = 1 + static_cast<long>(rng() % 4);
      for (int d = 1; d < rel; ++d)
        u += mpz_class(static_cast<long>(rng() % 5)) * c5.p_power(d);
      auto x = PadicNumber::from_parts(val, u, c5, rel);
      auto back = parse_literal(format_literal(x), c5);
      CHECK(back.same_representation(x));
    }
  }
  SUBCASE("from_rational -> format -> parse is identity to precision N") {
    std::mt19937_64 rng(7u);
    for (int i = 0; i < 200; ++i) {
      long n = static_cast<long>(rng() % 20001) - 10000;
      long d = 1 + static_cast<long>(rng() % 999);
      auto x = PadicNumber::from_rational(n, d, c5);
      auto back = parse_literal(format_literal(x), c5);
      if (x.is_exact_zero()) {
        CHECK(back.is_exact_zero());
      } else {
        CHECK(back.equal_to_precision(x, x.absolute_precision()));
        CHECK(back.same_representation(x));
      }
    }
  }
}
