#include <gmpxx.h>

#include <random>

#include "doctest.h"
#include "padlab/padic.hpp"

using namespace padlab;

namespace {

// Test-side oracle: extended gcd, independent of the library's mpz_invert path.
mpz_class egcd_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  REQUIRE(old_r == 1);
  mpz_class inv;
  mpz_mod(inv.get_mpz_t(), old_s.get_mpz_t(), m.get_mpz_t());
  return inv;
}

// Factorization oracle: v_p of an exact rational, by dividing out p.
Valuation rational_valuation(const mpq_class& r, long p) {
  if (r == 0) return Valuation::infinity();
  mpz_class tmp;
  mpz_class pz(p);
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t()));
  return Valuation(vn - vd);
}

}  // namespace

TEST_CASE("context validation") {
  CHECK_NOTHROW(PadicContext(3, 10));
  CHECK_NOTHROW(PadicContext(13, 40));
  CHECK_THROWS_AS(PadicContext(2, 10), DomainError);   // p = 2 rejected
  CHECK_THROWS_AS(PadicContext(9, 10), DomainError);   // composite
  CHECK_THROWS_AS(PadicContext(5, 3), DomainError);    // precision floor
}

TEST_CASE("from_rational examples") {
  PadicContext c3(3, 10);
  SUBCASE("9 = 3^2 * 1") {
    auto x = PadicNumber::from_rational(9, 1, c3);
    CHECK(x.finite_valuation() == 2);
    CHECK(x.unit_part() == 1);
  }
  SUBCASE("13/4 at p=3: unit = 13 * 4^-1 mod 3^10") {
    auto x = PadicNumber::from_rational(13, 4, c3);
    CHECK(x.finite_valuation() == 0);
    mpz_class mod = c3.p_power(10);
    mpz_class expect = 13 * egcd_inverse(4, mod);
    mpz_mod(expect.get_mpz_t(), expect.get_mpz_t(), mod.get_mpz_t());
    CHECK(x.unit_part() == expect);
  }
  SUBCASE("0/7 is the exact zero") {
    PadicContext c5(5, 10);
    auto x = PadicNumber::from_rational(0, 7, c5);
    CHECK(x.is_exact_zero());
    CHECK(x.valuation().is_infinite());
    CHECK(x.norm().is_zero());
  }
  SUBCASE("zero denominator rejected") {
    CHECK_THROWS_AS(PadicNumber::from_rational(1, 0, c3), DomainError);
  }
}

TEST_CASE("norm examples") {
  PadicContext c3(3, 10);
  CHECK(PadicNumber::from_integer(9, c3).norm().str() == "p^-2");
  CHECK(PadicNumber::from_rational(1, 3, c3).norm().str() == "p^1");
  CHECK(PadicNumber::one(c3).norm().is_one());
}

TEST_CASE("addition and cancellation") {
  PadicContext c3(3, 10);
  SUBCASE("1 + (-1) cancels to zero at the full window") {
    auto x = PadicNumber::one(c3);
    auto s = x + (-x);
    CHECK(s.is_zero());
    CHECK(s.valuation().is_infinite());
    CHECK(s.absolute_precision() == 10);
  }
  SUBCASE("|x| != |y| forces |x+y| = max") {
    auto x = PadicNumber::one(c3);                       // |x| = 1
    auto y = PadicNumber::from_rational(1, 3, c3);       // |y| = 3
    CHECK((x + y).valuation() == Valuation(-1));
    auto z = PadicNumber::from_integer(3, c3);           // |z| = 1/3
    CHECK((x + z).valuation() == Valuation(0));          // |x+z| = 1
  }
  SUBCASE("partial cancellation tracks precision") {
    // (1 + 3) - 1 = 3: valuation 1, one digit of the window consumed.
    auto a = PadicNumber::from_integer(4, c3);
    auto b = PadicNumber::one(c3);
    auto d = a - b;
    CHECK(d.finite_valuation() == 1);
    CHECK(d.unit_part() == 1);
    CHECK(d.absolute_precision() == 10);
    CHECK(d.relative_precision() == 9);
  }
}

TEST_CASE("multiplication, division, pow") {
  PadicContext c5(5, 12);
  auto x = PadicNumber::from_rational(7, 2, c5);
  auto y = PadicNumber::from_integer(50, c5);
  CHECK((x * y).valuation() == Valuation(2));
  CHECK((x * y / y).equal_to_precision(x, 10));
  CHECK((x.pow(3) * x.pow(-3)).equal_to_precision(PadicNumber::one(c5), 12));
  CHECK(x.pow(0).same_representation(PadicNumber::one(c5)));

  CHECK_THROWS_AS(x / PadicNumber::zero(c5), DomainError);
  auto below = PadicNumber::one(c5) - PadicNumber::one(c5);
  CHECK_THROWS_AS(x / below, PrecisionError);
  CHECK_THROWS_AS(below.inverse(), PrecisionError);
}

TEST_CASE("equal_to_precision examples") {
  PadicContext c3(3, 10);
  auto x = PadicNumber::from_integer(1 + 3 + 9, c3);
  auto y = PadicNumber::from_integer(1 + 3, c3);
  CHECK(x.equal_to_precision(y, 2));
  CHECK_FALSE(x.equal_to_precision(y, 3));
  // k beyond the known precision is an error, not a guess.
  auto trimmed = PadicNumber::from_parts(0, mpz_class(4), c3, 3);
  CHECK_THROWS_AS(x.equal_to_precision(trimmed, 5), PrecisionError);
}

TEST_CASE("ultrametric properties vs factorization oracle") {
  PadicContext ctx(3, 40);
  std::mt19937_64 rng(20240817u);
  auto draw = [&rng]() {
    long n = static_cast<long>(rng() % 2000001) - 1000000;
    long d = static_cast<long>(rng() % 1000000) + 1;
    return mpq_class(n, d);
  };
  for (int i = 0; i < 2000; ++i) {
    mpq_class r = draw(), s = draw();
    r.canonicalize();
    s.canonicalize();
    auto x = PadicNumber::from_rational(r.get_num(), r.get_den(), ctx);
    auto y = PadicNumber::from_rational(s.get_num(), s.get_den(), ctx);

    CHECK(x.valuation() == rational_valuation(r, 3));

    mpq_class sum = r + s;
    Valuation vsum = rational_valuation(sum, 3);
    auto z = x + y;
    if (vsum.is_infinite()) {
      CHECK(z.is_zero());
    } else {
      CHECK(z.valuation() == vsum);
      // strong triangle
      CHECK(vsum >= std::min(x.valuation(), y.valuation()));
      // equality when norms differ
      if (x.valuation() != y.valuation())
        CHECK(vsum == std::min(x.valuation(), y.valuation()));
    }
    // multiplicativity is exact exponent arithmetic
    if (r != 0 && s != 0)
      CHECK((x * y).valuation() == x.valuation() + y.valuation());
  }
}

TEST_CASE("lemma 2.1 instance: S_1(0) minus U_1(a) sits on S_1(a)") {
  PadicContext ctx(7, 20);
  std::mt19937_64 rng(7u);
  auto random_unit = [&]() {
    mpz_class u = 1 + static_cast<long>(rng() % 6);
    for (int i = 1; i < 20; ++i) u += mpz_class(static_cast<long>(rng() % 7)) * ctx.p_power(i);
    return PadicNumber::from_integer(u, ctx);
  };
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    auto a = random_unit();
    auto x = random_unit();
    auto d = x - a;
    if (d.is_zero() || d.finite_valuation() > 0) continue;  // x in U_1(a)
    CHECK(d.norm().is_one());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("binomial_valuation") {
  SUBCASE("C(9,4) = 126 = 2 * 3^2 * 7") {
    // factor 126 directly
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 9, 4);
    CHECK(c == 126);
    mpz_class unit;
    long v = static_cast<long>(
        mpz_remove(unit.get_mpz_t(), c.get_mpz_t(), mpz_class(3).get_mpz_t()));
    CHECK(v == 2);
    CHECK(binomial_valuation(9, 4, 3) == 2);
  }
  SUBCASE("C(n,0) = 1") {
    CHECK(binomial_valuation(17, 0, 5) == 0);
    CHECK(binomial_valuation(343, 0, 7) == 0);
  }
  SUBCASE("|C(p^k, j)| <= 1/p for 1 <= j <= p^k - 1") {
    for (long p : {3L, 5L, 7L}) {
      for (unsigned long pk = static_cast<unsigned long>(p); pk <= 343;
           pk *= static_cast<unsigned long>(p)) {
        for (unsigned long j = 1; j < pk; ++j)
          CHECK(binomial_valuation(pk, j, p) >= 1);
      }
    }
  }
  SUBCASE("agrees with direct factorial factorization up to 120") {
    for (unsigned long n = 0; n <= 120; ++n) {
      for (unsigned long k = 0; k <= n; ++k) {
        mpz_class c, unit;
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        long v = static_cast<long>(mpz_remove(unit.get_mpz_t(), c.get_mpz_t(),
                                              mpz_class(5).get_mpz_t()));
        CHECK(binomial_valuation(n, k, 5) == v);
      }
    }
  }
}
