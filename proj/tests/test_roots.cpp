#include <algorithm>

#include "doctest.h"
#include "padlab/roots.hpp"

using namespace padlab;

TEST_CASE("newton_lift worked examples") {
  SUBCASE("x^2 - 13 at p=3 from 1: root is 7 mod 9 and squares back") {
    PadicContext c3(3, 20);
    auto thirteen = PadicNumber::from_integer(13, c3);
    auto res = newton_lift(
        std::vector<PadicNumber>{-thirteen, PadicNumber::zero(c3),
                                 PadicNumber::one(c3)},
        PadicNumber::from_integer(1, c3), 20);
    CHECK(res.root.unit_residue(2) == 7);
    // oracle: square the result and compare residues mod 3^20
    auto sq = res.root * res.root;
    CHECK(sq.equal_to_precision(thirteen, 20));
    CHECK(res.certificate.derivative_valuation == Valuation(0));
    CHECK(res.certificate.start_residual >= Valuation(1));
    CHECK(res.certificate.iterations <= 7);
  }
  SUBCASE("linear polynomial returns its value immediately") {
    PadicContext c5(5, 10);
    auto five = PadicNumber::from_integer(5, c5);
    auto res = newton_lift(
        std::vector<PadicNumber>{-five, PadicNumber::one(c5)}, five, 10);
    CHECK(res.certificate.iterations == 0);
    CHECK(res.root.same_representation(five));
  }
  SUBCASE("x^2 - 29 at p=5 from 2: root is 2 mod 25") {
    PadicContext c5(5, 16);
    auto c = PadicNumber::from_integer(29, c5);
    auto res = newton_lift(
        std::vector<PadicNumber>{-c, PadicNumber::zero(c5),
                                 PadicNumber::one(c5)},
        PadicNumber::from_integer(2, c5), 16);
    CHECK(res.root.unit_residue(2) == 2);
    CHECK((res.root * res.root).equal_to_precision(c, 16));
  }
  SUBCASE("precondition violations are rejected") {
    PadicContext c3(3, 10);
    // x^2 - 2 from start 1: residual v(1-2)=0, derivative v=0, 0 > 0 fails.
    auto two = PadicNumber::from_integer(2, c3);
    CHECK_THROWS_AS(
        newton_lift(std::vector<PadicNumber>{-two, PadicNumber::zero(c3),
                                             PadicNumber::one(c3)},
                    PadicNumber::one(c3), 10),
        DomainError);
  }
}

TEST_CASE("sqrt") {
  PadicContext c3(3, 14);
  SUBCASE("sqrt(9) = 3, principal branch") {
    auto r = padlab::sqrt(PadicNumber::from_integer(9, c3));
    CHECK(r.equal_to_precision(PadicNumber::from_integer(3, c3), 10));
    auto other = -r;
    CHECK((other * other).equal_to_precision(PadicNumber::from_integer(9, c3), 10));
  }
  SUBCASE("sqrt(13) exists at p=3 and squares back") {
    auto x = PadicNumber::from_integer(13, c3);
    auto r = padlab::sqrt(x);
    CHECK((r * r).equal_to_precision(x, 14));
    CHECK(r.unit_residue(1) == 1);  // principal: residue 1 < 3 - 1
  }
  SUBCASE("non-residue raises the modulus hint") {
    PadicContext c5(5, 10);
    try {
      padlab::sqrt(PadicNumber::from_integer(2, c5));  // squares mod 5: {1,4}
      FAIL("expected NonResidueError");
    } catch (const NonResidueError& e) {
      CHECK(e.suggested_modulus == std::vector<long>{-2, 0, 1});
    }
  }
  SUBCASE("odd valuation rejected") {
    CHECK_THROWS_AS(padlab::sqrt(PadicNumber::from_integer(3, c3)), DomainError);
  }
}

TEST_CASE("roots of unity in the base field") {
  SUBCASE("m=2 at p=5 gives {1, -1}") {
    PadicContext c5(5, 12);
    auto set = nth_roots_of_unity(2, c5);
    REQUIRE(set.members.size() == 2);
    CHECK(set.members[0].same_representation(PadicNumber::one(c5)));
    CHECK(set.members[1].equal_to_precision(PadicNumber::from_integer(-1, c5), 12));
  }
  SUBCASE("m=4 at p=5: four roots, nontrivial ones on S_1(1)") {
    PadicContext c5(5, 12);
    auto set = nth_roots_of_unity(4, c5);
    REQUIRE(set.members.size() == 4);
    for (size_t i = 1; i < set.members.size(); ++i) {
      auto d = set.members[i] - PadicNumber::one(c5);
      CHECK(d.norm().is_one());
    }
  }
  SUBCASE("m=8 at p=3 needs the unramified quadratic") {
    PadicContext c3(3, 12);
    try {
      nth_roots_of_unity(8, c3);
      FAIL("expected NotRepresentableError");
    } catch (const NotRepresentableError& e) {
      CHECK(e.hint.find("degree 2") != std::string::npos);
    }
  }
}

TEST_CASE("roots of unity in extensions") {
  PadicContext c3(3, 12);
  SUBCASE("eight 8th roots in the unramified quadratic of Q_3") {
    auto F = make_extension(std::vector<long>{-2, 0, 1}, c3);
    auto set = nth_roots_of_unity(8, F);
    REQUIRE(set.members.size() == 8);
    CHECK(set.members[0].to_base().has_value());
    // brute-force oracle: distinct residues, each powering to 1 in F_9
    for (size_t i = 1; i < set.members.size(); ++i) {
      auto d = set.members[i] - ExtElement::one(F);
      CHECK(d.valuation() == Valuation(0));  // Gamma_u on the unit sphere
    }
  }
  SUBCASE("Gamma_p level 1 at p=3: the spec field and v(zeta-1) = 1/2") {
    auto roots = p_power_roots_of_unity(c3);
    CHECK(roots.field == make_extension(std::vector<long>{3, 3, 1}, c3));
    REQUIRE(roots.set.members.size() == 3);
    auto& id = roots.set.members[0];
    REQUIRE(id.to_base().has_value());
    CHECK(id.to_base()->same_representation(PadicNumber::one(c3)));
    for (size_t j = 1; j < 3; ++j) {
      auto d = roots.set.members[j] - ExtElement::one(roots.field);
      CHECK(d.valuation() == Valuation(1, 2));
      CHECK(d.valuation() > Valuation(0));  // Gamma_p inside U_1(1)
    }
    CHECK_THROWS_AS(p_power_roots_of_unity(c3, 2), DomainError);
  }
}

TEST_CASE("p_th_root") {
  PadicContext c3(3, 14);
  SUBCASE("root of 1 is 1") {
    auto r = p_th_root(PadicNumber::one(c3));
    REQUIRE(r.has_value());
    CHECK(r->equal_to_precision(PadicNumber::one(c3), 14));
  }
  SUBCASE("forward exponentiation oracle: (1+p)^p has p-th root 1+p") {
    auto base = PadicNumber::from_integer(4, c3);  // 1 + 3
    auto c = base.pow(3);
    auto r = p_th_root(c);
    REQUIRE(r.has_value());
    CHECK(r->equal_to_precision(base, 13));
  }
  SUBCASE("c = 2 mod 9 has no cube root in Q_3 (exhaustive cube table)") {
    // oracle: cubes of units mod 27
    std::vector<long> cubes;
    for (long x = 1; x < 27; ++x)
      if (x % 3 != 0) cubes.push_back(x * x * x % 27);
    auto c = PadicNumber::from_integer(2, c3);
    for (long cube : cubes) CHECK(cube % 9 != 2);
    CHECK_FALSE(p_th_root(c).has_value());
  }
  SUBCASE("non-unit rejected") {
    CHECK_THROWS_AS(p_th_root(PadicNumber::from_integer(3, c3)), DomainError);
  }
}

TEST_CASE("nth_roots in the base field") {
  SUBCASE("n = 1 returns c itself") {
    PadicContext c5(5, 12);
    auto c = PadicNumber::from_integer(7, c5);
    auto res = nth_roots(c, 1);
    REQUIRE(res.roots.size() == 1);
    CHECK(res.roots[0].same_representation(c));
    CHECK(res.missing() == 0);
  }
  SUBCASE("square roots of a residue at p=5") {
    PadicContext c5(5, 12);
    auto res = nth_roots(PadicNumber::from_integer(4, c5), 2);
    REQUIRE(res.roots.size() == 2);
    for (const auto& r : res.roots)
      CHECK((r * r).equal_to_precision(PadicNumber::from_integer(4, c5), 11));
  }
  SUBCASE("non-residue gives zero roots plus a hint") {
    PadicContext c5(5, 12);
    auto res = nth_roots(PadicNumber::from_integer(2, c5), 2);
    CHECK(res.roots.empty());
    CHECK(res.missing() == 2);
    CHECK(!res.extension_hint.empty());
  }
  SUBCASE("cube roots of 1 at p=7 match the residue brute force") {
    PadicContext c7(7, 12);
    std::vector<long> oracle;
    for (long x = 1; x < 7; ++x)
      if (x * x * x % 7 == 1) oracle.push_back(x);
    REQUIRE(oracle.size() == 3);  // gcd(3, 6) = 3
    auto res = nth_roots(PadicNumber::one(c7), 3);
    REQUIRE(res.roots.size() == 3);
    std::vector<long> found;
    for (const auto& r : res.roots)
      found.push_back(mpz_class(r.unit_residue(1)).get_si());
    std::sort(found.begin(), found.end());
    CHECK(found == oracle);
  }
  SUBCASE("p-part: cube roots of 1 at p=3 in Q_3 vs the cyclotomic field") {
    PadicContext c3(3, 12);
    auto res = nth_roots(PadicNumber::one(c3), 3);
    REQUIRE(res.roots.size() == 1);  // only 1 itself
    CHECK(res.missing() == 2);
    CHECK(res.extension_hint.find("cyclotomic") != std::string::npos);

    auto cyclo = cyclotomic_level1_field(c3);
    auto ext = nth_roots(ExtElement::one(cyclo), 3);
    REQUIRE(ext.roots.size() == 3);
    CHECK(ext.missing() == 0);
    for (const auto& r : ext.roots) {
      auto d = r.pow(3) - ExtElement::one(cyclo);
      CHECK(d.is_zero_to(9));
    }
  }
}
