#include <algorithm>

#include "doctest.h"
#include "padlab/dynamics.hpp"

using namespace padlab;

namespace {

PolyMap map_of(long p, long n, long a, int precision = 40) {
  PadicContext ctx(p, precision);
  return make_map(n, PadicNumber::from_integer(a, ctx));
}

// Test-side series oracle: coefficients of f(x0 + T) mod T^(deg+1) by dense
// polynomial arithmetic; coefficient of T^m equals f^(m)(x0)/m!.
using Series = std::vector<PadicNumber>;

Series series_mul(const Series& a, const Series& b, size_t cap,
                  const PadicContext& ctx) {
  Series out(cap, PadicNumber::zero(ctx));
  for (size_t i = 0; i < a.size() && i < cap; ++i) {
    if (a[i].is_exact_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < cap; ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

Series series_pow(const Series& base, long e, size_t cap,
                  const PadicContext& ctx) {
  Series r(cap, PadicNumber::zero(ctx));
  r[0] = PadicNumber::one(ctx);
  Series b = base;
  while (e > 0) {
    if (e & 1) r = series_mul(r, b, cap, ctx);
    b = series_mul(b, b, cap, ctx);
    e >>= 1;
  }
  return r;
}

Series taylor_series_oracle(const PolyMap& map, const PadicNumber& x0) {
  const PadicContext& ctx = map.ctx;
  size_t cap = static_cast<size_t>(2 * map.n + 2);
  Series lin(cap, PadicNumber::zero(ctx));
  lin[0] = x0;
  lin[1] = PadicNumber::one(ctx);
  Series hi = series_pow(lin, 2 * map.n + 1, cap, ctx);
  Series lo = series_pow(lin, map.n + 1, cap, ctx);
  Series out(cap, PadicNumber::zero(ctx));
  for (size_t i = 0; i < cap; ++i) out[i] = hi[i] + map.a * lo[i];
  return out;
}

}  // namespace

TEST_CASE("make_map validation") {
  CHECK_NOTHROW(map_of(5, 1, 5));
  CHECK_NOTHROW(map_of(7, 3, 7));
  PadicContext c5(5, 40);
  CHECK_THROWS_AS(make_map(1, PadicNumber::one(c5)), DomainError);   // |a| = 1
  CHECK_THROWS_AS(make_map(1, PadicNumber::zero(c5)), DomainError);  // a = 0
  CHECK_THROWS_AS(make_map(0, PadicNumber::from_integer(5, c5)), DomainError);
}

TEST_CASE("evaluate and derivative") {
  auto map = map_of(5, 1, 5);
  SUBCASE("f(0) = 0 exactly") {
    auto y = evaluate(map, PadicNumber::zero(map.ctx));
    CHECK(y.is_exact_zero());
  }
  SUBCASE("every computed fixed point satisfies f(x) = x") {
    auto fam = fixed_points(map);
    for (const auto& x : fam.all_nonzero())
      CHECK((evaluate(map, x) - x).is_zero_to(map.ctx.precision - 2));
  }
  SUBCASE("|f'(c_plus)| = 1 via the strong triangle") {
    // oracle: f' = 3x^2 + 10x; |3 c^2| = 1 differs from |10 c| = 1/5,
    // so the sum has the max norm.
    auto [c_plus, c_minus] = fixed_point_pair(map);
    auto three_c2 = PadicNumber::from_integer(3, map.ctx) * c_plus * c_plus;
    auto ten_c = PadicNumber::from_integer(10, map.ctx) * c_plus;
    REQUIRE(three_c2.valuation() == Valuation(0));
    REQUIRE(ten_c.valuation() == Valuation(1));
    CHECK(derivative(map, c_plus).valuation() == Valuation(0));
  }
}

TEST_CASE("fixed point pair") {
  SUBCASE("p=5, n=1, a=5: residues from the principal sqrt branch") {
    // oracle: sqrt(29) = 2 mod 5 (principal), c+ = (2-5)/2 = 1 mod 5,
    // c- = (-5-2)/2 = 4 mod 5.
    auto map = map_of(5, 1, 5);
    auto [cp, cm] = fixed_point_pair(map);
    CHECK(cp.unit_residue(1) == 1);
    CHECK(cm.unit_residue(1) == 4);
    CHECK(cp.norm().is_one());
    CHECK(cm.norm().is_one());
  }
  SUBCASE("Vieta holds to full precision") {
    auto map = map_of(5, 1, 5);
    auto [cp, cm] = fixed_point_pair(map);
    CHECK((cp * cm + PadicNumber::one(map.ctx)).is_zero_to(39));
    CHECK((cp + cm + map.a).is_zero_to(39));
  }
  SUBCASE("|c_pm| = 1 for p=3, a=3 (lemma 3.1 instance)") {
    auto map = map_of(3, 3, 3);
    auto [cp, cm] = fixed_point_pair(map);
    CHECK(cp.norm().is_one());
    CHECK(cm.norm().is_one());
  }
}

TEST_CASE("classify") {
  SUBCASE("Siegel pair at p=5, n=1, a=5: indifferent, all r < 1") {
    auto map = map_of(5, 1, 5);
    auto fam = fixed_points(map);
    REQUIRE(fam.roots_plus.size() == 1);
    auto rec = classify(map, fam.roots_plus[0]);
    CHECK(rec.character == Character::indifferent);
    CHECK(rec.multiplier_norm.is_one());
    REQUIRE(rec.siegel_radius.has_value());
    CHECK(rec.siegel_radius->sup_exponent == Valuation(0));
    CHECK(rec.siegel_radius->exclusive);
    CHECK(!rec.attraction_radius.has_value());
    CHECK(rec.case_tags == std::set<CaseTag>{CaseTag::i, CaseTag::iii});
  }
  SUBCASE("p=7, n=3, a=7: every nonzero fixed point attracting, |l| <= 1/7") {
    auto map = map_of(7, 3, 7);
    auto fam = fixed_points(map);
    REQUIRE(fam.roots_plus.size() == 3);
    REQUIRE(fam.roots_minus.size() == 3);
    for (const auto& x : fam.all_nonzero()) {
      auto rec = classify(map, x);
      CHECK(rec.character == Character::attracting);
      CHECK(rec.multiplier_norm.exponent >= Valuation(1));
      REQUIRE(rec.attraction_radius.has_value());
      CHECK(rec.attraction_radius->sup_exponent == Valuation(0));
    }
  }
  SUBCASE("the origin is attracting with multiplier exactly zero") {
    auto map = map_of(5, 1, 5);
    auto rec = classify(map, PadicNumber::zero(map.ctx));
    CHECK(rec.character == Character::attracting);
    CHECK(rec.multiplier.is_exact_zero());
    CHECK(rec.multiplier_norm.is_zero());
    REQUIRE(rec.attraction_radius.has_value());
    CHECK(rec.attraction_radius->sup_exponent == Valuation(0));
  }
  SUBCASE("non-fixed input rejected") {
    auto map = map_of(5, 1, 5);
    CHECK_THROWS_AS(classify(map, PadicNumber::from_integer(2, map.ctx)),
                    DomainError);
  }
}

TEST_CASE("classify radii agree with the truncated-series oracle") {
  for (auto params : {std::tuple<long, long, long>{5, 1, 5},
                      std::tuple<long, long, long>{7, 3, 7},
                      std::tuple<long, long, long>{5, 2, 5}}) {
    auto [p, n, a] = params;
    auto map = map_of(p, n, a);
    auto fam = fixed_points(map);
    for (const auto& x : fam.all_nonzero()) {
      auto series = taylor_series_oracle(map, x);
      auto lib = detail::taylor_valuations(map, x);
      REQUIRE(lib.size() == series.size() - 1);
      for (size_t m = 1; m < series.size(); ++m) {
        Valuation expect = valuation_lower_bound(series[m]);
        CHECK(lib[m - 1] == expect);
      }
      // f(x0 + T) - x0 must also have vanishing constant term
      CHECK((series[0] - x).is_zero_to(map.ctx.precision - 2));
    }
  }
}

TEST_CASE("theorem_case dispatch") {
  using Tags = std::set<CaseTag>;
  CHECK(theorem_case(5, 1) == Tags{CaseTag::i, CaseTag::iii});
  CHECK(theorem_case(3, 3) == Tags{CaseTag::i, CaseTag::ii});
  CHECK(theorem_case(7, 3) == Tags{CaseTag::v});
  CHECK(theorem_case(3, 6) == Tags{CaseTag::i, CaseTag::iv});
  CHECK(theorem_case(3, 1) == Tags{CaseTag::v});
  CHECK(theorem_case(5, 11) == Tags{CaseTag::i, CaseTag::iii});

  SUBCASE("partition invariants over a sweep") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      for (long n = 1; n <= 40; ++n) {
        auto tags = theorem_case(p, n);
        // exactly one of (i) and (v)
        CHECK((tags.count(CaseTag::i) + tags.count(CaseTag::v)) == 1);
        // (ii) and (iv) are mutually exclusive
        CHECK(!(tags.count(CaseTag::ii) && tags.count(CaseTag::iv)));
        // (iii) implies (i)
        if (tags.count(CaseTag::iii)) CHECK(tags.count(CaseTag::i));
      }
    }
  }
}

TEST_CASE("orbit traces") {
  auto map = map_of(5, 1, 5);
  auto fam = fixed_points(map);
  const auto& cp = fam.roots_plus[0];
  SUBCASE("starting at a fixed point: distance stays zero") {
    auto trace = iterate(map, cp, 10, cp);
    CHECK(trace.termination == OrbitTermination::converged);
    for (const auto& step : trace.distances) CHECK(step.second.is_zero());
  }
  SUBCASE("Siegel sphere: constant distance column") {
    auto u = PadicNumber::from_integer(7, map.ctx);
    auto x = cp + PadicNumber::from_integer(5, map.ctx) * u;
    auto trace = iterate(map, x, 50, cp);
    CHECK(trace.termination == OrbitTermination::sphere_preserved);
    REQUIRE(trace.distances.size() == 51);
    for (const auto& step : trace.distances)
      CHECK(step.second.exponent == Valuation(1));
  }
  SUBCASE("attracting case: valuations increase to the floor") {
    auto amap = map_of(7, 3, 7);
    auto afam = fixed_points(amap);
    const auto& xj = afam.roots_plus[0];
    auto x = xj + PadicNumber::from_integer(7, amap.ctx);
    auto trace = iterate(amap, x, 200, xj);
    CHECK(trace.termination == OrbitTermination::converged);
    for (size_t i = 1; i + 1 < trace.distances.size(); ++i) {
      CHECK(trace.distances[i].second.exponent <
            trace.distances[i + 1].second.exponent);
    }
  }
  SUBCASE("escape from a non-fixed reference") {
    // f(2) = 28 != 2 mod 5, so points near 2 leave U_1(2) after one step.
    auto ref = PadicNumber::from_integer(2, map.ctx);
    auto x = ref + PadicNumber::from_integer(5, map.ctx);
    auto trace = iterate(map, x, 10, ref);
    CHECK(trace.termination == OrbitTermination::escaped);
  }
}

TEST_CASE("verify_sphere_invariance") {
  auto map = map_of(5, 1, 5);
  auto fam = fixed_points(map);
  SUBCASE("Siegel point passes for j = 1..3") {
    for (int j = 1; j <= 3; ++j) {
      auto rep = verify_sphere_invariance(map, fam.roots_plus[0], j, 25, 25, 42);
      CHECK(rep.verdict == Verdict::pass);
      CHECK(rep.violations == 0);
    }
  }
  SUBCASE("an attracting center reports violations instead of passing") {
    auto amap = map_of(7, 3, 7);
    auto afam = fixed_points(amap);
    auto rep = verify_sphere_invariance(amap, afam.roots_plus[0], 1, 5, 10, 42);
    CHECK(rep.verdict == Verdict::fail);
    CHECK(rep.violations > 0);
  }
  SUBCASE("radius beyond the precision window is rejected") {
    CHECK_THROWS_AS(
        verify_sphere_invariance(map, fam.roots_plus[0], 39, 5, 5, 42),
        DomainError);
  }
}

TEST_CASE("verify_attraction") {
  auto map = map_of(7, 3, 7);
  auto fam = fixed_points(map);
  SUBCASE("nonzero fixed points attract their unit disks") {
    auto rep = verify_attraction(map, fam.roots_plus[0], 20, 200, 42);
    CHECK(rep.verdict == Verdict::pass);
  }
  SUBCASE("origin basin") {
    auto rep = verify_attraction(map, PadicNumber::zero(map.ctx), 20, 200, 42);
    CHECK(rep.verdict == Verdict::pass);
  }
  SUBCASE("translated disks via Gamma^(3) at p=7, n=10 (2n+1 = 3*7)") {
    auto tmap = map_of(7, 10, 7);
    auto tfam = fixed_points(tmap);
    REQUIRE(tfam.roots_plus.size() == 2);  // gcd(10, 6) = 2 residue solutions
    auto xi = nth_roots_of_unity(3, tmap.ctx);
    auto rep =
        verify_attraction(tmap, tfam.roots_plus[0], 10, 400, 42, xi.members);
    CHECK(rep.verdict == Verdict::pass);
  }
  SUBCASE("indifferent point rejected") {
    auto smap = map_of(5, 1, 5);
    auto sfam = fixed_points(smap);
    CHECK_THROWS_AS(verify_attraction(smap, sfam.roots_plus[0], 5, 10, 42),
                    DomainError);
  }
}

TEST_CASE("disjointness matrices") {
  SUBCASE("|c_plus - c_minus| = |sqrt(a^2+4)| = 1 at p=5, n=1, a=5") {
    auto map = map_of(5, 1, 5);
    auto fam = fixed_points(map);
    auto pts = fam.all_nonzero();
    REQUIRE(pts.size() == 2);
    auto m = disjointness_matrix(pts);
    CHECK(m[0][1].str() == "p^0");
  }
  SUBCASE("p=5, n=2, a=5: all four points pairwise at distance exactly 1") {
    auto map = map_of(5, 2, 5);
    auto fam = fixed_points(map);
    auto pts = fam.all_nonzero();
    REQUIRE(pts.size() == 4);
    auto m = disjointness_matrix(pts);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(m[i][j].is_one());
  }
  SUBCASE("single point family gives the empty off-diagonal") {
    auto map = map_of(3, 3, 3);  // no cube roots of c_pm in Q_3
    auto fam = fixed_points(map);
    CHECK(fam.roots_plus.empty());
    CHECK(fam.missing_plus == 3);
    CHECK(!fam.hint_plus.empty());
    auto m = disjointness_matrix(fam.all_nonzero());
    CHECK(m.empty());
  }
  SUBCASE("shared-disk clusters at p=3, n=3, a=9 in the cyclotomic field") {
    // a = 9 makes both c_pm cubes in Q_3: +-1 mod 9 (cube units of Z_3).
    auto map = map_of(3, 3, 9);
    auto cyclo = cyclotomic_level1_field(map.ctx);
    auto fam = fixed_points_in(map, cyclo);
    REQUIRE(fam.roots_plus.size() == 3);
    REQUIRE(fam.roots_minus.size() == 3);
    // within a cluster: |x_i - x_j| = |1 - zeta_3| = 3^(-1/2)
    auto m = disjointness_matrix(fam.roots_plus);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(m[i][j].str() == "p^-1/2");
    // across the c_plus / c_minus families: distance 1 (lemma 3.10 shape)
    auto all = fam.all_nonzero();
    auto big = disjointness_matrix(all);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 3; j < 6; ++j) CHECK(big[i][j].is_one());
  }
  SUBCASE("case (iv) shape at p=3, n=6, a=9: two clusters of the c_minus family") {
    auto map = map_of(3, 6, 9);
    CHECK(theorem_case(3, 6) == std::set<CaseTag>{CaseTag::i, CaseTag::iv});
    auto cyclo = cyclotomic_level1_field(map.ctx);
    auto fam = fixed_points_in(map, cyclo);
    REQUIRE(fam.roots_minus.size() == 6);  // (+-sqrt)(cube root)(zeta_3^j)
    auto m = disjointness_matrix(fam.roots_minus);
    int half = 0, unit = 0;
    for (size_t i = 0; i < 6; ++i) {
      for (size_t j = i + 1; j < 6; ++j) {
        if (m[i][j].str() == "p^-1/2")
          ++half;
        else if (m[i][j].is_one())
          ++unit;
      }
    }
    CHECK(half == 6);  // 2 clusters x C(3,2) pairs inside
    CHECK(unit == 9);  // 3*3 cross-cluster pairs
  }
}

TEST_CASE("preimage sphere checks") {
  auto map = map_of(5, 1, 5);
  auto fam = fixed_points(map);
  SUBCASE("base field: only the trivial preimage exists") {
    auto rep = preimage_sphere_check(map, fam.roots_plus[0]);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.violations == 0);
  }
  SUBCASE("unramified quadratic: the two conjugate preimages sit on S_1") {
    auto F = make_extension(std::vector<long>{-2, 0, 1}, map.ctx);
    for (const auto& fp : fam.all_nonzero()) {
      auto rep = preimage_sphere_check(map, ExtElement::embed(fp, F));
      CHECK(rep.verdict == Verdict::pass);
      long on_sphere = 0;
      for (const auto& row : rep.evidence)
        if (row.location.find("on S_1") != std::string::npos) ++on_sphere;
      CHECK(on_sphere == 2);
    }
  }
  SUBCASE("gcd(2n+1, p) != 1 rejected") {
    auto bad = map_of(7, 3, 7);
    auto bfam = fixed_points(bad);
    CHECK_THROWS_AS(preimage_sphere_check(bad, bfam.roots_plus[0]), DomainError);
  }
}
