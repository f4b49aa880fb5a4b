#include "padlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <tuple>

#include "padlab/dynamics.hpp"
#include "padlab/literal.hpp"

namespace padlab {

namespace {

std::string nv(const Valuation& v) { return NormValue(v).str(); }

PolyMap suite_map(const SuiteConfig& cfg) {
  PadicContext ctx(cfg.p, cfg.precision);
  return make_map(cfg.n, parse_literal(cfg.a, ctx));
}

PadicNumber random_small_a(const PadicContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  long j = 1 + static_cast<long>(rng() % 4);
  return PadicNumber::from_parts(
      j, random_unit_digits(ctx, mix_seed(seed, 0xACEDu)), ctx);
}

// ---------------------------------------------------------------------------
// padic-core suites
// ---------------------------------------------------------------------------

VerificationReport suite_ultrametric(const SuiteConfig& cfg) {
  VerificationReport rep;
  PadicContext ctx(cfg.p, cfg.precision);
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&rng]() {
    long n = static_cast<long>(rng() % 2000001) - 1000000;
    long d = static_cast<long>(rng() % 1000000) + 1;
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  };
  auto oracle = [&ctx](const mpq_class& q) {
    if (q == 0) return Valuation::infinity();
    mpz_class tmp, pz(ctx.p);
    long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()));
    return Valuation(vn - vd);
  };
  long checked = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    mpq_class r = draw(), s = draw();
    auto x = PadicNumber::from_rational(r.get_num(), r.get_den(), ctx);
    auto y = PadicNumber::from_rational(s.get_num(), s.get_den(), ctx);
    if (x.valuation() != oracle(r))
      rep.add_violation("norm-oracle", nv(x.valuation()), "!=",
                        nv(oracle(r)), "sample " + std::to_string(i));
    mpq_class sum = r + s;
    auto z = x + y;
    Valuation want = oracle(sum);
    if (want.is_infinite()) {
      if (!z.is_zero())
        rep.add_violation("sum-oracle", nv(z.valuation()), "!=", "0",
                          "sample " + std::to_string(i));
    } else {
      if (z.is_zero() || z.valuation() != want)
        rep.add_violation("sum-oracle", z.is_zero() ? "0" : nv(z.valuation()),
                          "!=", nv(want), "sample " + std::to_string(i));
      if (want < std::min(x.valuation(), y.valuation()))
        rep.add_violation("strong-triangle", nv(want), "<",
                          nv(std::min(x.valuation(), y.valuation())),
                          "sample " + std::to_string(i));
      if (x.valuation() != y.valuation() &&
          want != std::min(x.valuation(), y.valuation()))
        rep.add_violation("max-when-distinct", nv(want), "!=",
                          nv(std::min(x.valuation(), y.valuation())),
                          "sample " + std::to_string(i));
    }
    if (r != 0 && s != 0 &&
        (x * y).valuation() != x.valuation() + y.valuation())
      rep.add_violation("multiplicativity", nv((x * y).valuation()), "!=",
                        nv(x.valuation() + y.valuation()),
                        "sample " + std::to_string(i));
    ++checked;
  }
  rep.add_statement("ultrametric", "p^0", "<=", "p^0",
                    std::to_string(checked) +
                        " random rational pairs vs the factorization oracle");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_2_1(const SuiteConfig& cfg) {
  VerificationReport rep;
  PadicContext ctx(cfg.p, cfg.precision);
  long on_sphere = 0, skipped = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    auto a = PadicNumber::from_parts(
        0, random_unit_digits(ctx, mix_seed(cfg.seed, 2 * i)), ctx);
    auto x = PadicNumber::from_parts(
        0, random_unit_digits(ctx, mix_seed(cfg.seed, 2 * i + 1)), ctx);
    auto d = x - a;
    if (d.is_zero() || d.valuation() > Valuation(0)) {
      ++skipped;  // x inside U_1(a): outside the lemma's premise
      continue;
    }
    if (d.norm().is_one())
      ++on_sphere;
    else
      rep.add_violation("sphere-membership", nv(d.valuation()), "!=", "p^0",
                        "sample " + std::to_string(i));
  }
  rep.add_statement("sphere-membership", "p^0", "=", "p^0",
                    std::to_string(on_sphere) + " points of S_1(0)\\U_1(a) on "
                    "S_1(a), " + std::to_string(skipped) + " inside U_1(a)");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_2_2(const SuiteConfig& cfg) {
  VerificationReport rep;
  unsigned long limit = cfg.samples > 0 ? static_cast<unsigned long>(cfg.samples)
                                        : 300;
  long worst = 0;
  for (unsigned long n = 0; n <= limit; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      long v = binomial_valuation(n, k, cfg.p);
      if (v < 0)
        rep.add_violation("binomial-integrality", "p^" + std::to_string(-v),
                          ">", "p^0",
                          "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
      worst = std::max(worst, -v);
    }
  }
  rep.add_statement("binomial-integrality", "p^" + std::to_string(worst), "<=",
                    "p^0", "all C(n,k), n <= " + std::to_string(limit));
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_2_3_3(const SuiteConfig& cfg) {
  VerificationReport rep;
  for (unsigned long pk = static_cast<unsigned long>(cfg.p); pk <= 343;
       pk *= static_cast<unsigned long>(cfg.p)) {
    long min_v = 1000;
    for (unsigned long j = 1; j < pk; ++j) {
      long v = binomial_valuation(pk, j, cfg.p);
      min_v = std::min(min_v, v);
      if (v < 1)
        rep.add_violation("p-power-binomial", nv(Valuation(v)), ">", "p^-1",
                          "C(" + std::to_string(pk) + "," + std::to_string(j) + ")");
    }
    rep.add_statement("p-power-binomial", nv(Valuation(min_v)), "<=", "p^-1",
                      "C(p^k, j) over p^k = " + std::to_string(pk));
  }
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// roots suites
// ---------------------------------------------------------------------------

VerificationReport suite_lemma_2_3_2(const SuiteConfig& cfg) {
  VerificationReport rep;
  PadicContext ctx(cfg.p, cfg.precision);
  // Base-field part: Gamma^(p-1).
  {
    auto set = nth_roots_of_unity(cfg.p - 1, ctx);
    for (size_t i = 1; i < set.members.size(); ++i) {
      auto d = set.members[i] - PadicNumber::one(ctx);
      if (d.norm().is_one())
        rep.add_statement("unit-sphere", nv(d.valuation()), "=", "p^0",
                          "base zeta #" + std::to_string(i));
      else
        rep.add_violation("unit-sphere",
                          d.is_zero() ? "0" : nv(d.valuation()), "!=", "p^0",
                          "base zeta #" + std::to_string(i));
    }
  }
  // Unramified quadratic: all (p^2-1)-th roots of unity.
  long u = 0;
  for (long c = 2; c < cfg.p; ++c) {
    bool residue = false;
    for (long r = 1; r < cfg.p; ++r)
      if (r * r % cfg.p == c) residue = true;
    if (!residue) {
      u = c;
      break;
    }
  }
  if (u == 0) throw Error("no quadratic non-residue found (internal)");
  auto F = make_extension(std::vector<long>{-u, 0, 1}, ctx);
  auto set = nth_roots_of_unity(cfg.p * cfg.p - 1, F);
  for (size_t i = 1; i < set.members.size(); ++i) {
    auto d = set.members[i] - ExtElement::one(F);
    Valuation v = d.valuation();
    if (v == Valuation(0))
      rep.add_statement("unit-sphere", nv(v), "=", "p^0",
                        "F_{p^2} zeta #" + std::to_string(i));
    else
      rep.add_violation("unit-sphere", nv(v), "!=", "p^0",
                        "F_{p^2} zeta #" + std::to_string(i));
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_2_3_4(const SuiteConfig& cfg) {
  VerificationReport rep;
  PadicContext ctx(cfg.p, cfg.precision);
  auto roots = p_power_roots_of_unity(ctx);
  Valuation expect(1, cfg.p - 1);
  for (size_t j = 1; j < roots.set.members.size(); ++j) {
    auto d = roots.set.members[j] - ExtElement::one(roots.field);
    Valuation v = d.valuation();
    if (v == expect && v > Valuation(0))
      rep.add_statement("p-power-roots", nv(v), "=", nv(expect),
                        "zeta_p^" + std::to_string(j) + " - 1");
    else
      rep.add_violation("p-power-roots", nv(v), "!=", nv(expect),
                        "zeta_p^" + std::to_string(j) + " - 1");
  }
  rep.add_statement("p-power-roots", nv(expect), "<", "p^0",
                    "Gamma_p lies inside U_1(1); determinant valuation");
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// dynamics suites
// ---------------------------------------------------------------------------

VerificationReport suite_lemma_3_1(const SuiteConfig& cfg) {
  VerificationReport rep;
  PadicContext ctx(cfg.p, cfg.precision);
  auto check_one = [&rep, &ctx](const PadicNumber& a, const std::string& where) {
    auto map = make_map(1, a);
    auto [cp, cm] = fixed_point_pair(map);
    if (cp.norm().is_one() && cm.norm().is_one())
      rep.add_statement("c-norm", "p^0", "=", "p^0", where);
    else
      rep.add_violation("c-norm", nv(cp.valuation()), "!=", "p^0", where);
    auto vieta = cp * cm + PadicNumber::one(ctx);
    bool ok;
    try {
      ok = vieta.is_zero_to(ctx.precision);
    } catch (const PrecisionError&) {
      ok = false;
    }
    if (!ok)
      rep.add_violation("vieta", nv(valuation_lower_bound(vieta)), "<",
                        "p^-" + std::to_string(ctx.precision), where);
  };
  check_one(parse_literal(cfg.a, ctx), "a = " + cfg.a);
  for (int i = 0; i < cfg.samples; ++i)
    check_one(random_small_a(ctx, mix_seed(cfg.seed, 1000 + i)),
              "random a #" + std::to_string(i));
  rep.add_statement("c-norm", "p^0", "=", "p^0",
                    std::to_string(cfg.samples) + " random |a| < 1 sampled");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_2(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].norm().is_one())
      rep.add_statement("unit-sphere", "p^0", "=", "p^0",
                        "fixed point #" + std::to_string(i));
    else
      rep.add_violation("unit-sphere", nv(pts[i].valuation()), "!=", "p^0",
                        "fixed point #" + std::to_string(i));
  }
  if (fam.missing_plus + fam.missing_minus > 0)
    rep.add_statement("representability",
                      std::to_string(pts.size()), "<=",
                      std::to_string(2 * map.n),
                      "missing roots: " + std::to_string(fam.missing_plus) +
                          "+" + std::to_string(fam.missing_minus) + " (" +
                          fam.hint_plus + fam.hint_minus + ")");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_3(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  if (pts.empty())
    throw NotRepresentableError("lemma-3.3: no representable fixed points",
                                fam.hint_plus);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto sub = preimage_sphere_check(map, pts[i]);
    rep.absorb(sub, "x[" + std::to_string(i) + "]");
  }
  if (!cfg.field.empty()) {
    auto F = make_extension(cfg.field, map.ctx);
    for (size_t i = 0; i < pts.size(); ++i) {
      auto sub = preimage_sphere_check(map, ExtElement::embed(pts[i], F));
      rep.absorb(sub, "ext x[" + std::to_string(i) + "]");
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_5(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  if (map.n % map.ctx.p == 0)
    throw DomainError("lemma-3.5: requires (n, p) = 1");
  auto fam = fixed_points(map);
  auto check_family = [&rep](const std::vector<PadicNumber>& roots,
                             const std::string& label) {
    auto m = disjointness_matrix(roots);
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (m[i][j].is_one())
          rep.add_statement("root-distance", m[i][j].str(), "=", "p^0",
                            label + " pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        else
          rep.add_violation("root-distance", m[i][j].str(), "!=", "p^0",
                            label + " pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
  };
  check_family(fam.roots_plus, "c+");
  check_family(fam.roots_minus, "c-");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_6(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  if (map.n % map.ctx.p == 0 || (2 * map.n + 1) % map.ctx.p == 0)
    throw DomainError("lemma-3.6: requires (n,p) = 1 and (2n+1,p) = 1");
  auto fam = fixed_points(map);
  for (auto roots : {fam.roots_plus, fam.roots_minus}) {
    if (roots.empty()) continue;
    const PadicNumber& ref = roots[0];  // one fixed n-th root as c^(1/n)
    for (size_t i = 1; i < roots.size(); ++i) {
      auto d = roots[i] - ref;
      if (!d.is_zero() && d.norm().is_one())
        rep.add_statement("sphere-of-root", nv(d.valuation()), "=", "p^0",
                          "x[" + std::to_string(i) + "] on S_1(c^{1/n})");
      else
        rep.add_violation("sphere-of-root",
                          d.is_zero() ? "0" : nv(d.valuation()), "!=", "p^0",
                          "x[" + std::to_string(i) + "]");
    }
  }
  // Distinct Siegel disks: pairwise distances 1 make the U_1 disks disjoint.
  auto pts = fam.all_nonzero();
  auto m = disjointness_matrix(pts);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (!m[i][j].is_one())
        rep.add_violation("disk-disjointness", m[i][j].str(), "!=", "p^0",
                          "pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  rep.add_statement("disk-disjointness", "p^0", "=", "p^0",
                    "all SI(x) = U_1(x) pairwise disjoint");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_7(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  long k = 0, m = map.n;
  while (m % map.ctx.p == 0) {
    m /= map.ctx.p;
    ++k;
  }
  if (k < 1 || m <= 1)
    throw DomainError("lemma-3.7: requires n = p^k m with k >= 1, m > 1");
  auto cyclo = cyclotomic_level1_field(map.ctx);
  auto fam = fixed_points_in(map, cyclo);
  auto report_family = [&rep, &map](const std::vector<ExtElement>& roots,
                                    const std::string& label) {
    if (roots.empty()) {
      rep.add_statement("cluster", "0", "<=", "0",
                        label + ": requires extension beyond v1 scope");
      return;
    }
    auto dm = disjointness_matrix(roots);
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j)
        rep.add_statement("cluster-distance", dm[i][j].str(), "=",
                          dm[i][j].str(),
                          label + " raw |x_" + std::to_string(i) + " - x_" +
                              std::to_string(j) + "|");
  };
  report_family(fam.roots_plus, "c+");
  report_family(fam.roots_minus, "c-");

  // Shared-disk evidence: within a cluster the distance is below 1; across
  // clusters it is exactly 1.
  for (auto roots : {fam.roots_plus, fam.roots_minus}) {
    if (roots.empty()) continue;
    auto dm = disjointness_matrix(roots);
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        bool inside = dm[i][j].exponent > Valuation(0);
        bool unit = dm[i][j].is_one();
        if (!inside && !unit)
          rep.add_violation("cluster-structure", dm[i][j].str(),
                            "not in", "{p^0, <1}",
                            "pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_8(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  if ((2 * map.n + 1) % map.ctx.p != 0)
    throw DomainError("lemma-3.8: requires (2n+1, p) != 1");
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  for (size_t i = 0; i < pts.size(); ++i) {
    auto rec = classify(map, pts[i]);
    if (rec.character == Character::attracting &&
        rec.multiplier_norm.exponent >= Valuation(1))
      rep.add_statement("multiplier", rec.multiplier_norm.str(), "<=",
                        "p^-1", "x[" + std::to_string(i) + "]");
    else
      rep.add_violation("multiplier", rec.multiplier_norm.str(), ">", "p^-1",
                        "x[" + std::to_string(i) + "]");
    auto basin = verify_attraction(map, pts[i], cfg.samples, cfg.iters, cfg.seed);
    rep.absorb(basin, "x[" + std::to_string(i) + "]");
  }
  auto origin = verify_attraction(map, PadicNumber::zero(map.ctx), cfg.samples,
                                  cfg.iters, cfg.seed);
  rep.absorb(origin, "origin");
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_9(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  long deg = 2 * map.n + 1;
  long m = deg;
  while (m % map.ctx.p == 0) m /= map.ctx.p;
  if (m == deg) throw DomainError("lemma-3.9: requires (2n+1, p) != 1");
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  if (pts.empty())
    throw NotRepresentableError("lemma-3.9: no representable fixed points",
                                fam.hint_plus);
  std::vector<PadicNumber> xi;
  if (m > 1 && (map.ctx.p - 1) % m == 0) {
    xi = nth_roots_of_unity(m, map.ctx).members;
  } else {
    xi.push_back(PadicNumber::one(map.ctx));
  }
  rep.add_statement("translations", std::to_string(xi.size()), "=",
                    std::to_string(xi.size()),
                    "Gamma^(m) members used, m = " + std::to_string(m));
  for (size_t i = 0; i < pts.size(); ++i) {
    auto basin =
        verify_attraction(map, pts[i], cfg.samples, cfg.iters, cfg.seed, xi);
    rep.absorb(basin, "x[" + std::to_string(i) + "]");
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_10(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  auto fam = fixed_points(map);
  auto disc_sqrt = padlab::sqrt(map.a * map.a +
                                PadicNumber::from_integer(4, map.ctx));
  if (disc_sqrt.norm().is_one())
    rep.add_statement("discriminant", "p^0", "=", "p^0",
                      "|c+ - c-| = |sqrt(a^2+4)| = 1");
  else
    rep.add_violation("discriminant", nv(disc_sqrt.valuation()), "!=", "p^0",
                      "sqrt(a^2+4)");
  for (size_t i = 0; i < fam.roots_plus.size(); ++i)
    for (size_t j = 0; j < fam.roots_minus.size(); ++j) {
      auto d = fam.roots_plus[i] - fam.roots_minus[j];
      if (!d.is_zero() && d.norm().is_one())
        rep.add_statement("cross-distance", nv(d.valuation()), "=", "p^0",
                          "x+" + std::to_string(i) + " vs x-" +
                              std::to_string(j));
      else
        rep.add_violation("cross-distance",
                          d.is_zero() ? "0" : nv(d.valuation()), "!=", "p^0",
                          "x+" + std::to_string(i) + " vs x-" +
                              std::to_string(j));
    }
  rep.finalize();
  return rep;
}

VerificationReport suite_lemma_3_11(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  if (map.n % map.ctx.p == 0 || (2 * map.n + 1) % map.ctx.p == 0)
    throw DomainError("lemma-3.11: requires (n,p) = 1 and (2n+1,p) = 1");
  auto fam = fixed_points(map);
  for (size_t i = 0; i < fam.roots_plus.size(); ++i) {
    auto rec = classify(map, fam.roots_plus[i]);
    if (rec.siegel_radius && rec.siegel_radius->sup_exponent == Valuation(0))
      rep.add_statement("siegel-disk", "p^0", "=", "p^0",
                        "SI(x+" + std::to_string(i) + ") = U_1");
  }
  for (size_t i = 0; i < fam.roots_plus.size(); ++i)
    for (size_t j = 0; j < fam.roots_minus.size(); ++j) {
      auto d = fam.roots_plus[i] - fam.roots_minus[j];
      bool disjoint = !d.is_zero() && d.norm().is_one();
      if (disjoint)
        rep.add_statement("si-disjoint", nv(d.valuation()), "=", "p^0",
                          "SI(x+" + std::to_string(i) + ") vs SI(x-" +
                              std::to_string(j) + ")");
      else
        rep.add_violation("si-disjoint", d.is_zero() ? "0" : nv(d.valuation()),
                          "!=", "p^0",
                          "SI(x+" + std::to_string(i) + ") vs SI(x-" +
                              std::to_string(j) + ")");
    }
  rep.finalize();
  return rep;
}

VerificationReport suite_theorem_2_4(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  pts.push_back(fam.origin);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto rec = classify(map, pts[i]);
    auto taylor = detail::taylor_valuations(map, pts[i]);
    // every Taylor norm bounded by 1 (integral coefficients on the sphere)
    for (size_t mi = 0; mi < taylor.size(); ++mi)
      if (taylor[mi] < Valuation(0))
        rep.add_violation("taylor-bound", nv(taylor[mi]), ">", "p^0",
                          "point " + std::to_string(i) + " m=" +
                              std::to_string(mi + 1));
    const char* kind =
        rec.character == Character::attracting ? "(2.2)-radius" : "(2.3)-radius";
    const auto& bound = rec.character == Character::attracting
                            ? rec.attraction_radius
                            : rec.siegel_radius;
    if (bound && bound->sup_exponent == Valuation(0) && bound->exclusive)
      rep.add_statement(kind, "r", "<", "p^0",
                        "point " + std::to_string(i) + ": all radii r < 1 pass");
    else
      rep.add_violation(kind, "r", "<", "p^0",
                        "point " + std::to_string(i) + ": no certified radius");
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_theorem_3_4_i(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  if ((2 * map.n + 1) % map.ctx.p == 0)
    throw DomainError("theorem-3.4.i: requires (2n+1, p) = 1");
  auto fam = fixed_points(map);
  auto pts = fam.all_nonzero();
  if (pts.empty())
    throw NotRepresentableError("theorem-3.4.i: no representable fixed points",
                                fam.hint_plus);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto rec = classify(map, pts[i]);
    if (rec.character != Character::indifferent) {
      rep.add_violation("character", rec.multiplier_norm.str(), "!=", "p^0",
                        "x[" + std::to_string(i) + "] not indifferent");
      continue;
    }
    rep.add_statement("character", rec.multiplier_norm.str(), "=", "p^0",
                      "x[" + std::to_string(i) + "] indifferent");
    for (int j = 1; j <= 4 && j <= map.ctx.precision - 2; ++j) {
      auto sub = verify_sphere_invariance(map, pts[i], j, cfg.samples,
                                          cfg.iters, cfg.seed);
      rep.absorb(sub, "x[" + std::to_string(i) + "]");
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_theorem_3_4_ii(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto map = suite_map(cfg);
  long k = 0, m = map.n;
  while (m % map.ctx.p == 0) {
    m /= map.ctx.p;
    ++k;
  }
  if (k < 1 || m != 1)
    throw DomainError("theorem-3.4.ii: requires n = p^l");
  auto fam = fixed_points(map);
  if (fam.roots_plus.empty() && fam.roots_minus.empty())
    throw NotRepresentableError(
        "theorem-3.4.ii: c^(1/n) not representable in Q_p",
        fam.hint_plus.empty() ? fam.hint_minus : fam.hint_plus);

  // Sphere invariance about the representable root (the disk center c^(1/n)).
  auto pts = fam.all_nonzero();
  for (size_t i = 0; i < pts.size(); ++i) {
    for (int j = 1; j <= 3; ++j) {
      auto sub = verify_sphere_invariance(map, pts[i], j, cfg.samples,
                                          cfg.iters, cfg.seed);
      rep.absorb(sub, "eta[" + std::to_string(i) + "]");
    }
  }

  // Shared-disk evidence: in the cyclotomic field the whole cluster
  // eta * zeta_p^j sits inside U_1(eta).
  auto cyclo = cyclotomic_level1_field(map.ctx);
  auto ext = fixed_points_in(map, cyclo);
  for (auto roots : {ext.roots_plus, ext.roots_minus}) {
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        auto d = roots[i] - roots[j];
        Valuation v = d.is_zero() ? Valuation::infinity() : d.valuation();
        if (v > Valuation(0))
          rep.add_statement("shared-disk", nv(v), "<", "p^0",
                            "|x_" + std::to_string(i) + " - x_" +
                                std::to_string(j) + "| inside U_1(c^{1/n})");
        else
          rep.add_violation("shared-disk", nv(v), ">=", "p^0",
                            "cluster pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
  }
  rep.finalize();
  return rep;
}

VerificationReport suite_theorem_3_12(const SuiteConfig& cfg) {
  VerificationReport rep;
  (void)cfg;
  using Tags = std::set<CaseTag>;
  auto fmt = [](const Tags& tags) {
    std::string s = "{";
    for (auto t : tags) {
      if (s.size() > 1) s += ",";
      s += case_tag_name(t);
    }
    return s + "}";
  };
  const std::vector<std::tuple<long, long, Tags>> table = {
      {5, 1, Tags{CaseTag::i, CaseTag::iii}},
      {3, 3, Tags{CaseTag::i, CaseTag::ii}},
      {7, 3, Tags{CaseTag::v}},
      {3, 6, Tags{CaseTag::i, CaseTag::iv}},
      {3, 1, Tags{CaseTag::v}},
      {5, 11, Tags{CaseTag::i, CaseTag::iii}},
  };
  for (const auto& [p, n, want] : table) {
    auto got = theorem_case(p, n);
    if (got == want)
      rep.add_statement("dispatch", fmt(got), "=", fmt(want),
                        "(p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                            ")");
    else
      rep.add_violation("dispatch", fmt(got), "!=", fmt(want),
                        "(p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                            ")");
  }
  long swept = 0;
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long n = 1; n <= 40; ++n) {
      auto tags = theorem_case(p, n);
      bool ok = (tags.count(CaseTag::i) + tags.count(CaseTag::v)) == 1 &&
                !(tags.count(CaseTag::ii) && tags.count(CaseTag::iv)) &&
                (!tags.count(CaseTag::iii) || tags.count(CaseTag::i));
      if (!ok)
        rep.add_violation("partition", fmt(tags), "!=", "consistent",
                          "(p=" + std::to_string(p) + ", n=" +
                              std::to_string(n) + ")");
      ++swept;
    }
  }
  rep.add_statement("partition", std::to_string(swept), "=",
                    std::to_string(swept), "(p, n) pairs swept consistently");
  rep.finalize();
  return rep;
}

SuiteConfig defaults(long p, long n, const char* a, int samples, int iters) {
  SuiteConfig c;
  c.p = p;
  c.n = n;
  c.a = a;
  c.samples = samples;
  c.iters = iters;
  return c;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> kRegistry = [] {
    std::vector<SuiteInfo> r;
    r.push_back({"ultrametric",
                 "norm/add/mul vs exact rational factorization oracle",
                 defaults(3, 1, "3", 10000, 1), suite_ultrametric});
    r.push_back({"lemma-2.1", "S_1(0) \\ U_1(a) lies on S_1(a)",
                 defaults(5, 1, "5", 1000, 1), suite_lemma_2_1});
    r.push_back({"lemma-2.2", "|C(n,k)|_p <= 1 (samples = n limit)",
                 defaults(3, 1, "3", 300, 1), suite_lemma_2_2});
    r.push_back({"lemma-2.3.2", "Gamma_u subset S_1(1)",
                 defaults(3, 1, "3", 1, 1), suite_lemma_2_3_2});
    r.push_back({"lemma-2.3.3", "|C(p^k, j)|_p <= 1/p",
                 defaults(3, 1, "3", 1, 1), suite_lemma_2_3_3});
    r.push_back({"lemma-2.3.4", "Gamma_p subset U_1(1), v(zeta-1) = 1/(p-1)",
                 defaults(3, 1, "3", 1, 1), suite_lemma_2_3_4});
    r.push_back({"lemma-3.1", "|c_pm| = 1 and c+c- = -1",
                 defaults(3, 1, "3", 100, 1), suite_lemma_3_1});
    r.push_back({"lemma-3.2", "nonzero fixed points lie on S_1(0)",
                 defaults(5, 1, "5", 1, 1), suite_lemma_3_2});
    {
      SuiteInfo info{"lemma-3.3", "preimages of x_j land on S_1(x_j)",
                     defaults(5, 1, "5", 1, 1), suite_lemma_3_3};
      info.defaults.field = {-2, 0, 1};
      r.push_back(std::move(info));
    }
    r.push_back({"lemma-3.5", "distinct n-th roots at distance 1",
                 defaults(5, 2, "5", 1, 1), suite_lemma_3_5});
    r.push_back({"lemma-3.6", "x_i on S_1(c^{1/n}); Siegel disks disjoint",
                 defaults(13, 2, "13", 1, 1), suite_lemma_3_6});
    r.push_back({"lemma-3.7", "case-(iv) clusters share or separate disks",
                 defaults(3, 6, "9", 1, 1), suite_lemma_3_7});
    r.push_back({"lemma-3.8", "p | 2n+1: attracting points, U_1 basins",
                 defaults(7, 3, "7", 40, 200), suite_lemma_3_8});
    r.push_back({"lemma-3.9", "translated disks U_1(x_i xi) attract",
                 defaults(7, 10, "7", 25, 400), suite_lemma_3_9});
    r.push_back({"lemma-3.10", "cross-family distances equal 1",
                 defaults(5, 2, "5", 1, 1), suite_lemma_3_10});
    r.push_back({"lemma-3.11", "SI(x_i) disjoint from SI(x_{n+j})",
                 defaults(13, 2, "13", 1, 1), suite_lemma_3_11});
    r.push_back({"theorem-2.4", "radius conditions (2.2)/(2.3) certified",
                 defaults(5, 1, "5", 1, 1), suite_theorem_2_4});
    r.push_back({"theorem-3.4.i", "SI(x_j) = U_1(x_j) by sphere sampling",
                 defaults(5, 1, "5", 200, 50), suite_theorem_3_4_i});
    r.push_back({"theorem-3.4.ii", "n = p^l: clusters share one Siegel disk",
                 defaults(3, 3, "9", 60, 40), suite_theorem_3_4_ii});
    r.push_back({"theorem-3.12.dispatch", "case tags reproduce the table",
                 defaults(3, 1, "3", 1, 1), suite_theorem_3_12});
    return r;
  }();
  return kRegistry;
}

const SuiteInfo* find_suite(const std::string& id) {
  for (const SuiteInfo& info : suite_registry())
    if (info.id == id) return &info;
  return nullptr;
}

SuiteConfig resolve_config(const SuiteInfo& info, const SuiteOverrides& over) {
  SuiteConfig cfg = info.defaults;
  if (over.p) cfg.p = *over.p;
  if (over.n) cfg.n = *over.n;
  if (over.a) cfg.a = *over.a;
  if (over.precision) cfg.precision = *over.precision;
  if (over.samples) cfg.samples = *over.samples;
  if (over.iters) cfg.iters = *over.iters;
  if (over.seed) cfg.seed = *over.seed;
  if (over.field) cfg.field = *over.field;
  return cfg;
}

VerificationReport run_suite(const SuiteInfo& info, const SuiteOverrides& over,
                             bool collect_timing) {
  SuiteConfig cfg = resolve_config(info, over);
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  try {
    rep = info.run(cfg);
  } catch (const NotRepresentableError& e) {
    rep.verdict = Verdict::not_representable;
    rep.add_statement("not-representable", "", "", "",
                      std::string(e.what()) +
                          (e.hint.empty() ? "" : " (" + e.hint + ")"));
  }
  rep.check_id = info.id;
  rep.params.p = cfg.p;
  rep.params.n = cfg.n;
  rep.params.a = cfg.a;
  rep.params.precision = cfg.precision;
  rep.params.seed = cfg.seed;
  rep.params.samples = cfg.samples;
  rep.params.iters = cfg.iters;
  if (collect_timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    rep.timing_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }
  return rep;
}

}  // namespace padlab
