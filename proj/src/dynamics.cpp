#include "padlab/dynamics.hpp"

#include <algorithm>
#include <random>

namespace padlab {

PolyMap make_map(long n, const PadicNumber& a) {
  if (n < 1) throw DomainError("make_map: n >= 1 required");
  if (a.is_zero()) throw DomainError("make_map: a = 0 rejected");
  if (!(a.valuation() > Valuation(0)))
    throw DomainError("make_map: |a|_p < 1 required");
  return PolyMap{a.context(), n, a};
}

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::i:
      return "i";
    case CaseTag::ii:
      return "ii";
    case CaseTag::iii:
      return "iii";
    case CaseTag::iv:
      return "iv";
    case CaseTag::v:
      return "v";
  }
  return "?";  // unreachable
}

std::string character_name(Character c) {
  switch (c) {
    case Character::attracting:
      return "attracting";
    case Character::indifferent:
      return "indifferent";
    case Character::repelling:
      return "repelling";
  }
  return "?";  // unreachable
}

std::string orbit_termination_name(OrbitTermination t) {
  switch (t) {
    case OrbitTermination::converged:
      return "converged";
    case OrbitTermination::sphere_preserved:
      return "sphere-preserved";
    case OrbitTermination::escaped:
      return "escaped";
    case OrbitTermination::max_iters:
      return "max-iters";
  }
  return "?";  // unreachable
}

std::set<CaseTag> theorem_case(long p, long n) {
  if (n < 1) throw DomainError("theorem_case: n >= 1 required");
  (void)PadicContext(p, 4);  // validates p prime >= 3
  std::set<CaseTag> tags;
  long k = 0, m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  bool deg_coprime = (2 * n + 1) % p != 0;
  if (deg_coprime)
    tags.insert(CaseTag::i);
  else
    tags.insert(CaseTag::v);
  if (k >= 1 && m == 1) tags.insert(CaseTag::ii);
  if (deg_coprime && k == 0) tags.insert(CaseTag::iii);
  if (k >= 1 && m > 1) tags.insert(CaseTag::iv);
  return tags;
}

std::pair<PadicNumber, PadicNumber> fixed_point_pair(const PolyMap& map) {
  const PadicContext& ctx = map.ctx;
  PadicNumber disc = map.a * map.a + PadicNumber::from_integer(4, ctx);
  // |a| < 1 and |4| = 1 (p >= 3) force |a^2+4| = 1 and residue 4: a square.
  PadicNumber s = padlab::sqrt(disc);
  PadicNumber two = PadicNumber::from_integer(2, ctx);
  PadicNumber c_plus = (s - map.a) / two;
  PadicNumber c_minus = (-map.a - s) / two;
  if (!c_plus.norm().is_one() || !c_minus.norm().is_one())
    throw Error("fixed_point_pair: |c_pm| != 1 (internal)");
  if (!(c_plus + c_minus + map.a).is_zero_to(ctx.precision - 1) ||
      !(c_plus * c_minus + PadicNumber::one(ctx)).is_zero_to(ctx.precision - 1))
    throw Error("fixed_point_pair: Vieta check failed (internal)");
  return {c_plus, c_minus};
}

namespace {

template <class E>
void certify_family_residuals(const PolyMap& map,
                              const std::vector<E>& roots) {
  for (const E& r : roots) {
    E residual = evaluate(map, r) - r;
    if (!residual.is_zero_to(map.ctx.precision - 2))
      throw Error("fixed_points: residual above the precision floor (internal)");
  }
}

}  // namespace

FixedPointFamily<PadicNumber> fixed_points(const PolyMap& map) {
  auto [c_plus, c_minus] = fixed_point_pair(map);
  auto plus = nth_roots(c_plus, map.n);
  auto minus = nth_roots(c_minus, map.n);
  FixedPointFamily<PadicNumber> fam{c_plus,
                                    c_minus,
                                    std::move(plus.roots),
                                    std::move(minus.roots),
                                    plus.missing(),
                                    minus.missing(),
                                    plus.extension_hint,
                                    minus.extension_hint,
                                    PadicNumber::zero(map.ctx)};
  certify_family_residuals(map, fam.roots_plus);
  certify_family_residuals(map, fam.roots_minus);
  return fam;
}

FixedPointFamily<ExtElement> fixed_points_in(const PolyMap& map,
                                             const ExtField& field) {
  if (field.base() != map.ctx)
    throw DomainError("fixed_points_in: field/context mismatch");
  auto [c_plus, c_minus] = fixed_point_pair(map);
  auto plus = nth_roots(ExtElement::embed(c_plus, field), map.n);
  auto minus = nth_roots(ExtElement::embed(c_minus, field), map.n);
  FixedPointFamily<ExtElement> fam{c_plus,
                                   c_minus,
                                   std::move(plus.roots),
                                   std::move(minus.roots),
                                   plus.missing(),
                                   minus.missing(),
                                   plus.extension_hint,
                                   minus.extension_hint,
                                   ExtElement::zero(field)};
  certify_family_residuals(map, fam.roots_plus);
  certify_family_residuals(map, fam.roots_minus);
  return fam;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

mpz_class random_unit_digits(const PadicContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  unsigned long p = static_cast<unsigned long>(ctx.p);
  mpz_class u = 1 + static_cast<long>(rng() % (p - 1));
  for (int i = 1; i < ctx.precision; ++i)
    u += mpz_class(static_cast<long>(rng() % p)) * ctx.p_power(i);
  return u;
}

VerificationReport verify_sphere_invariance(const PolyMap& map,
                                            const PadicNumber& x0, int j,
                                            int samples, int iters,
                                            std::uint64_t seed) {
  const PadicContext& ctx = map.ctx;
  if (j < 1 || j > ctx.precision - 2)
    throw DomainError("verify_sphere_invariance: need 1 <= j <= N-2");
  if (samples < 1 || iters < 1)
    throw DomainError("verify_sphere_invariance: samples, iters >= 1");

  VerificationReport rep;
  std::string rhs = NormValue(Valuation(j)).str();
  long preserved = 0;
  for (int s = 0; s < samples; ++s) {
    mpz_class u = random_unit_digits(
        ctx, mix_seed(seed, 0x5350u * static_cast<std::uint64_t>(j) +
                                static_cast<std::uint64_t>(s)));
    PadicNumber x = x0 + PadicNumber::from_parts(j, u, ctx);
    bool ok = true;
    for (int i = 1; i <= iters && ok; ++i) {
      x = evaluate(map, x);
      PadicNumber d = x - x0;
      bool on_sphere = !d.is_zero() && d.valuation() == Valuation(j);
      if (!on_sphere) {
        std::string lhs = d.is_zero() ? "0" : d.norm().str();
        rep.add_violation("sphere-invariance", lhs, "!=", rhs,
                          "sample " + std::to_string(s) + " iter " +
                              std::to_string(i));
        ok = false;
      }
    }
    if (ok) ++preserved;
  }
  rep.add_statement("sphere-invariance", rhs, "=", rhs,
                    "j=" + std::to_string(j) + ": " + std::to_string(preserved) +
                        "/" + std::to_string(samples) + " samples preserved over " +
                        std::to_string(iters) + " iterations");
  rep.finalize();
  return rep;
}

VerificationReport verify_attraction(const PolyMap& map, const PadicNumber& x0,
                                     int samples, int iters, std::uint64_t seed,
                                     const std::vector<PadicNumber>& translations) {
  const PadicContext& ctx = map.ctx;
  if (samples < 1 || iters < 1)
    throw DomainError("verify_attraction: samples, iters >= 1");
  auto record = classify(map, x0);
  if (record.character != Character::attracting)
    throw DomainError("verify_attraction: x0 is not attracting");

  VerificationReport rep;
  long target = ctx.precision - 1;
  std::string rhs = NormValue(Valuation(target)).str();

  std::vector<PadicNumber> xis = translations;
  if (xis.empty()) xis.push_back(PadicNumber::one(ctx));
  for (size_t ti = 0; ti < xis.size(); ++ti) {
    PadicNumber center = x0.is_exact_zero() ? x0 : x0 * xis[ti];
    int max_steps = 0;
    long converged = 0;
    for (int s = 0; s < samples; ++s) {
      long jr = 1 + (s % 3);
      mpz_class u = random_unit_digits(
          ctx, mix_seed(seed, 0xA771u * (ti + 1) + static_cast<std::uint64_t>(s)));
      PadicNumber x = center + PadicNumber::from_parts(jr, u, ctx);
      int reached = -1;
      for (int i = 1; i <= iters; ++i) {
        x = evaluate(map, x);
        PadicNumber d = x - x0;
        bool close;
        try {
          close = d.is_zero_to(target);
        } catch (const PrecisionError&) {
          close = false;
        }
        if (close) {
          reached = i;
          break;
        }
      }
      if (reached < 0) {
        rep.add_violation("basin", "p^-" + std::to_string(iters) + "-iterates",
                          "<", rhs,
                          "xi[" + std::to_string(ti) + "] sample " +
                              std::to_string(s) + " did not reach the floor");
      } else {
        ++converged;
        max_steps = std::max(max_steps, reached);
      }
    }
    rep.add_statement(
        "basin", rhs, "<=", rhs,
        "xi[" + std::to_string(ti) + "]: " + std::to_string(converged) + "/" +
            std::to_string(samples) + " samples reached the floor (max " +
            std::to_string(max_steps) + " steps)");
  }
  rep.finalize();
  return rep;
}

namespace {

/// Coefficients of f(y) - x over the element type of x.
template <class E>
std::vector<E> preimage_poly(const PolyMap& map, const E& x) {
  std::vector<E> poly(static_cast<size_t>(2 * map.n + 2),
                      make_scalar(x, mpz_class(0)));
  poly[0] = -x;
  poly[static_cast<size_t>(map.n + 1)] = carry_into(x, map.a);
  poly[static_cast<size_t>(2 * map.n + 1)] = make_scalar(x, mpz_class(1));
  return poly;
}

template <class E>
void check_lifted_preimage(const E& y, const E& x_j, const std::string& where,
                           VerificationReport& rep) {
  E d = y - x_j;
  if (d.is_zero()) {
    rep.add_statement("preimage", "0", "=", "0",
                      where + ": trivial preimage y = x_j excluded");
    return;
  }
  Valuation v = d.valuation();
  if (v == Valuation(0))
    rep.add_statement("preimage", NormValue(v).str(), "=", "p^0",
                      where + ": lifted preimage on S_1(x_j)");
  else
    rep.add_violation("preimage", NormValue(v).str(), "!=", "p^0", where);
}

}  // namespace

VerificationReport preimage_sphere_check(const PolyMap& map,
                                         const PadicNumber& x_j) {
  const PadicContext& ctx = map.ctx;
  if ((2 * map.n + 1) % ctx.p == 0)
    throw DomainError("preimage_sphere_check: gcd(2n+1, p) = 1 required");
  VerificationReport rep;
  long deg = 2 * map.n + 1;
  long xbar = mpz_class(x_j.unit_residue(1)).get_si();
  auto poly = preimage_poly(map, x_j);
  long found = 0;
  for (long r = 1; r < ctx.p; ++r) {
    long rp = 1;
    for (long e = 0; e < deg; ++e) rp = rp * r % ctx.p;
    if (rp != xbar) continue;
    ++found;
    auto lift = newton_lift(poly, PadicNumber::from_integer(r, ctx),
                            ctx.precision - 1);
    check_lifted_preimage(lift.root, x_j, "residue " + std::to_string(r), rep);
  }
  rep.add_statement("preimage", std::to_string(found), "<=",
                    std::to_string(deg),
                    "simple residue preimages found in the base field");
  rep.finalize();
  return rep;
}

VerificationReport preimage_sphere_check(const PolyMap& map,
                                         const ExtElement& x_j) {
  const PadicContext& ctx = map.ctx;
  if ((2 * map.n + 1) % ctx.p == 0)
    throw DomainError("preimage_sphere_check: gcd(2n+1, p) = 1 required");
  VerificationReport rep;
  const ExtField& field = x_j.field();
  const ResidueField& RF = field.residue_field();
  auto xbar = x_j.residue_vector();
  auto poly = preimage_poly(map, x_j);
  long found = 0;
  long idx = 0;
  for (const auto& cand : RF.enumerate()) {
    ++idx;
    if (RF.is_zero(cand)) continue;
    if (RF.pow(cand, static_cast<unsigned long>(2 * map.n + 1)) != xbar)
      continue;
    ++found;
    std::vector<PadicNumber> coords;
    for (int i = 0; i < field.degree(); ++i)
      coords.push_back(PadicNumber::from_integer(
          i < static_cast<int>(cand.size()) ? cand[i] : 0, ctx));
    auto lift = newton_lift(poly, ExtElement(field, std::move(coords)),
                            ctx.precision - 2);
    check_lifted_preimage(lift.root, x_j, "residue #" + std::to_string(idx),
                          rep);
  }
  rep.add_statement("preimage", std::to_string(found), "<=",
                    std::to_string(2 * map.n + 1),
                    "simple residue preimages found in " + field.describe());
  rep.finalize();
  return rep;
}

}  // namespace padlab
