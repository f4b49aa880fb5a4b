#include "padlab/roots.hpp"

#include <algorithm>
#include <numeric>

namespace padlab {

namespace {

long pow_mod(long base, long e, long mod) {
  long r = 1 % mod;
  base = ((base % mod) + mod) % mod;
  while (e > 0) {
    if (e & 1) r = r * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return r;
}

/// Split n = p^k * m with (m, p) = 1.
void split_p_part(long n, long p, long& k, long& m) {
  k = 0;
  m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
}

/// x^m - c as a coefficient vector over the element type of `c`.
template <class E>
std::vector<E> power_minus_const(const E& c, long m) {
  std::vector<E> poly(static_cast<size_t>(m) + 1, make_scalar(c, mpz_class(0)));
  poly[0] = -c;
  poly[static_cast<size_t>(m)] = make_scalar(c, mpz_class(1));
  return poly;
}

/// Internal certification: every member of a root-of-unity set really powers
/// to one at (almost) full precision.
template <class E>
void certify_members(const RootsOfUnitySet<E>& set, long check_precision) {
  for (const E& z : set.members) {
    E d = z.pow(set.order) - make_scalar(z, mpz_class(1));
    if (!d.is_zero_to(check_precision))
      throw Error("roots of unity: member fails its defining power (internal)");
  }
}

}  // namespace

long unramified_degree_for(long m, long p) {
  if (m <= 1) return 1;
  long f = 1, r = p % m;
  while (r != 1 % m) {
    r = r * (p % m) % m;
    ++f;
    if (f > m) throw Error("unramified_degree_for: order overflow (internal)");
  }
  return f;
}

PadicNumber sqrt(const PadicNumber& x) {
  if (x.is_exact_zero()) return x;
  if (x.is_zero())
    throw PrecisionError("sqrt: operand indistinguishable from zero");
  const PadicContext& ctx = x.context();
  long v = x.finite_valuation();
  if (v % 2 != 0)
    throw DomainError("sqrt: odd valuation, no square root in Q_p");
  long u0 = mpz_class(x.unit_residue(1)).get_si();
  long r = 0;
  for (long cand = 1; cand < ctx.p; ++cand) {
    if (cand * cand % ctx.p == u0) {
      r = cand;
      break;
    }
  }
  if (r == 0)
    throw NonResidueError(
        "sqrt: unit is a quadratic non-residue mod " + std::to_string(ctx.p),
        {-u0, 0, 1},
        "adjoin a root of t^2 - " + std::to_string(u0) +
            " (unramified quadratic extension)");
  r = std::min(r, ctx.p - r);

  PadicNumber u = PadicNumber::from_parts(0, x.unit_part(), ctx,
                                          x.relative_precision());
  auto lift = newton_lift(power_minus_const(u, 2),
                          PadicNumber::from_integer(r, ctx),
                          u.absolute_precision());
  const PadicNumber& y = lift.root;
  return PadicNumber::from_parts(v / 2 + y.finite_valuation(), y.unit_part(),
                                 ctx, y.relative_precision());
}

RootsOfUnitySet<PadicNumber> nth_roots_of_unity(long m, const PadicContext& ctx) {
  if (m < 1) throw DomainError("nth_roots_of_unity: m >= 1 required");
  if (m % ctx.p == 0)
    throw DomainError(
        "nth_roots_of_unity: (m, p) = 1 required; use p_power_roots_of_unity "
        "for the p-part");
  if ((ctx.p - 1) % m != 0)
    throw NotRepresentableError(
        "nth_roots_of_unity: m does not divide p - 1",
        "unramified extension of degree " +
            std::to_string(unramified_degree_for(m, ctx.p)) + " required");

  RootsOfUnitySet<PadicNumber> set;
  set.order = m;
  set.members.push_back(PadicNumber::one(ctx));
  long target = ctx.precision;
  for (long r = 2; r < ctx.p; ++r) {
    if (pow_mod(r, m, ctx.p) != 1) continue;
    auto lift = newton_lift(power_minus_const(PadicNumber::one(ctx), m),
                            PadicNumber::from_integer(r, ctx), target);
    set.members.push_back(lift.root);
  }
  if (static_cast<long>(set.members.size()) != std::gcd(m, ctx.p - 1))
    throw Error("nth_roots_of_unity: wrong member count (internal)");
  certify_members(set, target);
  return set;
}

RootsOfUnitySet<ExtElement> nth_roots_of_unity(long m, const ExtField& field) {
  const PadicContext& ctx = field.base();
  if (m < 1) throw DomainError("nth_roots_of_unity: m >= 1 required");
  if (m % ctx.p == 0)
    throw DomainError("nth_roots_of_unity: (m, p) = 1 required");
  long f = field.residue_degree();
  long q = 1;
  for (long i = 0; i < f; ++i) q *= ctx.p;
  if ((q - 1) % m != 0)
    throw NotRepresentableError(
        "nth_roots_of_unity: m does not divide p^f - 1 for this field",
        "unramified extension of degree " +
            std::to_string(unramified_degree_for(m, ctx.p)) + " over Q_p");

  const ResidueField& RF = field.residue_field();
  RootsOfUnitySet<ExtElement> set;
  set.order = m;
  set.members.push_back(ExtElement::one(field));
  long target = ctx.precision - 1;
  for (const auto& cand : RF.enumerate()) {
    if (RF.is_zero(cand) || RF.is_one(cand)) continue;
    if (!RF.is_one(RF.pow(cand, static_cast<unsigned long>(m)))) continue;
    std::vector<PadicNumber> coords;
    coords.reserve(field.degree());
    for (int i = 0; i < field.degree(); ++i)
      coords.push_back(PadicNumber::from_integer(
          i < static_cast<int>(cand.size()) ? cand[i] : 0, ctx));
    auto lift = newton_lift(power_minus_const(ExtElement::one(field), m),
                            ExtElement(field, std::move(coords)), target);
    set.members.push_back(lift.root);
  }
  certify_members(set, target);
  return set;
}

ExtField cyclotomic_level1_field(const PadicContext& ctx) {
  // ((1+t)^p - 1)/t = sum_j C(p, j+1) t^j: Eisenstein of degree p-1.
  std::vector<long> coeffs;
  for (long j = 1; j <= ctx.p; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                 static_cast<unsigned long>(j));
    coeffs.push_back(b.get_si());
  }
  return make_extension(coeffs, ctx);
}

PPowerRoots p_power_roots_of_unity(const PadicContext& ctx, int level) {
  if (level != 1)
    throw DomainError("p_power_roots_of_unity: only level 1 is supported");
  ExtField field = cyclotomic_level1_field(ctx);
  ExtElement zeta = ExtElement::one(field) + ExtElement::generator(field);
  RootsOfUnitySet<ExtElement> set;
  set.order = ctx.p;
  for (long j = 0; j < ctx.p; ++j) set.members.push_back(zeta.pow(j));
  certify_members(set, ctx.precision - 2);
  return PPowerRoots{std::move(field), std::move(set)};
}

std::optional<PadicNumber> p_th_root(const PadicNumber& c) {
  if (c.is_zero() || c.finite_valuation() != 0)
    throw DomainError("p_th_root: |c| = 1 required");
  const PadicContext& ctx = c.context();
  if (c.relative_precision() < 3)
    throw PrecisionError("p_th_root: at least 3 known digits required");
  long p = ctx.p;
  long p3 = p * p * p;
  long c3 = mpz_class(c.unit_residue(3)).get_si();
  for (long x0 = 1; x0 < p3; ++x0) {
    if (x0 % p == 0) continue;
    if (pow_mod(x0, p, p3) != c3) continue;
    auto lift = newton_lift(power_minus_const(c, p),
                            PadicNumber::from_integer(x0, ctx),
                            c.absolute_precision());
    return lift.root;
  }
  return std::nullopt;
}

namespace {

/// Shared p-part step: all p-th roots of z inside the field of z.
/// Base-embeddable z with a Q_p p-th root eta yields eta itself, times the
/// full Gamma_p orbit when the ambient field is the level-1 cyclotomic one.
std::vector<ExtElement> p_th_roots_in_field(const ExtElement& z,
                                            const ExtField& cyclo,
                                            bool field_is_cyclo,
                                            std::string& hint) {
  std::vector<ExtElement> out;
  auto base = z.to_base();
  if (!base) {
    hint =
        "p-th roots of non-rational intermediates need an extension tower "
        "(out of scope)";
    return out;
  }
  auto eta = p_th_root(*base);
  if (!eta) {
    hint = "p-th root requires a ramified extension (Gamma_p lives off Q_p)";
    return out;
  }
  ExtElement eta_e = ExtElement::embed(*eta, z.field());
  if (field_is_cyclo) {
    ExtElement zeta = ExtElement::one(cyclo) + ExtElement::generator(cyclo);
    for (long j = 0; j < z.field().base().p; ++j) {
      ExtElement zj(z.field(), zeta.pow(j).coordinates());
      out.push_back(eta_e * zj);
    }
  } else {
    out.push_back(eta_e);
  }
  return out;
}

template <class E>
void check_unit_distance(const std::vector<E>& roots) {
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      E d = roots[i] - roots[j];
      if (d.is_zero() || !(d.valuation() == Valuation(0)))
        throw Error(
            "nth_roots: distinct prime-to-p roots not at distance 1 (internal)");
    }
  }
}

}  // namespace

NthRootsResult<PadicNumber> nth_roots(const PadicNumber& c, long n) {
  if (n < 1) throw DomainError("nth_roots: n >= 1 required");
  if (c.is_zero() || c.finite_valuation() != 0)
    throw DomainError("nth_roots: |c| = 1 required");
  const PadicContext& ctx = c.context();
  long k, m;
  split_p_part(n, ctx.p, k, m);

  NthRootsResult<PadicNumber> res;
  res.total = n;
  std::vector<PadicNumber> stage;
  if (m == 1) {
    stage.push_back(c);
  } else {
    long c1 = mpz_class(c.unit_residue(1)).get_si();
    for (long r = 1; r < ctx.p; ++r) {
      if (pow_mod(r, m, ctx.p) != c1) continue;
      auto lift = newton_lift(power_minus_const(c, m),
                              PadicNumber::from_integer(r, ctx),
                              c.absolute_precision());
      stage.push_back(lift.root);
    }
    if (static_cast<long>(stage.size()) < m)
      res.extension_hint =
          "remaining prime-to-p roots need the unramified extension of degree " +
          std::to_string(unramified_degree_for(m, ctx.p));
    check_unit_distance(stage);
  }

  bool p_root_missing = false;
  for (long step = 0; step < k; ++step) {
    std::vector<PadicNumber> next;
    for (const PadicNumber& z : stage) {
      auto eta = p_th_root(z);
      if (eta)
        next.push_back(*eta);
      else
        p_root_missing = true;
    }
    stage = std::move(next);
  }
  if (p_root_missing) {
    if (!res.extension_hint.empty()) res.extension_hint += "; ";
    res.extension_hint +=
        "p-th root requires a ramified extension (Gamma_p lives off Q_p)";
  } else if (k > 0 && static_cast<long>(stage.size()) < n) {
    // a Q_p unit has at most one p-th root; the conjugates differ by Gamma_p
    if (!res.extension_hint.empty()) res.extension_hint += "; ";
    res.extension_hint +=
        "the remaining p-th-root conjugates lie in the level-1 cyclotomic "
        "extension";
  }
  res.roots = std::move(stage);
  return res;
}

NthRootsResult<ExtElement> nth_roots(const ExtElement& c, long n) {
  if (n < 1) throw DomainError("nth_roots: n >= 1 required");
  if (c.is_zero() || !(c.valuation() == Valuation(0)))
    throw DomainError("nth_roots: |c| = 1 required");
  const ExtField& field = c.field();
  const PadicContext& ctx = field.base();
  long k, m;
  split_p_part(n, ctx.p, k, m);

  NthRootsResult<ExtElement> res;
  res.total = n;
  std::vector<ExtElement> stage;
  if (m == 1) {
    stage.push_back(c);
  } else {
    const ResidueField& RF = field.residue_field();
    auto cbar = c.residue_vector();
    long target = ctx.precision - 1;
    for (const auto& cand : RF.enumerate()) {
      if (RF.is_zero(cand)) continue;
      if (RF.pow(cand, static_cast<unsigned long>(m)) != cbar) continue;
      std::vector<PadicNumber> coords;
      for (int i = 0; i < field.degree(); ++i)
        coords.push_back(PadicNumber::from_integer(
            i < static_cast<int>(cand.size()) ? cand[i] : 0, ctx));
      auto lift = newton_lift(power_minus_const(c, m),
                              ExtElement(field, std::move(coords)), target);
      stage.push_back(lift.root);
    }
    if (static_cast<long>(stage.size()) < m && res.extension_hint.empty())
      res.extension_hint =
          "remaining prime-to-p roots need a larger residue field";
    check_unit_distance(stage);
  }

  bool field_is_cyclo = false;
  ExtField cyclo = field;
  if (k > 0) {
    cyclo = cyclotomic_level1_field(ctx);
    field_is_cyclo = (field == cyclo);
  }
  for (long step = 0; step < k; ++step) {
    std::vector<ExtElement> next;
    std::string hint;
    for (const ExtElement& z : stage) {
      auto part = p_th_roots_in_field(z, cyclo, field_is_cyclo, hint);
      next.insert(next.end(), part.begin(), part.end());
    }
    if (!hint.empty()) {
      if (!res.extension_hint.empty()) res.extension_hint += "; ";
      res.extension_hint += hint;
    }
    stage = std::move(next);
  }
  res.roots = std::move(stage);
  return res;
}

}  // namespace padlab
