#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "padlab/report.hpp"
#include "padlab/roots.hpp"

namespace padlab {

/// The dynamical system f(x) = x^(2n+1) + a x^(n+1) with 0 < |a|_p < 1.
struct PolyMap {
  PadicContext ctx;
  long n;
  PadicNumber a;
};

/// Validates the standing hypotheses (n >= 1, a != 0, |a|_p < 1).
PolyMap make_map(long n, const PadicNumber& a);

inline PadicNumber carry_into(const PadicNumber&, const PadicNumber& v) {
  return v;
}
inline ExtElement carry_into(const ExtElement& like, const PadicNumber& v) {
  return ExtElement::embed(v, like.field());
}

/// f(x) = x * t * (t + a) with t = x^n.
template <class E>
E evaluate(const PolyMap& map, const E& x) {
  E t = x.pow(map.n);
  return x * t * (t + carry_into(x, map.a));
}

/// f'(x) = t * ((2n+1) t + (n+1) a) with t = x^n.
template <class E>
E derivative(const PolyMap& map, const E& x) {
  E t = x.pow(map.n);
  E c1 = make_scalar(x, mpz_class(2 * map.n + 1));
  E c2 = make_scalar(x, mpz_class(map.n + 1));
  return t * (c1 * t + c2 * carry_into(x, map.a));
}

enum class CaseTag { i, ii, iii, iv, v };
std::string case_tag_name(CaseTag tag);

/// Which clauses of the classification theorem apply to (p, n):
///   (i)   gcd(2n+1, p) = 1
///   (ii)  n = p^l
///   (iii) gcd(2n+1, p) = 1 and gcd(n, p) = 1
///   (iv)  p | n and n is not a pure p-power
///   (v)   gcd(2n+1, p) != 1
std::set<CaseTag> theorem_case(long p, long n);

enum class Character { attracting, indifferent, repelling };
std::string character_name(Character c);

/// An open-disk radius reported as its exponent supremum: radius sup
/// p^(-sup_exponent), exclusive when the supremum itself is not attained
/// (exponent 0 exclusive encodes "all r < 1").
struct DiskBound {
  Valuation sup_exponent;
  bool exclusive = true;
};

template <class E>
struct FixedPointRecord {
  E value;
  E multiplier;
  NormValue multiplier_norm;
  Character character = Character::indifferent;
  std::optional<DiskBound> siegel_radius;      // indifferent points
  std::optional<DiskBound> attraction_radius;  // attracting points
  std::set<CaseTag> case_tags;
};

/// Sound lower bound on the valuation (exact for resolved values; the known
/// precision bound for below-precision zeros).
inline Valuation valuation_lower_bound(const PadicNumber& x) {
  if (x.is_exact_zero()) return Valuation::infinity();
  if (x.is_zero()) return Valuation(x.absolute_precision());
  return x.valuation();
}
inline Valuation valuation_lower_bound(const ExtElement& x) {
  Valuation best = Valuation::infinity();
  long e = x.field().ramification_index();
  bool eis = x.field().kind() == ExtFieldKind::eisenstein;
  for (size_t i = 0; i < x.coordinates().size(); ++i) {
    Valuation v = valuation_lower_bound(x.coordinates()[i]);
    if (eis && !v.is_infinite()) v = v + Valuation(static_cast<long>(i), e);
    if (v < best) best = v;
  }
  return best;
}

namespace detail {

/// |f^(m)(x0)/m!| as exact valuation lower bounds, m = 1..2n+1. For this
/// polynomial the coefficient is C(2n+1,m) x^(2n+1-m) + a C(n+1,m) x^(n+1-m)
/// (second term while m <= n+1); higher derivatives vanish.
template <class E>
std::vector<Valuation> taylor_valuations(const PolyMap& map, const E& x0) {
  std::vector<Valuation> out;
  long deg = 2 * map.n + 1;
  for (long m = 1; m <= deg; ++m) {
    mpz_class b1, b2;
    mpz_bin_uiui(b1.get_mpz_t(), static_cast<unsigned long>(deg),
                 static_cast<unsigned long>(m));
    E term = make_scalar(x0, b1) * x0.pow(deg - m);
    if (m <= map.n + 1) {
      mpz_bin_uiui(b2.get_mpz_t(), static_cast<unsigned long>(map.n + 1),
                   static_cast<unsigned long>(m));
      term = term + carry_into(x0, map.a) * make_scalar(x0, b2) *
                        x0.pow(map.n + 1 - m);
    }
    out.push_back(valuation_lower_bound(term));
  }
  return out;
}

/// Largest tested radius p^-j (1 <= j <= jmax) satisfying
/// max_m |T_m| r^(m-1) < 1 over m >= m_min, reported as the open-disk bound
/// p^-(j-1) exclusive. The condition is monotone in j.
inline std::optional<DiskBound> radius_bound(
    const std::vector<Valuation>& taylor, long m_min, long jmax) {
  for (long j = 1; j <= jmax; ++j) {
    bool ok = true;
    for (size_t idx = static_cast<size_t>(m_min - 1); idx < taylor.size();
         ++idx) {
      long m = static_cast<long>(idx) + 1;
      Valuation scaled = taylor[idx].is_infinite()
                             ? Valuation::infinity()
                             : taylor[idx] + Valuation(j * (m - 1));
      if (!(scaled > Valuation(0))) {
        ok = false;
        break;
      }
    }
    if (ok) return DiskBound{Valuation(j - 1), true};
  }
  return std::nullopt;
}

}  // namespace detail

/// Classify a fixed point: multiplier, character by |lambda|, and the
/// certified disk radius from the Taylor-coefficient conditions.
template <class E>
FixedPointRecord<E> classify(const PolyMap& map, const E& fp) {
  E residual = evaluate(map, fp) - fp;
  bool fixed;
  try {
    fixed = residual.is_zero_to(map.ctx.precision - 2);
  } catch (const PrecisionError&) {
    fixed = false;
  }
  if (!fixed)
    throw DomainError("classify: the supplied point is not fixed to precision");

  FixedPointRecord<E> rec{fp,
                          derivative(map, fp),
                          NormValue(),
                          Character::indifferent,
                          std::nullopt,
                          std::nullopt,
                          theorem_case(map.ctx.p, map.n)};
  if (rec.multiplier.is_exact_zero()) {
    rec.multiplier_norm = NormValue(Valuation::infinity());
    rec.character = Character::attracting;
  } else {
    Valuation lv = rec.multiplier.valuation();  // PrecisionError if fuzzy
    rec.multiplier_norm = NormValue(lv);
    if (lv > Valuation(0))
      rec.character = Character::attracting;
    else if (lv == Valuation(0))
      rec.character = Character::indifferent;
    else
      rec.character = Character::repelling;
  }

  if (rec.character == Character::repelling) return rec;  // no radius applies
  auto taylor = detail::taylor_valuations(map, fp);
  long jmax = map.ctx.precision - 2;
  if (rec.character == Character::attracting)
    rec.attraction_radius = detail::radius_bound(taylor, 1, jmax);
  else
    rec.siegel_radius = detail::radius_bound(taylor, 2, jmax);
  return rec;
}

/// Fixed points of f: the origin plus the solutions of x^n = c+- with
/// c+- = (-a +- sqrt(a^2+4))/2. Roots that need a bigger field are counted
/// in missing_* with extension hints, never fabricated.
template <class E>
struct FixedPointFamily {
  PadicNumber c_plus;
  PadicNumber c_minus;
  std::vector<E> roots_plus;
  std::vector<E> roots_minus;
  long missing_plus = 0;
  long missing_minus = 0;
  std::string hint_plus;
  std::string hint_minus;
  E origin;

  std::vector<E> all_nonzero() const {
    std::vector<E> out = roots_plus;
    out.insert(out.end(), roots_minus.begin(), roots_minus.end());
    return out;
  }
};

FixedPointFamily<PadicNumber> fixed_points(const PolyMap& map);
FixedPointFamily<ExtElement> fixed_points_in(const PolyMap& map,
                                             const ExtField& field);

/// The quadratic-formula pair (c_plus, c_minus) alone.
std::pair<PadicNumber, PadicNumber> fixed_point_pair(const PolyMap& map);

enum class OrbitTermination { converged, sphere_preserved, escaped, max_iters };
std::string orbit_termination_name(OrbitTermination t);

template <class E>
struct OrbitTrace {
  E start;
  /// (iterate index, |f^i(x) - reference|), index 0 = the start point.
  std::vector<std::pair<long, NormValue>> distances;
  OrbitTermination termination = OrbitTermination::max_iters;
};

template <class E>
OrbitTrace<E> iterate(const PolyMap& map, const E& x0, long k,
                      const E& reference) {
  if (k < 1) throw DomainError("iterate: k >= 1 required");
  OrbitTrace<E> trace{x0, {}, OrbitTermination::max_iters};
  auto record = [&trace](long i, const E& d) {
    if (d.is_zero())
      trace.distances.emplace_back(i, NormValue(Valuation::infinity()));
    else
      trace.distances.emplace_back(i, NormValue(d.valuation()));
    return !d.is_zero();
  };
  E x = x0;
  bool started_inside = false;
  {
    E d = x - reference;
    if (record(0, d))
      started_inside = d.valuation() > Valuation(0);
    else
      started_inside = true;
  }
  for (long i = 1; i <= k; ++i) {
    x = evaluate(map, x);
    E d = x - reference;
    if (!record(i, d)) {
      trace.termination = OrbitTermination::converged;
      return trace;
    }
    if (started_inside && !(d.valuation() > Valuation(0))) {
      trace.termination = OrbitTermination::escaped;
      return trace;
    }
  }
  bool constant = true;
  for (const auto& step : trace.distances)
    if (step.second.exponent != trace.distances.front().second.exponent)
      constant = false;
  if (constant && !trace.distances.front().second.is_zero() &&
      trace.distances.front().second.exponent > Valuation(0))
    trace.termination = OrbitTermination::sphere_preserved;
  return trace;
}

/// Sample points x0 + p^j u (u a seeded pseudo-random unit) and demand
/// v(f^i(x) - x0) = j exactly for every iterate: the sphere S_{p^-j}(x0) is
/// invariant. Violations become report rows, not exceptions.
VerificationReport verify_sphere_invariance(const PolyMap& map,
                                            const PadicNumber& x0, int j,
                                            int samples, int iters,
                                            std::uint64_t seed);

/// Sample from U_1(x0 * xi) for each translation xi (default: just x0) and
/// demand the orbit reaches distance valuation >= N-1 from x0 within `iters`.
VerificationReport verify_attraction(
    const PolyMap& map, const PadicNumber& x0, int samples, int iters,
    std::uint64_t seed,
    const std::vector<PadicNumber>& translations = {});

/// Pairwise |x_i - x_j| over a list of fixed points.
template <class E>
std::vector<std::vector<NormValue>> disjointness_matrix(
    const std::vector<E>& points) {
  size_t d = points.size();
  std::vector<std::vector<NormValue>> m(d, std::vector<NormValue>(d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      E diff = points[i] - points[j];
      NormValue nv = diff.is_zero() ? NormValue(Valuation::infinity())
                                    : NormValue(diff.valuation());
      m[i][j] = nv;
      m[j][i] = nv;
    }
  }
  return m;
}

/// Solve f(y) = x_j by residue search plus Newton lifting and check that
/// every preimage other than x_j itself lies on S_1(x_j). Requires
/// gcd(2n+1, p) = 1 (all residue roots simple).
VerificationReport preimage_sphere_check(const PolyMap& map,
                                         const PadicNumber& x_j);
VerificationReport preimage_sphere_check(const PolyMap& map,
                                         const ExtElement& x_j);

/// Deterministic sampling helpers (mt19937_64 is fully specified, so seeded
/// runs are reproducible across platforms).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
mpz_class random_unit_digits(const PadicContext& ctx, std::uint64_t seed);

}  // namespace padlab
