#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padlab/field_ext.hpp"
#include "padlab/literal.hpp"
#include "padlab/padic.hpp"

namespace padlab {

/// A square root needs a quadratic extension; `suggested_modulus` is the
/// constant-first coefficient list of a certifiable modulus (t^2 - u).
struct NonResidueError : NotRepresentableError {
  NonResidueError(const std::string& what, std::vector<long> modulus,
                  std::string hint_arg)
      : NotRepresentableError(what, std::move(hint_arg)),
        suggested_modulus(std::move(modulus)) {}
  std::vector<long> suggested_modulus;
};

/// Provenance record for a lifted root: where the Newton iteration started
/// and why it was allowed to (start residual beats twice the derivative).
struct LiftCertificate {
  std::string polynomial;
  std::string start;
  Valuation start_residual;
  Valuation derivative_valuation;
  int iterations = 0;
};

template <class E>
struct LiftResult {
  E root;
  LiftCertificate certificate;
};

template <class E>
E poly_eval(const std::vector<E>& coeffs, const E& x) {
  if (coeffs.empty()) throw DomainError("poly_eval: empty polynomial");
  E acc = coeffs.back();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

template <class E>
std::vector<E> poly_derivative(const std::vector<E>& coeffs) {
  std::vector<E> d;
  for (size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * make_scalar(coeffs[i], mpz_class(static_cast<long>(i))));
  if (d.empty()) d.push_back(make_scalar(coeffs[0], mpz_class(0)));
  return d;
}

template <class E>
std::string poly_display(const std::vector<E>& coeffs) {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += " + ";
    s += "(" + display(coeffs[i]) + ")";
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

namespace detail {
/// Tri-state residual check: true (residual provably <= p^-target), false
/// (provably not), or a PrecisionError when the working precision cannot
/// certify the target.
template <class E>
bool residual_reaches(const E& value, long target) {
  return value.is_zero_to(target);
}
}  // namespace detail

/// Hensel--Newton lifting. Requires v(poly(approx)) > 2 v(poly'(approx));
/// iterates x <- x - f(x)/f'(x) until |poly(x)| <= p^-target_precision.
/// Quadratic convergence bounds the iteration count by ~log2(target)+2.
template <class E>
LiftResult<E> newton_lift(const std::vector<E>& poly, const E& approx,
                          long target_precision) {
  std::vector<E> dpoly = poly_derivative(poly);
  E f0 = poly_eval(poly, approx);
  E d0 = poly_eval(dpoly, approx);
  if (d0.is_zero())
    throw PrecisionError("newton_lift: derivative vanishes at the start value");
  Valuation dv = d0.valuation();
  Valuation t0 = f0.is_zero() ? Valuation::infinity() : f0.valuation();
  if (!(t0 > dv * 2))
    throw DomainError(
        "newton_lift: convergence precondition v(f(x0)) > 2 v(f'(x0)) unmet");

  LiftCertificate cert{poly_display(poly), display(approx), t0, dv, 0};
  int max_iter = 2;
  for (long t = target_precision > 0 ? target_precision : 1; t > 0; t >>= 1)
    ++max_iter;
  max_iter += 4;

  E cur = approx;
  for (int iter = 0; iter <= max_iter; ++iter) {
    E f = poly_eval(poly, cur);
    bool done;
    try {
      done = detail::residual_reaches(f, target_precision);
    } catch (const PrecisionError&) {
      throw PrecisionError(
          "newton_lift: precision ceiling reached before the target residual");
    }
    if (done) {
      cert.iterations = iter;
      return LiftResult<E>{cur, cert};
    }
    E d = poly_eval(dpoly, cur);
    if (d.is_zero())
      throw PrecisionError("newton_lift: derivative lost to precision");
    // Sharpen the iterate: carry an exact representative forward so that
    // interval pessimism (one digit per division when v(f') > 0) does not
    // accumulate across steps.
    cur = (cur - f / d).sharpened();
  }
  throw PrecisionError("newton_lift: no convergence within the iteration bound");
}

/// Square root in Q_p (p odd). Requires even valuation and a quadratic
/// residue unit; returns the branch whose residue mod p is the smaller
/// representative in [1, p-1] (the other branch is its negation). A
/// non-residue raises NonResidueError carrying the t^2 - u modulus hint.
PadicNumber sqrt(const PadicNumber& x);

template <class E>
struct RootsOfUnitySet {
  long order = 1;
  std::vector<E> members;  // identity first, then by residue order
  bool includes_identity = true;
};

/// All m-th roots of unity in Q_p; requires (m, p) = 1 and m | p - 1
/// (otherwise NotRepresentableError suggesting the unramified degree).
RootsOfUnitySet<PadicNumber> nth_roots_of_unity(long m, const PadicContext& ctx);
/// Same in an extension; requires m | p^f - 1 for the field's residue degree.
RootsOfUnitySet<ExtElement> nth_roots_of_unity(long m, const ExtField& field);

/// The degree-(p-1) Eisenstein field Q_p[t]/(((1+t)^p - 1)/t) containing the
/// p-th roots of unity as (1+t)^j.
ExtField cyclotomic_level1_field(const PadicContext& ctx);

struct PPowerRoots {
  ExtField field;
  RootsOfUnitySet<ExtElement> set;
};
/// Level-1 p-power roots of unity (level >= 2 unsupported). Every nontrivial
/// member z satisfies v(z - 1) = 1/(p-1) < 1.
PPowerRoots p_power_roots_of_unity(const PadicContext& ctx, int level = 1);

/// p-th root of a unit c in Q_p, if one exists. Sound absence: an exact root
/// would reduce to a solution of x^p = c mod p^3, which is searched
/// exhaustively; a found solution certifies lifting via
/// v(c - x0^p) >= 3 > 2 = 2 v(p x0^(p-1)).
std::optional<PadicNumber> p_th_root(const PadicNumber& c);

template <class E>
struct NthRootsResult {
  std::vector<E> roots;        // all roots representable in the field
  long total = 0;              // number of roots of x^n = c in C_p (= n)
  std::string extension_hint;  // why the missing ones are missing
  long missing() const { return total - static_cast<long>(roots.size()); }
};

/// Roots of x^n = c for a unit c: the prime-to-p part by residue search plus
/// Newton lifting (all roots simple), the p-power part by iterated p-th root
/// extraction. Roots that need a larger field are counted, never fabricated.
NthRootsResult<PadicNumber> nth_roots(const PadicNumber& c, long n);
NthRootsResult<ExtElement> nth_roots(const ExtElement& c, long n);

/// Multiplicative order of p modulo m (m coprime to p): the unramified
/// degree whose residue field first contains the m-th roots of unity.
long unramified_degree_for(long m, long p);

}  // namespace padlab
