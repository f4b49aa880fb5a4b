#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "padlab/errors.hpp"
#include "padlab/valuation.hpp"

namespace padlab {

/// Sentinel absolute precision of an exactly-known value.
inline constexpr long kExactPrecision = std::numeric_limits<long>::max();

/// Working field parameters: the odd prime p and the relative precision N
/// (how many base-p digits of the unit part are carried).
struct PadicContext {
  long p;
  int precision;

  PadicContext(long p_arg, int precision_arg);

  bool operator==(const PadicContext& o) const {
    return p == o.p && precision == o.precision;
  }
  bool operator!=(const PadicContext& o) const { return !(*this == o); }

  /// p^e for e >= 0.
  mpz_class p_power(long e) const;
};

/// An element of Q_p known to finite absolute precision.
///
/// A nonzero value is p^valuation * unit with unit in [1, p^rel) coprime to
/// p, known modulo p^(valuation+rel); rel <= N. Zero comes in two flavours:
/// the exact zero (valuation +inf, infinite absolute precision) and "zero
/// below precision" — a value all of whose known digits cancelled, i.e.
/// |x| <= p^-k for the recorded k. Arithmetic propagates precision
/// conservatively and never invents digits. All values are immutable.
class PadicNumber {
 public:
  static PadicNumber zero(const PadicContext& ctx);
  /// Zero as far as the first `known_abs` digits tell: |x| <= p^-known_abs.
  static PadicNumber zero_below(const PadicContext& ctx, long known_abs);
  static PadicNumber one(const PadicContext& ctx);
  static PadicNumber from_integer(const mpz_class& value, const PadicContext& ctx);
  static PadicNumber from_integer(long value, const PadicContext& ctx);
  /// Exact image of num/den (den != 0), truncated to N relative digits.
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den,
                                   const PadicContext& ctx);
  /// p^valuation * unit with `rel_digits` known unit digits (default N).
  static PadicNumber from_parts(long valuation, const mpz_class& unit,
                                const PadicContext& ctx, int rel_digits = -1);

  const PadicContext& context() const { return ctx_; }

  bool is_zero() const { return state_ != State::kUnit; }
  bool is_exact_zero() const { return state_ == State::kExactZero; }
  bool is_unit() const { return state_ == State::kUnit && val_ == 0; }

  /// +inf for both zero states; exact integer otherwise.
  Valuation valuation() const;
  NormValue norm() const;

  /// Digits of absolute precision: the value is known modulo p^(this).
  /// kExactPrecision for the exact zero.
  long absolute_precision() const;
  int relative_precision() const;      // nonzero values only
  long finite_valuation() const;       // nonzero values only
  const mpz_class& unit_part() const;  // nonzero values only
  /// unit mod p^digits; requires digits <= relative precision.
  mpz_class unit_residue(int digits) const;

  /// Is |x| <= p^-k? Throws PrecisionError when the known digits cannot
  /// decide (only possible for below-precision zeros with fewer than k
  /// known digits).
  bool is_zero_to(long k) const;
  /// |x - y| <= p^-k. Requires k <= both absolute precisions.
  bool equal_to_precision(const PadicNumber& other, long k) const;

  /// Same stored representative with the relative precision re-extended to
  /// the context maximum (missing digits taken as zero). This picks one
  /// exact representative out of the congruence class; Newton iterations
  /// sharpen their iterates this way, since any congruent representative is
  /// an equally valid next start and later steps correct the choice.
  PadicNumber sharpened() const;

  PadicNumber operator-() const;
  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  /// Representation equality (same state, valuation, digits, precision).
  bool same_representation(const PadicNumber& o) const;

  std::string debug_string() const;

 private:
  enum class State { kExactZero, kBelowPrecision, kUnit };

  explicit PadicNumber(const PadicContext& ctx) : ctx_(ctx) {}
  static PadicNumber make_unit(const PadicContext& ctx, long val, mpz_class unit,
                               int rel);
  void check_same_context(const PadicNumber& o) const;

  PadicContext ctx_;
  State state_ = State::kExactZero;
  long val_ = 0;        // kUnit
  int rel_ = 0;         // kUnit: known unit digits, 1..N
  mpz_class unit_;      // kUnit: in [1, p^rel), coprime to p
  long zero_prec_ = 0;  // kBelowPrecision: |x| <= p^-zero_prec_
};

/// v_p(C(n, k)) by Kummer's carry count; exact for all 0 <= k <= n.
long binomial_valuation(unsigned long n, unsigned long k, long p);

inline PadicNumber make_scalar(const PadicNumber& like, const mpz_class& value) {
  return PadicNumber::from_integer(value, like.context());
}

}  // namespace padlab
