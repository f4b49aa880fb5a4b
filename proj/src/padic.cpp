#include "padlab/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padlab {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Valuation and unit part of a nonzero integer: value = p^val * unit.
long split_valuation(const mpz_class& value, long p, mpz_class& unit_out) {
  mpz_class pz(p);
  return static_cast<long>(
      mpz_remove(unit_out.get_mpz_t(), value.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

PadicContext::PadicContext(long p_arg, int precision_arg)
    : p(p_arg), precision(precision_arg) {
  if (!is_prime(p)) throw DomainError("PadicContext: p must be prime");
  if (p < 3) throw DomainError("PadicContext: p >= 3 required (p = 2 rejected)");
  if (precision < 4)
    throw DomainError("PadicContext: precision >= 4 required");
}

mpz_class PadicContext::p_power(long e) const {
  if (e < 0) throw DomainError("p_power: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

PadicNumber PadicNumber::zero(const PadicContext& ctx) {
  PadicNumber x(ctx);
  x.state_ = State::kExactZero;
  return x;
}

PadicNumber PadicNumber::zero_below(const PadicContext& ctx, long known_abs) {
  PadicNumber x(ctx);
  x.state_ = State::kBelowPrecision;
  x.zero_prec_ = known_abs;
  return x;
}

PadicNumber PadicNumber::one(const PadicContext& ctx) {
  return from_integer(mpz_class(1), ctx);
}

PadicNumber PadicNumber::make_unit(const PadicContext& ctx, long val,
                                   mpz_class unit, int rel) {
  PadicNumber x(ctx);
  x.state_ = State::kUnit;
  x.val_ = val;
  x.rel_ = rel;
  x.unit_ = std::move(unit);
  return x;
}

PadicNumber PadicNumber::from_integer(const mpz_class& value,
                                      const PadicContext& ctx) {
  if (value == 0) return zero(ctx);
  mpz_class unit;
  long val = split_valuation(value, ctx.p, unit);
  mpz_class mod = ctx.p_power(ctx.precision);
  mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  return make_unit(ctx, val, unit, ctx.precision);
}

PadicNumber PadicNumber::from_integer(long value, const PadicContext& ctx) {
  return from_integer(mpz_class(value), ctx);
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den,
                                       const PadicContext& ctx) {
  if (den == 0) throw DomainError("from_rational: zero denominator");
  if (num == 0) return zero(ctx);
  mpz_class nu, du;
  long nv = split_valuation(num, ctx.p, nu);
  long dv = split_valuation(den, ctx.p, du);
  mpz_class mod = ctx.p_power(ctx.precision);
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error("from_rational: inversion failed");  // unreachable: du coprime
  mpz_class unit = nu * dinv;
  mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  return make_unit(ctx, nv - dv, unit, ctx.precision);
}

PadicNumber PadicNumber::from_parts(long valuation, const mpz_class& unit,
                                    const PadicContext& ctx, int rel_digits) {
  int rel = rel_digits < 0 ? ctx.precision : rel_digits;
  if (rel < 1 || rel > ctx.precision)
    throw DomainError("from_parts: relative precision out of range");
  mpz_class mod = ctx.p_power(rel);
  mpz_class u;
  mpz_mod(u.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ctx.p)))
    throw DomainError("from_parts: unit part divisible by p");
  return make_unit(ctx, valuation, u, rel);
}

Valuation PadicNumber::valuation() const {
  if (state_ == State::kUnit) return Valuation(val_);
  return Valuation::infinity();
}

NormValue PadicNumber::norm() const { return NormValue(valuation()); }

long PadicNumber::absolute_precision() const {
  switch (state_) {
    case State::kExactZero:
      return kExactPrecision;
    case State::kBelowPrecision:
      return zero_prec_;
    case State::kUnit:
      return val_ + rel_;
  }
  return 0;  // unreachable
}

int PadicNumber::relative_precision() const {
  if (state_ != State::kUnit)
    throw DomainError("relative_precision: value is zero");
  return rel_;
}

long PadicNumber::finite_valuation() const {
  if (state_ != State::kUnit)
    throw DomainError("finite_valuation: value is zero");
  return val_;
}

const mpz_class& PadicNumber::unit_part() const {
  if (state_ != State::kUnit) throw DomainError("unit_part: value is zero");
  return unit_;
}

mpz_class PadicNumber::unit_residue(int digits) const {
  if (state_ != State::kUnit) throw DomainError("unit_residue: value is zero");
  if (digits < 1 || digits > rel_)
    throw PrecisionError("unit_residue: requested digits exceed known precision");
  mpz_class mod = ctx_.p_power(digits);
  mpz_class r;
  mpz_mod(r.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool PadicNumber::is_zero_to(long k) const {
  switch (state_) {
    case State::kExactZero:
      return true;
    case State::kBelowPrecision:
      if (zero_prec_ >= k) return true;
      throw PrecisionError("is_zero_to: zero known only below p^-" +
                           std::to_string(zero_prec_));
    case State::kUnit:
      return val_ >= k;
  }
  return false;  // unreachable
}

bool PadicNumber::equal_to_precision(const PadicNumber& other, long k) const {
  check_same_context(other);
  if (absolute_precision() < k || other.absolute_precision() < k)
    throw PrecisionError("equal_to_precision: k exceeds known precision");
  return (*this - other).is_zero_to(k);
}

PadicNumber PadicNumber::sharpened() const {
  switch (state_) {
    case State::kExactZero:
      return *this;
    case State::kBelowPrecision:
      return zero(ctx_);  // the representative 0 of the class O(p^k)
    case State::kUnit:
      if (rel_ == ctx_.precision) return *this;
      return make_unit(ctx_, val_, unit_, ctx_.precision);
  }
  return *this;  // unreachable
}

PadicNumber PadicNumber::operator-() const {
  if (state_ != State::kUnit) return *this;
  mpz_class u = ctx_.p_power(rel_) - unit_;
  return make_unit(ctx_, val_, u, rel_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  a.check_same_context(b);
  using State = PadicNumber::State;
  const PadicContext& ctx = a.ctx_;
  if (a.state_ == State::kExactZero) return b;
  if (b.state_ == State::kExactZero) return a;

  // Result is known modulo p^A.
  long A = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.state_ == State::kBelowPrecision || b.state_ == State::kBelowPrecision) {
    const PadicNumber& u = a.state_ == State::kUnit ? a : b;
    if (u.state_ == State::kUnit && u.val_ < A) {
      int rel = static_cast<int>(std::min<long>(u.rel_, A - u.val_));
      return PadicNumber::make_unit(ctx, u.val_, u.unit_residue(rel), rel);
    }
    return PadicNumber::zero_below(ctx, A);
  }

  long v = std::min(a.val_, b.val_);
  long window = A - v;  // >= 1, <= N
  mpz_class mod = ctx.p_power(window);
  mpz_class s = a.unit_ * ctx.p_power(a.val_ - v) + b.unit_ * ctx.p_power(b.val_ - v);
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  if (s == 0) return PadicNumber::zero_below(ctx, A);
  mpz_class unit;
  long t = static_cast<long>(mpz_remove(
      unit.get_mpz_t(), s.get_mpz_t(), mpz_class(ctx.p).get_mpz_t()));
  return PadicNumber::make_unit(ctx, v + t, unit, static_cast<int>(window - t));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) {
  return a + (-b);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  a.check_same_context(b);
  using State = PadicNumber::State;
  const PadicContext& ctx = a.ctx_;
  if (a.state_ == State::kExactZero || b.state_ == State::kExactZero)
    return PadicNumber::zero(ctx);
  if (a.state_ == State::kBelowPrecision || b.state_ == State::kBelowPrecision) {
    // |xy| <= p^-(A + v) resp. p^-(A1 + A2).
    long bound = 0;
    bound += a.state_ == State::kUnit ? a.val_ : a.zero_prec_;
    bound += b.state_ == State::kUnit ? b.val_ : b.zero_prec_;
    return PadicNumber::zero_below(ctx, bound);
  }
  int rel = std::min(a.rel_, b.rel_);
  mpz_class mod = ctx.p_power(rel);
  mpz_class u = a.unit_ * b.unit_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  return PadicNumber::make_unit(ctx, a.val_ + b.val_, u, rel);
}

PadicNumber PadicNumber::inverse() const {
  if (state_ == State::kExactZero)
    throw DomainError("inverse: division by exact zero");
  if (state_ == State::kBelowPrecision)
    throw PrecisionError("inverse: divisor indistinguishable from zero");
  mpz_class mod = ctx_.p_power(rel_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return make_unit(ctx_, -val_, inv, rel_);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  a.check_same_context(b);
  using State = PadicNumber::State;
  if (b.state_ == State::kExactZero)
    throw DomainError("division by exact zero");
  if (b.state_ == State::kBelowPrecision)
    throw PrecisionError("division: divisor indistinguishable from zero");
  if (a.state_ == State::kExactZero) return a;
  if (a.state_ == State::kBelowPrecision)
    return PadicNumber::zero_below(a.ctx_, a.zero_prec_ - b.val_);
  return a * b.inverse();
}

PadicNumber PadicNumber::pow(long e) const {
  if (e == 0) return one(ctx_);
  if (state_ == State::kExactZero) {
    if (e < 0) throw DomainError("pow: division by exact zero");
    return *this;
  }
  if (state_ == State::kBelowPrecision) {
    if (e < 0) throw PrecisionError("pow: divisor indistinguishable from zero");
    return zero_below(ctx_, zero_prec_ * e);
  }
  if (e < 0) return inverse().pow(-e);
  mpz_class mod = ctx_.p_power(rel_);
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
              mod.get_mpz_t());
  return make_unit(ctx_, val_ * e, u, rel_);
}

bool PadicNumber::same_representation(const PadicNumber& o) const {
  if (ctx_ != o.ctx_ || state_ != o.state_) return false;
  switch (state_) {
    case State::kExactZero:
      return true;
    case State::kBelowPrecision:
      return zero_prec_ == o.zero_prec_;
    case State::kUnit:
      return val_ == o.val_ && rel_ == o.rel_ && unit_ == o.unit_;
  }
  return false;  // unreachable
}

std::string PadicNumber::debug_string() const {
  std::ostringstream os;
  switch (state_) {
    case State::kExactZero:
      os << "0";
      break;
    case State::kBelowPrecision:
      os << "O(" << ctx_.p << "^" << zero_prec_ << ")";
      break;
    case State::kUnit:
      os << ctx_.p << "^" << val_ << "*" << unit_.get_str() << "+O(" << ctx_.p
         << "^" << (val_ + rel_) << ")";
      break;
  }
  return os.str();
}

void PadicNumber::check_same_context(const PadicNumber& o) const {
  if (ctx_ != o.ctx_)
    throw DomainError("operands belong to different p-adic contexts");
}

long binomial_valuation(unsigned long n, unsigned long k, long p) {
  if (k > n) throw DomainError("binomial_valuation: k > n");
  if (p < 2 || !is_prime(p)) throw DomainError("binomial_valuation: p not prime");
  // Kummer: v_p(C(n,k)) = (s(k) + s(n-k) - s(n)) / (p - 1), s = digit sum.
  auto digit_sum = [p](unsigned long m) {
    long s = 0;
    while (m > 0) {
      s += static_cast<long>(m % static_cast<unsigned long>(p));
      m /= static_cast<unsigned long>(p);
    }
    return s;
  };
  return (digit_sum(k) + digit_sum(n - k) - digit_sum(n)) / (p - 1);
}

}  // namespace padlab
