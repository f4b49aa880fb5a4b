#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "padlab/errors.hpp"

namespace padlab {

/// Exact additive p-adic valuation: a rational number, or +infinity for zero.
/// Values in Q_p have integer valuations; in an extension with ramification
/// index e the denominator divides e. Stored reduced with positive
/// denominator; infinity is encoded as denominator 0.
class Valuation {
 public:
  Valuation() : num_(0), den_(1) {}
  Valuation(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Valuation(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("Valuation: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Valuation infinity() {
    Valuation v;
    v.num_ = 1;
    v.den_ = 0;
    return v;
  }

  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Largest integer <= value (finite only).
  std::int64_t floor() const {
    require_finite();
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  /// Smallest integer >= value (finite only).
  std::int64_t ceil() const {
    require_finite();
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Valuation operator-(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) {
      if (b.is_infinite()) throw DomainError("Valuation: inf - inf");
      return infinity();
    }
    if (b.is_infinite()) throw DomainError("Valuation: finite - inf");
    return Valuation(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Valuation operator*(const Valuation& a, std::int64_t k) {
    if (a.is_infinite()) return infinity();
    return Valuation(a.num_ * k, a.den_);
  }
  Valuation operator-() const {
    if (is_infinite()) throw DomainError("Valuation: negating infinity");
    return Valuation(-num_, den_);
  }

  // Infinity compares greater than every finite valuation.
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string str() const {
    if (is_infinite()) return "+inf";
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  void require_finite() const {
    if (is_infinite()) throw DomainError("Valuation: infinite where finite required");
  }
  std::int64_t num_;
  std::int64_t den_;  // 0 encodes +infinity
};

/// The p-adic norm |x| = p^(-exponent), kept as the exact exponent
/// (= valuation of x). Never a float: every comparison below is exact.
struct NormValue {
  Valuation exponent;

  NormValue() : exponent(Valuation::infinity()) {}
  explicit NormValue(Valuation v) : exponent(v) {}

  bool is_zero() const { return exponent.is_infinite(); }
  bool is_one() const { return !is_zero() && exponent == Valuation(0); }

  /// Exact exponent rendering: |x| = p^-2 prints "p^-2", p^(1/2) valuation
  /// prints "p^-1/2", the zero norm prints "0".
  std::string str() const {
    if (is_zero()) return "0";
    return "p^" + (-exponent).str();
  }

  // Norm ordering: larger norm == smaller exponent.
  friend bool operator==(const NormValue& a, const NormValue& b) {
    return a.exponent == b.exponent;
  }
  friend bool operator!=(const NormValue& a, const NormValue& b) { return !(a == b); }
  friend bool operator<(const NormValue& a, const NormValue& b) {
    return a.exponent > b.exponent;
  }
  friend bool operator>(const NormValue& a, const NormValue& b) { return b < a; }
  friend bool operator<=(const NormValue& a, const NormValue& b) { return !(b < a); }
  friend bool operator>=(const NormValue& a, const NormValue& b) { return !(a < b); }
};

}  // namespace padlab
