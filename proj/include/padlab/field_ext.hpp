#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padlab/padic.hpp"

namespace padlab {

/// Arithmetic in the residue field F_{p^f} = F_p[x]/(g mod p), used for
/// brute-force root searches and the mod-p irreducibility certificate.
/// Elements are coefficient vectors of length f with entries in [0, p).
struct ResidueField {
  long p;
  std::vector<long> modulus;  // monic over F_p, size f+1, modulus[f] == 1

  using Elem = std::vector<long>;

  int degree() const { return static_cast<int>(modulus.size()) - 1; }
  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned long e) const;
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  /// All p^f elements in lexicographic coordinate order (constant first).
  std::vector<Elem> enumerate() const;
};

/// Brute-force irreducibility over F_p by trial division against every monic
/// polynomial of degree <= deg/2. Intended for the small degrees (<= 6) this
/// library constructs.
bool residue_poly_irreducible(long p, const std::vector<long>& poly);

enum class ExtFieldKind { unramified, eisenstein };

/// A certified finite extension K = Q_p[t]/(g) with e*f = deg(g).
/// Construction succeeds only with an irreducibility certificate: either g is
/// irreducible mod p (unramified) or g satisfies the Eisenstein criterion
/// (totally ramified). Fields are immutable and cheap to copy.
class ExtField {
 public:
  const PadicContext& base() const;
  /// Monic modulus, constant term first, size degree+1.
  const std::vector<PadicNumber>& modulus() const;
  ExtFieldKind kind() const;
  int degree() const;
  int ramification_index() const;  // e
  int residue_degree() const;      // f
  const ResidueField& residue_field() const;

  bool operator==(const ExtField& o) const;
  bool operator!=(const ExtField& o) const { return !(*this == o); }

  std::string describe() const;  // e.g. "Q_3[t]/(3 + 3*t + t^2), eisenstein"

 private:
  friend ExtField make_extension(const std::vector<PadicNumber>&,
                                 const PadicContext&);
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Certify and build Q_p[t]/(g). `monic_coeffs` lists g constant-term first
/// including the leading 1; degree must be in [2, 6] and all coefficients in
/// Z_p. Throws DomainError when no certificate (mod-p irreducible or
/// Eisenstein) applies.
ExtField make_extension(const std::vector<PadicNumber>& monic_coeffs,
                        const PadicContext& ctx);
ExtField make_extension(const std::vector<long>& monic_coeffs,
                        const PadicContext& ctx);

/// An element of an ExtField in the power basis 1, t, ..., t^(d-1); each
/// coordinate carries its own precision.
class ExtElement {
 public:
  ExtElement(ExtField field, std::vector<PadicNumber> coords);

  static ExtElement zero(const ExtField& f);
  static ExtElement one(const ExtField& f);
  static ExtElement generator(const ExtField& f);  // the class of t
  static ExtElement embed(const PadicNumber& x, const ExtField& f);

  const ExtField& field() const { return field_; }
  const std::vector<PadicNumber>& coordinates() const { return coords_; }

  bool is_zero() const;        // every coordinate zero at its known precision
  bool is_exact_zero() const;  // every coordinate the exact zero

  /// Exact valuation v(x) = v_p(det M_x) / d, where M_x is the
  /// multiplication-by-x matrix over Q_p. The denominator always divides the
  /// ramification index. +inf for the exact zero; PrecisionError when the
  /// determinant is indistinguishable from zero at the working precision.
  Valuation valuation() const;
  NormValue norm() const;

  /// Is |x| <= p^-k? Decided from per-coordinate bounds.
  bool is_zero_to(long k) const;

  /// Coordinates in the residue field (length f); requires an integral
  /// element. Unramified: reductions of all coordinates. Eisenstein: the
  /// constant coordinate only.
  ResidueField::Elem residue_vector() const;

  /// The base-field value when all higher coordinates vanish.
  std::optional<PadicNumber> to_base() const;

  /// Coordinates re-extended to full relative precision (see
  /// PadicNumber::sharpened); used between Newton steps.
  ExtElement sharpened() const;

  ExtElement operator-() const;
  ExtElement inverse() const;  // extended Euclid over Q_p[t]
  ExtElement pow(long e) const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b);

 private:
  void check_same_field(const ExtElement& o) const;
  ExtField field_;
  std::vector<PadicNumber> coords_;
};

ExtElement make_scalar(const ExtElement& like, const mpz_class& value);
std::string display(const ExtElement& x);

}  // namespace padlab
