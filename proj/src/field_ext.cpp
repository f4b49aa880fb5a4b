#include "padlab/field_ext.hpp"

#include <algorithm>
#include <sstream>

#include "padlab/literal.hpp"

namespace padlab {

// ---------------------------------------------------------------------------
// Residue field F_{p^f}
// ---------------------------------------------------------------------------

ResidueField::Elem ResidueField::one() const {
  Elem e(degree(), 0);
  e[0] = 1;
  return e;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  int f = degree();
  std::vector<long> prod(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce by the monic modulus
  for (int i = 2 * f - 2; i >= f; --i) {
    long c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < f; ++j) {
      long sub = (c * modulus[j]) % p;
      prod[i - f + j] = ((prod[i - f + j] - sub) % p + p) % p;
    }
    prod[i] = 0;
  }
  prod.resize(f);
  return prod;
}

ResidueField::Elem ResidueField::pow(const Elem& a, unsigned long e) const {
  Elem r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool ResidueField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

bool ResidueField::is_one(const Elem& a) const {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

std::vector<ResidueField::Elem> ResidueField::enumerate() const {
  int f = degree();
  std::vector<Elem> all;
  Elem cur(f, 0);
  while (true) {
    all.push_back(cur);
    int i = 0;
    while (i < f && ++cur[i] == p) cur[i++] = 0;
    if (i == f) break;
  }
  return all;
}

namespace {

// Remainder of a mod b over F_p, b monic-normalized internally.
std::vector<long> residue_poly_rem(long p, std::vector<long> a,
                                   const std::vector<long>& b) {
  auto inv_mod = [p](long x) {
    long r = 1, base = ((x % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  int db = static_cast<int>(b.size()) - 1;
  long lead_inv = inv_mod(b[db]);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    long c = a[i] % p;
    if (c == 0) continue;
    long q = c * lead_inv % p;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - q * b[j]) % p + p) % p;
  }
  a.resize(db);
  return a;
}

}  // namespace

bool residue_poly_irreducible(long p, const std::vector<long>& poly) {
  int d = static_cast<int>(poly.size()) - 1;
  if (d < 1) return false;
  if (poly[0] == 0) return d == 1;  // divisible by x
  for (int t = 1; t <= d / 2; ++t) {
    // every monic divisor candidate of degree t
    std::vector<long> cand(t + 1, 0);
    cand[t] = 1;
    while (true) {
      auto rem = residue_poly_rem(p, poly, cand);
      bool zero = std::all_of(rem.begin(), rem.end(), [](long c) { return c == 0; });
      if (zero) return false;
      int i = 0;
      while (i < t && ++cand[i] == p) cand[i++] = 0;
      if (i == t) break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ExtField
// ---------------------------------------------------------------------------

struct ExtField::Data {
  PadicContext base;
  std::vector<PadicNumber> modulus;
  ExtFieldKind kind;
  int degree;
  int ramification;
  int residue_deg;
  ResidueField residue;

  Data(PadicContext b, std::vector<PadicNumber> m, ExtFieldKind k, int d, int e,
       int f, ResidueField r)
      : base(b),
        modulus(std::move(m)),
        kind(k),
        degree(d),
        ramification(e),
        residue_deg(f),
        residue(std::move(r)) {}
};

const PadicContext& ExtField::base() const { return d_->base; }
const std::vector<PadicNumber>& ExtField::modulus() const { return d_->modulus; }
ExtFieldKind ExtField::kind() const { return d_->kind; }
int ExtField::degree() const { return d_->degree; }
int ExtField::ramification_index() const { return d_->ramification; }
int ExtField::residue_degree() const { return d_->residue_deg; }
const ResidueField& ExtField::residue_field() const { return d_->residue; }

bool ExtField::operator==(const ExtField& o) const {
  if (d_ == o.d_) return true;
  if (d_->base != o.d_->base || d_->degree != o.d_->degree) return false;
  for (int i = 0; i <= d_->degree; ++i)
    if (!d_->modulus[i].same_representation(o.d_->modulus[i])) return false;
  return true;
}

std::string ExtField::describe() const {
  std::ostringstream os;
  os << "Q_" << d_->base.p << "[t]/(";
  bool first = true;
  for (int i = 0; i <= d_->degree; ++i) {
    const PadicNumber& c = d_->modulus[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    // modulus coefficients are small integers in practice; show residues
    mpz_class rep = c.is_exact_zero()
                        ? mpz_class(0)
                        : c.unit_residue(std::min(c.relative_precision(), 6)) *
                              d_->base.p_power(c.finite_valuation());
    os << rep.get_str();
    if (i == 1)
      os << "*t";
    else if (i > 1)
      os << "*t^" << i;
  }
  os << "), "
     << (d_->kind == ExtFieldKind::unramified ? "unramified" : "eisenstein")
     << " e=" << d_->ramification << " f=" << d_->residue_deg;
  return os.str();
}

ExtField make_extension(const std::vector<PadicNumber>& monic_coeffs,
                        const PadicContext& ctx) {
  int d = static_cast<int>(monic_coeffs.size()) - 1;
  if (d < 2) throw DomainError("make_extension: degree >= 2 required");
  if (d > 6) throw DomainError("make_extension: degree > 6 not supported");
  for (const PadicNumber& c : monic_coeffs) {
    if (c.context() != ctx)
      throw DomainError("make_extension: coefficient context mismatch");
    if (!c.is_zero() && c.finite_valuation() < 0)
      throw DomainError("make_extension: coefficients must lie in Z_p");
  }
  const PadicNumber& lead = monic_coeffs[d];
  if (lead.is_zero() || lead.finite_valuation() != 0 || lead.unit_part() != 1)
    throw DomainError("make_extension: modulus must be monic");

  // Eisenstein certificate: v(c_i) >= 1 below the top, v(c_0) == 1.
  bool eisenstein = !monic_coeffs[0].is_zero() &&
                    monic_coeffs[0].finite_valuation() == 1;
  for (int i = 1; i < d && eisenstein; ++i) {
    const PadicNumber& c = monic_coeffs[i];
    if (!c.is_zero() && c.finite_valuation() < 1) eisenstein = false;
  }
  if (eisenstein) {
    ResidueField rf{ctx.p, {0, 1}};  // F_p
    ExtField f;
    f.d_ = std::make_shared<const ExtField::Data>(
        ctx, monic_coeffs, ExtFieldKind::eisenstein, d, d, 1, std::move(rf));
    return f;
  }

  // Unramified certificate: irreducible mod p.
  std::vector<long> gbar(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    const PadicNumber& c = monic_coeffs[i];
    if (c.is_zero() || c.finite_valuation() > 0) continue;
    gbar[i] = mpz_class(c.unit_residue(1)).get_si();
  }
  if (residue_poly_irreducible(ctx.p, gbar)) {
    ResidueField rf{ctx.p, gbar};
    ExtField f;
    f.d_ = std::make_shared<const ExtField::Data>(
        ctx, monic_coeffs, ExtFieldKind::unramified, d, 1, d, std::move(rf));
    return f;
  }

  throw DomainError(
      "make_extension: cannot certify irreducibility (neither Eisenstein nor "
      "irreducible mod p); construction refused");
}

ExtField make_extension(const std::vector<long>& monic_coeffs,
                        const PadicContext& ctx) {
  std::vector<PadicNumber> coeffs;
  coeffs.reserve(monic_coeffs.size());
  for (long c : monic_coeffs) coeffs.push_back(PadicNumber::from_integer(c, ctx));
  return make_extension(coeffs, ctx);
}

// ---------------------------------------------------------------------------
// ExtElement
// ---------------------------------------------------------------------------

ExtElement::ExtElement(ExtField field, std::vector<PadicNumber> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_.degree())
    throw DomainError("ExtElement: wrong number of coordinates");
}

ExtElement ExtElement::zero(const ExtField& f) {
  return ExtElement(f, std::vector<PadicNumber>(
                           f.degree(), PadicNumber::zero(f.base())));
}

ExtElement ExtElement::one(const ExtField& f) {
  auto coords = std::vector<PadicNumber>(f.degree(), PadicNumber::zero(f.base()));
  coords[0] = PadicNumber::one(f.base());
  return ExtElement(f, std::move(coords));
}

ExtElement ExtElement::generator(const ExtField& f) {
  auto coords = std::vector<PadicNumber>(f.degree(), PadicNumber::zero(f.base()));
  coords[1] = PadicNumber::one(f.base());
  return ExtElement(f, std::move(coords));
}

ExtElement ExtElement::embed(const PadicNumber& x, const ExtField& f) {
  if (x.context() != f.base())
    throw DomainError("embed: context mismatch");
  auto coords = std::vector<PadicNumber>(f.degree(), PadicNumber::zero(f.base()));
  coords[0] = x;
  return ExtElement(f, std::move(coords));
}

bool ExtElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const PadicNumber& c) { return c.is_zero(); });
}

bool ExtElement::is_exact_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const PadicNumber& c) { return c.is_exact_zero(); });
}

bool ExtElement::is_zero_to(long k) const {
  int e = field_.ramification_index();
  bool eis = field_.kind() == ExtFieldKind::eisenstein;
  for (int i = 0; i < field_.degree(); ++i) {
    // v(c_i t^i) = v(c_i) + i/e (eisenstein) or v(c_i) (unramified)
    long weight = eis ? i : 0;
    long num = k * e - weight;
    long threshold = num >= 0 ? (num + e - 1) / e : -((-num) / e);
    if (!coords_[i].is_zero_to(threshold)) return false;
  }
  return true;
}

void ExtElement::check_same_field(const ExtElement& o) const {
  if (field_ != o.field_)
    throw DomainError("operands belong to different extension fields");
}

ExtElement ExtElement::sharpened() const {
  std::vector<PadicNumber> c;
  c.reserve(coords_.size());
  for (const PadicNumber& x : coords_) c.push_back(x.sharpened());
  return ExtElement(field_, std::move(c));
}

ExtElement ExtElement::operator-() const {
  std::vector<PadicNumber> c;
  c.reserve(coords_.size());
  for (const PadicNumber& x : coords_) c.push_back(-x);
  return ExtElement(field_, std::move(c));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  a.check_same_field(b);
  std::vector<PadicNumber> c;
  c.reserve(a.coords_.size());
  for (size_t i = 0; i < a.coords_.size(); ++i)
    c.push_back(a.coords_[i] + b.coords_[i]);
  return ExtElement(a.field_, std::move(c));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  return a + (-b);
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  a.check_same_field(b);
  const ExtField& F = a.field_;
  int d = F.degree();
  const PadicContext& ctx = F.base();
  std::vector<PadicNumber> prod(2 * d - 1, PadicNumber::zero(ctx));
  for (int i = 0; i < d; ++i) {
    if (a.coords_[i].is_exact_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] = prod[i + j] + a.coords_[i] * b.coords_[j];
  }
  const std::vector<PadicNumber>& g = F.modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    PadicNumber c = prod[i];
    if (c.is_exact_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[i - d + j] = prod[i - d + j] - c * g[j];
  }
  prod.erase(prod.begin() + d, prod.end());
  return ExtElement(F, std::move(prod));
}

ExtElement ExtElement::pow(long e) const {
  if (e == 0) return one(field_);
  if (e < 0) return inverse().pow(-e);
  ExtElement r = one(field_), base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

namespace {

using Poly = std::vector<PadicNumber>;

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_zero()) return i;
  return -1;
}

// a - q*b in place of a, returning the quotient; b addressed through its
// true degree. Coefficients indistinguishable from zero count as zero.
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  int da = poly_degree(a), db = poly_degree(b);
  if (db < 0) throw PrecisionError("poly_divmod: division by vanishing polynomial");
  rem = a;
  quot.assign(std::max(da - db + 1, 1), PadicNumber::zero(a.empty()
                                                              ? b[0].context()
                                                              : a[0].context()));
  for (int i = da; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    PadicNumber q = rem[i] / b[db];
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b[j];
  }
}

Poly poly_sub_mul(const Poly& s0, const Poly& q, const Poly& s1,
                  const PadicContext& ctx) {
  // s0 - q*s1
  int dq = poly_degree(q), ds = poly_degree(s1);
  int n = std::max(static_cast<int>(s0.size()),
                   (dq >= 0 && ds >= 0) ? dq + ds + 1 : 1);
  Poly out(n, PadicNumber::zero(ctx));
  for (size_t i = 0; i < s0.size(); ++i) out[i] = s0[i];
  for (int i = 0; i <= dq; ++i) {
    if (q[i].is_exact_zero()) continue;
    for (int j = 0; j <= ds; ++j) out[i + j] = out[i + j] - q[i] * s1[j];
  }
  return out;
}

}  // namespace

ExtElement ExtElement::inverse() const {
  const ExtField& F = field_;
  const PadicContext& ctx = F.base();
  if (is_exact_zero()) throw DomainError("ExtElement::inverse: zero element");
  if (is_zero())
    throw PrecisionError("ExtElement::inverse: element indistinguishable from zero");

  // Extended Euclid: r0 = modulus, r1 = this; track s with s*this = r (mod g).
  Poly r0 = F.modulus();
  Poly r1 = coords_;
  Poly s0(1, PadicNumber::zero(ctx));
  Poly s1(1, PadicNumber::one(ctx));
  while (poly_degree(r1) > 0) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub_mul(s0, q, s1, ctx);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (poly_degree(r1) < 0)
      throw PrecisionError(
          "ExtElement::inverse: gcd degenerated; raise the working precision");
  }
  PadicNumber c = r1[0];
  Poly inv(F.degree(), PadicNumber::zero(ctx));
  for (int i = 0; i <= poly_degree(s1) && i < F.degree(); ++i)
    inv[i] = s1[i] / c;
  return ExtElement(F, std::move(inv));
}

ExtElement operator/(const ExtElement& a, const ExtElement& b) {
  return a * b.inverse();
}

Valuation ExtElement::valuation() const {
  if (is_exact_zero()) return Valuation::infinity();
  if (is_zero())
    throw PrecisionError(
        "ext valuation: element indistinguishable from zero at this precision");
  const ExtField& F = field_;
  int d = F.degree();
  const std::vector<PadicNumber>& g = F.modulus();

  // Columns of the multiplication-by-x matrix: coordinates of x * t^j.
  std::vector<std::vector<PadicNumber>> M(d, std::vector<PadicNumber>());
  std::vector<PadicNumber> cur = coords_;
  for (int j = 0; j < d; ++j) {
    if (j > 0) {
      std::vector<PadicNumber> next(d, PadicNumber::zero(F.base()));
      PadicNumber top = cur[d - 1];
      next[0] = -(top * g[0]);
      for (int i = 1; i < d; ++i) next[i] = cur[i - 1] - top * g[i];
      cur = std::move(next);
    }
    for (int i = 0; i < d; ++i) M[i].push_back(cur[i]);
  }

  // Gaussian elimination with minimal-valuation pivoting; v(det) is the sum
  // of the pivot valuations.
  long vsum = 0;
  for (int k = 0; k < d; ++k) {
    int pivot = -1;
    for (int i = k; i < d; ++i) {
      if (M[i][k].is_zero()) continue;
      if (pivot < 0 ||
          M[i][k].finite_valuation() < M[pivot][k].finite_valuation())
        pivot = i;
    }
    if (pivot < 0)
      throw PrecisionError(
          "ext valuation: determinant indistinguishable from zero; raise the "
          "working precision");
    std::swap(M[k], M[pivot]);
    vsum += M[k][k].finite_valuation();
    for (int i = k + 1; i < d; ++i) {
      if (M[i][k].is_zero()) continue;
      PadicNumber factor = M[i][k] / M[k][k];
      for (int j = k; j < d; ++j) M[i][j] = M[i][j] - factor * M[k][j];
    }
  }

  Valuation v(vsum, d);
  if (F.ramification_index() % v.den() != 0)
    throw Error("ext valuation: value group denominator exceeds e (internal)");
  return v;
}

NormValue ExtElement::norm() const {
  if (is_exact_zero()) return NormValue(Valuation::infinity());
  return NormValue(valuation());
}

ResidueField::Elem ExtElement::residue_vector() const {
  const ExtField& F = field_;
  for (const PadicNumber& c : coords_)
    if (!c.is_zero() && c.finite_valuation() < 0)
      throw DomainError("residue_vector: element is not integral");
  if (F.kind() == ExtFieldKind::unramified) {
    ResidueField::Elem r(F.degree(), 0);
    for (int i = 0; i < F.degree(); ++i) {
      const PadicNumber& c = coords_[i];
      if (!c.is_zero() && c.finite_valuation() == 0)
        r[i] = mpz_class(c.unit_residue(1)).get_si();
    }
    return r;
  }
  const PadicNumber& c0 = coords_[0];
  long r0 = (!c0.is_zero() && c0.finite_valuation() == 0)
                ? mpz_class(c0.unit_residue(1)).get_si()
                : 0;
  return {r0};
}

std::optional<PadicNumber> ExtElement::to_base() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return std::nullopt;
  return coords_[0];
}

ExtElement make_scalar(const ExtElement& like, const mpz_class& value) {
  return ExtElement::embed(PadicNumber::from_integer(value, like.field().base()),
                           like.field());
}

std::string display(const ExtElement& x) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < x.coordinates().size(); ++i) {
    const PadicNumber& c = x.coordinates()[i];
    if (c.is_exact_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << format_literal(c) << ")";
    if (i == 1)
      os << "*t";
    else if (i > 1)
      os << "*t^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace padlab
