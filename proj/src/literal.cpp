#include "padlab/literal.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace padlab {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_int(const std::string& s, const char* what) {
  if (!is_integer_token(s))
    throw ParseError(std::string("literal: malformed ") + what + " '" + s + "'");
  return mpz_class(s);
}

long parse_small_int(const std::string& s, const char* what) {
  mpz_class z = parse_int(s, what);
  if (!z.fits_slong_p())
    throw ParseError(std::string("literal: ") + what + " out of range");
  return z.get_si();
}

struct Term {
  long digit;
  long exponent;
};

// One '+'-separated chunk: either a term or the trailing O(p^k) cap.
struct Chunk {
  std::optional<Term> term;
  std::optional<long> cap;
};

Chunk parse_chunk(const std::string& raw, const PadicContext& ctx) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("literal: empty term");
  Chunk out;
  if (s[0] == 'O') {
    if (s.size() < 4 || s[1] != '(' || s.back() != ')')
      throw ParseError("literal: malformed O(...) term '" + s + "'");
    std::string inner = s.substr(2, s.size() - 3);
    size_t caret = inner.find('^');
    if (caret == std::string::npos)
      throw ParseError("literal: O(...) needs p^k, got '" + s + "'");
    long base = parse_small_int(trim(inner.substr(0, caret)), "O base");
    if (base != ctx.p)
      throw ParseError("literal: O base " + std::to_string(base) +
                       " does not match p = " + std::to_string(ctx.p));
    out.cap = parse_small_int(trim(inner.substr(caret + 1)), "O exponent");
    return out;
  }
  Term t{0, 0};
  size_t star = s.find('*');
  std::string digit_str = trim(star == std::string::npos ? s : s.substr(0, star));
  t.digit = parse_small_int(digit_str, "digit");
  if (t.digit < 0 || t.digit >= ctx.p)
    throw ParseError("literal: digit " + std::to_string(t.digit) +
                     " not in [0, " + std::to_string(ctx.p) + ")");
  if (star != std::string::npos) {
    std::string rest = trim(s.substr(star + 1));
    size_t caret = rest.find('^');
    std::string base_str = trim(caret == std::string::npos ? rest : rest.substr(0, caret));
    long base = parse_small_int(base_str, "base");
    if (base != ctx.p)
      throw ParseError("literal: term base " + std::to_string(base) +
                       " does not match p = " + std::to_string(ctx.p));
    t.exponent = caret == std::string::npos
                     ? 1
                     : parse_small_int(trim(rest.substr(caret + 1)), "exponent");
  }
  out.term = t;
  return out;
}

PadicNumber parse_expansion(const std::string& text, const PadicContext& ctx) {
  std::vector<std::string> chunks;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      chunks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  chunks.push_back(cur);

  std::vector<Term> terms;
  std::optional<long> cap;
  for (size_t i = 0; i < chunks.size(); ++i) {
    Chunk c = parse_chunk(chunks[i], ctx);
    if (c.cap) {
      if (i + 1 != chunks.size())
        throw ParseError("literal: O(...) must be the last term");
      cap = c.cap;
    } else {
      if (!terms.empty() && c.term->exponent <= terms.back().exponent)
        throw ParseError("literal: term exponents must be strictly increasing");
      terms.push_back(*c.term);
    }
  }

  // Assemble sum(d_i * p^e_i) exactly: integer part scaled by p^emin.
  long emin = 0;
  bool any_nonzero = false;
  for (const Term& t : terms) {
    if (t.digit == 0) continue;
    if (!any_nonzero || t.exponent < emin) emin = t.exponent;
    any_nonzero = true;
  }
  if (!any_nonzero) {
    if (cap) return PadicNumber::zero_below(ctx, *cap);
    return PadicNumber::zero(ctx);
  }
  mpz_class scaled = 0;
  for (const Term& t : terms) {
    if (t.digit == 0) continue;
    if (cap && t.exponent >= *cap)
      throw ParseError("literal: term exponent " + std::to_string(t.exponent) +
                       " lies beyond the O(p^" + std::to_string(*cap) + ") cap");
    scaled += mpz_class(t.digit) * ctx.p_power(t.exponent - emin);
  }
  PadicNumber value = PadicNumber::from_integer(scaled, ctx);
  long val = value.finite_valuation() + emin;
  if (!cap) return PadicNumber::from_parts(val, value.unit_part(), ctx);
  if (*cap <= val)
    throw ParseError("literal: precision cap p^" + std::to_string(*cap) +
                     " does not exceed the valuation " + std::to_string(val));
  long rel = *cap - val;
  if (rel > ctx.precision)
    throw ParseError("literal: O(p^" + std::to_string(*cap) +
                     ") exceeds the context precision");
  return PadicNumber::from_parts(val, value.unit_part(), ctx,
                                 static_cast<int>(rel));
}

}  // namespace

PadicNumber parse_literal(const std::string& text, const PadicContext& ctx) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("literal: empty input");
  std::string body = s[0] == '-' ? s.substr(1) : s;
  if (body.find('+') != std::string::npos ||
      body.find('*') != std::string::npos ||
      body.find('O') != std::string::npos)
    return parse_expansion(s, ctx);
  size_t slash = s.find('/');
  if (slash == std::string::npos)
    return PadicNumber::from_rational(parse_int(s, "integer"), 1, ctx);
  mpz_class num = parse_int(trim(s.substr(0, slash)), "numerator");
  mpz_class den = parse_int(trim(s.substr(slash + 1)), "denominator");
  if (den == 0) throw ParseError("literal: zero denominator");
  return PadicNumber::from_rational(num, den, ctx);
}

std::string format_literal(const PadicNumber& x) {
  const PadicContext& ctx = x.context();
  if (x.is_exact_zero()) return "0";
  std::ostringstream os;
  if (x.is_zero()) {
    os << "0 + O(" << ctx.p << "^" << x.absolute_precision() << ")";
    return os.str();
  }
  long val = x.finite_valuation();
  int rel = x.relative_precision();
  mpz_class u = x.unit_part();
  bool first = true;
  for (int i = 0; i < rel; ++i) {
    mpz_class digit = u % ctx.p;
    u /= ctx.p;
    if (digit != 0) {
      if (!first) os << " + ";
      first = false;
      long e = val + i;
      os << digit.get_str();
      if (e == 1)
        os << "*" << ctx.p;
      else if (e != 0)
        os << "*" << ctx.p << "^" << e;
    }
  }
  os << " + O(" << ctx.p << "^" << (val + rel) << ")";
  return os.str();
}

}  // namespace padlab
