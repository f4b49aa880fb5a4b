#pragma once

#include <string>

#include "padlab/padic.hpp"

namespace padlab {

/// Parse a p-adic literal.
///
/// Grammar:
///   value     := expansion | rational
///   rational  := int ['/' int]
///   expansion := term ('+' term)* ['+' 'O(' p '^' k ')']
///   term      := digit ['*' p ['^' e]]
/// with digits in [0, p), term exponents strictly increasing, and the base in
/// every term equal to the context prime. An explicit O(p^k) caps the
/// absolute precision at k (which must exceed the valuation and stay within
/// the context's relative precision).
PadicNumber parse_literal(const std::string& text, const PadicContext& ctx);

/// Canonical literal form: least-significant digit first, explicit O-term.
/// format_literal(x) always reparses to the same value at the same precision.
std::string format_literal(const PadicNumber& x);

/// Display hook shared with extension elements (see field_ext.hpp).
inline std::string display(const PadicNumber& x) { return format_literal(x); }

}  // namespace padlab
