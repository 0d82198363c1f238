#pragma once

#include <gmpxx.h>
#include <string>

namespace sl2cas {

// Exact arbitrary-precision scalars. mpq_class keeps fractions in canonical
// form (coprime numerator/denominator, positive denominator) once
// canonicalize() has run; every constructor below guarantees that.
using Int = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Int& num, const Int& den);

// Accepts "p/q" and the integer shorthand "p".
Rational parse_rational(const std::string& text);

// Canonical rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact square root test; used when solving quadratics over Q.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace sl2cas
