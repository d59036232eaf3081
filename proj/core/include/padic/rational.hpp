#pragma once

#include <gmpxx.h>

#include <string>

namespace padic {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument when den == 0.
Rational make_rational(const Int& num, const Int& den);

/// Exact p-adic valuation of a nonzero integer (number of times p divides n).
long int_valuation(const Int& n, const Int& p);

/// Exact p-adic valuation of a nonzero rational: v_p(num) - v_p(den).
long rational_valuation(const Rational& x, const Int& p);

/// Deterministic primality by trial division; intended for desk-scale inputs.
bool is_prime(const Int& n);

/// p^e for integer e of either sign (p != 0).
Rational int_power(const Int& p, long e);

Int floor_rational(const Rational& x);
Int ceil_rational(const Rational& x);

/// x mod 1, reduced to [0, 1).
Rational fractional_part(const Rational& x);

/// "num/den", or just "num" when den == 1. The inverse of rational_from_string.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

}  // namespace padic
