#include "padic/rational.hpp"

#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long int_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of integer 0");
  Int reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long rational_valuation(const Rational& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("valuation of rational 0");
  long v = int_valuation(Int(x.get_num()), p);
  if (x.get_den() != 1) v -= int_valuation(Int(x.get_den()), p);
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Rational int_power(const Int& p, long e) {
  Int num;
  mpz_pow_ui(num.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(num);
  return make_rational(1, num);
}

Int floor_rational(const Rational& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rational(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& x) {
  Rational f = x - Rational(floor_rational(x));
  f.canonicalize();
  return f;
}

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    throw input_error("malformed rational: \"" + s + "\"");
  }
  if (r.get_den() == 0) throw input_error("rational with zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

}  // namespace padic
