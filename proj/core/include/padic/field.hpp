#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "padic/errors.hpp"
#include "padic/rational.hpp"

namespace padic {

/// The working field Q(p^{1/D}): a totally ramified tower over Q determined
/// by a prime p and a ramification denominator D. Its value group is (1/D)Z.
struct PrimeContext {
  Int p;
  unsigned D = 1;

  PrimeContext(Int prime, unsigned ramification);

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

/// An element of Q ∪ {+infinity}; the codomain of the valuation map,
/// normalized so that v(p) = 1. +infinity is the valuation of 0 only.
class Valuation {
 public:
  Valuation() : finite_(false) {}
  Valuation(Rational v) : finite_(true), value_(std::move(v)) {}
  Valuation(long v) : finite_(true), value_(v) {}
  Valuation(int v) : finite_(true), value_(v) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !finite_; }
  const Rational& value() const;

  Valuation operator+(const Valuation& o) const;

  bool operator==(const Valuation& o) const;
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  bool operator<(const Valuation& o) const;
  bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator>=(const Valuation& o) const { return o <= *this; }

  /// "num/den" or "inf"; inverse of valuation_from_string.
  std::string to_string() const;
  static Valuation from_string(const std::string& s);

 private:
  bool finite_;
  Rational value_;
};

Valuation min(const Valuation& a, const Valuation& b);

/// An element sum_j a_j p^{j/D} of Q(p^{1/D}) with exact rational
/// coefficients, stored sparsely (zero coefficients are never kept).
///
/// Because the summands' valuations v_p(a_j) + j/D have pairwise distinct
/// residues mod 1, the element's valuation is exactly the minimum of the
/// stored terms' valuations.
class FieldElement {
 public:
  /// The zero element.
  explicit FieldElement(PrimeContext ctx) : ctx_(std::move(ctx)) {}

  /// Canonical element from (ramification index, coefficient) terms;
  /// duplicate indices are summed. Throws input_error if some j >= D.
  static FieldElement from_terms(const PrimeContext& ctx,
                                 const std::vector<std::pair<unsigned, Rational>>& terms);
  static FieldElement from_rational(const PrimeContext& ctx, const Rational& a);
  static FieldElement zero(const PrimeContext& ctx) { return FieldElement(ctx); }
  static FieldElement one(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  const std::map<unsigned, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  /// Exact valuation; infinity iff the element is zero.
  Valuation valuation() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rational& a) const;

  /// Multiplicative inverse, computed by solving the D x D rational linear
  /// system x*y = 1 over the basis {p^{j/D}}. Throws std::domain_error on 0.
  FieldElement inverse() const;

  /// Image of this element in the larger tower (p, D_new); requires D | D_new.
  /// A ring embedding that preserves valuations exactly.
  FieldElement lift_ramification(unsigned D_new) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void set_coord(unsigned j, Rational a);
  static void require_same_context(const FieldElement& x, const FieldElement& y);

  PrimeContext ctx_;
  std::map<unsigned, Rational> coords_;
};

/// Free-function spellings of the member operations.
FieldElement make_element(const PrimeContext& ctx,
                          const std::vector<std::pair<unsigned, Rational>>& terms);
inline FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
inline FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
inline FieldElement neg(const FieldElement& x) { return -x; }
inline FieldElement invert(const FieldElement& x) { return x.inverse(); }
inline Valuation valuation(const FieldElement& x) { return x.valuation(); }
inline FieldElement lift_ramification(const FieldElement& x, unsigned D_new) {
  return x.lift_ramification(D_new);
}

}  // namespace padic
