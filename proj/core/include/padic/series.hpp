#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "padic/field.hpp"

namespace padic {

/// Exponent vector (e_1,...,e_d) of a monomial z_1^{e_1}...z_d^{e_d}.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order with z_1 > ... > z_d: sort key is total degree
/// ascending, then exponent vectors lexicographically descending, so within a
/// degree z_1-heavy monomials come first.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree < m in d variables, in graded-lex order.
/// The list has C(m-1+d, d) entries.
std::vector<Monomial> monomials_below(unsigned m, unsigned d);
Int monomial_count_below(unsigned m, unsigned d);

/// A multivariate polynomial over Q(p^{1/D}) with an optional integral-tail
/// contract: tail_degree() == T declares that the object stands for a power
/// series whose omitted coefficients (total degree > T) all have valuation
/// >= 0. Without the contract the object is an exact polynomial.
class TruncatedSeries {
 public:
  TruncatedSeries(PrimeContext ctx, unsigned d,
                  std::optional<unsigned> tail_degree = std::nullopt);

  static TruncatedSeries from_terms(const PrimeContext& ctx, unsigned d,
                                    const std::vector<std::pair<Monomial, FieldElement>>& terms,
                                    std::optional<unsigned> tail_degree = std::nullopt);
  static TruncatedSeries constant(const PrimeContext& ctx, unsigned d, const FieldElement& c);
  /// The variable z_{index+1} as a series.
  static TruncatedSeries variable(const PrimeContext& ctx, unsigned d, unsigned index);

  const PrimeContext& context() const { return ctx_; }
  unsigned var_count() const { return d_; }
  const std::optional<unsigned>& tail_degree() const { return tail_degree_; }
  bool is_polynomial() const { return !tail_degree_.has_value(); }
  const std::map<Monomial, FieldElement, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero element when absent).
  FieldElement coefficient(const Monomial& m) const;
  /// Largest stored total degree; 0 for the zero polynomial.
  unsigned degree() const;
  /// Minimum valuation over stored coefficients; infinity when none stored.
  Valuation min_coefficient_valuation() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& a) const;
  TruncatedSeries operator*(const FieldElement& c) const;

  /// Same series expressed over the larger tower (p, D_new).
  TruncatedSeries lift_ramification(unsigned D_new) const;

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  void set_term(const Monomial& m, FieldElement c);

  PrimeContext ctx_;
  unsigned d_;
  std::optional<unsigned> tail_degree_;
  std::map<Monomial, FieldElement, GrlexLess> terms_;
};

enum class EvalMode { kExact, kLowerBound };

/// Result of evaluating a series at a point: the exact value of the stored
/// polynomial part plus a certified valuation floor for the omitted tail
/// (infinite when there is no tail, i.e. the value is exact).
struct EvalResult {
  FieldElement value;
  Valuation tail_floor = Valuation::infinity();

  bool exact() const { return tail_floor.is_infinite(); }
  /// True when the full series value is provably nonzero: the polynomial
  /// part's valuation lies strictly below anything the tail can contribute.
  bool certified_nonzero() const {
    return !value.is_zero() && value.valuation() < tail_floor;
  }
  /// True when nonvanishing of the full series value is decidable.
  bool decidable() const { return exact() || certified_nonzero(); }
};

/// kExact requires a polynomial (no tail) and returns the exact value.
/// kLowerBound additionally accepts tails but requires v(u_i) > 0 for all i;
/// the omitted tail is then bounded below by (T+1) * min_i v(u_i).
EvalResult evaluate(const TruncatedSeries& f, const std::vector<FieldElement>& u,
                    EvalMode mode);

/// Coefficients of all monomials of total degree < m in graded-lex order,
/// zeros included. For tailed series requires m <= T + 1.
std::vector<FieldElement> truncate_below(const TruncatedSeries& f, unsigned m);

/// g with g(w) = f(u + w), by exact binomial expansion. Polynomials only.
TruncatedSeries recenter(const TruncatedSeries& f, const std::vector<FieldElement>& u);

/// Multiplies the whole basis by one power p^e, e >= 0 minimal, so that every
/// stored coefficient has valuation >= 0; integral tails stay integral.
/// Returns the scaled basis and e.
std::pair<std::vector<TruncatedSeries>, long> scale_to_integral(
    const std::vector<TruncatedSeries>& basis);

/// sum_i a_i f_i with rational coefficients.
TruncatedSeries linear_combination(const std::vector<TruncatedSeries>& basis,
                                   const std::vector<Rational>& coeffs);

/// An element of R^r: r series sharing one context and variable count.
struct SeriesVector {
  std::vector<TruncatedSeries> components;

  explicit SeriesVector(std::vector<TruncatedSeries> comps);

  const PrimeContext& context() const { return components.front().context(); }
  unsigned var_count() const { return components.front().var_count(); }
  std::size_t size() const { return components.size(); }

  bool operator==(const SeriesVector& o) const { return components == o.components; }
};

}  // namespace padic
