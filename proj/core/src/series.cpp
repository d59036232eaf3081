#include "padic/series.hpp"

#include <algorithm>
#include <numeric>

#include "padic/errors.hpp"

namespace padic {

unsigned total_degree(const Monomial& m) {
  unsigned deg = 0;
  for (unsigned e : m) deg += e;
  return deg;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a > b;  // within a degree, z_1-heavy exponent vectors come first
}

namespace {

void monomials_of_degree(unsigned deg, unsigned d, Monomial& prefix,
                         std::vector<Monomial>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(deg);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = deg + 1; e-- > 0;) {
    prefix.push_back(e);
    monomials_of_degree(deg - e, d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_below(unsigned m, unsigned d) {
  if (d == 0) throw input_error("monomials_below needs d >= 1");
  std::vector<Monomial> out;
  Monomial prefix;
  for (unsigned deg = 0; deg < m; ++deg) monomials_of_degree(deg, d, prefix, out);
  return out;
}

Int monomial_count_below(unsigned m, unsigned d) {
  if (m == 0) return 0;
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), m - 1 + d, d);
  return c;
}

TruncatedSeries::TruncatedSeries(PrimeContext ctx, unsigned d,
                                 std::optional<unsigned> tail_degree)
    : ctx_(std::move(ctx)), d_(d), tail_degree_(tail_degree) {
  if (d_ == 0) throw input_error("series needs at least one variable");
}

void TruncatedSeries::set_term(const Monomial& m, FieldElement c) {
  if (m.size() != d_) {
    throw input_error("exponent vector length " + std::to_string(m.size()) +
                      " does not match variable count " + std::to_string(d_));
  }
  if (!(c.context() == ctx_)) throw input_error("coefficient from a different tower");
  if (tail_degree_ && total_degree(m) > *tail_degree_) {
    throw input_error("stored monomial degree " + std::to_string(total_degree(m)) +
                      " exceeds declared truncation degree " + std::to_string(*tail_degree_));
  }
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_.insert_or_assign(m, std::move(c));
  }
}

TruncatedSeries TruncatedSeries::from_terms(
    const PrimeContext& ctx, unsigned d,
    const std::vector<std::pair<Monomial, FieldElement>>& terms,
    std::optional<unsigned> tail_degree) {
  TruncatedSeries f(ctx, d, tail_degree);
  for (const auto& [m, c] : terms) {
    auto it = f.terms_.find(m);
    FieldElement sum = (it == f.terms_.end()) ? c : it->second + c;
    f.set_term(m, std::move(sum));
  }
  return f;
}

TruncatedSeries TruncatedSeries::constant(const PrimeContext& ctx, unsigned d,
                                          const FieldElement& c) {
  return from_terms(ctx, d, {{Monomial(d, 0), c}});
}

TruncatedSeries TruncatedSeries::variable(const PrimeContext& ctx, unsigned d,
                                          unsigned index) {
  if (index >= d) throw input_error("variable index out of range");
  Monomial m(d, 0);
  m[index] = 1;
  return from_terms(ctx, d, {{m, FieldElement::one(ctx)}});
}

FieldElement TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(ctx_) : it->second;
}

unsigned TruncatedSeries::degree() const {
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, total_degree(m));
  return deg;
}

Valuation TruncatedSeries::min_coefficient_valuation() const {
  Valuation best = Valuation::infinity();
  for (const auto& [m, c] : terms_) best = min(best, c.valuation());
  return best;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (!(ctx_ == o.ctx_) || d_ != o.d_) throw input_error("adding incompatible series");
  if (tail_degree_ != o.tail_degree_) {
    throw mode_error("adding series with different tail contracts");
  }
  TruncatedSeries out(*this);
  for (const auto& [m, c] : o.terms_) out.set_term(m, out.coefficient(m) + c);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& a) const {
  if (tail_degree_ && a != 0 && rational_valuation(a, ctx_.p) < 0) {
    throw mode_error("cannot divide a tailed series by p: the tail contract would break");
  }
  TruncatedSeries out(ctx_, d_, tail_degree_);
  if (a == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * a);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const FieldElement& c) const {
  if (!(c.context() == ctx_)) throw input_error("scalar from a different tower");
  if (tail_degree_ && !c.is_zero() && c.valuation() < Valuation(0)) {
    throw mode_error("cannot scale a tailed series below the valuation ring");
  }
  TruncatedSeries out(ctx_, d_, tail_degree_);
  for (const auto& [m, coeff] : terms_) out.set_term(m, coeff * c);
  return out;
}

TruncatedSeries TruncatedSeries::lift_ramification(unsigned D_new) const {
  TruncatedSeries out(PrimeContext(ctx_.p, D_new), d_, tail_degree_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.lift_ramification(D_new));
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return ctx_ == o.ctx_ && d_ == o.d_ && tail_degree_ == o.tail_degree_ &&
         terms_ == o.terms_;
}

namespace {

// u_i^e with a per-variable cache.
class PowerCache {
 public:
  explicit PowerCache(const std::vector<FieldElement>& u) : u_(u) {
    pows_.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      pows_[i].push_back(FieldElement::one(u[i].context()));
  }

  const FieldElement& get(std::size_t i, unsigned e) {
    auto& col = pows_[i];
    while (col.size() <= e) col.push_back(col.back() * u_[i]);
    return col[e];
  }

 private:
  const std::vector<FieldElement>& u_;
  std::vector<std::vector<FieldElement>> pows_;
};

unsigned lcm_ramification(unsigned a, unsigned b) {
  const unsigned long long l = std::lcm<unsigned long long>(a, b);
  if (l > 100000000ull) throw input_error("ramification denominator exceeds desk scale");
  return static_cast<unsigned>(l);
}

// Lifts the series and the point into their smallest common tower.
std::pair<TruncatedSeries, std::vector<FieldElement>> align(
    const TruncatedSeries& f, const std::vector<FieldElement>& u) {
  if (u.size() != f.var_count()) throw input_error("point dimension mismatch");
  unsigned D = f.context().D;
  for (const auto& ui : u) {
    if (!(ui.context().p == f.context().p)) throw input_error("point from a different prime");
    D = lcm_ramification(D, ui.context().D);
  }
  std::vector<FieldElement> lifted;
  lifted.reserve(u.size());
  for (const auto& ui : u) lifted.push_back(ui.lift_ramification(D));
  return {f.lift_ramification(D), std::move(lifted)};
}

}  // namespace

EvalResult evaluate(const TruncatedSeries& f, const std::vector<FieldElement>& u,
                    EvalMode mode) {
  if (mode == EvalMode::kExact && !f.is_polynomial()) {
    throw mode_error("exact evaluation of a series with an undetermined tail");
  }
  auto [g, point] = align(f, u);

  Valuation min_coord_val = Valuation::infinity();
  for (const auto& ui : point) min_coord_val = min(min_coord_val, ui.valuation());
  if (mode == EvalMode::kLowerBound && !(Valuation(0) < min_coord_val)) {
    throw region_error("lower-bound evaluation needs v(u_i) > 0 for all i");
  }

  PowerCache pows(point);
  FieldElement acc = FieldElement::zero(g.context());
  for (const auto& [m, c] : g.terms()) {
    FieldElement term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term = term * pows.get(i, m[i]);
    }
    acc = acc + term;
  }

  EvalResult out{std::move(acc), Valuation::infinity()};
  if (!g.is_polynomial()) {
    // Tail monomials have degree >= T+1 and integral coefficients.
    const long t1 = static_cast<long>(*g.tail_degree()) + 1;
    out.tail_floor = min_coord_val.is_infinite()
                         ? Valuation::infinity()
                         : Valuation(Rational(t1) * min_coord_val.value());
  }
  return out;
}

std::vector<FieldElement> truncate_below(const TruncatedSeries& f, unsigned m) {
  if (m < 1) throw input_error("truncate_below needs m >= 1");
  if (f.tail_degree() && m > *f.tail_degree() + 1) {
    throw truncation_error("degree-" + std::to_string(m) +
                           " image needs coefficients beyond the trusted truncation degree " +
                           std::to_string(*f.tail_degree()));
  }
  std::vector<FieldElement> out;
  for (const auto& mon : monomials_below(m, f.var_count())) {
    out.push_back(f.coefficient(mon));
  }
  return out;
}

TruncatedSeries recenter(const TruncatedSeries& f, const std::vector<FieldElement>& u) {
  if (!f.is_polynomial()) {
    throw mode_error("recentering needs an exact polynomial");
  }
  auto [g, center] = align(f, u);
  const unsigned d = g.var_count();
  PowerCache pows(center);

  std::vector<std::pair<Monomial, FieldElement>> terms;
  for (const auto& [m, c] : g.terms()) {
    // prod_i (u_i + w_i)^{e_i} expanded by binomials, one odometer pass
    Monomial k(d, 0);
    while (true) {
      FieldElement coeff = c;
      for (unsigned i = 0; i < d; ++i) {
        if (m[i] == 0) continue;
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), m[i], k[i]);
        coeff = coeff * Rational(binom);
        if (m[i] > k[i]) coeff = coeff * pows.get(i, m[i] - k[i]);
      }
      terms.emplace_back(k, std::move(coeff));

      unsigned pos = 0;
      while (pos < d && k[pos] == m[pos]) {
        k[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
      ++k[pos];
    }
  }
  return TruncatedSeries::from_terms(g.context(), d, terms, std::nullopt);
}

std::pair<std::vector<TruncatedSeries>, long> scale_to_integral(
    const std::vector<TruncatedSeries>& basis) {
  Valuation vmin = Valuation::infinity();
  for (const auto& f : basis) vmin = min(vmin, f.min_coefficient_valuation());

  long e = 0;
  if (!vmin.is_infinite() && vmin.value() < 0) {
    e = ceil_rational(-vmin.value()).get_si();
  }
  if (e == 0) return {basis, 0};

  const Rational factor = int_power(basis.front().context().p, e);
  std::vector<TruncatedSeries> scaled;
  scaled.reserve(basis.size());
  for (const auto& f : basis) scaled.push_back(f * factor);
  return {std::move(scaled), e};
}

TruncatedSeries linear_combination(const std::vector<TruncatedSeries>& basis,
                                   const std::vector<Rational>& coeffs) {
  if (basis.empty() || basis.size() != coeffs.size()) {
    throw input_error("linear_combination: size mismatch");
  }
  TruncatedSeries acc = basis.front() * coeffs.front();
  for (std::size_t i = 1; i < basis.size(); ++i) acc = acc + basis[i] * coeffs[i];
  return acc;
}

SeriesVector::SeriesVector(std::vector<TruncatedSeries> comps)
    : components(std::move(comps)) {
  if (components.empty()) throw input_error("series vector needs r >= 1 components");
  for (const auto& c : components) {
    if (!(c.context() == components.front().context()) ||
        c.var_count() != components.front().var_count()) {
      throw input_error("series vector components disagree on context or variables");
    }
  }
}

}  // namespace padic
