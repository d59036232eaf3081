#include "padic/field.hpp"

#include <stdexcept>

#include "padic/linalg.hpp"

namespace padic {

PrimeContext::PrimeContext(Int prime, unsigned ramification)
    : p(std::move(prime)), D(ramification) {
  if (!is_prime(p)) throw input_error("context requires a prime p, got " + p.get_str());
  if (D < 1) throw input_error("ramification denominator must be >= 1");
}

const Rational& Valuation::value() const {
  if (!finite_) throw std::domain_error("value() of infinite valuation");
  return value_;
}

Valuation Valuation::operator+(const Valuation& o) const {
  if (!finite_ || !o.finite_) return infinity();
  return Valuation(value_ + o.value_);
}

bool Valuation::operator==(const Valuation& o) const {
  if (finite_ != o.finite_) return false;
  return !finite_ || value_ == o.value_;
}

bool Valuation::operator<(const Valuation& o) const {
  if (!finite_) return false;            // inf < anything is false
  if (!o.finite_) return true;           // finite < inf
  return value_ < o.value_;
}

std::string Valuation::to_string() const {
  return finite_ ? rational_to_string(value_) : "inf";
}

Valuation Valuation::from_string(const std::string& s) {
  if (s == "inf") return infinity();
  return Valuation(rational_from_string(s));
}

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

void FieldElement::set_coord(unsigned j, Rational a) {
  if (a == 0) {
    coords_.erase(j);
  } else {
    coords_[j] = std::move(a);
  }
}

void FieldElement::require_same_context(const FieldElement& x, const FieldElement& y) {
  if (!(x.ctx_ == y.ctx_)) {
    throw input_error("field elements from different towers: (p=" + x.ctx_.p.get_str() +
                      ", D=" + std::to_string(x.ctx_.D) + ") vs (p=" + y.ctx_.p.get_str() +
                      ", D=" + std::to_string(y.ctx_.D) + ")");
  }
}

FieldElement FieldElement::from_terms(
    const PrimeContext& ctx, const std::vector<std::pair<unsigned, Rational>>& terms) {
  FieldElement x(ctx);
  for (const auto& [j, a] : terms) {
    if (j >= ctx.D) {
      throw input_error("ramification index " + std::to_string(j) + " out of range for D=" +
                        std::to_string(ctx.D));
    }
    auto it = x.coords_.find(j);
    Rational sum = (it == x.coords_.end()) ? a : Rational(it->second + a);
    x.set_coord(j, sum);
  }
  return x;
}

FieldElement make_element(const PrimeContext& ctx,
                          const std::vector<std::pair<unsigned, Rational>>& terms) {
  return FieldElement::from_terms(ctx, terms);
}

FieldElement FieldElement::from_rational(const PrimeContext& ctx, const Rational& a) {
  FieldElement x(ctx);
  x.set_coord(0, a);
  return x;
}

FieldElement FieldElement::one(const PrimeContext& ctx) {
  return from_rational(ctx, Rational(1));
}

Valuation FieldElement::valuation() const {
  if (coords_.empty()) return Valuation::infinity();
  Valuation best = Valuation::infinity();
  for (const auto& [j, a] : coords_) {
    Rational v = Rational(rational_valuation(a, ctx_.p)) + make_rational(j, ctx_.D);
    best = min(best, Valuation(v));
  }
  return best;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_context(*this, o);
  FieldElement out(*this);
  for (const auto& [j, a] : o.coords_) {
    auto it = out.coords_.find(j);
    Rational sum = (it == out.coords_.end()) ? a : Rational(it->second + a);
    out.set_coord(j, sum);
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(ctx_);
  for (const auto& [j, a] : coords_) out.coords_.emplace(j, -a);
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_context(*this, o);
  FieldElement out(ctx_);
  // p^{j/D} * p^{k/D} with j+k >= D reduces via p^{D/D} = p.
  for (const auto& [j, a] : coords_) {
    for (const auto& [k, b] : o.coords_) {
      unsigned idx = j + k;
      Rational coeff = a * b;
      if (idx >= ctx_.D) {
        idx -= ctx_.D;
        coeff *= ctx_.p;
      }
      auto it = out.coords_.find(idx);
      Rational sum = (it == out.coords_.end()) ? coeff : Rational(it->second + coeff);
      out.set_coord(idx, sum);
    }
  }
  return out;
}

FieldElement FieldElement::operator*(const Rational& a) const {
  FieldElement out(ctx_);
  if (a == 0) return out;
  for (const auto& [j, c] : coords_) out.coords_.emplace(j, c * a);
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  const unsigned D = ctx_.D;
  // Column k holds the coordinates of x * p^{k/D}; solving M y = e_0 yields
  // y with x * (sum_k y_k p^{k/D}) = 1.
  RationalMatrix m(D, D);
  for (const auto& [j, a] : coords_) {
    for (unsigned k = 0; k < D; ++k) {
      unsigned idx = j + k;
      Rational coeff = a;
      if (idx >= D) {
        idx -= D;
        coeff *= ctx_.p;
      }
      m.at(idx, k) += coeff;
    }
  }
  std::vector<Rational> rhs(D);
  rhs[0] = 1;
  auto y = solve_linear(m, rhs);
  if (!y) throw std::domain_error("multiplication matrix unexpectedly singular");
  FieldElement out(ctx_);
  for (unsigned k = 0; k < D; ++k) out.set_coord(k, (*y)[k]);
  return out;
}

FieldElement FieldElement::lift_ramification(unsigned D_new) const {
  if (D_new % ctx_.D != 0) {
    throw input_error("cannot lift: " + std::to_string(ctx_.D) + " does not divide " +
                      std::to_string(D_new));
  }
  const unsigned stride = D_new / ctx_.D;
  FieldElement out(PrimeContext(ctx_.p, D_new));
  for (const auto& [j, a] : coords_) out.coords_.emplace(j * stride, a);
  return out;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return ctx_ == o.ctx_ && coords_ == o.coords_;
}

}  // namespace padic
