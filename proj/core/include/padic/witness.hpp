#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic/linalg.hpp"
#include "padic/series.hpp"

namespace padic {

/// An ordered basis f_1..f_n of a finite-dimensional subspace of R^r,
/// normalized so every stored coefficient is integral. The claimed dimension
/// n is part of the contract: dependent inputs are rejected, not reduced.
struct SubspaceBasis {
  std::vector<SeriesVector> elements;           // scaled by p^integrality_exponent
  std::vector<SeriesVector> original_elements;  // as supplied
  long integrality_exponent = 0;

  static SubspaceBasis build(std::vector<SeriesVector> elements);

  const PrimeContext& context() const { return elements.front().context(); }
  unsigned var_count() const { return elements.front().var_count(); }
  std::size_t component_count() const { return elements.front().size(); }
  std::size_t dimension() const { return elements.size(); }
};

/// The locus {v(z_i) = N + 1/q_i for all i}: one fresh prime per variable,
/// all exceeding the jet order m and coprime to the working ramification.
struct TorusRegion {
  long N = 0;
  std::vector<Int> q;               // one prime per variable, ascending
  unsigned witness_denominator = 1; // lcm(D, q_1*...*q_d)

  /// N + 1/q_i per variable.
  std::vector<Rational> valuations() const;
  /// max_i (N + 1/q_i): every constraint of this region lies at or below it.
  Rational ceiling() const;
};

/// One r=1 solve in recentered coordinates: everything needed to audit the
/// distinct-valuation argument for this stage from the stored data alone.
struct StageCertificate {
  std::vector<FieldElement> center;       // accumulated witness of outer stages
  std::vector<TruncatedSeries> basis;     // scalar stage basis, integral
  long scale_exponent = 0;                // power of p applied to this stage
  unsigned m = 1;                         // smallest degree with independent jets
  std::vector<Monomial> monomials;        // all monomials of degree < m
  Rational bound;                         // strict bound A on head valuations
  TorusRegion region;
  std::vector<FieldElement> witness_offset;  // canonical point p^{N+1/q_i}
  // v(c^mu mu(w)) per basis element, parallel to `monomials`.
  std::vector<std::vector<Valuation>> valuation_table;
};

/// Ordered (center, region) pairs, innermost last.
struct RegionChain {
  std::vector<std::pair<std::vector<FieldElement>, TorusRegion>> stages;
};

/// Full audit trail: the constants, the stages, the witness point, and the
/// exact rank of the expanded value matrix at the witness.
struct WitnessCertificate {
  Int p;
  unsigned D = 1;  // ramification of the input basis
  unsigned d = 1;
  unsigned r = 1;
  std::vector<SeriesVector> problem_basis;  // as supplied, before scaling
  long integrality_exponent = 0;
  std::vector<StageCertificate> stages;
  std::vector<FieldElement> witness;  // in the final tower
  std::size_t rank_check = 0;

  std::size_t dimension() const { return problem_basis.size(); }
  RegionChain chain() const;
};

/// Smallest m >= 1 whose degree-<m coefficient vectors are independent.
/// Throws truncation_error when a declared tail ends before independence is
/// reached, dependent_basis_error when polynomials never reach it.
unsigned minimal_m(const std::vector<TruncatedSeries>& basis);

/// The d smallest primes exceeding m and not dividing D, ascending.
std::vector<Int> choose_primes(unsigned m, unsigned D, unsigned d);

/// Minimal positive integer N with m*N > (m-1)*(N + 1/q_i) + A for all i;
/// when `exceed` is given, N is also raised strictly above it so that the
/// region's constraints dominate every outer region's.
long choose_N(unsigned m, const Rational& A, const std::vector<Int>& q,
              const std::optional<Rational>& exceed = std::nullopt);

/// The r=1 construction: jets, bound, primes, N, region, canonical witness,
/// valuation table and rank check, as one certificate.
std::pair<TorusRegion, WitnessCertificate> solve_r1(const SubspaceBasis& basis);

/// Kernel and image of the projection to the first r-1 components, as exact
/// rational linear algebra on stored coefficients. The kernel side is
/// returned as scalar series (last components). Either side may be empty.
std::pair<std::vector<SeriesVector>, std::vector<TruncatedSeries>> split_projection(
    const std::vector<SeriesVector>& elements);

/// Full solver: r=1 directly, r>1 by splitting off the last component,
/// solving the image, then the recentered kernel, innermost stage last.
std::pair<RegionChain, WitnessCertificate> solve(const SubspaceBasis& basis);

}  // namespace padic
