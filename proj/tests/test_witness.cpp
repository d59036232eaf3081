#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padic/errors.hpp"
#include "padic/witness.hpp"

using namespace padic;

namespace {

const PrimeContext kC2{2, 1};

FieldElement q(const PrimeContext& ctx, long num, long den = 1) {
  return FieldElement::from_rational(ctx, make_rational(num, den));
}

TruncatedSeries poly1(const PrimeContext& ctx, const std::vector<Rational>& coeffs) {
  std::vector<std::pair<Monomial, FieldElement>> terms;
  for (unsigned e = 0; e < coeffs.size(); ++e) {
    terms.emplace_back(Monomial{e}, FieldElement::from_rational(ctx, coeffs[e]));
  }
  return TruncatedSeries::from_terms(ctx, 1, terms);
}

SubspaceBasis scalar_basis(const PrimeContext& ctx,
                           const std::vector<TruncatedSeries>& scalars) {
  std::vector<SeriesVector> elements;
  for (const auto& s : scalars) elements.push_back(SeriesVector({s}));
  return SubspaceBasis::build(std::move(elements));
}

}  // namespace

TEST_CASE("minimal_m examples") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto z2 = poly1(kC2, {0, 0, 1});

  CHECK(minimal_m({one}) == 1);
  CHECK(minimal_m({one, z}) == 2);
  CHECK(minimal_m({one, z, z2}) == 3);

  // dependent polynomials are rejected, not reduced
  CHECK_THROWS_AS(minimal_m({one, one}), dependent_basis_error);

  // a tail that ends before independence is reached
  auto shallow1 = TruncatedSeries::from_terms(kC2, 1, {{{0}, q(kC2, 1)}}, 0u);
  auto shallow2 = TruncatedSeries::from_terms(kC2, 1, {{{0}, q(kC2, 1)}}, 0u);
  CHECK_THROWS_AS(minimal_m({shallow1, shallow2}), truncation_error);
}

TEST_CASE("choose_primes examples") {
  CHECK(choose_primes(2, 1, 1) == std::vector<Int>{3});
  CHECK(choose_primes(2, 6, 2) == std::vector<Int>{5, 7});
  CHECK(choose_primes(1, 1, 3) == std::vector<Int>{2, 3, 5});
}

TEST_CASE("choose_N examples and verbatim inequality") {
  CHECK(choose_N(2, 1, {Int(3)}) == 2);
  CHECK(choose_N(1, 1, {Int(2)}) == 2);
  CHECK(choose_N(3, make_rational(5, 2), {Int(5), Int(7)}) == 3);

  // raised strictly above an outer ceiling
  CHECK(choose_N(2, 1, {Int(3)}, Rational(7)) == 8);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> m_dist(1, 5);
  std::uniform_int_distribution<int> a_num(-8, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = m_dist(rng);
    const Rational a = make_rational(a_num(rng), 1 + trial % 3);
    const auto primes = choose_primes(m, 1, 2);
    const long n = choose_N(m, a, primes);
    CHECK(n >= 1);
    for (const auto& qi : primes) {
      CHECK(Rational(m) * n > Rational(m - 1) * (Rational(n) + make_rational(1, qi)) + a);
    }
    // minimality: N-1 violates some instance or is not positive
    if (n > 1) {
      bool fails = false;
      for (const auto& qi : primes) {
        if (!(Rational(m) * (n - 1) >
              Rational(m - 1) * (Rational(n - 1) + make_rational(1, qi)) + a)) {
          fails = true;
        }
      }
      CHECK(fails);
    }
  }
}

TEST_CASE("worked example: p=2, span{1, z}") {
  auto basis = scalar_basis(kC2, {TruncatedSeries::constant(kC2, 1, q(kC2, 1)),
                                  TruncatedSeries::variable(kC2, 1, 0)});
  auto [region, cert] = solve_r1(basis);

  CHECK(region.N == 2);
  CHECK(region.q == std::vector<Int>{3});
  CHECK(region.witness_denominator == 3);
  REQUIRE(cert.stages.size() == 1);
  const auto& stage = cert.stages.front();
  CHECK(stage.m == 2);
  CHECK(stage.monomials == std::vector<Monomial>{{0}, {1}});
  CHECK(stage.bound == 1);

  // u = 2^{7/3}: coefficient 4 at ramification index 1 of D_witness = 3
  REQUIRE(cert.witness.size() == 1);
  CHECK(cert.witness[0] ==
        FieldElement::from_terms(PrimeContext(2, 3), {{1, 4}}));
  CHECK(cert.witness[0].valuation() == Valuation(make_rational(7, 3)));

  // table: f_1 = 1 has v = 0 at mu=1 and no z term; f_2 = z has v = 7/3 at mu=z
  REQUIRE(stage.valuation_table.size() == 2);
  CHECK(stage.valuation_table[0][0] == Valuation(0));
  CHECK(stage.valuation_table[0][1].is_infinite());
  CHECK(stage.valuation_table[1][0].is_infinite());
  CHECK(stage.valuation_table[1][1] == Valuation(make_rational(7, 3)));
  CHECK(cert.rank_check == 2);
}

TEST_CASE("r=1 with one-dimensional span") {
  auto basis = scalar_basis(kC2, {TruncatedSeries::constant(kC2, 1, q(kC2, 1))});
  auto [region, cert] = solve_r1(basis);
  CHECK(cert.stages.front().m == 1);
  CHECK(cert.rank_check == 1);
}

TEST_CASE("r=1 ramified example: p=5, span{5^(1/2) + z}") {
  PrimeContext c52(5, 2);
  auto f = TruncatedSeries::from_terms(
      c52, 1,
      {{{0}, FieldElement::from_terms(c52, {{1, 1}})}, {{1}, FieldElement::one(c52)}});
  auto [region, cert] = solve_r1(scalar_basis(c52, {f}));

  const auto& stage = cert.stages.front();
  CHECK(stage.m == 1);
  CHECK(stage.monomials == std::vector<Monomial>{{0}});
  CHECK(stage.bound == make_rational(3, 2));
  CHECK(region.q == std::vector<Int>{3});
  CHECK(region.N == 2);
  CHECK(region.witness_denominator == 6);

  // f(u) = 5^{1/2} + 5^{7/3} is nonzero with valuation 1/2
  auto value = evaluate(f.lift_ramification(6), cert.witness, EvalMode::kExact).value;
  CHECK(value.valuation() == Valuation(make_rational(1, 2)));
  CHECK(cert.rank_check == 1);
}

TEST_CASE("split_projection examples") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto zero = TruncatedSeries(kC2, 1);

  // span{(1,0),(0,1)}: image {1}, kernel {1}
  auto [img1, ker1] = split_projection({SeriesVector({one, zero}), SeriesVector({zero, one})});
  REQUIRE(img1.size() == 1);
  CHECK(img1[0].components[0] == one);
  REQUIRE(ker1.size() == 1);
  CHECK(ker1[0] == one);

  // span{(1, z)}: image {1}, kernel empty
  auto [img2, ker2] = split_projection({SeriesVector({one, z})});
  REQUIRE(img2.size() == 1);
  CHECK(img2[0].components[0] == one);
  CHECK(ker2.empty());

  // span{(z, 1), (z, 0)}: image {z}, kernel {1} (difference of generators)
  auto [img3, ker3] = split_projection({SeriesVector({z, one}), SeriesVector({z, zero})});
  REQUIRE(img3.size() == 1);
  CHECK(img3[0].components[0] == z);
  REQUIRE(ker3.size() == 1);
  // kernel vector recombines to a nonzero constant
  CHECK(ker3[0].degree() == 0);
  CHECK(!ker3[0].is_zero());
}

TEST_CASE("solve on r=2 bases") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto zero = TruncatedSeries(kC2, 1);

  SUBCASE("span{(1,0),(0,1)}") {
    auto basis = SubspaceBasis::build({SeriesVector({one, zero}), SeriesVector({zero, one})});
    auto [chain, cert] = solve(basis);
    CHECK(cert.rank_check == 2);
    CHECK(chain.stages.size() == cert.stages.size());
  }

  SUBCASE("span{(1,0),(z,1)}: kernel empty, witness comes from the image side") {
    auto basis = SubspaceBasis::build({SeriesVector({one, zero}), SeriesVector({z, one})});
    auto [chain, cert] = solve(basis);
    REQUIRE(cert.stages.size() == 1);
    CHECK(cert.stages.front().m == 2);
    CHECK(cert.witness[0] == FieldElement::from_terms(PrimeContext(2, 3), {{1, 4}}));
    CHECK(cert.rank_check == 2);
  }

  SUBCASE("span{(0,1),(0,z)}: image side zero-dimensional") {
    auto basis = SubspaceBasis::build({SeriesVector({zero, one}), SeriesVector({zero, z})});
    auto [chain, cert] = solve(basis);
    REQUIRE(cert.stages.size() == 1);
    // matches the scalar solve of span{1, z}
    CHECK(cert.stages.front().m == 2);
    CHECK(cert.stages.front().region.N == 2);
    CHECK(cert.rank_check == 2);
  }

  SUBCASE("tails are rejected for r>1") {
    auto tailed = TruncatedSeries::from_terms(kC2, 1, {{{0}, q(kC2, 1)}}, 3u);
    auto basis = SubspaceBasis::build({SeriesVector({tailed, one})});
    CHECK_THROWS_AS(solve(basis), mode_error);
  }
}

TEST_CASE("nested regions dominate outer constraints") {
  // r=2 with nontrivial kernel: span{(1,0),(z,1),(0,1)} has image {1,z} and
  // a one-dimensional kernel.
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto zero = TruncatedSeries(kC2, 1);
  auto basis = SubspaceBasis::build(
      {SeriesVector({one, zero}), SeriesVector({z, one}), SeriesVector({zero, one})});
  auto [chain, cert] = solve(basis);
  REQUIRE(cert.stages.size() == 2);
  CHECK(cert.rank_check == 3);

  // the inner stage's constraints lie strictly above the outer ceiling
  const auto& outer = cert.stages[0].region;
  const auto& inner = cert.stages[1].region;
  CHECK(outer.ceiling() < Rational(inner.N));

  // the witness, translated to each stage's coordinates, meets that stage's
  // valuation constraints exactly
  const unsigned D_final = cert.witness.front().context().D;
  for (std::size_t s = 0; s < cert.stages.size(); ++s) {
    const auto& stage = cert.stages[s];
    const auto vals = stage.region.valuations();
    for (std::size_t i = 0; i < cert.witness.size(); ++i) {
      auto offset = cert.witness[i] - stage.center[i].lift_ramification(D_final);
      CHECK(offset.valuation() == Valuation(vals[i]));
    }
  }
}

TEST_CASE("r=3 coordinate basis walks the full three-stage chain") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto zero = TruncatedSeries(kC2, 1);
  auto basis = SubspaceBasis::build({SeriesVector({one, zero, zero}),
                                     SeriesVector({zero, one, zero}),
                                     SeriesVector({zero, zero, one})});
  auto [chain, cert] = solve(basis);
  REQUIRE(cert.stages.size() == 3);
  CHECK(cert.rank_check == 3);

  // strictly nested constraints, innermost last
  for (std::size_t s = 0; s + 1 < cert.stages.size(); ++s) {
    CHECK(cert.stages[s].region.ceiling() < Rational(cert.stages[s + 1].region.N));
  }
  CHECK(chain.stages.size() == 3);
}

TEST_CASE("scaling the basis by powers of p leaves the verdict intact") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  for (long e : {-2L, -1L, 1L, 2L}) {
    const Rational factor = int_power(2, e);
    auto basis = scalar_basis(kC2, {one * factor, z * factor});
    auto [region, cert] = solve_r1(basis);
    CHECK(cert.rank_check == 2);
  }
}

TEST_CASE("dependent input bases are rejected") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto two = TruncatedSeries::constant(kC2, 1, q(kC2, 2));
  auto basis = scalar_basis(kC2, {one, two});
  CHECK_THROWS_AS(solve(basis), dependent_basis_error);
}
