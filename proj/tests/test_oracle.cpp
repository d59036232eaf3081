#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padic/errors.hpp"
#include "padic/oracle.hpp"

using namespace padic;

namespace {

const PrimeContext kC2{2, 1};

FieldElement q(const PrimeContext& ctx, long num, long den = 1) {
  return FieldElement::from_rational(ctx, make_rational(num, den));
}

std::vector<std::vector<FieldElement>> rational_vectors(
    const PrimeContext& ctx, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& row : rows) {
    std::vector<FieldElement> v;
    for (long e : row) v.push_back(q(ctx, e));
    out.push_back(std::move(v));
  }
  return out;
}

SubspaceBasis scalar_basis(const std::vector<TruncatedSeries>& scalars) {
  std::vector<SeriesVector> elements;
  for (const auto& s : scalars) elements.push_back(SeriesVector({s}));
  return SubspaceBasis::build(std::move(elements));
}

}  // namespace

TEST_CASE("residue grid size and completeness") {
  for (long p : {2L, 3L, 5L}) {
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned L = 1; L <= 3; ++L) {
        ResidueGrid grid(Int(p), n, L);
        Int expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), p, static_cast<unsigned long>(L) * n);
        Int prev;
        mpz_ui_pow_ui(prev.get_mpz_t(), p, static_cast<unsigned long>(L - 1) * n);
        Int actual;
        mpz_set_ui(actual.get_mpz_t(), static_cast<unsigned long>(grid.size()));
        CHECK(actual == expected - prev);

        // count primitively by hand
        unsigned long long seen = 0;
        for (unsigned long long i = 0; i < grid.raw_size(); ++i) {
          for (auto digit : grid.decode(i)) {
            if (digit % p != 0) {
              ++seen;
              break;
            }
          }
        }
        CHECK(seen == grid.size());
      }
    }
  }
}

TEST_CASE("enumerate_valuation_set examples") {
  // t = {(1,0),(0,1)}: the set is {0} at every precision
  auto r1 = enumerate_valuation_set(rational_vectors(kC2, {{1, 0}, {0, 1}}), 3);
  CHECK(r1.values == std::set<Rational>{0});
  CHECK(!r1.has_unresolved);
  CHECK(r1.stabilized);

  // t = {(p,0),(0,1)}: {0, 1}
  auto r2 = enumerate_valuation_set(rational_vectors(kC2, {{2, 0}, {0, 1}}), 3);
  CHECK(r2.values == std::set<Rational>{0, 1});
  CHECK(r2.stabilized);

  // t = {(1,)}: units only
  auto r3 = enumerate_valuation_set(rational_vectors(kC2, {{1}}), 2);
  CHECK(r3.values == std::set<Rational>{0});
  CHECK(r3.stabilized);

  // dependent vectors never stabilize: arbitrarily deep cancellations
  auto dep = enumerate_valuation_set(rational_vectors(kC2, {{3}, {1}}), 3);
  CHECK(dep.has_unresolved);
  CHECK(!dep.stabilized);
}

TEST_CASE("oracle agrees with the valuation bound on small instances") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> val_dist(-2, 2);
  std::uniform_int_distribution<int> unit_dist(0, 3);
  const long units[] = {1, 3, 5, 7};
  int done = 0;
  while (done < 40) {
    const Int p = (done % 3 == 0) ? 2 : (done % 3 == 1 ? 3 : 5);
    // keep p^{6n} grids enumerable in case stabilization needs L = 6
    const unsigned n_cap = (p == 2) ? 3 : (p == 3 ? 2 : 1);
    PrimeContext ctx(p, 1);
    const unsigned n = 1 + rng() % n_cap;
    const unsigned s = n + rng() % (4 - n);
    std::vector<std::vector<FieldElement>> t;
    for (unsigned i = 0; i < n; ++i) {
      std::vector<FieldElement> v;
      for (unsigned k = 0; k < s; ++k) {
        Rational entry = int_power(p, val_dist(rng)) * units[unit_dist(rng)];
        if (rng() % 3 == 0) entry = 0;
        v.push_back(FieldElement::from_rational(ctx, entry));
      }
      t.push_back(std::move(v));
    }
    const auto em = expand(t);
    if (rank_over_prime_field(em) < n) continue;
    const Rational bound = valuation_bound(em);
    if (bound > 4) continue;  // keep the grid certifiable at L <= 6

    auto res = enumerate_valuation_set_auto(t, 3, 6);
    REQUIRE(res.stabilized);
    for (const auto& v : res.values) CHECK(v < bound);
    ++done;
  }
}

TEST_CASE("fractional parts examples") {
  auto fp1 = fractional_parts(rational_vectors(kC2, {{1, 0}, {0, 1}}));
  CHECK(fp1.conclusive);
  CHECK(fp1.parts == std::set<Rational>{0});

  PrimeContext c52(5, 2);
  auto root5 = FieldElement::from_terms(c52, {{1, 1}});
  auto fp2 = fractional_parts({{root5}});
  CHECK(fp2.conclusive);
  CHECK(fp2.parts == std::set<Rational>{make_rational(1, 2)});

  auto fp3 = fractional_parts({{FieldElement::one(c52)}, {root5}});
  CHECK(fp3.conclusive);
  CHECK(fp3.parts == std::set<Rational>{0, make_rational(1, 2)});
}

TEST_CASE("injectivity grid on the worked example") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto basis = scalar_basis({one, z});

  // at the constructed witness u = 2^{7/3}
  auto u = FieldElement::from_terms(PrimeContext(2, 3), {{1, 4}});
  auto pass = verify_injectivity_grid(basis, {u}, 3);
  CHECK(pass.verdict == GridVerdict::kPass);

  // at u = 2 (valuation 1, outside every produced region): f = z - 2 vanishes
  auto fail = verify_injectivity_grid(basis, {q(kC2, 2)}, 3);
  CHECK(fail.verdict == GridVerdict::kFail);
  REQUIRE(fail.counterexample.size() == 2);
  CHECK(fail.counterexample[0] == -2);
  CHECK(fail.counterexample[1] == 1);

  // one-dimensional spans pass anywhere the value is a unit times nonzero
  auto single = verify_injectivity_grid(scalar_basis({one}), {q(kC2, 2)}, 3);
  CHECK(single.verdict == GridVerdict::kPass);
}

TEST_CASE("injectivity grid is exact about grid-representative zeros") {
  // span{2, z} at u = 2: a = (1, p^L - 1) gives 2*1 + 2*(p^L-1) ... nonzero,
  // but the Z_p kernel (1, -1) has a grid representative zero only in signed
  // form; the kernel route reports it.
  auto two = TruncatedSeries::constant(kC2, 1, q(kC2, 2));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto res = verify_injectivity_grid(scalar_basis({two, z}), {q(kC2, 2)}, 2);
  CHECK(res.verdict == GridVerdict::kFail);
  REQUIRE(res.counterexample.size() == 2);
  // 2*a_1 + 2*a_2 = 0 with last entry positive: (-1, 1)
  CHECK(res.counterexample[0] == -1);
  CHECK(res.counterexample[1] == 1);
}

TEST_CASE("injectivity grid with integral tails") {
  // f_1 = 1 + O(deg > 2), f_2 = z + O(deg > 2): decidable at v(u) = 7/3
  auto f1 = TruncatedSeries::from_terms(kC2, 1, {{{0}, q(kC2, 1)}}, 2u);
  auto f2 = TruncatedSeries::from_terms(kC2, 1, {{{1}, q(kC2, 1)}}, 2u);
  auto basis = scalar_basis({f1, f2});
  auto u = FieldElement::from_terms(PrimeContext(2, 3), {{1, 4}});
  auto res = verify_injectivity_grid(basis, {u}, 3);
  CHECK(res.verdict == GridVerdict::kPass);

  // all-zero polynomial parts are undecidable
  auto g = TruncatedSeries(kC2, 1, 2u);
  auto undecided = verify_injectivity_grid(scalar_basis({g}), {q(kC2, 2)}, 2);
  CHECK(undecided.verdict == GridVerdict::kInconclusive);
}

TEST_CASE("certificates verify and tampering is detected") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto basis = scalar_basis({one, z});
  auto [chain, cert] = solve(basis);

  auto audit = audit_certificate(cert);
  CHECK(audit.pass);

  const Json good = certificate_to_json(cert);
  CHECK(verify_certificate(good).pass);

  SUBCASE("decrementing N breaks the defining inequality") {
    Json bad = good;
    bad["stages"][0]["N"] = 1;
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("perturbing one valuation entry is caught by recomputation") {
    Json bad = good;
    bad["stages"][0]["valuation_table"][1][1] = "8/3";
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("raising A is caught by the bound recomputation") {
    Json bad = good;
    bad["stages"][0]["A"] = "3/2";
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("changing m is caught by the monomial set") {
    Json bad = good;
    bad["stages"][0]["m"] = 3;
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("changing the claimed rank is caught") {
    Json bad = good;
    bad["rank_check"] = 1;
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("changing a problem coefficient changes the regeneration") {
    Json bad = good;
    bad["problem"]["basis"][0]["components"][0]["terms"][0]["num"] = "3";
    CHECK(!verify_certificate(bad).pass);
  }
  SUBCASE("malformed JSON raises a parse error") {
    Json bad = good;
    bad["stages"][0].erase("q");
    CHECK_THROWS_AS(verify_certificate(bad), parse_error);
  }
}

TEST_CASE("grid agrees with the solver at every precision up to 4") {
  auto one = TruncatedSeries::constant(kC2, 1, q(kC2, 1));
  auto z = TruncatedSeries::variable(kC2, 1, 0);
  auto z2 = TruncatedSeries::from_terms(kC2, 1, {{{2}, q(kC2, 1)}, {{0}, q(kC2, 1, 3)}});

  PrimeContext c32(3, 2);
  auto ramified = TruncatedSeries::from_terms(
      c32, 1, {{{0}, FieldElement::from_terms(c32, {{1, 2}})}, {{1}, FieldElement::one(c32)}});

  const std::vector<SubspaceBasis> bases = {
      scalar_basis({one, z}),
      scalar_basis({one, z, z2}),
      SubspaceBasis::build({SeriesVector({ramified})}),
  };
  for (const auto& basis : bases) {
    auto [chain, cert] = solve(basis);
    for (unsigned L = 1; L <= 4; ++L) {
      CHECK(verify_injectivity_grid(basis, cert.witness, L).verdict == GridVerdict::kPass);
    }
  }
}

TEST_CASE("thread count respects the environment cap") {
  CHECK(oracle_thread_count() >= 1);
}
