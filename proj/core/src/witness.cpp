#include "padic/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

SubspaceBasis SubspaceBasis::build(std::vector<SeriesVector> elements) {
  if (elements.empty()) throw input_error("basis needs at least one element");
  const auto& first = elements.front();
  for (const auto& e : elements) {
    if (!(e.context() == first.context()) || e.var_count() != first.var_count() ||
        e.size() != first.size()) {
      throw input_error("basis elements disagree on context, variables or components");
    }
  }

  SubspaceBasis out;
  out.original_elements = elements;

  std::vector<TruncatedSeries> flat;
  for (const auto& e : elements)
    for (const auto& c : e.components) flat.push_back(c);
  auto [scaled, exponent] = scale_to_integral(flat);

  std::size_t pos = 0;
  const std::size_t r = first.size();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::vector<TruncatedSeries> comps(scaled.begin() + pos, scaled.begin() + pos + r);
    out.elements.emplace_back(std::move(comps));
    pos += r;
  }
  out.integrality_exponent = exponent;
  return out;
}

std::vector<Rational> TorusRegion::valuations() const {
  std::vector<Rational> v;
  v.reserve(q.size());
  for (const auto& qi : q) v.push_back(Rational(N) + make_rational(1, qi));
  return v;
}

Rational TorusRegion::ceiling() const {
  Rational best = Rational(N);
  for (const auto& v : valuations()) best = std::max(best, v);
  return best;
}

RegionChain WitnessCertificate::chain() const {
  RegionChain out;
  for (const auto& s : stages) out.stages.emplace_back(s.center, s.region);
  return out;
}

unsigned minimal_m(const std::vector<TruncatedSeries>& basis) {
  if (basis.empty()) throw input_error("minimal_m of an empty basis");
  const std::size_t n = basis.size();

  bool tailed = false;
  unsigned limit = 1;
  for (const auto& f : basis) {
    if (f.tail_degree()) {
      tailed = true;
      limit = std::max(limit, *f.tail_degree() + 1);
    } else {
      limit = std::max(limit, f.degree() + 1);
    }
  }
  if (tailed) {
    // coefficients are only trusted through the shallowest declared tail
    unsigned trusted = limit;
    for (const auto& f : basis)
      if (f.tail_degree()) trusted = std::min(trusted, *f.tail_degree() + 1);
    limit = trusted;
  }

  for (unsigned m = 1; m <= limit; ++m) {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(n);
    for (const auto& f : basis) rows.push_back(truncate_below(f, m));
    if (rank_over_prime_field(expand_support(rows)) == n) return m;
  }
  if (tailed) {
    throw truncation_error(
        "independence not reached within the trusted truncation degree; "
        "the basis may be dependent or under-truncated");
  }
  throw dependent_basis_error("basis is linearly dependent: " + std::to_string(n) +
                              " elements never reach rank " + std::to_string(n));
}

std::vector<Int> choose_primes(unsigned m, unsigned D, unsigned d) {
  std::vector<Int> out;
  Int candidate = m;
  while (out.size() < d) {
    candidate += 1;
    if (!is_prime(candidate)) continue;
    if (Int(D) % candidate == 0) continue;
    out.push_back(candidate);
  }
  return out;
}

long choose_N(unsigned m, const Rational& A, const std::vector<Int>& q,
              const std::optional<Rational>& exceed) {
  if (q.empty()) throw input_error("choose_N needs at least one prime");
  // m*N > (m-1)*(N + 1/q_i) + A  rearranges to  N > A + (m-1)/q_i,
  // tightest at the smallest prime.
  Rational threshold = A;
  if (m > 1) {
    Int q_min = *std::min_element(q.begin(), q.end());
    threshold += make_rational(m - 1, q_min);
  }
  if (exceed) threshold = std::max(threshold, *exceed);

  Int n0 = floor_rational(threshold) + 1;
  long n = std::max(n0.get_si(), 1L);

  for (const auto& qi : q) {
    const Rational lhs = Rational(m) * n;
    const Rational rhs = Rational(m - 1) * (Rational(n) + make_rational(1, qi)) + A;
    if (!(lhs > rhs)) throw std::logic_error("N fails its defining inequality");
  }
  return n;
}

namespace {

unsigned witness_denominator_for(unsigned D, const std::vector<Int>& q) {
  unsigned long long acc = D;
  for (const auto& qi : q) {
    acc *= qi.get_ui();
    if (acc > 100000000ull) throw input_error("witness tower exceeds desk scale");
  }
  return static_cast<unsigned>(acc);
}

std::vector<FieldElement> canonical_witness(const PrimeContext& base,
                                            const TorusRegion& region) {
  PrimeContext tower(base.p, region.witness_denominator);
  Rational shift = int_power(base.p, region.N);
  std::vector<FieldElement> u;
  u.reserve(region.q.size());
  for (const auto& qi : region.q) {
    const unsigned j = region.witness_denominator / static_cast<unsigned>(qi.get_ui());
    u.push_back(FieldElement::from_terms(tower, {{j, shift}}));
  }
  return u;
}

std::vector<FieldElement> zero_point(const PrimeContext& ctx, unsigned d) {
  return std::vector<FieldElement>(d, FieldElement::zero(ctx));
}

std::vector<FieldElement> lift_point(const std::vector<FieldElement>& u, unsigned D_new) {
  std::vector<FieldElement> out;
  out.reserve(u.size());
  for (const auto& ui : u) out.push_back(ui.lift_ramification(D_new));
  return out;
}

std::vector<FieldElement> add_points(const std::vector<FieldElement>& a,
                                     const std::vector<FieldElement>& b) {
  std::vector<FieldElement> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

// One r=1 solve on raw scalars. `center` is the accumulated outer witness
// (in the scalars' own tower); `exceed` forces this stage's constraints
// strictly above every outer region's.
StageCertificate solve_stage(const std::vector<TruncatedSeries>& scalars,
                             std::vector<FieldElement> center,
                             const std::optional<Rational>& exceed) {
  StageCertificate stage;
  auto [basis, exponent] = scale_to_integral(scalars);
  stage.basis = std::move(basis);
  stage.scale_exponent = exponent;
  stage.center = std::move(center);

  const PrimeContext& ctx = stage.basis.front().context();
  const unsigned d = stage.basis.front().var_count();

  stage.m = minimal_m(stage.basis);
  stage.monomials = monomials_below(stage.m, d);

  std::vector<std::vector<FieldElement>> jets;
  for (const auto& f : stage.basis) jets.push_back(truncate_below(f, stage.m));
  stage.bound = valuation_bound(expand_support(jets));

  stage.region.q = choose_primes(stage.m, ctx.D, d);
  stage.region.N = choose_N(stage.m, stage.bound, stage.region.q, exceed);
  stage.region.witness_denominator = witness_denominator_for(ctx.D, stage.region.q);
  stage.witness_offset = canonical_witness(ctx, stage.region);

  // v(c^mu mu(u)) = v(c^mu) + sum_i e_i (N + 1/q_i); within one element the
  // finite entries must be pairwise distinct (fractional parts differ).
  const auto point_vals = stage.region.valuations();
  for (const auto& f : stage.basis) {
    std::vector<Valuation> row;
    std::vector<Rational> seen;
    for (const auto& mon : stage.monomials) {
      const FieldElement c = f.coefficient(mon);
      if (c.is_zero()) {
        row.push_back(Valuation::infinity());
        continue;
      }
      Rational v = c.valuation().value();
      for (std::size_t i = 0; i < mon.size(); ++i) v += Rational(mon[i]) * point_vals[i];
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
        throw std::logic_error("valuation table entries collide within one element");
      }
      seen.push_back(v);
      row.push_back(Valuation(v));
    }
    stage.valuation_table.push_back(std::move(row));
  }
  return stage;
}

struct SolveResult {
  std::vector<StageCertificate> stages;
  std::vector<FieldElement> witness;   // relative to the problem origin
  std::optional<Rational> ceiling;     // max constraint over all stages so far
};

SolveResult solve_recursive(const std::vector<SeriesVector>& elements,
                            const std::optional<Rational>& exceed) {
  const std::size_t r = elements.front().size();
  const PrimeContext& ctx = elements.front().context();
  const unsigned d = elements.front().var_count();

  if (r == 1) {
    std::vector<TruncatedSeries> scalars;
    for (const auto& e : elements) scalars.push_back(e.components.front());
    auto stage = solve_stage(scalars, zero_point(ctx, d), exceed);
    SolveResult out;
    out.witness = stage.witness_offset;
    out.ceiling = stage.region.ceiling();
    out.stages.push_back(std::move(stage));
    return out;
  }

  auto [image, kernel] = split_projection(elements);
  if (image.size() + kernel.size() != elements.size()) {
    throw std::logic_error("split does not preserve dimension");
  }

  SolveResult outer;
  if (!image.empty()) {
    outer = solve_recursive(image, exceed);
  } else {
    outer.witness = zero_point(ctx, d);
    outer.ceiling = exceed;
  }
  if (kernel.empty()) return outer;

  const unsigned D_mid = outer.witness.front().context().D;
  std::vector<TruncatedSeries> recentered;
  recentered.reserve(kernel.size());
  for (const auto& k : kernel) {
    recentered.push_back(recenter(k.lift_ramification(D_mid), outer.witness));
  }
  auto inner = solve_stage(recentered, outer.witness, outer.ceiling);

  SolveResult out;
  const unsigned D_final = inner.witness_offset.front().context().D;
  out.witness = add_points(lift_point(outer.witness, D_final), inner.witness_offset);
  out.ceiling = inner.region.ceiling();
  out.stages = std::move(outer.stages);
  out.stages.push_back(std::move(inner));
  return out;
}

std::size_t rank_check_at(const std::vector<SeriesVector>& elements,
                          const std::vector<FieldElement>& witness) {
  std::vector<std::vector<FieldElement>> values;
  values.reserve(elements.size());
  for (const auto& e : elements) {
    std::vector<FieldElement> row;
    for (const auto& comp : e.components) {
      // For tailed components this is the polynomial part; the stage's
      // distinct-valuation data covers the omitted tail.
      const auto mode = comp.is_polynomial() ? EvalMode::kExact : EvalMode::kLowerBound;
      row.push_back(evaluate(comp, witness, mode).value);
    }
    values.push_back(std::move(row));
  }
  return rank_over_prime_field(expand_support(values));
}

}  // namespace

std::pair<std::vector<SeriesVector>, std::vector<TruncatedSeries>> split_projection(
    const std::vector<SeriesVector>& elements) {
  if (elements.empty()) throw input_error("split of an empty basis");
  const std::size_t r = elements.front().size();
  if (r < 2) throw input_error("split needs r >= 2");
  const std::size_t n = elements.size();

  // Common monomial support of the first r-1 components, per component.
  std::vector<std::vector<Monomial>> support(r - 1);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    std::map<Monomial, bool, GrlexLess> seen;
    for (const auto& e : elements)
      for (const auto& [mon, c] : e.components[k].terms()) seen.emplace(mon, true);
    for (const auto& [mon, unused] : seen) support[k].push_back(mon);
  }

  std::vector<std::vector<FieldElement>> rows;
  rows.reserve(n);
  for (const auto& e : elements) {
    std::vector<FieldElement> row;
    for (std::size_t k = 0; k + 1 < r; ++k)
      for (const auto& mon : support[k]) row.push_back(e.components[k].coefficient(mon));
    rows.push_back(std::move(row));
  }
  const auto expanded = expand(rows);

  // Image: the earliest subset of rows spanning the row space.
  std::vector<SeriesVector> image;
  {
    RationalMatrix running(n, expanded.entries.cols());
    std::size_t taken = 0;
    std::size_t current_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < expanded.entries.cols(); ++j)
        running.at(taken, j) = expanded.entries.at(i, j);
      RationalMatrix probe = running;
      if (rank(probe) > current_rank) {
        ++current_rank;
        ++taken;
        std::vector<TruncatedSeries> comps(elements[i].components.begin(),
                                           elements[i].components.end() - 1);
        image.emplace_back(std::move(comps));
      }
    }
  }

  // Kernel: coefficient tuples killing the first r-1 components; each yields
  // a scalar series in the last component.
  std::vector<TruncatedSeries> kernel;
  std::vector<TruncatedSeries> last;
  for (const auto& e : elements) last.push_back(e.components.back());
  for (const auto& a : kernel_basis(expanded)) {
    kernel.push_back(linear_combination(last, a));
  }
  return {std::move(image), std::move(kernel)};
}

std::pair<TorusRegion, WitnessCertificate> solve_r1(const SubspaceBasis& basis) {
  if (basis.component_count() != 1) throw input_error("solve_r1 needs r = 1");
  auto [chain, cert] = solve(basis);
  return {cert.stages.front().region, std::move(cert)};
}

std::pair<RegionChain, WitnessCertificate> solve(const SubspaceBasis& basis) {
  const std::size_t r = basis.component_count();
  if (r > 1) {
    for (const auto& e : basis.elements)
      for (const auto& c : e.components)
        if (!c.is_polynomial()) {
          throw mode_error("the r>1 induction recenters series and needs exact polynomials");
        }
  }

  auto result = solve_recursive(basis.elements, std::nullopt);

  WitnessCertificate cert;
  cert.p = basis.context().p;
  cert.D = basis.context().D;
  cert.d = basis.var_count();
  cert.r = static_cast<unsigned>(r);
  cert.problem_basis = basis.original_elements;
  cert.integrality_exponent = basis.integrality_exponent;
  cert.stages = std::move(result.stages);
  cert.witness = std::move(result.witness);

  const unsigned D_final = cert.witness.front().context().D;
  std::vector<SeriesVector> lifted;
  lifted.reserve(basis.elements.size());
  for (const auto& e : basis.elements) {
    std::vector<TruncatedSeries> comps;
    for (const auto& c : e.components) comps.push_back(c.lift_ramification(D_final));
    lifted.emplace_back(std::move(comps));
  }
  cert.rank_check = rank_check_at(lifted, cert.witness);
  if (cert.rank_check != basis.dimension()) {
    throw std::logic_error("value matrix rank " + std::to_string(cert.rank_check) +
                           " differs from basis dimension " +
                           std::to_string(basis.dimension()));
  }
  return {cert.chain(), std::move(cert)};
}

}  // namespace padic
