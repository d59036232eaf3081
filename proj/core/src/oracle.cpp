#include "padic/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "padic/errors.hpp"

namespace padic {

unsigned oracle_thread_count() {
  static const unsigned cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PADIC_WITNESS_THREADS")) {
      char* end = nullptr;
      const unsigned long cap = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && cap >= 1) hw = std::min<unsigned long>(hw, cap);
    }
    return hw;
  }();
  return cached;
}

ResidueGrid::ResidueGrid(Int prime, unsigned coords, unsigned precision)
    : p(std::move(prime)), n(coords), L(precision) {
  if (n < 1 || L < 1) throw input_error("residue grid needs n >= 1 and L >= 1");
  Int reps;
  mpz_pow_ui(reps.get_mpz_t(), p.get_mpz_t(), L);
  Int total;
  mpz_pow_ui(total.get_mpz_t(), reps.get_mpz_t(), n);
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 62) {
    throw input_error("residue grid exceeds desk scale: p^(L*n) is too large");
  }
}

unsigned long long ResidueGrid::representatives() const {
  Int reps;
  mpz_pow_ui(reps.get_mpz_t(), p.get_mpz_t(), L);
  return reps.get_ui();
}

unsigned long long ResidueGrid::raw_size() const {
  Int total;
  mpz_ui_pow_ui(total.get_mpz_t(), representatives(), n);
  return total.get_ui();
}

unsigned long long ResidueGrid::size() const {
  Int excluded;
  Int prev;
  mpz_pow_ui(prev.get_mpz_t(), p.get_mpz_t(), L - 1);
  mpz_pow_ui(excluded.get_mpz_t(), prev.get_mpz_t(), n);
  return raw_size() - excluded.get_ui();
}

std::vector<unsigned long long> ResidueGrid::decode(unsigned long long index) const {
  const unsigned long long reps = representatives();
  std::vector<unsigned long long> digits(n);
  for (unsigned i = 0; i < n; ++i) {
    digits[i] = index % reps;
    index /= reps;
  }
  return digits;
}

namespace {

// One expanded column with its denominator cleared: entry_i = nums[i] / den,
// where only v_p(den) matters for valuations.
struct Column {
  std::vector<Int> nums;
  long den_shift = 0;
  Rational weight;
};

struct ColumnSet {
  std::vector<Column> cols;  // all-zero columns dropped
  Rational max_weight;       // over the full expansion
  Int p;
};

ColumnSet make_columns(const ExpandedMatrix& em) {
  ColumnSet out;
  out.p = em.prime;
  out.max_weight = em.max_column_weight();

  const std::size_t n = em.entries.rows();
  for (std::size_t c = 0; c < em.entries.cols(); ++c) {
    Int den = 1;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& e = em.entries.at(i, c);
      if (e == 0) continue;
      nonzero = true;
      Int d;
      mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
      den = d;
    }
    if (!nonzero) continue;
    Column col;
    col.weight = em.column_weights[c];
    col.den_shift = (den == 1) ? 0 : int_valuation(den, em.prime);
    col.nums.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& e = em.entries.at(i, c);
      Int num = Int(e.get_num()) * (den / Int(e.get_den()));
      col.nums.push_back(std::move(num));
    }
    out.cols.push_back(std::move(col));
  }
  return out;
}

// v(sum_i a_i t_i) for one representative tuple.
Valuation combination_valuation(const ColumnSet& cols,
                                const std::vector<unsigned long long>& a, Int& scratch) {
  Valuation best = Valuation::infinity();
  for (const auto& col : cols.cols) {
    scratch = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && col.nums[i] != 0) {
        mpz_addmul_ui(scratch.get_mpz_t(), col.nums[i].get_mpz_t(), a[i]);
      }
    }
    if (scratch == 0) continue;
    Rational v = Rational(int_valuation(scratch, cols.p) - col.den_shift) + col.weight;
    best = min(best, Valuation(std::move(v)));
  }
  return best;
}

// Runs fn(index, digits) over every primitive tuple of the grid, splitting
// the raw index range over the worker pool. Each worker owns a state object;
// states are merged in worker order, so reductions stay deterministic.
template <typename State, typename Fn>
std::vector<State> scan_grid(const ResidueGrid& grid, Fn&& fn) {
  const unsigned long long total = grid.raw_size();
  const unsigned long long p_ull = mpz_get_ui(grid.p.get_mpz_t());
  unsigned workers = oracle_thread_count();
  if (total < 4096 || workers < 2) workers = 1;

  std::vector<State> states(workers);
  auto run = [&](unsigned w, unsigned long long begin, unsigned long long end) {
    auto digits = grid.decode(begin);
    const unsigned long long reps = grid.representatives();
    for (unsigned long long idx = begin; idx < end; ++idx) {
      bool primitive = false;
      for (const auto& d : digits) {
        if (d % p_ull != 0) {
          primitive = true;
          break;
        }
      }
      if (primitive) fn(states[w], idx, digits);
      // odometer step, a_1 fastest
      for (unsigned i = 0; i < digits.size(); ++i) {
        if (++digits[i] < reps) break;
        digits[i] = 0;
      }
    }
  };

  if (workers == 1) {
    run(0, 0, total);
    return states;
  }
  std::vector<std::thread> pool;
  const unsigned long long chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const unsigned long long begin = std::min<unsigned long long>(w * chunk, total);
    const unsigned long long end = std::min<unsigned long long>(begin + chunk, total);
    pool.emplace_back(run, w, begin, end);
  }
  for (auto& t : pool) t.join();
  return states;
}

struct EnumerateState {
  std::set<Rational> values;
  bool unresolved = false;
  unsigned long long visited = 0;
  Int scratch;
};

// Single-precision enumeration; stabilization is judged by the caller.
ValuationSetResult enumerate_at(const std::vector<std::vector<FieldElement>>& t, unsigned L) {
  if (t.empty() || t.front().empty()) {
    throw input_error("enumeration needs at least one nonempty vector");
  }
  const auto em = expand(t);
  const auto cols = make_columns(em);
  const ResidueGrid grid(em.prime, static_cast<unsigned>(t.size()), L);
  const Rational threshold = Rational(static_cast<long>(L)) + cols.max_weight;

  auto states = scan_grid<EnumerateState>(
      grid, [&](EnumerateState& st, unsigned long long, const std::vector<unsigned long long>& a) {
        ++st.visited;
        const Valuation v = combination_valuation(cols, a, st.scratch);
        if (v.is_infinite() || !(v.value() < threshold)) {
          st.unresolved = true;  // truncation of a cannot certify this value
        } else {
          st.values.insert(v.value());
        }
      });

  ValuationSetResult out;
  out.precision = L;
  unsigned long long visited = 0;
  for (auto& st : states) {
    visited += st.visited;
    out.has_unresolved = out.has_unresolved || st.unresolved;
    out.values.merge(st.values);
  }
  if (visited != grid.size()) {
    throw std::logic_error("grid enumeration visited " + std::to_string(visited) +
                           " tuples, expected " + std::to_string(grid.size()));
  }
  return out;
}

}  // namespace

ValuationSetResult enumerate_valuation_set(const std::vector<std::vector<FieldElement>>& t,
                                           unsigned L) {
  ValuationSetResult out = enumerate_at(t, L);
  if (L >= 2 && !out.has_unresolved) {
    out.stabilized = out.values == enumerate_at(t, L - 1).values;
  }
  return out;
}

ValuationSetResult enumerate_valuation_set_auto(const std::vector<std::vector<FieldElement>>& t,
                                                unsigned start, unsigned limit) {
  ValuationSetResult out;
  for (unsigned L = std::max(start, 2u); L <= limit; ++L) {
    out = enumerate_valuation_set(t, L);
    if (out.stabilized) return out;
  }
  return out;
}

FractionalPartsResult fractional_parts(const std::vector<std::vector<FieldElement>>& t,
                                       unsigned start, unsigned limit) {
  const auto enumerated = enumerate_valuation_set_auto(t, start, limit);
  FractionalPartsResult out;
  out.precision = enumerated.precision;
  out.conclusive = enumerated.stabilized;
  const unsigned D = t.front().front().context().D;
  for (const auto& v : enumerated.values) {
    Rational part = fractional_part(v);
    if (Int(D) % part.get_den() != 0) {
      throw std::logic_error("enumerated valuation " + rational_to_string(v) +
                             " lies outside the value group (1/" + std::to_string(D) + ")Z");
    }
    out.parts.insert(std::move(part));
  }
  return out;
}

namespace {

std::vector<Int> primitive_vector(const std::vector<Rational>& v) {
  Int den = 1;
  for (const auto& x : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    den = l;
  }
  std::vector<Int> out;
  out.reserve(v.size());
  Int content = 0;
  for (const auto& x : v) {
    Int e = Int(x.get_num()) * (den / Int(x.get_den()));
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
    content = g;
    out.push_back(std::move(e));
  }
  if (content > 1) {
    for (auto& e : out) e /= content;
  }
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    if (*it == 0) continue;
    if (*it < 0) {
      for (auto& e : out) e = -e;
    }
    break;
  }
  return out;
}

struct ZeroScanState {
  unsigned long long first_zero = ~0ull;
  unsigned long long first_undecided = ~0ull;
  Int scratch;
};

}  // namespace

GridCheckResult verify_injectivity_grid(const SubspaceBasis& basis,
                                        const std::vector<FieldElement>& u, unsigned L) {
  const std::size_t n = basis.dimension();
  const std::size_t r = basis.component_count();

  // Per-element, per-component evaluations; exact for polynomials, polynomial
  // part plus tail floor otherwise.
  bool tailed = false;
  std::vector<std::vector<EvalResult>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& comp : basis.elements[i].components) {
      const auto mode = comp.is_polynomial() ? EvalMode::kExact : EvalMode::kLowerBound;
      tailed = tailed || !comp.is_polynomial();
      values[i].push_back(evaluate(comp, u, mode));
    }
  }

  // Columns and tail floor per component; the floor for a combination with
  // integral coefficients is the minimum of the elements' floors.
  std::vector<ColumnSet> comp_cols;
  std::vector<Valuation> comp_floor;
  std::vector<std::vector<FieldElement>> value_rows(n);
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::vector<FieldElement>> column(n);
    Valuation floor = Valuation::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = {values[i][k].value};
      floor = min(floor, values[i][k].tail_floor);
    }
    comp_cols.push_back(make_columns(expand_support(column)));
    comp_floor.push_back(floor);
    for (std::size_t i = 0; i < n; ++i) value_rows[i].push_back(values[i][k].value);
  }

  const auto value_matrix = expand_support(value_rows);
  const std::size_t value_rank = rank_over_prime_field(value_matrix);
  const ResidueGrid grid(basis.context().p, static_cast<unsigned>(n), L);

  if (!tailed) {
    // Exact case: kernel vectors of the value matrix are exactly the
    // coefficient tuples with f_a(u) = 0, over Q_p just as over Q.
    auto states = scan_grid<ZeroScanState>(
        grid,
        [&](ZeroScanState& st, unsigned long long idx, const std::vector<unsigned long long>& a) {
          for (const auto& cols : comp_cols) {
            for (const auto& col : cols.cols) {
              st.scratch = 0;
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != 0 && col.nums[i] != 0) {
                  mpz_addmul_ui(st.scratch.get_mpz_t(), col.nums[i].get_mpz_t(), a[i]);
                }
              }
              if (st.scratch != 0) return;  // this tuple's value is nonzero
            }
          }
          st.first_zero = std::min(st.first_zero, idx);
        });
    unsigned long long first_zero = ~0ull;
    for (const auto& st : states) first_zero = std::min(first_zero, st.first_zero);

    GridCheckResult out;
    if (value_rank == n) {
      if (first_zero != ~0ull) {
        throw std::logic_error("full-rank value matrix with a vanishing grid combination");
      }
      out.verdict = GridVerdict::kPass;
      return out;
    }
    out.verdict = GridVerdict::kFail;
    if (first_zero != ~0ull) {
      for (const auto& digit : grid.decode(first_zero)) {
        Int coeff;
        mpz_set_ui(coeff.get_mpz_t(), static_cast<unsigned long>(digit));
        out.counterexample.push_back(std::move(coeff));
      }
      out.note = "grid representative with zero value";
    } else {
      const auto kernel = kernel_basis(value_matrix);
      out.counterexample = primitive_vector(kernel.front());
      out.note = "kernel vector of the value matrix";
    }
    return out;
  }

  // Tailed case: only certified nonvanishing counts; nothing can be declared
  // a hard zero, so the outcome is pass or inconclusive.
  GridCheckResult out;
  if (value_rank < n) {
    out.verdict = GridVerdict::kInconclusive;
    out.note = "polynomial parts are dependent at u; tails are undetermined";
    return out;
  }
  auto states = scan_grid<ZeroScanState>(
      grid,
      [&](ZeroScanState& st, unsigned long long idx, const std::vector<unsigned long long>& a) {
        for (std::size_t k = 0; k < comp_cols.size(); ++k) {
          const Valuation v = combination_valuation(comp_cols[k], a, st.scratch);
          if (v < comp_floor[k]) return;  // certified nonzero component
        }
        st.first_undecided = std::min(st.first_undecided, idx);
      });
  unsigned long long first_undecided = ~0ull;
  for (const auto& st : states) first_undecided = std::min(first_undecided, st.first_undecided);
  if (first_undecided != ~0ull) {
    out.verdict = GridVerdict::kInconclusive;
    out.note = "combination with undecidable nonvanishing at grid index " +
               std::to_string(first_undecided);
  } else {
    out.verdict = GridVerdict::kPass;
  }
  return out;
}

namespace {

unsigned lcm_towers(unsigned a, unsigned b) {
  const unsigned long long l = std::lcm<unsigned long long>(a, b);
  if (l > 100000000ull) throw input_error("ramification denominator exceeds desk scale");
  return static_cast<unsigned>(l);
}

bool same_point(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned D = lcm_towers(a[i].context().D, b[i].context().D);
    if (!(a[i].lift_ramification(D) == b[i].lift_ramification(D))) return false;
  }
  return true;
}

}  // namespace

CertificateAudit audit_certificate(const WitnessCertificate& cert) {
  auto fail = [](std::string msg) { return CertificateAudit{false, std::move(msg)}; };
  try {
    const std::size_t n = cert.problem_basis.size();
    const unsigned d = cert.d;

    const SubspaceBasis rebuilt = SubspaceBasis::build(cert.problem_basis);
    if (rebuilt.integrality_exponent != cert.integrality_exponent) {
      return fail("integrality exponent differs from the rebuilt basis");
    }

    std::optional<Rational> ceiling;
    std::vector<FieldElement> expected_center(d, FieldElement::zero(rebuilt.context()));

    for (std::size_t s = 0; s < cert.stages.size(); ++s) {
      const auto& stage = cert.stages[s];
      const std::string tag = "stage " + std::to_string(s) + ": ";
      if (stage.basis.empty()) return fail(tag + "empty stage basis");
      const PrimeContext ctx = stage.basis.front().context();
      if (!(ctx.p == cert.p)) return fail(tag + "stage basis prime differs");
      for (const auto& f : stage.basis) {
        if (f.var_count() != d) return fail(tag + "stage basis variable count differs");
        if (!(Valuation(0) <= f.min_coefficient_valuation())) {
          return fail(tag + "stage basis has a non-integral coefficient");
        }
      }
      if (stage.center.size() != d || stage.witness_offset.size() != d) {
        return fail(tag + "center or witness dimension differs from d");
      }
      if (!same_point(stage.center, expected_center)) {
        return fail(tag + "center is not the accumulated outer witness");
      }

      // the jet order, its monomials, the bound and the region constants
      if (minimal_m(stage.basis) != stage.m) return fail(tag + "m is not minimal");
      if (stage.monomials != monomials_below(stage.m, d)) {
        return fail(tag + "M is not the set of monomials of degree < m");
      }
      std::vector<std::vector<FieldElement>> jets;
      for (const auto& f : stage.basis) jets.push_back(truncate_below(f, stage.m));
      if (valuation_bound(expand_support(jets)) != stage.bound) {
        return fail(tag + "A differs from the recomputed bound");
      }

      const auto& q = stage.region.q;
      if (q.size() != d) return fail(tag + "need one prime per variable");
      for (const auto& qi : q) {
        if (!is_prime(qi)) return fail(tag + "q contains the non-prime " + qi.get_str());
        if (!(qi > stage.m)) return fail(tag + "q contains " + qi.get_str() + " <= m");
        if (Int(ctx.D) % qi == 0) {
          return fail(tag + "q contains " + qi.get_str() + " dividing D");
        }
      }
      if (q != choose_primes(stage.m, ctx.D, d)) {
        return fail(tag + "q differs from the smallest admissible primes");
      }

      const long N = stage.region.N;
      if (N < 1) return fail(tag + "N must be positive");
      for (const auto& qi : q) {
        const Rational lhs = Rational(stage.m) * N;
        const Rational rhs =
            Rational(stage.m - 1) * (Rational(N) + make_rational(1, qi)) + stage.bound;
        if (!(lhs > rhs)) return fail(tag + "N fails its defining inequality");
      }
      if (N != choose_N(stage.m, stage.bound, q, ceiling)) {
        return fail(tag + "N is not the minimal admissible choice");
      }

      unsigned long long dw = ctx.D;
      for (const auto& qi : q) dw *= qi.get_ui();
      if (stage.region.witness_denominator != dw) {
        return fail(tag + "witness tower is not D * q_1 * ... * q_d");
      }

      // canonical witness offset p^{N + 1/q_i}
      const PrimeContext tower(cert.p, stage.region.witness_denominator);
      const Rational shift = int_power(cert.p, N);
      for (unsigned i = 0; i < d; ++i) {
        const unsigned j = stage.region.witness_denominator / q[i].get_ui();
        const auto expected = FieldElement::from_terms(tower, {{j, shift}});
        if (!(stage.witness_offset[i] == expected)) {
          return fail(tag + "witness offset is not the canonical torus point");
        }
      }

      // the valuation table, recomputed through field arithmetic
      if (stage.valuation_table.size() != stage.basis.size()) {
        return fail(tag + "valuation table has the wrong number of rows");
      }
      const Rational mn = Rational(stage.m) * N;
      for (std::size_t i = 0; i < stage.basis.size(); ++i) {
        const auto& row = stage.valuation_table[i];
        if (row.size() != stage.monomials.size()) {
          return fail(tag + "valuation table row " + std::to_string(i) + " has the wrong size");
        }
        std::vector<Rational> finite;
        bool head_below = false;
        for (std::size_t k = 0; k < stage.monomials.size(); ++k) {
          const auto& mon = stage.monomials[k];
          const FieldElement c = stage.basis[i].coefficient(mon);
          Valuation recomputed = Valuation::infinity();
          if (!c.is_zero()) {
            FieldElement term = c.lift_ramification(tower.D);
            for (unsigned v = 0; v < d; ++v) {
              for (unsigned e = 0; e < mon[v]; ++e) term = term * stage.witness_offset[v];
            }
            recomputed = term.valuation();
          }
          if (!(recomputed == row[k])) {
            return fail(tag + "valuation table entry (" + std::to_string(i) + ", " +
                        std::to_string(k) + ") does not recompute");
          }
          if (recomputed.is_infinite()) continue;
          const Rational& val = recomputed.value();
          if (std::find(finite.begin(), finite.end(), val) != finite.end()) {
            return fail(tag + "valuation table row " + std::to_string(i) +
                        " has colliding entries");
          }
          finite.push_back(val);
          if (val < mn) head_below = true;

          // each exponent is recoverable from the valuation's q_i-part
          for (unsigned v = 0; v < d; ++v) {
            const unsigned long qv = q[v].get_ui();
            unsigned hits = 0;
            unsigned recovered = 0;
            for (unsigned long e = 0; e < qv; ++e) {
              Rational diff = val - make_rational(e, qv);
              if (Int(diff.get_den()) % q[v] != 0) {
                ++hits;
                recovered = static_cast<unsigned>(e);
              }
            }
            if (hits != 1 || recovered != mon[v]) {
              return fail(tag + "exponent of variable " + std::to_string(v + 1) +
                          " is not recoverable from the valuation");
            }
          }
        }
        if (!head_below) {
          return fail(tag + "element " + std::to_string(i) +
                      " has no head monomial below m*N");
        }
        // stored monomials of degree >= m stay at or above m*N
        for (const auto& [mon, c] : stage.basis[i].terms()) {
          if (total_degree(mon) < stage.m) continue;
          FieldElement term = c.lift_ramification(tower.D);
          for (unsigned v = 0; v < d; ++v) {
            for (unsigned e = 0; e < mon[v]; ++e) term = term * stage.witness_offset[v];
          }
          if (term.valuation() < Valuation(mn)) {
            return fail(tag + "a degree >= m monomial falls below m*N");
          }
        }
      }

      // chain the centers and the constraint ceiling
      const unsigned D_next = stage.region.witness_denominator;
      std::vector<FieldElement> next_center;
      for (unsigned i = 0; i < d; ++i) {
        next_center.push_back(expected_center[i].lift_ramification(
                                  lcm_towers(expected_center[i].context().D, D_next)) +
                              stage.witness_offset[i].lift_ramification(
                                  lcm_towers(expected_center[i].context().D, D_next)));
      }
      expected_center = std::move(next_center);
      ceiling = stage.region.ceiling();
    }

    if (!same_point(cert.witness, expected_center)) {
      return fail("witness is not the sum of the stage offsets");
    }

    // final rank check over the scaled problem basis at the witness
    unsigned D_final = cert.witness.front().context().D;
    for (const auto& e : rebuilt.elements) D_final = lcm_towers(D_final, e.context().D);
    std::vector<std::vector<FieldElement>> value_rows;
    for (const auto& e : rebuilt.elements) {
      std::vector<FieldElement> row;
      for (const auto& comp : e.components) {
        const auto mode = comp.is_polynomial() ? EvalMode::kExact : EvalMode::kLowerBound;
        row.push_back(
            evaluate(comp.lift_ramification(D_final), cert.witness, mode).value);
      }
      value_rows.push_back(std::move(row));
    }
    const std::size_t recomputed_rank = rank_over_prime_field(expand_support(value_rows));
    if (recomputed_rank != cert.rank_check) {
      return fail("rank check does not recompute: " + std::to_string(recomputed_rank) +
                  " != " + std::to_string(cert.rank_check));
    }
    if (recomputed_rank != n) {
      return fail("value matrix rank " + std::to_string(recomputed_rank) +
                  " is below the dimension " + std::to_string(n));
    }
    return CertificateAudit{true, ""};
  } catch (const error& e) {
    return fail(e.what());
  } catch (const std::domain_error& e) {
    return fail(e.what());
  }
}

CertificateAudit verify_certificate(const Json& cert_json) {
  const WitnessCertificate cert = certificate_from_json(cert_json);
  CertificateAudit audit = audit_certificate(cert);
  if (!audit.pass) return audit;

  // The pipeline is deterministic, so the certificate must coincide with the
  // one regenerated from its own problem; any tampered field surfaces here.
  try {
    const SubspaceBasis basis = SubspaceBasis::build(cert.problem_basis);
    auto [chain, regenerated] = solve(basis);
    if (certificate_to_json(regenerated) != cert_json) {
      return CertificateAudit{false, "certificate differs from its deterministic regeneration"};
    }
  } catch (const error& e) {
    return CertificateAudit{false, e.what()};
  }
  return CertificateAudit{true, ""};
}

}  // namespace padic
