#pragma once

#include <set>
#include <string>
#include <vector>

#include "padic/json_io.hpp"
#include "padic/witness.hpp"

namespace padic {

/// Enumerates coefficient tuples a in {0,...,p^L-1}^n with at least one
/// coordinate not divisible by p: the residue classes of (Z_p)^n - (p Z_p)^n
/// at precision L, each exactly once. Iteration order is the odometer with
/// a_1 varying fastest.
struct ResidueGrid {
  Int p;
  unsigned n = 1;
  unsigned L = 1;

  ResidueGrid(Int prime, unsigned coords, unsigned precision);

  /// p^{Ln} - p^{(L-1)n}, the number of enumerated tuples.
  unsigned long long size() const;
  /// p^{Ln}, the raw odometer range.
  unsigned long long raw_size() const;
  /// p^L.
  unsigned long long representatives() const;

  /// Digits of a raw index; the tuple is skipped iff all are divisible by p.
  std::vector<unsigned long long> decode(unsigned long long index) const;
};

/// Valuations v(sum a_i t_i) observed over a residue grid. A representative
/// only certifies its valuation below L + max column weight; anything at or
/// above that threshold (including exact zeros) is counted as unresolved
/// because a is only known mod p^L. `stabilized` means the resolved set
/// matches the one at precision L-1 and nothing was unresolved.
struct ValuationSetResult {
  std::set<Rational> values;
  bool has_unresolved = false;
  bool stabilized = false;
  unsigned precision = 0;
};

ValuationSetResult enumerate_valuation_set(const std::vector<std::vector<FieldElement>>& t,
                                           unsigned L);

/// Escalates the precision from `start` until the enumeration stabilizes,
/// giving up at `limit` (the result then has stabilized == false).
ValuationSetResult enumerate_valuation_set_auto(const std::vector<std::vector<FieldElement>>& t,
                                                unsigned start = 3, unsigned limit = 6);

/// The enumerated valuations reduced mod 1. Conclusive only on a stabilized
/// enumeration; always a subset of {j/D} for inputs from K_D.
struct FractionalPartsResult {
  std::set<Rational> parts;
  bool conclusive = false;
  unsigned precision = 0;
};

FractionalPartsResult fractional_parts(const std::vector<std::vector<FieldElement>>& t,
                                       unsigned start = 3, unsigned limit = 6);

enum class GridVerdict { kPass, kFail, kInconclusive };

/// Outcome of the brute-force injectivity check at a point.
///
/// With exactly evaluable bases the verdict is exact: injectivity over Q_p
/// is equivalent to full rank of the expanded value matrix, so a failure
/// comes with a primitive integer counterexample (signed; the grid-order-
/// minimal exact zero among grid representatives when one exists, otherwise
/// a kernel vector of the value matrix, normalized so its last nonzero
/// entry is positive). Tailed bases can come back inconclusive when some
/// combination's nonvanishing is undecidable from the polynomial part;
/// an inconclusive scan is never reported as a pass.
struct GridCheckResult {
  GridVerdict verdict = GridVerdict::kInconclusive;
  std::vector<Int> counterexample;  // nonempty iff verdict == kFail
  std::string note;
};

GridCheckResult verify_injectivity_grid(const SubspaceBasis& basis,
                                        const std::vector<FieldElement>& u, unsigned L);

/// Certificate re-verification from parsed data: structural soundness
/// (primality, divisibility and size of the q_i, the defining inequality of
/// N, the monomial set, integral stage coefficients, the canonical witness
/// form, every valuation-table entry recomputed through field arithmetic,
/// distinctness and exponent recovery, region containment of the chained
/// centers, and the final rank check).
struct CertificateAudit {
  bool pass = false;
  std::string failure;  // empty on pass
};

CertificateAudit audit_certificate(const WitnessCertificate& cert);

/// Full JSON-level verification: the structural audit above plus an exact
/// comparison against the certificate regenerated from the embedded problem
/// (the pipeline is deterministic, so any tampered field shows up).
/// Malformed JSON throws parse_error.
CertificateAudit verify_certificate(const Json& cert_json);

/// Worker count for grid scans: hardware concurrency, capped by the
/// PADIC_WITNESS_THREADS environment variable when set.
unsigned oracle_thread_count();

}  // namespace padic
