#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "padic/witness.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

/// A problem file: the subspace basis plus oracle options. All rationals in
/// the wire format are decimal strings; nothing is ever a float.
struct Problem {
  Int p = 2;
  unsigned D = 1;
  unsigned d = 1;
  unsigned r = 1;
  std::vector<SeriesVector> basis;
  unsigned precision = 3;

  PrimeContext context() const { return PrimeContext(p, D); }
};

Json field_element_to_json(const FieldElement& x);
FieldElement field_element_from_json(const Json& j, const std::string& path);

Json series_to_json(const TruncatedSeries& f);
/// `ambient` fixes the tower for term-free (zero) series and is enforced on
/// every coefficient when supplied.
TruncatedSeries series_from_json(const Json& j, const std::string& path,
                                 const PrimeContext* ambient = nullptr);

Json problem_to_json(const Problem& problem);
Problem problem_from_json(const Json& j);

Json stage_to_json(const StageCertificate& stage);
StageCertificate stage_from_json(const Json& j, const std::string& path);

Json certificate_to_json(const WitnessCertificate& cert);
WitnessCertificate certificate_from_json(const Json& j);

/// The `analyze` view: constants and regions only, no witness. Flat object
/// for r=1 problems, {"stages":[...]} for deeper inductions.
Json analysis_to_json(const WitnessCertificate& cert);

/// Input for the valuation-set enumeration: {"p":..,"D":..,"vectors":[[..]]}.
std::vector<std::vector<FieldElement>> valset_vectors_from_json(const Json& j);

/// Problem equality as parsed values (the certificate echoes its problem).
bool same_problem(const Problem& a, const Problem& b);

}  // namespace padic
