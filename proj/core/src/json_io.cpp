#include "padic/json_io.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw parse_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(path + ": missing field \"" + key + "\"");
  return *it;
}

long get_integer(const Json& j, const char* key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_number_integer()) {
    throw parse_error(path + "." + key + ": expected an integer");
  }
  return v.get<long>();
}

unsigned get_unsigned(const Json& j, const char* key, const std::string& path) {
  const long v = get_integer(j, key, path);
  if (v < 0) throw parse_error(path + "." + key + ": expected a nonnegative integer");
  return static_cast<unsigned>(v);
}

// Arbitrary-precision integers travel as decimal strings; small plain JSON
// integers are accepted on input.
Int get_bigint(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_string()) {
    Int out;
    if (mpz_set_str(out.get_mpz_t(), v.get<std::string>().c_str(), 10) != 0) {
      throw parse_error(path + ": malformed integer \"" + v.get<std::string>() + "\"");
    }
    return out;
  }
  throw parse_error(path + ": expected an integer or a decimal string");
}

Rational get_rational_string(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw parse_error(path + ": expected a rational as \"num/den\" string");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const input_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

const Json& get_array(const Json& j, const char* key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_array()) throw parse_error(path + "." + key + ": expected an array");
  return v;
}

Monomial monomial_from_json(const Json& v, const std::string& path) {
  if (!v.is_array()) throw parse_error(path + ": expected an exponent array");
  Monomial m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& e = v[i];
    if (!e.is_number_integer() || e.get<long>() < 0) {
      throw parse_error(path + "[" + std::to_string(i) + "]: expected a nonnegative exponent");
    }
    m.push_back(static_cast<unsigned>(e.get<long>()));
  }
  return m;
}

Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  for (unsigned e : m) out.push_back(e);
  return out;
}

std::vector<FieldElement> point_from_json(const Json& arr, const std::string& path) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(field_element_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json point_to_json(const std::vector<FieldElement>& u) {
  Json out = Json::array();
  for (const auto& x : u) out.push_back(field_element_to_json(x));
  return out;
}

}  // namespace

Json field_element_to_json(const FieldElement& x) {
  Json terms = Json::array();
  for (const auto& [j, a] : x.coords()) {
    terms.push_back({{"j", j},
                     {"num", a.get_num().get_str()},
                     {"den", a.get_den().get_str()}});
  }
  return {{"p", x.context().p.get_si()},
          {"D", x.context().D},
          {"terms", std::move(terms)}};
}

FieldElement field_element_from_json(const Json& j, const std::string& path) {
  const Int p = get_bigint(require(j, "p", path), path + ".p");
  const unsigned D = get_unsigned(j, "D", path);
  PrimeContext ctx(p, D);

  const Json& terms = get_array(j, "terms", path);
  std::vector<std::pair<unsigned, Rational>> parsed;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    const unsigned idx = get_unsigned(t, "j", tpath);
    if (idx >= D) {
      throw parse_error(tpath + ".j: ramification index " + std::to_string(idx) +
                        " out of range for D=" + std::to_string(D));
    }
    const Int num = get_bigint(require(t, "num", tpath), tpath + ".num");
    const Int den = get_bigint(require(t, "den", tpath), tpath + ".den");
    if (den == 0) throw parse_error(tpath + ".den: zero denominator");
    parsed.emplace_back(idx, make_rational(num, den));
  }
  return FieldElement::from_terms(ctx, parsed);
}

Json series_to_json(const TruncatedSeries& f) {
  Json tail;
  if (f.tail_degree()) {
    tail = {{"kind", "integral"}, {"T", *f.tail_degree()}};
  } else {
    tail = {{"kind", "none"}};
  }
  Json terms = Json::array();
  for (const auto& [mon, c] : f.terms()) {
    terms.push_back({{"exp", monomial_to_json(mon)}, {"coeff", field_element_to_json(c)}});
  }
  return {{"d", f.var_count()}, {"tail", std::move(tail)}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const Json& j, const std::string& path,
                                 const PrimeContext* ambient) {
  const unsigned d = get_unsigned(j, "d", path);
  if (d == 0) throw parse_error(path + ".d: need at least one variable");

  std::optional<unsigned> tail_degree;
  const Json& tail = require(j, "tail", path);
  const Json& kind = require(tail, "kind", path + ".tail");
  if (!kind.is_string()) throw parse_error(path + ".tail.kind: expected a string");
  if (kind.get<std::string>() == "integral") {
    tail_degree = get_unsigned(tail, "T", path + ".tail");
  } else if (kind.get<std::string>() != "none") {
    throw parse_error(path + ".tail.kind: expected \"none\" or \"integral\"");
  }

  const Json& terms = get_array(j, "terms", path);
  std::vector<std::pair<Monomial, FieldElement>> parsed;
  std::optional<PrimeContext> ctx;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tpath = path + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    Monomial mon = monomial_from_json(require(t, "exp", tpath), tpath + ".exp");
    if (mon.size() != d) {
      throw parse_error(tpath + ".exp: length " + std::to_string(mon.size()) +
                        " does not match d=" + std::to_string(d));
    }
    FieldElement c = field_element_from_json(require(t, "coeff", tpath), tpath + ".coeff");
    if (ambient != nullptr && !(c.context() == *ambient)) {
      throw parse_error(tpath + ".coeff: tower differs from the ambient (p, D)");
    }
    if (!ctx) ctx = c.context();
    parsed.emplace_back(std::move(mon), std::move(c));
  }
  if (!ctx && ambient != nullptr) ctx = *ambient;
  if (!ctx) {
    throw parse_error(path + ": a series with no terms needs an ambient field");
  }
  try {
    return TruncatedSeries::from_terms(*ctx, d, parsed, tail_degree);
  } catch (const error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

Json problem_to_json(const Problem& problem) {
  Json basis = Json::array();
  for (const auto& e : problem.basis) {
    Json comps = Json::array();
    for (const auto& c : e.components) comps.push_back(series_to_json(c));
    basis.push_back({{"components", std::move(comps)}});
  }
  return {{"p", problem.p.get_si()},
          {"D", problem.D},
          {"d", problem.d},
          {"r", problem.r},
          {"basis", std::move(basis)},
          {"options", {{"precision", problem.precision}}}};
}

Problem problem_from_json(const Json& j) {
  Problem out;
  out.p = get_bigint(require(j, "p", "problem"), "problem.p");
  out.D = get_unsigned(j, "D", "problem");
  out.d = get_unsigned(j, "d", "problem");
  out.r = get_unsigned(j, "r", "problem");
  if (out.r == 0) throw parse_error("problem.r: need at least one component");
  if (out.d == 0) throw parse_error("problem.d: need at least one variable");
  PrimeContext ctx = [&] {
    try {
      return out.context();
    } catch (const input_error& e) {
      throw parse_error(std::string("problem: ") + e.what());
    }
  }();

  const Json& basis = get_array(j, "basis", "problem");
  if (basis.empty()) throw parse_error("problem.basis: need at least one element");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string epath = "problem.basis[" + std::to_string(i) + "]";
    const Json& comps = get_array(basis[i], "components", epath);
    if (comps.size() != out.r) {
      throw parse_error(epath + ".components: expected r=" + std::to_string(out.r) +
                        " components, got " + std::to_string(comps.size()));
    }
    std::vector<TruncatedSeries> parsed;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      auto f =
          series_from_json(comps[k], epath + ".components[" + std::to_string(k) + "]", &ctx);
      if (f.var_count() != out.d) {
        throw parse_error(epath + ".components[" + std::to_string(k) + "].d: expected d=" +
                          std::to_string(out.d));
      }
      parsed.push_back(std::move(f));
    }
    out.basis.emplace_back(std::move(parsed));
  }

  if (j.contains("options")) {
    const Json& opts = j["options"];
    if (!opts.is_object()) throw parse_error("problem.options: expected an object");
    if (opts.contains("precision")) {
      out.precision = get_unsigned(opts, "precision", "problem.options");
      if (out.precision < 1 || out.precision > 8) {
        throw parse_error("problem.options.precision: expected 1 <= L <= 8");
      }
    }
  }
  return out;
}

Json stage_to_json(const StageCertificate& stage) {
  Json basis = Json::array();
  for (const auto& f : stage.basis) basis.push_back(series_to_json(f));
  Json monomials = Json::array();
  for (const auto& m : stage.monomials) monomials.push_back(monomial_to_json(m));
  Json qs = Json::array();
  for (const auto& q : stage.region.q) qs.push_back(q.get_si());
  Json vals = Json::array();
  for (const auto& v : stage.region.valuations()) vals.push_back(rational_to_string(v));
  Json table = Json::array();
  for (const auto& row : stage.valuation_table) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(v.to_string());
    table.push_back(std::move(jrow));
  }
  return {{"center", point_to_json(stage.center)},
          {"basis", std::move(basis)},
          {"scale_exponent", stage.scale_exponent},
          {"m", stage.m},
          {"M", std::move(monomials)},
          {"A", rational_to_string(stage.bound)},
          {"q", std::move(qs)},
          {"N", stage.region.N},
          {"region",
           {{"D_witness", stage.region.witness_denominator}, {"valuations", std::move(vals)}}},
          {"witness_offset", point_to_json(stage.witness_offset)},
          {"valuation_table", std::move(table)}};
}

StageCertificate stage_from_json(const Json& j, const std::string& path) {
  StageCertificate out;
  out.center = point_from_json(get_array(j, "center", path), path + ".center");
  const Json& basis = get_array(j, "basis", path);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.basis.push_back(series_from_json(basis[i], path + ".basis[" + std::to_string(i) + "]"));
  }
  out.scale_exponent = get_integer(j, "scale_exponent", path);
  out.m = get_unsigned(j, "m", path);
  const Json& monomials = get_array(j, "M", path);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    out.monomials.push_back(
        monomial_from_json(monomials[i], path + ".M[" + std::to_string(i) + "]"));
  }
  out.bound = get_rational_string(require(j, "A", path), path + ".A");
  const Json& qs = get_array(j, "q", path);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out.region.q.push_back(get_bigint(qs[i], path + ".q[" + std::to_string(i) + "]"));
  }
  out.region.N = get_integer(j, "N", path);
  const Json& region = require(j, "region", path);
  out.region.witness_denominator = get_unsigned(region, "D_witness", path + ".region");
  // region.valuations is derived data; checked against N and q by the auditor
  out.witness_offset =
      point_from_json(get_array(j, "witness_offset", path), path + ".witness_offset");
  const Json& table = get_array(j, "valuation_table", path);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Json& row = table[i];
    const std::string rpath = path + ".valuation_table[" + std::to_string(i) + "]";
    if (!row.is_array()) throw parse_error(rpath + ": expected an array");
    std::vector<Valuation> parsed;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_string()) {
        throw parse_error(rpath + "[" + std::to_string(k) + "]: expected a valuation string");
      }
      try {
        parsed.push_back(Valuation::from_string(row[k].get<std::string>()));
      } catch (const input_error& e) {
        throw parse_error(rpath + "[" + std::to_string(k) + "]: " + e.what());
      }
    }
    out.valuation_table.push_back(std::move(parsed));
  }
  return out;
}

Json certificate_to_json(const WitnessCertificate& cert) {
  Problem echo;
  echo.p = cert.p;
  echo.D = cert.D;
  echo.d = cert.d;
  echo.r = cert.r;
  echo.basis = cert.problem_basis;
  Json problem = problem_to_json(echo);
  problem.erase("options");

  Json stages = Json::array();
  for (const auto& s : cert.stages) stages.push_back(stage_to_json(s));
  return {{"problem", std::move(problem)},
          {"n", cert.problem_basis.size()},
          {"integrality_exponent", cert.integrality_exponent},
          {"stages", std::move(stages)},
          {"witness", point_to_json(cert.witness)},
          {"rank_check", cert.rank_check}};
}

WitnessCertificate certificate_from_json(const Json& j) {
  const Json& problem_json = require(j, "problem", "certificate");
  Problem problem = problem_from_json(problem_json);

  WitnessCertificate out;
  out.p = problem.p;
  out.D = problem.D;
  out.d = problem.d;
  out.r = problem.r;
  out.problem_basis = problem.basis;
  out.integrality_exponent = get_integer(j, "integrality_exponent", "certificate");

  const std::size_t n = get_unsigned(j, "n", "certificate");
  if (n != out.problem_basis.size()) {
    throw parse_error("certificate.n: claims " + std::to_string(n) + " but the problem has " +
                      std::to_string(out.problem_basis.size()) + " basis elements");
  }

  const Json& stages = get_array(j, "stages", "certificate");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    out.stages.push_back(
        stage_from_json(stages[i], "certificate.stages[" + std::to_string(i) + "]"));
  }
  if (out.stages.empty()) throw parse_error("certificate.stages: need at least one stage");
  out.witness = point_from_json(get_array(j, "witness", "certificate"), "certificate.witness");
  if (out.witness.size() != out.d) {
    throw parse_error("certificate.witness: expected d=" + std::to_string(out.d) +
                      " coordinates");
  }
  out.rank_check = get_unsigned(j, "rank_check", "certificate");
  return out;
}

Json analysis_to_json(const WitnessCertificate& cert) {
  auto stage_view = [](const StageCertificate& s) -> Json {
    Json monomials = Json::array();
    for (const auto& m : s.monomials) monomials.push_back(monomial_to_json(m));
    Json qs = Json::array();
    for (const auto& q : s.region.q) qs.push_back(q.get_si());
    Json vals = Json::array();
    for (const auto& v : s.region.valuations()) vals.push_back(rational_to_string(v));
    return {{"m", s.m},
            {"M", std::move(monomials)},
            {"A", rational_to_string(s.bound)},
            {"q", std::move(qs)},
            {"N", s.region.N},
            {"region",
             {{"D_witness", s.region.witness_denominator}, {"valuations", std::move(vals)}}}};
  };
  if (cert.r == 1 && cert.stages.size() == 1) return stage_view(cert.stages.front());
  Json stages = Json::array();
  for (const auto& s : cert.stages) stages.push_back(stage_view(s));
  return {{"stages", std::move(stages)}};
}

std::vector<std::vector<FieldElement>> valset_vectors_from_json(const Json& j) {
  const Int p = get_bigint(require(j, "p", "valset"), "valset.p");
  const unsigned D = get_unsigned(j, "D", "valset");
  PrimeContext ctx = [&] {
    try {
      return PrimeContext(p, D);
    } catch (const input_error& e) {
      throw parse_error(std::string("valset: ") + e.what());
    }
  }();

  const Json& vectors = get_array(j, "vectors", "valset");
  if (vectors.empty()) throw parse_error("valset.vectors: need at least one vector");
  std::vector<std::vector<FieldElement>> out;
  std::size_t width = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::string vpath = "valset.vectors[" + std::to_string(i) + "]";
    if (!vectors[i].is_array() || vectors[i].empty()) {
      throw parse_error(vpath + ": expected a nonempty array of field elements");
    }
    auto vec = point_from_json(vectors[i], vpath);
    for (const auto& x : vec) {
      if (!(x.context() == ctx)) throw parse_error(vpath + ": element tower differs");
    }
    if (i == 0) {
      width = vec.size();
    } else if (vec.size() != width) {
      throw parse_error(vpath + ": vectors of unequal length");
    }
    out.push_back(std::move(vec));
  }
  return out;
}

bool same_problem(const Problem& a, const Problem& b) {
  return a.p == b.p && a.D == b.D && a.d == b.d && a.r == b.r && a.basis == b.basis;
}

}  // namespace padic
