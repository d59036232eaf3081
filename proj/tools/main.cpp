// Command-line front end: analyze | witness | verify | valset.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 schema or parse
// problem, 3 dependent basis, 4 truncation too shallow, 5 inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "padic/errors.hpp"
#include "padic/json_io.hpp"
#include "padic/oracle.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSchema = 2;
constexpr int kExitDependent = 3;
constexpr int kExitTruncation = 4;
constexpr int kExitInconclusive = 5;

struct Output {
  std::string path;  // empty means stdout
  bool quiet = false;

  void emit(const padic::Json& j) const {
    if (path.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw padic::input_error("cannot write to " + path);
    out << j.dump(2) << "\n";
  }

  void info(const std::string& msg) const {
    if (!quiet) std::cerr << msg << "\n";
  }
};

std::string line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

padic::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw padic::input_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return padic::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw padic::parse_error(path + " (" + line_of_offset(text, e.byte) + "): " + e.what());
  }
}

padic::SubspaceBasis basis_of(const padic::Problem& problem) {
  return padic::SubspaceBasis::build(problem.basis);
}

int run_analyze(const std::string& path, const Output& out) {
  const padic::Problem problem = padic::problem_from_json(load_json(path));
  auto [chain, cert] = padic::solve(basis_of(problem));
  out.emit(padic::analysis_to_json(cert));
  return kExitPass;
}

int run_witness(const std::string& path, const Output& out) {
  const padic::Problem problem = padic::problem_from_json(load_json(path));
  auto [chain, cert] = padic::solve(basis_of(problem));
  out.emit(padic::certificate_to_json(cert));
  return kExitPass;
}

int run_verify(const std::string& cert_path, const std::string& problem_path,
               const Output& out) {
  const padic::Json cert_json = load_json(cert_path);
  const padic::WitnessCertificate cert = padic::certificate_from_json(cert_json);

  padic::Problem from_cert;
  from_cert.p = cert.p;
  from_cert.D = cert.D;
  from_cert.d = cert.d;
  from_cert.r = cert.r;
  from_cert.basis = cert.problem_basis;
  const padic::Problem stated = padic::problem_from_json(load_json(problem_path));
  if (!padic::same_problem(from_cert, stated)) {
    out.info("verify: certificate speaks about a different problem");
    return kExitFail;
  }

  const auto audit = padic::verify_certificate(cert_json);
  if (!audit.pass) {
    out.info("verify: " + audit.failure);
    return kExitFail;
  }
  out.info("verify: certificate is valid");
  return kExitPass;
}

int run_valset(const std::string& path, int precision, const Output& out) {
  const padic::Json input = load_json(path);
  const auto vectors = padic::valset_vectors_from_json(input);

  padic::ValuationSetResult result;
  if (precision > 0) {
    result = padic::enumerate_valuation_set(vectors, static_cast<unsigned>(precision));
  } else {
    result = padic::enumerate_valuation_set_auto(vectors);
  }

  padic::Json set = padic::Json::array();
  for (const auto& v : result.values) set.push_back(padic::rational_to_string(v));
  out.emit({{"set", std::move(set)}, {"stabilized", result.stabilized}});
  return result.stabilized ? kExitPass : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact witness construction for p-adic evaluation injectivity"};
  app.require_subcommand(1);
  app.fallthrough();  // --output/--quiet may follow the subcommand

  Output out;
  app.add_option("--output", out.path, "Write the result JSON to a file instead of stdout");
  app.add_flag("--quiet", out.quiet, "Suppress diagnostic messages on stderr");

  std::string problem_path;
  std::string cert_path;
  int precision = 0;

  auto* analyze = app.add_subcommand("analyze", "Constants and region, no witness");
  analyze->add_option("problem", problem_path, "Problem JSON file")->required();

  auto* witness = app.add_subcommand("witness", "Full certificate with the witness point");
  witness->add_option("problem", problem_path, "Problem JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate against a problem");
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();
  verify->add_option("problem", problem_path, "Problem JSON file")->required();

  auto* valset = app.add_subcommand("valset", "Enumerate the valuation set of vectors");
  valset->add_option("vectors", problem_path, "Vector JSON file")->required();
  valset->add_option("--precision", precision, "Residue grid precision L (default: escalate 3..6)")
      ->check(CLI::Range(1, 8));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(problem_path, out);
    if (witness->parsed()) return run_witness(problem_path, out);
    if (verify->parsed()) return run_verify(cert_path, problem_path, out);
    return run_valset(problem_path, precision, out);
  } catch (const padic::dependent_basis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDependent;
  } catch (const padic::not_independent_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDependent;
  } catch (const padic::truncation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const padic::error& e) {
    // parse, schema, mode and region problems all stem from the input file
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSchema;
  }
}
