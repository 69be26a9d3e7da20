// Command-line front end: build, verify, unitize-scan, peirce.
#include <cctype>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "calg/construction2.hpp"
#include "calg/json_io.hpp"

namespace {

using namespace calg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kSupportedList =
    "supported types: A1-A4, B2-B4, C2-C4, D3-D4, G2, F4, and E6 behind --e6";

RootSystemSpec parse_gated_type(const std::string& type, bool allowE6) {
  RootSystemSpec s;
  try {
    s = RootSystemSpec::parse(type);
    validate_spec(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "; " + kSupportedList);
  }
  if (s.family == 'E') {
    if (s.rank >= 7)
      throw UsageError("type " + s.name() +
                       " is beyond desk-scale capacity: its Sym^2 basis is too large for an "
                       "exhaustive exact build; " +
                       kSupportedList);
    if (!allowE6) throw UsageError("type E6 is a long build; rerun with --e6 to opt in");
  } else if (s.rank > 4) {
    throw UsageError("type " + s.name() + " exceeds the rank gate; " + kSupportedList);
  }
  return s;
}

AlgebraTable build_pipeline(const RootSystemSpec& spec) {
  RootDatum d = build_root_system(spec);
  LieAlgebra L = build_chevalley(d);
  return build_basis(L);
}

std::vector<Rat> parse_candidates(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string trimmed;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) continue;
    try {
      out.push_back(rat_parse(trimmed));
    } catch (const std::exception&) {
      throw UsageError("cannot parse candidate rational '" + trimmed + "'");
    }
  }
  return out;
}

int cmd_build(const std::string& type, std::uint64_t seed, std::string out, bool allowE6) {
  RootSystemSpec spec = parse_gated_type(type, allowE6);
  AlgebraTable t = build_pipeline(spec);
  structure_table(t);
  tau_gram(t);
  if (out.empty()) out = spec.name() + "_algebra.json";
  write_text_file(out, algebra_json(t, seed).dump(1) + "\n");
  std::cout << "wrote " << out << " (type " << spec.name() << ", dimA " << t.dimA << ")\n";
  return kExitOk;
}

/// Representation-based checks appended to the verify report: validation of
/// the matrices, the projection identity, and for A2 the explicit 3x3-model
/// product transported through sigma, entry for entry.
void rep_checks(AlgebraTable& t, const Representation& rep, int samples, std::uint64_t seed,
                VerificationReport& out) {
  out.checks.push_back(
      {"rep_validate", Status::pass,
       "dimV " + std::to_string(rep.dimV) + ", trace ratio " + rat_str(rep.traceRatio)});
  bool ok = check_pi_proj(t.lie, rep, samples, seed);
  out.checks.push_back({"pi_proj", ok ? Status::pass : Status::fail,
                        std::to_string(samples) + " sampled (X, Y) pairs"});
  if (rep.dimV == 3 && t.lie.datum.spec.family == 'A' && t.lie.datum.rank == 2) {
    if (t.prodConst.empty()) structure_table(t);
    bool match = true;
    for (int a = 0; a < t.dimA && match; ++a)
      for (int b = 0; b < t.dimA && match; ++b) {
        Mat lhs = sl3_model_product(sigma(t.lie, rep, t.basisPre[a]),
                                    sigma(t.lie, rep, t.basisPre[b]));
        Mat rhs = sigma(t.lie, rep, t.preimage(t.prodConst[a][b]));
        if (!(lhs == rhs)) match = false;
      }
    out.checks.push_back({"model_product", match ? Status::pass : Status::fail,
                          "3x3 model table vs transported structure constants, all basis pairs"});
  }
}

int cmd_verify(const std::string& type, std::uint64_t seed, int samples, bool exhaustive,
               const std::string& out, const std::string& repPath, bool allowE6) {
  RootSystemSpec spec = parse_gated_type(type, allowE6);
  AlgebraTable t = build_pipeline(spec);
  VerificationReport rep = run_verification(t, seed, exhaustive, samples);
  if (!repPath.empty()) {
    Representation r = load_rep(repPath, t.lie);
    rep_checks(t, r, std::min(samples, 10), seed + 4, rep);
  } else if (spec.family == 'A' && spec.rank == 2) {
    rep_checks(t, natural_rep_sl3(t.lie), std::min(samples, 10), seed + 4, rep);
  }
  std::cout << report_text(rep);
  if (!out.empty()) write_text_file(out, report_json(rep).dump(1) + "\n");
  return rep.failed() ? kExitCheckFailure : kExitOk;
}

int cmd_unitize_scan(const std::string& in, const std::string& candidatesCsv, int samples,
                     std::uint64_t seed) {
  LoadedAlgebra a = load_algebra(in);
  UnitizedAlgebra u = split_loaded(a);
  std::vector<Rat> candidates = parse_candidates(candidatesCsv);
  std::string diag;
  std::vector<std::pair<Rat, Vec>> witnesses;
  std::vector<Rat> survivors = unique_c_scan(u, candidates, samples, seed, &diag, &witnesses);
  std::cout << "unitize scan: " << in << " (type " << a.type << ", dimV " << u.dimV << "), seed "
            << seed << "\n";
  for (const auto& [c, w] : witnesses) {
    std::cout << "  eliminated c = " << rat_str(c) << " by witness [";
    for (std::size_t k = 0; k < w.size(); ++k) std::cout << (k ? " " : "") << rat_str(w[k]);
    std::cout << "]\n";
  }
  std::cout << "  surviving candidates (" << survivors.size() << "):";
  for (const Rat& c : survivors) std::cout << " " << rat_str(c);
  std::cout << "\n";
  if (!diag.empty()) std::cout << "  note: " << diag << "\n";
  return kExitOk;
}

int cmd_peirce(const std::string& type, int count, std::uint64_t seed, const std::string& out,
               bool allowE6) {
  RootSystemSpec spec = parse_gated_type(type, allowE6);
  if (spec.family == 'A' && spec.rank <= 2)
    throw UsageError("type " + spec.name() +
                     ": every idempotent eigenvalue lies in {0, 1/2, 1}; the spectrum scan "
                     "needs rank >= 2 outside type A2");
  AlgebraTable t = build_pipeline(spec);
  if (t.dimA <= 128) structure_table(t);
  std::vector<PeirceSample> samples = peirce_samples(t, count, seed);
  std::set<Rat> distinct;
  nlohmann::ordered_json js = nlohmann::ordered_json::array();
  std::cout << "peirce spectrum: type " << spec.name() << ", seed " << seed << "\n";
  for (const auto& ps : samples) {
    distinct.insert(ps.lambda);
    std::cout << "  H = [";
    for (std::size_t k = 0; k < ps.h.size(); ++k) std::cout << (k ? " " : "") << rat_str(ps.h[k]);
    std::cout << "]  lambda_H = " << rat_str(ps.lambda);
    if (!ps.eigenvalues.empty()) {
      std::cout << "  eigenvalues:";
      for (const Rat& e : ps.eigenvalues) std::cout << " " << rat_str(e);
    }
    std::cout << "\n";
    nlohmann::ordered_json row;
    auto hv = nlohmann::ordered_json::array();
    for (const Rat& x : ps.h) hv.push_back(rat_str(x));
    row["h"] = std::move(hv);
    row["lambda"] = rat_str(ps.lambda);
    auto ev = nlohmann::ordered_json::array();
    for (const Rat& e : ps.eigenvalues) ev.push_back(rat_str(e));
    row["eigenvalues"] = std::move(ev);
    js.push_back(std::move(row));
  }
  std::cout << "  distinct lambda_H values: " << distinct.size() << "\n";
  if (!out.empty()) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["type"] = spec.name();
    j["seed"] = seed;
    j["count"] = count;
    j["samples"] = std::move(js);
    j["distinctLambda"] = distinct.size();
    write_text_file(out, j.dump(1) + "\n");
  }
  if (count >= 3 && int(distinct.size()) < 3) {
    std::cout << "FAIL: fewer than 3 distinct lambda_H values\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure constants and verification for the algebra A(g)"};
  app.require_subcommand(1);

  std::string type, out, repPath, input, candidates;
  std::uint64_t seed = 0;
  int samples = 25, count = 10, threads = 0;
  bool exhaustive = false, allowE6 = false;

  auto* build = app.add_subcommand("build", "write the structure-constant JSON");
  build->add_option("--type", type, "root system type, e.g. G2")->required();
  build->add_option("--seed", seed, "seed recorded in the output");
  build->add_option("--out", out, "output path (default <type>_algebra.json)");
  build->add_flag("--e6", allowE6, "opt in to the E6 build");
  build->add_option("--threads", threads, "accepted for interface stability; runs single-threaded");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--type", type, "root system type")->required();
  verify->add_option("--seed", seed, "seed for all sampling");
  verify->add_option("--samples", samples, "sample count for sampled checks");
  verify->add_flag("--exhaustive", exhaustive, "force exhaustive tau associativity");
  verify->add_option("--out", out, "also write the report as JSON");
  verify->add_option("--rep", repPath, "representation JSON for the projection checks");
  verify->add_flag("--e6", allowE6, "opt in to the E6 build");
  verify->add_option("--threads", threads, "accepted for interface stability; runs single-threaded");

  auto* scan = app.add_subcommand("unitize-scan", "power-associativity scan over form scalings");
  scan->add_option("--in", input, "algebra JSON (as written by build)")->required();
  scan->add_option("--candidates", candidates, "comma-separated rationals, e.g. 0,1/2,1,2");
  scan->add_option("--samples", samples, "random samples per candidate");
  scan->add_option("--seed", seed, "seed for the samples");

  auto* peirce = app.add_subcommand("peirce", "idempotent eigenvalue (Peirce) scan");
  peirce->add_option("--type", type, "root system type (not A1/A2)")->required();
  peirce->add_option("--count", count, "number of seeded Cartan idempotents");
  peirce->add_option("--seed", seed, "seed for the Cartan directions");
  peirce->add_option("--out", out, "also write the spectrum as JSON");
  peirce->add_flag("--e6", allowE6, "opt in to the E6 build");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(type, seed, out, allowE6);
    if (verify->parsed()) return cmd_verify(type, seed, samples, exhaustive, out, repPath, allowE6);
    if (scan->parsed()) return cmd_unitize_scan(input, candidates, samples, seed);
    if (peirce->parsed()) return cmd_peirce(type, count, seed, out, allowE6);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
