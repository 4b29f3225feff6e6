#include "seqlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "seqlab/analysis.hpp"
#include "seqlab/diffset.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/numtheory.hpp"
#include "seqlab/report.hpp"
#include "seqlab/seqgen.hpp"

namespace seqlab::cli {

namespace {

constexpr int kMaxCliM = 12;

void init_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_logger_mt("seqlab");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* level = std::getenv("SEQLAB_LOG");
    spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
  });
}

void check_m(int m) {
  if (m < 2 || m > kMaxCliM) throw UsageError(fmt::format("--m must be in 2..{}, got {}", kMaxCliM, m));
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

int exit_code_for(const report::AnalysisReport& r) {
  if (!r.consistency_pass()) return kInternalError;
  if (!r.claims_pass()) return kVerdictFailure;
  return kPass;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  int m = 0;
  std::string c1prime_file;
  std::string f_name = "trace";
  std::string field_poly;
  std::string output;
  bool skip_certification = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  check_m(a.m);
  const gf2::FieldSpec spec =
      a.field_poly.empty() ? gf2::find_field_spec(a.m) : gf2::FieldSpec(a.m, gf2::parse_hex(a.field_poly));
  const seq::DFormFunction f = seq::dform_by_name(a.f_name);
  ds::CyclicSet c1prime;
  if (a.c1prime_file.empty()) {
    c1prime = ds::singer_c1prime(spec);
  } else {
    c1prime = ds::load_cyclic_set(a.c1prime_file);
  }
  seq::BuildOptions options;
  options.skip_function_certification = a.skip_certification;
  const seq::Construction c = seq::build_sequence(spec, c1prime, f, options);

  const std::string path = a.output.empty() ? fmt::format("sequence_m{}.json", a.m) : a.output;
  write_text(path, to_json(c).dump() + "\n", out);
  if (path == "-") return kPass;
  out << fmt::format("m = {}\nN = {}\n|C| = {}\n", c.m, c.sequence.period(), c.sequence.support().size());
  for (const auto& cert : c.certifications) out << fmt::format("certification {}: {}\n", cert.name, cert.status);
  out << "wrote " << path << "\n";
  return kPass;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string checks;
  std::string format = "json";
  std::string output;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const seq::Construction c = seq::construction_from_json(read_json_file(a.input));
  report::AnalyzeOptions options;
  options.checks = report::parse_checks(a.checks);
  const report::AnalysisReport r = report::analyze(c, options);
  std::string text;
  if (a.format == "csv") text = report::csv_header() + "\n" + report::csv_row(r) + "\n";
  else text = report::to_json(r).dump(2) + "\n";
  write_text(a.output, text, out);
  return exit_code_for(r);
}

// ---- verify -----------------------------------------------------------------

int emit_verdict(std::ostream& out, nlohmann::json j, bool pass) {
  j["pass"] = pass;
  out << j.dump(2) << "\n";
  return pass ? kPass : kVerdictFailure;
}

int verify_pseudoprime(const std::string& n_text, std::ostream& out) {
  const BigNat n = BigNat::from_decimal(n_text);
  const bool result = nt::is_2_pseudoprime(n);
  return emit_verdict(out, {{"check", "pseudoprime"}, {"n", n.to_decimal()}, {"is_2_pseudoprime", result}}, result);
}

// If n is a 2-pseudoprime then so is 2^n - 1; compositeness of 2^n - 1 is
// witnessed by 2^d - 1 for the smallest nontrivial divisor d of n.
int verify_mersenne_pseudoprime(std::uint64_t n, std::ostream& out) {
  nlohmann::json j = {{"check", "mersenne-pseudoprime"}, {"n", n}};
  if (n < 2) throw UsageError("--n must be at least 2");
  if (!nt::is_2_pseudoprime(BigNat(n))) {
    j["detail"] = "n is not a 2-pseudoprime";
    return emit_verdict(out, j, false);
  }
  std::uint64_t d = 2;
  while (n % d != 0) ++d;
  const BigNat big = BigNat::mersenne(n);
  const BigNat witness = BigNat::mersenne(d);
  const bool fermat = nt::modpow(BigNat(2), big - BigNat(1), big) == BigNat(1);
  const bool result = nt::is_2_pseudoprime(big, witness);
  j["witness_factor"] = fmt::format("2^{}-1", d);
  j["fermat_base2"] = fermat;
  j["mersenne_is_2_pseudoprime"] = result;
  return emit_verdict(out, j, result && fermat);
}

int verify_quotient_residue(std::uint64_t n_prime, std::uint64_t m_prime, std::ostream& out) {
  if (n_prime == 0 || m_prime == 0) throw UsageError("--nprime and --mprime must be positive");
  const nt::QuotientResidue qr = nt::mersenne_quotient_residue(n_prime, m_prime);
  return emit_verdict(out,
                      {{"check", "quotient-residue"},
                       {"nprime", n_prime},
                       {"mprime", m_prime},
                       {"quotient", qr.quotient.bit_length() <= 64 ? nlohmann::json(qr.quotient.to_u64())
                                                                   : nlohmann::json(qr.quotient.to_decimal())},
                       {"residue", qr.residue.to_decimal()},
                       {"expected", qr.expected.to_decimal()}},
                      qr.holds());
}

int verify_mersenne_gcd(std::uint64_t a, std::uint64_t b, std::ostream& out) {
  if (a == 0 || b == 0) throw UsageError("--a and --b must be positive");
  const BigNat lhs = nt::gcd(BigNat::mersenne(a), BigNat::mersenne(b));
  const BigNat rhs = BigNat::mersenne(std::gcd(a, b));
  return emit_verdict(out,
                      {{"check", "mersenne-gcd"}, {"a", a}, {"b", b}, {"gcd", lhs.to_decimal()},
                       {"expected", rhs.to_decimal()}},
                      lhs == rhs);
}

int verify_classify(int m, std::ostream& out) {
  if (m < 2) throw UsageError("--m must be at least 2");
  const nt::BoundCase bc = nt::classify_bound_case(static_cast<std::uint64_t>(m));
  return emit_verdict(out,
                      {{"check", "classify"}, {"m", m}, {"case", nt::to_string(bc.tag)},
                       {"bound", bc.bound.to_decimal()}},
                      true);
}

int verify_set(const std::string& path, std::uint64_t k, std::uint64_t lambda, std::optional<std::uint64_t> t,
               std::ostream& out) {
  const ds::CyclicSet set = ds::load_cyclic_set(path);
  const ds::DiffProfile profile = ds::diff_profile(set);
  nlohmann::json prof = nlohmann::json::object();
  for (const auto& [value, count] : profile.counts) prof[std::to_string(value)] = count;
  const bool result = t ? ds::verify_ads(set, set.modulus(), k, lambda, *t)
                        : ds::verify_ds(set, set.modulus(), k, lambda);
  nlohmann::json j = {{"check", t ? "ads" : "ds"}, {"N", set.modulus()}, {"k", k}, {"lambda", lambda},
                      {"profile", prof}};
  if (t) j["t"] = *t;
  return emit_verdict(out, j, result);
}

int verify_dform(int m, const std::string& f_name, std::ostream& out) {
  check_m(m);
  const gf2::FieldSpec spec = gf2::find_field_spec(m);
  const seq::DFormFunction f = seq::dform_by_name(f_name);
  const bool image = seq::image_in_subfield(spec, f);
  const bool dform = image && seq::verify_d_form(spec, f);
  const bool balanced = image && seq::verify_balanced(spec, seq::tabulate_powers(spec, f));
  const bool diff = image && seq::verify_difference_balanced(spec, f);
  return emit_verdict(out,
                      {{"check", "dform"}, {"m", m}, {"f", f_name}, {"d", f.d}, {"image_in_subfield", image},
                       {"d_form", dform}, {"balanced", balanced}, {"difference_balanced", diff}},
                      image && dform && balanced && diff);
}

// ---- sweep ------------------------------------------------------------------

struct SweepRow {
  std::optional<report::AnalysisReport> report;
  std::string error;
  int code = kPass;
};

}  // namespace

void validate(const SweepConfig& config) {
  if (config.m_min < 2 || config.m_max > kMaxCliM || config.m_min > config.m_max)
    throw UsageError(fmt::format("sweep range must satisfy 2 <= m_min <= m_max <= {}, got {}..{}", kMaxCliM,
                                 config.m_min, config.m_max));
  if (config.format != "json" && config.format != "csv")
    throw UsageError("--format must be json or csv");
  if (config.parallelism < 1) throw UsageError("--jobs must be at least 1");
  for (const auto& c : config.checks) report::parse_checks(c);
}

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& /*err*/) {
  validate(config);
  report::AnalyzeOptions options;
  for (const auto& c : config.checks)
    for (const auto& name : report::parse_checks(c)) options.checks.insert(name);

  const int count = config.m_max - config.m_min + 1;
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      const int m = config.m_min + i;
      SweepRow& row = rows[static_cast<std::size_t>(i)];
      try {
        spdlog::info("sweep: m = {}", m);
        row.report = report::analyze(seq::build_default(m), options);
        row.code = exit_code_for(*row.report);
      } catch (const ConsistencyError& e) {
        row.error = e.what();
        row.code = kInternalError;
      } catch (const std::exception& e) {
        row.error = e.what();
        row.code = kVerdictFailure;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int workers = std::min(config.parallelism, count);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::string text;
  if (config.format == "csv") {
    text = report::csv_header() + "\n";
    for (int i = 0; i < count; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (row.report) {
        text += report::csv_row(*row.report, row.error) + "\n";
      } else {
        report::AnalysisReport stub;
        stub.m = config.m_min + i;
        stub.period = (std::uint64_t{1} << (2 * stub.m)) - 1;
        text += report::csv_row(stub, row.error) + "\n";
      }
    }
  } else {
    nlohmann::json j;
    j["schema"] = report::kSchemaVersion;
    j["m_min"] = config.m_min;
    j["m_max"] = config.m_max;
    j["rows"] = nlohmann::json::array();
    for (int i = 0; i < count; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (row.report) {
        j["rows"].push_back(report::to_json(*row.report));
      } else {
        j["rows"].push_back({{"schema", report::kSchemaVersion}, {"m", config.m_min + i}, {"error", row.error},
                             {"pass", false}});
      }
    }
    text = j.dump(2) + "\n";
  }
  write_text(config.output, text, out);

  int code = kPass;
  for (const auto& row : rows) code = std::max(code, row.code);
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  init_logging();
  CLI::App app{"Almost-optimal autocorrelation sequences: construction and 2-adic complexity analysis",
               "seqlab"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build the sequence for a given m and write it as JSON");
  generate->add_option("--m", gen.m, "Half the extension degree (2..12)")->required();
  generate->add_option("--c1prime", gen.c1prime_file, "JSON set file for C1' (certified before use)");
  generate->add_option("--f", gen.f_name, "d-form function: trace or trace2");
  generate->add_option("--field-poly", gen.field_poly, "Primitive polynomial of degree 2m as hex");
  generate->add_option("-o,--out", gen.output, "Output file (default sequence_m<M>.json, - for stdout)");
  generate->add_flag("--unsafe-skip-certification", gen.skip_certification,
                     "Trust f without checking the d-form and difference-balanced definitions");

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Analyze a sequence file and report every verdict");
  analyze->add_option("file", ana.input, "Sequence JSON file")->required();
  analyze->add_option("--checks", ana.checks, "Comma-separated subset of: spectrum,ads,polynomial,congruence,gcd,complexity");
  analyze->add_option("--format", ana.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("-o,--out", ana.output, "Output file (default stdout)");

  SweepConfig sweep_cfg;
  std::string sweep_checks;
  auto* sweep = app.add_subcommand("sweep", "Generate and analyze every m in a range");
  sweep->add_option("--m-min", sweep_cfg.m_min, "Smallest m (>= 2)");
  sweep->add_option("--m-max", sweep_cfg.m_max, "Largest m (<= 12)");
  sweep->add_option("--checks", sweep_checks, "Comma-separated check groups");
  sweep->add_option("--format", sweep_cfg.format, "json or csv");
  sweep->add_option("-o,--out", sweep_cfg.output, "Output file (default stdout)");
  sweep->add_option("-j,--jobs", sweep_cfg.parallelism, "Worker threads");

  auto* verify = app.add_subcommand("verify", "Run a single number-theoretic or set check");
  verify->require_subcommand(1);
  std::string pp_n;
  auto* v_pp = verify->add_subcommand("pseudoprime", "Is n a base-2 Fermat pseudoprime?");
  v_pp->add_option("--n", pp_n, "Decimal integer >= 2")->required();
  std::uint64_t l2_n = 0;
  auto* v_l2 = verify->add_subcommand("mersenne-pseudoprime", "If n is a 2-pseudoprime, check that 2^n - 1 is one too");
  v_l2->alias("lemma2");
  v_l2->add_option("--n", l2_n, "A 2-pseudoprime such as 341")->required();
  std::uint64_t nprime = 0, mprime = 0;
  auto* v_l7 = verify->add_subcommand("quotient-residue", "(2^{n'm'} - 1)/(2^{m'} - 1) = n' mod 2^{m'} - 1");
  v_l7->alias("lemma7");
  v_l7->add_option("--nprime", nprime)->required();
  v_l7->add_option("--mprime", mprime)->required();
  std::uint64_t ga = 0, gb = 0;
  auto* v_gcd = verify->add_subcommand("mersenne-gcd", "gcd(2^a - 1, 2^b - 1) = 2^gcd(a,b) - 1");
  v_gcd->add_option("--a", ga)->required();
  v_gcd->add_option("--b", gb)->required();
  int cls_m = 0;
  auto* v_cls = verify->add_subcommand("classify", "Lower-bound case for m");
  v_cls->add_option("--m", cls_m)->required();
  std::string set_path;
  std::uint64_t set_k = 0, set_lambda = 0, set_t = 0;
  auto* v_ds = verify->add_subcommand("ds", "Is the set file an (N, k, lambda) difference set?");
  v_ds->add_option("--set", set_path)->required();
  v_ds->add_option("--k", set_k)->required();
  v_ds->add_option("--lambda", set_lambda)->required();
  auto* v_ads = verify->add_subcommand("ads", "Is the set file an (N, k, lambda, t) almost difference set?");
  v_ads->add_option("--set", set_path)->required();
  v_ads->add_option("--k", set_k)->required();
  v_ads->add_option("--lambda", set_lambda)->required();
  v_ads->add_option("--t", set_t)->required();
  int df_m = 0;
  std::string df_f = "trace";
  auto* v_df = verify->add_subcommand("dform", "Check the d-form and (difference-)balanced definitions");
  v_df->add_option("--m", df_m)->required();
  v_df->add_option("--f", df_f);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*analyze) return cmd_analyze(ana, out);
    if (*sweep) {
      if (!sweep_checks.empty()) sweep_cfg.checks = {sweep_checks};
      return run_sweep(sweep_cfg, out, err);
    }
    if (*v_pp) return verify_pseudoprime(pp_n, out);
    if (*v_l2) return verify_mersenne_pseudoprime(l2_n, out);
    if (*v_l7) return verify_quotient_residue(nprime, mprime, out);
    if (*v_gcd) return verify_mersenne_gcd(ga, gb, out);
    if (*v_cls) return verify_classify(cls_m, out);
    if (*v_ds) return verify_set(set_path, set_k, set_lambda, std::nullopt, out);
    if (*v_ads) return verify_set(set_path, set_k, set_lambda, set_t, out);
    if (*v_df) return verify_dform(df_m, df_f, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kVerdictFailure;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace seqlab::cli
