#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "seqlab/bignat.hpp"
#include "seqlab/numtheory.hpp"
#include "seqlab/seqgen.hpp"

namespace seqlab::report {

inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Verdict {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
};

// Check groups selectable from the command line.
const std::vector<std::string>& check_names();

struct AnalyzeOptions {
  std::set<std::string> checks;  // empty means all
  bool enabled(const std::string& name) const { return checks.empty() || checks.count(name) != 0; }
};

// Throws UsageError naming the first unknown check.
std::set<std::string> parse_checks(const std::string& comma_separated);

struct AnalysisReport {
  int m = 0;
  std::uint64_t period = 0;
  std::string field_poly;
  std::string f_name;

  std::string spectrum_mode = "skipped";  // "full", "sampled" or "skipped"
  std::uint64_t minus1_count = 0;
  std::uint64_t three_count = 0;
  std::vector<std::uint64_t> minus1_positions;

  std::optional<BigNat> s2;
  std::optional<BigNat> t2inv;
  std::optional<BigNat> gcd_full;
  std::optional<std::uint64_t> phi_exact;
  nt::BoundCase bound_case{nt::BoundTag::General, BigNat(0)};
  std::optional<BigNat> g1;
  std::optional<BigNat> g2;

  // Claims about the construction (distribution, congruences, bounds).
  std::vector<Verdict> claims;
  // Agreement between independent computation paths.
  std::vector<Verdict> consistency;

  bool claims_pass() const;
  bool consistency_pass() const;
  const Verdict* find(const std::string& name) const;
};

AnalysisReport analyze(const seq::Construction& c, const AnalyzeOptions& options = {});

nlohmann::json to_json(const AnalysisReport& r);

// Frozen column order; see README.
const std::vector<std::string>& csv_columns();
std::string csv_header();
// `error` goes in the last column (empty when the row ran).
std::string csv_row(const AnalysisReport& r, const std::string& error = "");

}  // namespace seqlab::report
