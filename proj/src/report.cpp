#include "seqlab/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "seqlab/analysis.hpp"
#include "seqlab/errors.hpp"

namespace seqlab::report {

namespace {

const std::vector<std::string> kClaimNames = {
    "support_size",         "ac_distribution", "ads_parameters",   "shift_difference_value",
    "polynomial_congruence", "product_congruence", "gcd_cofactor", "gcd_small_factor",
    "general_bound",        "case_bound",      "raa_threshold",
};

const std::vector<std::string> kConsistencyNames = {
    "cross_path_autocorrelation", "mod4_law", "spectrum_symmetry", "cofactor_residue", "divisibility_chain",
};

Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

class VerdictList {
 public:
  explicit VerdictList(const std::vector<std::string>& names) {
    for (const auto& n : names) items_.push_back({n, Status::Skipped, ""});
  }
  void set(const std::string& name, bool ok, std::string detail = "") {
    auto& v = at(name);
    v.status = status_of(ok);
    v.detail = std::move(detail);
    if (!ok) spdlog::warn("check {} failed: {}", name, v.detail);
  }
  void skip(const std::string& name, std::string reason) {
    auto& v = at(name);
    v.status = Status::Skipped;
    v.detail = std::move(reason);
  }
  std::vector<Verdict> take() { return std::move(items_); }

 private:
  Verdict& at(const std::string& name) {
    auto it = std::find_if(items_.begin(), items_.end(), [&](const Verdict& v) { return v.name == name; });
    if (it == items_.end()) throw ConsistencyError("unknown verdict " + name);
    return *it;
  }
  std::vector<Verdict> items_;
};

std::string join_list(const std::vector<std::uint64_t>& xs, std::size_t limit = 16) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  if (xs.size() > limit) out += fmt::format(",... ({} total)", xs.size());
  return out;
}

nlohmann::json bignat_json(const std::optional<BigNat>& v) {
  if (!v) return nullptr;
  return v->to_hex();
}

nlohmann::json bound_json(const BigNat& b) {
  if (b.fits_u64()) return b.to_u64();
  return b.to_decimal();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"spectrum", "ads", "polynomial", "congruence", "gcd",
                                                 "complexity"};
  return names;
}

std::set<std::string> parse_checks(const std::string& comma_separated) {
  std::set<std::string> out;
  std::stringstream in(comma_separated);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw UsageError(fmt::format("unknown check '{}'", item));
    out.insert(item);
  }
  return out;
}

bool AnalysisReport::claims_pass() const {
  return std::none_of(claims.begin(), claims.end(), [](const Verdict& v) { return v.status == Status::Fail; });
}

bool AnalysisReport::consistency_pass() const {
  return std::none_of(consistency.begin(), consistency.end(),
                      [](const Verdict& v) { return v.status == Status::Fail; });
}

const Verdict* AnalysisReport::find(const std::string& name) const {
  for (const auto* list : {&claims, &consistency})
    for (const auto& v : *list)
      if (v.name == name) return &v;
  return nullptr;
}

AnalysisReport analyze(const seq::Construction& c, const AnalyzeOptions& options) {
  const seq::Sequence& s = c.sequence;
  const int m = c.m;
  const std::uint64_t n = s.period();
  const std::uint64_t q = std::uint64_t{1} << m;
  const std::uint64_t step = q + 1;

  AnalysisReport r;
  r.m = m;
  r.period = n;
  r.field_poly = fmt::format("0x{:x}", c.field_poly);
  r.f_name = c.f_name;
  r.bound_case = nt::classify_bound_case(static_cast<std::uint64_t>(m));
  VerdictList claims(kClaimNames), consistency(kConsistencyNames);

  const std::uint64_t k = s.support().size();
  const std::uint64_t expected_k = (std::uint64_t{1} << (2 * m - 1)) - q;
  claims.set("support_size", k == expected_k, fmt::format("|C| = {}, expected {}", k, expected_k));

  if (options.enabled("spectrum")) {
    spdlog::debug("m={}: autocorrelation spectrum", m);
    const an::DistributionCheck dist = an::verify_ac_distribution(s, m);
    r.spectrum_mode = dist.sampled ? "sampled" : "full";
    r.minus1_count = dist.minus1_count;
    r.three_count = dist.three_count;
    r.minus1_positions = dist.minus1_positions;
    claims.set("ac_distribution", dist.pass,
               dist.offending.empty() ? fmt::format("{} shifts at -1", dist.minus1_count)
                                      : "unexpected values at " + join_list(dist.offending));

    // Support path vs bit path, the mod-4 law and AC(tau) = AC(N - tau).
    std::vector<std::uint64_t> taus;
    if (n <= 4096) {
      for (std::uint64_t t = 0; t < n; ++t) taus.push_back(t);
    } else {
      for (std::uint64_t t = 1; t + 1 < q && t <= 64; ++t) taus.push_back(t * step);
      std::mt19937_64 rng(0xc0ffeeULL);
      std::uniform_int_distribution<std::uint64_t> pick(1, n - 1);
      for (int i = 0; i < 64; ++i) taus.push_back(pick(rng));
    }
    std::vector<std::uint64_t> mismatched, not_mod4, asymmetric;
    const auto nn = static_cast<std::int64_t>(n);
    const CyclicWindow window(s.bits());
    for (auto tau : taus) {
      const std::int64_t bitwise = an::autocorrelation_at(s, window, tau);
      if (bitwise != an::ac_from_support(s, tau)) mismatched.push_back(tau);
      if (((bitwise - nn) % 4 + 4) % 4 != 0) not_mod4.push_back(tau);
      if (tau != 0 && bitwise != an::autocorrelation_at(s, window, n - tau)) asymmetric.push_back(tau);
    }
    consistency.set("cross_path_autocorrelation", mismatched.empty(),
                    mismatched.empty() ? fmt::format("{} shifts agree", taus.size()) : join_list(mismatched));
    consistency.set("mod4_law", not_mod4.empty(), join_list(not_mod4));
    consistency.set("spectrum_symmetry", asymmetric.empty(), join_list(asymmetric));
  } else {
    for (const auto* name : {"ac_distribution"}) claims.skip(name, "not requested");
  }

  if (options.enabled("ads")) {
    if (n <= ds::kPackedProfileLimit) {
      const std::uint64_t lambda = (std::uint64_t{1} << (2 * m - 2)) - q;
      const bool ads = ds::verify_ads(s.support(), n, expected_k, lambda, q - 2);
      claims.set("ads_parameters", ads,
                 fmt::format("({}, {}, {}, {}) almost difference set", n, expected_k, lambda, q - 2));
    } else {
      claims.skip("ads_parameters", "full difference profile skipped above 2^17");
    }
    const std::uint64_t lambda = (std::uint64_t{1} << (2 * m - 2)) - q;
    std::vector<std::uint64_t> bad;
    // and_popcount at tau counts i in C with i + tau in C, which is d_C(tau).
    const CyclicWindow window(s.bits());
    for (std::uint64_t t = 1; t + 1 < q; ++t)
      if (window.and_popcount(s.bits(), t * step) != lambda) bad.push_back(t * step);
    claims.set("shift_difference_value", bad.empty(),
               bad.empty() ? fmt::format("d_C = {} at all {} shifts", lambda, q - 2) : join_list(bad));
  }

  if (options.enabled("polynomial")) {
    if (n <= an::kPolynomialCheckLimit) claims.set("polynomial_congruence", an::verify_polynomial_identity(s));
    else claims.skip("polynomial_congruence", "period above 4096");
  }

  const bool exact = m <= an::kExactGcdMaxM;
  if (options.enabled("congruence")) {
    if (exact) {
      const an::CongruenceCheck cc = an::verify_product_congruence(s, m);
      claims.set("product_congruence", cc.holds(),
                 cc.holds() ? "" : fmt::format("lhs {} rhs {}", cc.lhs.to_hex(), cc.rhs.to_hex()));
      r.s2 = an::s_of_two(s);
      r.t2inv = an::t_of_two_inverse(s);
    } else {
      claims.skip("product_congruence", "big-integer product skipped for m > 8");
    }
    const nt::QuotientResidue qr = nt::mersenne_quotient_residue(n / step, step);
    const BigNat want = BigNat(q - 1);
    consistency.set("cofactor_residue", qr.holds() && qr.residue == want,
                    fmt::format("cofactor mod 2^{}-1 = {}", step, qr.residue.to_decimal()));
  }

  std::optional<an::GcdAnalysis> gcds;
  if (options.enabled("gcd")) {
    gcds = an::gcd_bound_analysis(s, m);
    r.g1 = gcds->g1;
    r.g2 = gcds->g2;
    if (gcds->exact)
      claims.set("gcd_cofactor", gcds->g1_is_one(), fmt::format("g1 = {}", gcds->g1->to_decimal()));
    else
      claims.skip("gcd_cofactor", "g1 skipped for m > 8");
    claims.set("gcd_small_factor", gcds->g2_matches_identity() && gcds->g2_matches_expected(),
               fmt::format("g2 = {}, gcd((2^(m-1)-1)^2, 2^(2^m+1)-1) = {}{}", gcds->g2.to_decimal(),
                           gcds->g2_identity.to_decimal(),
                           gcds->g2_expected ? ", expected " + gcds->g2_expected->to_decimal() : ""));
  }

  if (options.enabled("complexity")) {
    if (exact) {
      const an::Complexity cx = an::two_adic_complexity(s);
      r.gcd_full = cx.gcd;
      r.phi_exact = cx.phi;
      const BigNat phi(cx.phi);
      const BigNat general(n + 1 - 2 * static_cast<std::uint64_t>(m));
      claims.set("general_bound", phi >= general, fmt::format("phi = {}, N + 1 - 2m = {}", cx.phi, general.to_decimal()));
      claims.set("case_bound", phi >= r.bound_case.bound,
                 fmt::format("phi = {}, {} bound = {}", cx.phi, nt::to_string(r.bound_case.tag),
                             r.bound_case.bound.to_decimal()));
      claims.set("raa_threshold", 2 * cx.phi > n, fmt::format("2 phi = {}, N = {}", 2 * cx.phi, n));
      if (gcds && gcds->exact) {
        // gcd(S(2), 2^N - 1) | gcd(P, 2^N - 1) | g1 g2
        const BigNat modulus = BigNat::mersenne(n);
        const BigNat product = (an::s_of_two(s) * an::t_of_two_inverse(s)) % modulus;
        const BigNat mid = nt::gcd(product, modulus);
        const bool chain = (mid % cx.gcd).is_zero() && ((*gcds->g1 * gcds->g2) % mid).is_zero();
        consistency.set("divisibility_chain", chain,
                        fmt::format("{} | {} | {}", cx.gcd.to_decimal(), mid.to_decimal(),
                                    (*gcds->g1 * gcds->g2).to_decimal()));
      }
    } else {
      for (const auto* name : {"general_bound", "case_bound", "raa_threshold"})
        claims.skip(name, "exact complexity skipped for m > 8");
    }
  }

  r.claims = claims.take();
  r.consistency = consistency.take();
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["m"] = r.m;
  j["N"] = r.period;
  j["field_poly"] = r.field_poly;
  j["f"] = r.f_name;
  if (r.f_name == "trace") j["f_note"] = "relative trace x + x^(2^m): default choice of d-form function";
  j["spectrum"] = {{"mode", r.spectrum_mode},
                   {"minus1_count", r.minus1_count},
                   {"three_count", r.three_count},
                   {"minus1_positions", r.minus1_positions}};
  j["S2"] = bignat_json(r.s2);
  j["T2inv"] = bignat_json(r.t2inv);
  j["gcd_full"] = bignat_json(r.gcd_full);
  j["phi_exact"] = r.phi_exact ? nlohmann::json(*r.phi_exact) : nlohmann::json(nullptr);
  j["bound_case"] = {{"case", nt::to_string(r.bound_case.tag)}, {"bound", bound_json(r.bound_case.bound)}};
  j["g1"] = r.g1 ? nlohmann::json(r.g1->to_decimal()) : nlohmann::json(nullptr);
  j["g2"] = r.g2 ? nlohmann::json(r.g2->to_decimal()) : nlohmann::json(nullptr);
  auto verdicts = [](const std::vector<Verdict>& list) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& v : list) out[v.name] = {{"status", to_string(v.status)}, {"detail", v.detail}};
    return out;
  };
  j["verdicts"] = {{"claims", verdicts(r.claims)}, {"consistency", verdicts(r.consistency)}};
  j["pass"] = r.claims_pass() && r.consistency_pass();
  return j;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c = {"m", "N", "phi_exact", "bound", "case", "ac_minus1_count"};
    c.insert(c.end(), kClaimNames.begin(), kClaimNames.end());
    c.insert(c.end(), kConsistencyNames.begin(), kConsistencyNames.end());
    c.push_back("error");
    return c;
  }();
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string csv_row(const AnalysisReport& r, const std::string& error) {
  std::vector<std::string> cells = {
      std::to_string(r.m),
      std::to_string(r.period),
      r.phi_exact ? std::to_string(*r.phi_exact) : "",
      r.bound_case.bound.to_decimal(),
      nt::to_string(r.bound_case.tag),
      std::to_string(r.minus1_count),
  };
  for (const auto* list : {&kClaimNames, &kConsistencyNames}) {
    for (const auto& name : *list) {
      const Verdict* v = r.find(name);
      cells.push_back(v ? to_string(v->status) : "");
    }
  }
  std::string err = error;
  std::replace(err.begin(), err.end(), ',', ';');
  std::replace(err.begin(), err.end(), '\n', ' ');
  cells.push_back(err);
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out;
}

}  // namespace seqlab::report
