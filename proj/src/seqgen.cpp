#include "seqlab/seqgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "seqlab/errors.hpp"

namespace seqlab::seq {

namespace {

std::uint64_t subfield_step(const FieldSpec& spec) { return (std::uint64_t{1} << spec.m()) + 1; }

std::optional<gf2::LogTable> maybe_log_table(const FieldSpec& spec) {
  if (spec.degree() > gf2::kLogTableMaxDegree) return std::nullopt;
  return gf2::LogTable(spec);
}

// Maps subfield elements to 0..q-1 (0 for zero, 1 + j for beta^j) and
// everything else to -1.
class SubfieldIndex {
 public:
  SubfieldIndex(const FieldSpec& spec, const gf2::LogTable* table)
      : spec_(spec), table_(table), step_(subfield_step(spec)) {}

  std::int64_t operator()(std::uint32_t coords) const {
    if (coords == 0) return 0;
    if (coords > spec_.order()) return -1;
    if (table_ != nullptr) {
      const std::uint64_t e = table_->dlog({coords});
      return e % step_ == 0 ? static_cast<std::int64_t>(1 + e / step_) : -1;
    }
    // Without a table only membership is reported.
    return gf2::in_subfield(spec_, {coords}) ? 1 : -1;
  }

 private:
  const FieldSpec& spec_;
  const gf2::LogTable* table_;
  std::uint64_t step_;
};

// Count check shared by verify_balanced and the difference-balanced loop.
template <typename ValueAt>
bool balanced_counts(const FieldSpec& spec, const gf2::LogTable* table, std::uint64_t n,
                     ValueAt value_at) {
  const std::uint64_t q = std::uint64_t{1} << spec.m();
  if (table != nullptr) {
    const SubfieldIndex index(spec, table);
    std::vector<std::uint64_t> counts(q, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::int64_t slot = index(value_at(i));
      if (slot < 0) return false;
      ++counts[static_cast<std::size_t>(slot)];
    }
    if (counts[0] != q - 1) return false;
    return std::all_of(counts.begin() + 1, counts.end(), [q](auto c) { return c == q; });
  }
  std::unordered_map<std::uint32_t, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint32_t v = value_at(i);
    if (!gf2::in_subfield(spec, {v})) return false;
    ++counts[v];
  }
  if (counts[0] != q - 1) return false;
  if (counts.size() != q) return false;
  return std::all_of(counts.begin(), counts.end(),
                     [q](const auto& kv) { return kv.first == 0 || kv.second == q; });
}

std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = dist(rng);
  return out;
}

constexpr std::uint64_t kSampleSeed = 0x5eb1ab5eedULL;

}  // namespace

DFormFunction trace_function() {
  DFormFunction f;
  f.name = "trace";
  f.d = 1;
  f.eval = [](const FieldSpec& spec, FieldElement x) { return gf2::relative_trace(spec, x); };
  f.eval_power = [](const FieldSpec& spec, const gf2::LogTable& t, std::uint64_t i) {
    const std::uint64_t n = spec.order();
    return t.antilog(i % n) + t.antilog((i % n << spec.m()) % n);
  };
  return f;
}

DFormFunction trace_squared_function() {
  DFormFunction f;
  f.name = "trace2";
  f.d = 2;
  f.eval = [](const FieldSpec& spec, FieldElement x) {
    return gf2::square(spec, gf2::relative_trace(spec, x));
  };
  f.eval_power = [](const FieldSpec& spec, const gf2::LogTable& t, std::uint64_t i) {
    const std::uint64_t n = spec.order();
    const std::uint64_t twice = (2 * (i % n)) % n;
    return t.antilog(twice) + t.antilog((twice << spec.m()) % n);
  };
  return f;
}

std::vector<std::string> dform_names() { return {"trace", "trace2"}; }

DFormFunction dform_by_name(const std::string& name) {
  if (name == "trace") return trace_function();
  if (name == "trace2") return trace_squared_function();
  throw UsageError(fmt::format("unknown d-form function '{}' (known: trace, trace2)", name));
}

std::vector<std::uint32_t> tabulate_powers(const FieldSpec& spec, const DFormFunction& f) {
  return FunctionTable(spec, f).values;
}

FunctionTable::FunctionTable(const FieldSpec& spec, const DFormFunction& f)
    : logs(maybe_log_table(spec)), values(spec.order()), at_zero(f.eval(spec, gf2::kZero).coords) {
  const std::uint64_t n = spec.order();
  if (logs) {
    for (std::uint64_t i = 0; i < n; ++i)
      values[i] = (f.eval_power ? f.eval_power(spec, *logs, i) : f.eval(spec, logs->antilog(i))).coords;
    return;
  }
  FieldElement x = gf2::kOne;
  for (std::uint64_t i = 0; i < n; ++i) {
    values[i] = f.eval(spec, x).coords;
    x = gf2::mul(spec, x, spec.generator());
  }
}

bool image_in_subfield(const FieldSpec& spec, const FunctionTable& table) {
  const SubfieldIndex index(spec, table.logs ? &*table.logs : nullptr);
  if (index(table.at_zero) < 0) return false;
  return std::all_of(table.values.begin(), table.values.end(), [&](std::uint32_t v) { return index(v) >= 0; });
}

bool image_in_subfield(const FieldSpec& spec, const DFormFunction& f) {
  return image_in_subfield(spec, FunctionTable(spec, f));
}

namespace {

CheckMode d_form_mode(const FieldSpec& spec) {
  return spec.degree() <= kDFormExhaustiveDegree ? CheckMode::Exhaustive : CheckMode::Sampled;
}

CheckMode diff_balanced_mode(const FieldSpec& spec) {
  return spec.degree() <= kDiffBalancedExhaustiveDegree ? CheckMode::Exhaustive : CheckMode::Sampled;
}

}  // namespace

bool verify_d_form(const FieldSpec& spec, const DFormFunction& f) {
  return verify_d_form(spec, f, d_form_mode(spec));
}

bool verify_d_form(const FieldSpec& spec, const DFormFunction& f, CheckMode mode) {
  return verify_d_form(spec, f, FunctionTable(spec, f), mode);
}

bool verify_d_form(const FieldSpec& spec, const DFormFunction& f, const FunctionTable& table, CheckMode mode) {
  if (!image_in_subfield(spec, table)) return false;
  // x = 0 or y = 0 reduces to f(0) = 0.
  if (table.at_zero != 0) return false;
  const std::uint64_t n = spec.order();
  const std::uint64_t step = subfield_step(spec);
  const std::uint64_t sub = spec.subfield_order();
  const auto& values = table.values;
  const gf2::LogTable* logs = table.logs ? &*table.logs : nullptr;

  std::vector<std::uint64_t> xs;
  if (mode == CheckMode::Exhaustive) {
    xs.resize(n);
    std::iota(xs.begin(), xs.end(), std::uint64_t{0});
  } else {
    xs = sample_indices(n, 4096, kSampleSeed);
  }
  // x = alpha^i, y = beta^j = alpha^{j step}: f(alpha^{i + j step}) = beta^{jd} f(alpha^i)
  for (std::uint64_t j = 0; j < sub; ++j) {
    const std::uint64_t y_pow_d = (j * step % n) * (f.d % n) % n;  // exponent of y^d
    const FieldElement y_d = logs ? gf2::kZero : gf2::pow(spec, spec.generator(), y_pow_d);
    for (auto i : xs) {
      const std::uint32_t lhs = values[(i + j * step) % n];
      const std::uint32_t fx = values[i];
      std::uint32_t rhs;
      if (fx == 0) rhs = 0;
      else if (logs) rhs = logs->antilog((logs->dlog({fx}) + y_pow_d) % n).coords;
      else rhs = gf2::mul(spec, y_d, {fx}).coords;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool verify_balanced(const FieldSpec& spec, const std::vector<std::uint32_t>& values) {
  if (values.size() != spec.order()) return false;
  const auto logs = maybe_log_table(spec);
  return balanced_counts(spec, logs ? &*logs : nullptr, values.size(),
                         [&](std::uint64_t i) { return values[i]; });
}

bool verify_balanced(const FieldSpec& spec, const std::function<FieldElement(FieldElement)>& g) {
  std::vector<std::uint32_t> values(spec.order());
  FieldElement x = gf2::kOne;
  for (auto& v : values) {
    v = g(x).coords;
    x = gf2::mul(spec, x, spec.generator());
  }
  return verify_balanced(spec, values);
}

bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f) {
  return verify_difference_balanced(spec, f, diff_balanced_mode(spec));
}

bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f, CheckMode mode) {
  return verify_difference_balanced(spec, f, FunctionTable(spec, f), mode);
}

bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f, const FunctionTable& table,
                                CheckMode mode) {
  const std::uint64_t n = spec.order();
  if (std::gcd(f.d, n) != 1) return false;
  if (!image_in_subfield(spec, table)) return false;
  const auto& values = table.values;
  const gf2::LogTable* logs = table.logs ? &*table.logs : nullptr;

  // z = 0: f(0) - f(x) = f(x) + f(0) in characteristic 2.
  const std::uint32_t f0 = table.at_zero;
  if (!balanced_counts(spec, logs, n, [&](std::uint64_t i) { return values[i] ^ f0; })) return false;

  std::vector<std::uint64_t> shifts;
  if (mode == CheckMode::Exhaustive) {
    shifts.resize(n - 1);
    std::iota(shifts.begin(), shifts.end(), std::uint64_t{1});
  } else {
    shifts = sample_indices(n - 1, 32, kSampleSeed);
    for (auto& k : shifts) k += 1;
  }
  // z = alpha^k, k != 0
  for (auto k : shifts) {
    if (!balanced_counts(spec, logs, n, [&](std::uint64_t i) {
          const std::uint64_t ik = i + k;
          return values[ik >= n ? ik - n : ik] ^ values[i];
        }))
      return false;
  }
  return true;
}

ds::CyclicSet h_a_set(const FieldSpec& spec, const DFormFunction& f, FieldElement a) {
  return h_a_set(spec, FunctionTable(spec, f), a);
}

ds::CyclicSet h_a_set(const FieldSpec& spec, const FunctionTable& table, FieldElement a) {
  if (a == gf2::kZero || !spec.contains(a) || !gf2::in_subfield(spec, a))
    throw UsageError(fmt::format("H_a needs a nonzero subfield element, got {}", gf2::to_hex(a)));
  const std::uint64_t n = spec.order();
  const auto& values = table.values;
  std::vector<ds::Residue> members;
  BitVec hit(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (values[i] == a.coords) {
      members.push_back(static_cast<ds::Residue>(i));
      hit.set(i);
    }
  }
  const std::uint64_t q = std::uint64_t{1} << spec.m();
  if (members.size() != q)
    throw CertificationError(fmt::format("|H_a| = {} but a difference-balanced d-form function gives {}",
                                         members.size(), q));
  const std::uint64_t step = subfield_step(spec);
  for (auto i : members) {
    for (std::uint64_t j = 1; j + 1 < q; ++j) {
      if (hit.test((i + j * step) % n))
        throw CertificationError(fmt::format(
            "H_a is not disjoint from its subfield multiples: alpha^{} and beta^{}·alpha^{} both map to a",
            i, j, i));
    }
  }
  return ds::CyclicSet(n, std::move(members));
}

Sequence Sequence::from_support(ds::CyclicSet support) {
  Sequence s;
  s.bits_ = support.indicator();
  s.support_ = std::move(support);
  return s;
}

Sequence Sequence::from_bits(BitVec bits) {
  Sequence s;
  s.support_ = ds::CyclicSet::from_indicator(bits);
  s.bits_ = std::move(bits);
  return s;
}

Sequence Sequence::from_string(const std::string& text) {
  BitVec bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') bits.set(i);
    else if (text[i] != '0') throw UsageError("sequence string must contain only 0 and 1");
  }
  return from_bits(std::move(bits));
}

Construction build_sequence(const FieldSpec& spec, const ds::CyclicSet& c1prime,
                            const DFormFunction& f, const BuildOptions& options) {
  const int m = spec.m();
  const std::uint64_t n = spec.order();
  Construction out;
  out.m = m;
  out.field_poly = spec.poly();
  out.c1prime = c1prime;
  out.f_name = f.name;

  const auto p = ds::c1prime_params(m);
  if (!ds::verify_ds(c1prime, p.n, p.k, p.lambda))
    throw CertificationError(fmt::format("C1' is not a ({}, {}, {}) cyclic difference set", p.n, p.k,
                                         p.lambda));
  out.certifications.push_back({"c1prime_difference_set", "pass"});

  const FunctionTable table(spec, f);
  if (options.skip_function_certification) {
    out.certifications.push_back({"f_d_form", "skipped"});
    out.certifications.push_back({"f_difference_balanced", "skipped"});
  } else {
    if (std::gcd(f.d, n) != 1)
      throw CertificationError(fmt::format("f is not difference-balanced: gcd(d = {}, N = {}) != 1", f.d, n));
    if (!image_in_subfield(spec, table))
      throw CertificationError("f is not a d-form function: its image leaves the subfield");
    const CheckMode dform_mode = d_form_mode(spec);
    if (!verify_d_form(spec, f, table, dform_mode))
      throw CertificationError(fmt::format("f is not a {}-form function: f(xy) != y^d f(x)", f.d));
    out.certifications.push_back({"f_d_form", dform_mode == CheckMode::Exhaustive ? "pass" : "sampled"});
    const CheckMode db_mode = diff_balanced_mode(spec);
    if (!verify_difference_balanced(spec, f, table, db_mode))
      throw CertificationError("f is not difference-balanced: f(xz) - f(x) is unbalanced for some z");
    out.certifications.push_back({"f_difference_balanced", db_mode == CheckMode::Exhaustive ? "pass" : "sampled"});
  }

  const ds::CyclicSet c1 = ds::scale_set(c1prime, (std::uint64_t{1} << m) + 1, n);
  const ds::CyclicSet c2 = h_a_set(spec, table, options.a);
  out.certifications.push_back({"h_a_coset_property", "pass"});
  ds::CyclicSet c = ds::sum_set_exact(c1, c2);
  const std::uint64_t expected = (std::uint64_t{1} << (2 * m - 1)) - (std::uint64_t{1} << m);
  if (c.size() != expected)
    throw ConsistencyError(fmt::format("support has {} elements, expected 2^(2m-1) - 2^m = {}", c.size(),
                                       expected));
  out.sequence = Sequence::from_support(std::move(c));
  return out;
}

Construction build_default(int m) {
  const FieldSpec spec = gf2::find_field_spec(m);
  return build_sequence(spec, ds::singer_c1prime(spec), trace_function());
}

nlohmann::json to_json(const Construction& c) {
  const auto& s = c.sequence;
  nlohmann::json j;
  j["m"] = c.m;
  j["N"] = s.period();
  j["field_poly"] = fmt::format("0x{:x}", c.field_poly);
  j["c1prime"] = std::vector<ds::Residue>(c.c1prime.elements().begin(), c.c1prime.elements().end());
  j["f"] = c.f_name;
  j["support"] = std::vector<ds::Residue>(s.support().elements().begin(), s.support().elements().end());
  j["bits_hex"] = s.bits().to_hex();
  return j;
}

Construction construction_from_json(const nlohmann::json& j) {
  try {
    Construction c;
    c.m = j.at("m").get<int>();
    if (c.m < 2 || c.m > 16) throw ParseError(fmt::format("m = {} out of range", c.m));
    const auto n = j.at("N").get<std::uint64_t>();
    if (n != (std::uint64_t{1} << (2 * c.m)) - 1)
      throw ParseError(fmt::format("N = {} does not equal 2^(2m) - 1 for m = {}", n, c.m));
    c.field_poly = gf2::parse_hex(j.at("field_poly").get<std::string>());
    if (!gf2::is_primitive_poly(c.field_poly, 2 * c.m))
      throw ParseError("field_poly is not a primitive polynomial of degree 2m");
    const std::uint64_t sub = (std::uint64_t{1} << c.m) - 1;
    c.c1prime = ds::cyclic_set_from_json({{"modulus", sub}, {"elements", j.at("c1prime")}});
    c.f_name = j.at("f").get<std::string>();
    BitVec bits = BitVec::from_hex(j.at("bits_hex").get<std::string>(), n);
    const ds::CyclicSet support = ds::cyclic_set_from_json({{"modulus", n}, {"elements", j.at("support")}});
    c.sequence = Sequence::from_bits(std::move(bits));
    if (c.sequence.support() != support) throw ParseError("support list disagrees with bits_hex");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sequence file: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("malformed sequence file: ") + e.what());
  }
}

}  // namespace seqlab::seq
