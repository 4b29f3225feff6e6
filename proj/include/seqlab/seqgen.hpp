#pragma once

// d-form functions into the subfield and assembly of the period-(2^{2m}-1)
// sequence whose support is C = (2^m + 1)·C1' + {i : f(alpha^i) = a}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "seqlab/bitvec.hpp"
#include "seqlab/diffset.hpp"
#include "seqlab/gf2tower.hpp"

namespace seqlab::seq {

using gf2::FieldElement;
using gf2::FieldSpec;

// f : GF(2^{2m}) -> GF(2^m) with f(xy) = y^d f(x) for subfield y.
struct DFormFunction {
  std::string name;
  std::uint64_t d = 1;
  std::function<FieldElement(const FieldSpec&, FieldElement)> eval;
  // Optional fast path: f(alpha^i) using the log table.
  std::function<FieldElement(const FieldSpec&, const gf2::LogTable&, std::uint64_t)> eval_power;
};

// Relative trace x + x^{2^m}, d = 1.
DFormFunction trace_function();
// (x + x^{2^m})^2, d = 2.
DFormFunction trace_squared_function();
// Known names: "trace", "trace2". Throws UsageError otherwise.
DFormFunction dform_by_name(const std::string& name);
std::vector<std::string> dform_names();

// f(alpha^i) for i = 0..N-1, as raw coordinates.
std::vector<std::uint32_t> tabulate_powers(const FieldSpec& spec, const DFormFunction& f);

// f tabulated over all powers of alpha, plus the log table when the degree
// allows one. Built once and shared by the verifiers below.
struct FunctionTable {
  FunctionTable(const FieldSpec& spec, const DFormFunction& f);
  std::optional<gf2::LogTable> logs;
  std::vector<std::uint32_t> values;
  std::uint32_t at_zero = 0;
};

enum class CheckMode { Exhaustive, Sampled };

// Largest degree 2m checked exhaustively by each verifier; above these the
// check runs on a fixed-seed random sample.
inline constexpr int kDFormExhaustiveDegree = 16;
inline constexpr int kDiffBalancedExhaustiveDegree = 14;

bool image_in_subfield(const FieldSpec& spec, const DFormFunction& f);
bool image_in_subfield(const FieldSpec& spec, const FunctionTable& table);

bool verify_d_form(const FieldSpec& spec, const DFormFunction& f);
bool verify_d_form(const FieldSpec& spec, const DFormFunction& f, CheckMode mode);
bool verify_d_form(const FieldSpec& spec, const DFormFunction& f, const FunctionTable& table, CheckMode mode);

// Balance of the list g(alpha^0), ..., g(alpha^{N-2}): 0 occurs 2^m - 1
// times, every nonzero subfield value 2^m times, nothing outside the subfield.
bool verify_balanced(const FieldSpec& spec, const std::vector<std::uint32_t>& values);
bool verify_balanced(const FieldSpec& spec,
                     const std::function<FieldElement(FieldElement)>& g);

// x -> f(xz) + f(x) balanced for every z != 1.
bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f);
bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f, CheckMode mode);
bool verify_difference_balanced(const FieldSpec& spec, const DFormFunction& f, const FunctionTable& table,
                                CheckMode mode);

// {i : f(alpha^i) = a} for nonzero subfield a. Throws CertificationError if
// the set does not have 2^m elements or is not disjoint from its
// beta^j-multiples, j = 1..2^m - 2.
ds::CyclicSet h_a_set(const FieldSpec& spec, const DFormFunction& f, FieldElement a);
ds::CyclicSet h_a_set(const FieldSpec& spec, const FunctionTable& table, FieldElement a);

struct Certification {
  std::string name;
  std::string status;  // "pass", "sampled", "skipped"
};

struct BuildOptions {
  FieldElement a = gf2::kOne;
  // Unsafe: trust f without checking the d-form and balance definitions.
  bool skip_function_certification = false;
};

class Sequence {
 public:
  Sequence() = default;
  static Sequence from_support(ds::CyclicSet support);
  static Sequence from_bits(BitVec bits);
  // "1101..." style string, s_0 first.
  static Sequence from_string(const std::string& bits);

  std::uint64_t period() const { return bits_.size(); }
  const BitVec& bits() const { return bits_; }
  const ds::CyclicSet& support() const { return support_; }
  bool operator==(const Sequence&) const = default;

 private:
  BitVec bits_;
  ds::CyclicSet support_;
};

struct Construction {
  int m = 0;
  std::uint64_t field_poly = 0;
  ds::CyclicSet c1prime;
  std::string f_name;
  Sequence sequence;
  std::vector<Certification> certifications;
};

// Throws CertificationError naming the failed definition.
Construction build_sequence(const FieldSpec& spec, const ds::CyclicSet& c1prime,
                            const DFormFunction& f, const BuildOptions& options = {});

// Default field, Singer C1' and relative trace.
Construction build_default(int m);

// {"m", "N", "field_poly", "c1prime", "f", "support", "bits_hex"}
nlohmann::json to_json(const Construction& c);
// Throws ParseError on malformed files or when support and bits disagree.
Construction construction_from_json(const nlohmann::json& j);

}  // namespace seqlab::seq
