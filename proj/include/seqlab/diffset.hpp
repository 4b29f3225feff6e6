#pragma once

// Subsets of Z_N, their difference functions, and difference-set /
// almost-difference-set certification.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "seqlab/bitvec.hpp"
#include "seqlab/gf2tower.hpp"

namespace seqlab::ds {

using Residue = std::uint32_t;

class CyclicSet {
 public:
  CyclicSet() = default;
  // Sorts and checks the elements; throws UsageError on duplicates or
  // out-of-range residues.
  CyclicSet(std::uint64_t modulus, std::vector<Residue> elements);
  static CyclicSet from_indicator(const BitVec& bits);

  std::uint64_t modulus() const { return modulus_; }
  std::span<const Residue> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Residue r) const;

  BitVec indicator() const;
  // {c + shift mod N}
  CyclicSet translated(std::uint64_t shift) const;

  bool operator==(const CyclicSet&) const = default;

 private:
  std::uint64_t modulus_ = 1;
  std::vector<Residue> elements_;
};

// JSON set file: {"modulus": int, "elements": [int, ...]}, sorted and
// duplicate-free. Throws ParseError otherwise.
CyclicSet cyclic_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CyclicSet& set);
CyclicSet load_cyclic_set(const std::string& path);

// Histogram of d_C(tau) over tau = 1..N-1: value -> number of shifts.
struct DiffProfile {
  std::map<std::uint64_t, std::uint64_t> counts;
  bool operator==(const DiffProfile&) const = default;
};

// |C ∩ (tau + C)|; throws UsageError unless 0 <= tau < N.
std::uint64_t difference_function(const CyclicSet& set, std::uint64_t tau);

// Packed-bit kernel at or below this modulus, sorted merge above.
inline constexpr std::uint64_t kPackedProfileLimit = std::uint64_t{1} << 17;

DiffProfile diff_profile(const CyclicSet& set);

bool verify_ds(const CyclicSet& set, std::uint64_t n, std::uint64_t k, std::uint64_t lambda);
bool verify_ads(const CyclicSet& set, std::uint64_t n, std::uint64_t k, std::uint64_t lambda,
                std::uint64_t t);

// Zero positions of the subfield m-sequence: {i < 2^m - 1 : Tr(beta^i) = 0}
// with beta = alpha^{2^m + 1}. Certified as a
// (2^m - 1, 2^{m-1} - 1, 2^{m-2} - 1) difference set before returning.
CyclicSet singer_c1prime(const gf2::FieldSpec& spec);

// Difference-set parameters every C1' must have for a given m.
struct DsParams {
  std::uint64_t n, k, lambda;
};
DsParams c1prime_params(int m);

// {factor * c mod new_modulus}; throws ConsistencyError if two images collide.
CyclicSet scale_set(const CyclicSet& set, std::uint64_t factor, std::uint64_t new_modulus);

// {a + b mod N}. Throws UsageError on mismatched moduli.
CyclicSet sum_set(const CyclicSet& a, const CyclicSet& b);
// As sum_set, but all |A|·|B| sums must be distinct (ConsistencyError if not).
CyclicSet sum_set_exact(const CyclicSet& a, const CyclicSet& b);

}  // namespace seqlab::ds
