#pragma once

// Autocorrelation spectra, 2-adic complexity, and executable checks of the
// congruences and gcd identities behind the complexity bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/bignat.hpp"
#include "seqlab/numtheory.hpp"
#include "seqlab/seqgen.hpp"

namespace seqlab::an {

using seq::Sequence;

struct ACSpectrum {
  std::uint64_t period = 0;
  std::vector<std::int64_t> values;  // AC(0..N-1)
};

// Full spectrum by rotate/xor/popcount, O(N^2 / 64).
ACSpectrum autocorrelation(const Sequence& s);
// AC(tau) alone, same kernel.
std::int64_t autocorrelation_at(const Sequence& s, std::uint64_t tau);
// Same, reusing a window built from s.bits().
std::int64_t autocorrelation_at(const Sequence& s, const CyclicWindow& window, std::uint64_t tau);

// N - 4(|C| - d_C(tau)) from the support. Throws ConsistencyError when it
// disagrees with the bitwise path.
std::int64_t ac_via_difference(const Sequence& s, std::uint64_t tau);
// Support-path value without the cross-check.
std::int64_t ac_from_support(const Sequence& s, std::uint64_t tau);

// Full spectra are computed up to this period; above it only the
// (2^m + 1)-multiples and a fixed-seed random sample are evaluated.
inline constexpr std::uint64_t kFullSpectrumLimit = std::uint64_t{1} << 17;

struct DistributionCheck {
  bool pass = false;
  bool sampled = false;
  std::uint64_t minus1_count = 0;
  std::uint64_t three_count = 0;
  std::vector<std::uint64_t> minus1_positions;
  // Shifts whose value disagrees with the predicted two-level pattern.
  std::vector<std::uint64_t> offending;
  explicit operator bool() const { return pass; }
};

// AC(tau) = -1 exactly on {(2^m + 1) t : 1 <= t <= 2^m - 2}, 3 elsewhere off-peak.
DistributionCheck verify_ac_distribution(const Sequence& s, int m);

// S(2) = sum s_i 2^i.
BigNat s_of_two(const Sequence& s);
// T(2^{-1}) = sum (-1)^{s_i} 2^{(N - i) mod N} reduced into [0, 2^N - 1).
BigNat t_of_two_inverse(const Sequence& s);

// c_k = sum_{i + j = k mod N} a_i b_j
std::vector<std::int64_t> cyclic_convolve(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b);

inline constexpr std::uint64_t kPolynomialCheckLimit = 4096;

// -2 S(x) T(x^{-1}) = N + sum AC(tau) x^tau - T(x^{-1}) sum x^i  (mod x^N - 1),
// both sides as integer coefficient vectors. Holds for every binary
// sequence. Throws UsageError when N > kPolynomialCheckLimit.
bool verify_polynomial_identity(const Sequence& s);

// 2^{2^m + 1} - 1, a divisor of 2^N - 1 because 2^m + 1 divides N.
BigNat small_mersenne_factor(int m);
// (2^N - 1) / (2^{2^m + 1} - 1)
BigNat large_mersenne_cofactor(int m);

struct CongruenceCheck {
  BigNat lhs;  // S(2) T(2^{-1}) mod 2^N - 1
  BigNat rhs;  // -2 (2^{2m-2} - cofactor) mod 2^N - 1
  bool holds() const { return lhs == rhs; }
};

// Throws UsageError unless the period is 2^{2m} - 1.
CongruenceCheck verify_product_congruence(const Sequence& s, int m);

struct GcdAnalysis {
  bool exact = true;            // false: g1 and the full product were skipped
  std::optional<BigNat> g1;     // gcd(P, cofactor), P = S(2) T(2^{-1}) mod 2^N - 1
  BigNat g2;                    // gcd(P, 2^{2^m+1} - 1)
  BigNat g2_identity;           // gcd((2^{m-1} - 1)^2, 2^{2^m+1} - 1)
  std::optional<BigNat> g2_expected;  // 31 or 1 when m - 1 is prime or a 2-pseudoprime
  bool g1_is_one() const { return g1 && *g1 == BigNat(1); }
  bool g2_matches_identity() const { return g2 == g2_identity; }
  bool g2_matches_expected() const { return !g2_expected || g2 == *g2_expected; }
  bool pass() const {
    return (!exact || g1_is_one()) && g2_matches_identity() && g2_matches_expected();
  }
};

inline constexpr int kExactGcdMaxM = 8;

// Exact for m <= kExactGcdMaxM; above, g2 comes from folding S(2) and
// T(2^{-1}) modulo 2^{2^m+1} - 1 and g1 is not computed.
GcdAnalysis gcd_bound_analysis(const Sequence& s, int m);

struct Complexity {
  BigNat gcd;       // gcd(S(2), 2^N - 1)
  std::uint64_t phi = 0;
};

// floor(log2((2^N - 1) / gcd(2^N - 1, S(2)))).
Complexity two_adic_complexity(const Sequence& s);

// Phi >= classify_bound_case(m).bound and Phi >= N + 1 - 2m.
bool verify_complexity_bounds(const Sequence& s, int m);

}  // namespace seqlab::an
