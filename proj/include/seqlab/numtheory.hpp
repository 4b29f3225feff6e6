#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "seqlab/bignat.hpp"

namespace seqlab::nt {

BigNat gcd(const BigNat& a, const BigNat& b);

// base^exp mod modulus; throws UsageError when modulus < 2.
BigNat modpow(const BigNat& base, const BigNat& exp, const BigNat& modulus);

// Deterministic Miller-Rabin for n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Probability that a composite passes is_probable_prime: GMP runs a
// Baillie-PSW test followed by this many Miller-Rabin rounds, so the error
// is at most 4^-kPrimalityRounds.
inline constexpr int kPrimalityRounds = 40;

// Exact below 2^64; above, see kPrimalityRounds.
bool is_probable_prime(const BigNat& n);

// Composite n with 2^{n-1} = 1 (mod n). When `witness` is a proper divisor
// of n it settles compositeness without a primality test. Throws UsageError
// for n < 2.
bool is_2_pseudoprime(const BigNat& n, const std::optional<BigNat>& witness = std::nullopt);

// Prime, or a base-2 Fermat pseudoprime. 1 is neither.
bool is_prime_or_2_pseudoprime(const BigNat& n);

// (2^{n' m'} - 1) / (2^{m'} - 1), which is always exact.
BigNat mersenne_quotient(std::uint64_t n_prime, std::uint64_t m_prime);

struct QuotientResidue {
  BigNat quotient;
  BigNat residue;   // quotient mod (2^{m'} - 1)
  BigNat expected;  // n' mod (2^{m'} - 1)
  bool holds() const { return residue == expected; }
};

// Computes the quotient and checks it is congruent to n' mod 2^{m'} - 1.
// Throws UsageError when n' or m' is zero.
QuotientResidue mersenne_quotient_residue(std::uint64_t n_prime, std::uint64_t m_prime);

// x mod (2^k - 1) by summing k-bit chunks.
BigNat mod_mersenne(const BigNat& x, std::size_t k);

enum class BoundTag { PrimeOrPseudoNot5Mod20, PrimeOrPseudo5Mod20, General };

std::string to_string(BoundTag tag);
BoundTag bound_tag_from_string(const std::string& text);

// Guaranteed lower bound on the 2-adic complexity of the period-(2^{2m}-1)
// almost-optimal sequence, split on the arithmetic of m - 1.
struct BoundCase {
  BoundTag tag;
  BigNat bound;
};

// Throws UsageError for m < 2.
BoundCase classify_bound_case(std::uint64_t m);

}  // namespace seqlab::nt
