#include "seqlab/numtheory.hpp"

#include <array>

#include <fmt/format.h>

#include "seqlab/errors.hpp"

namespace seqlab::nt {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  b %= n;
  while (e != 0) {
    if (e & 1) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

BigNat gcd(const BigNat& a, const BigNat& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigNat::from_mpz(std::move(g));
}

BigNat modpow(const BigNat& base, const BigNat& exp, const BigNat& modulus) {
  if (modulus < BigNat(2)) throw UsageError("modpow needs a modulus of at least 2");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(),
           modulus.mpz().get_mpz_t());
  return BigNat::from_mpz(std::move(r));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  // These twelve bases are a deterministic witness set for n < 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigNat& n) {
  if (n.fits_u64()) return is_prime_u64(n.to_u64());
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), kPrimalityRounds) != 0;
}

bool is_2_pseudoprime(const BigNat& n, const std::optional<BigNat>& witness) {
  if (n < BigNat(2)) throw UsageError("2-pseudoprime test needs n >= 2");
  bool composite;
  if (witness && *witness > BigNat(1) && *witness < n && (n % *witness).is_zero()) {
    composite = true;
  } else {
    composite = !is_probable_prime(n);
  }
  if (!composite) return false;
  return modpow(BigNat(2), n - BigNat(1), n) == BigNat(1);
}

bool is_prime_or_2_pseudoprime(const BigNat& n) {
  if (n < BigNat(2)) return false;
  return is_probable_prime(n) || is_2_pseudoprime(n);
}

BigNat mersenne_quotient(std::uint64_t n_prime, std::uint64_t m_prime) {
  if (n_prime == 0 || m_prime == 0)
    throw UsageError("Mersenne quotient needs n' >= 1 and m' >= 1");
  // Sum of 2^{m' j} for j < n', built directly rather than by division.
  mpz_class q;
  for (std::uint64_t j = 0; j < n_prime; ++j) mpz_setbit(q.get_mpz_t(), m_prime * j);
  return BigNat::from_mpz(std::move(q));
}

QuotientResidue mersenne_quotient_residue(std::uint64_t n_prime, std::uint64_t m_prime) {
  QuotientResidue out;
  out.quotient = BigNat::mersenne(n_prime * m_prime) / BigNat::mersenne(m_prime);
  if (out.quotient != mersenne_quotient(n_prime, m_prime))
    throw ConsistencyError("Mersenne quotient disagrees with its geometric-series form");
  const BigNat modulus = BigNat::mersenne(m_prime);
  out.residue = out.quotient % modulus;
  out.expected = BigNat(n_prime) % modulus;
  return out;
}

BigNat mod_mersenne(const BigNat& x, std::size_t k) {
  if (k == 0) throw UsageError("mod_mersenne needs k >= 1");
  const mpz_class modulus = BigNat::mersenne(k).mpz();
  mpz_class v = x.mpz();
  mpz_class lo, hi;
  while (v > modulus) {
    mpz_tdiv_r_2exp(lo.get_mpz_t(), v.get_mpz_t(), k);
    mpz_tdiv_q_2exp(hi.get_mpz_t(), v.get_mpz_t(), k);
    v = lo + hi;
  }
  if (v == modulus) v = 0;
  return BigNat::from_mpz(std::move(v));
}

std::string to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::PrimeOrPseudoNot5Mod20: return "PrimeOrPseudoNot5Mod20";
    case BoundTag::PrimeOrPseudo5Mod20: return "PrimeOrPseudo5Mod20";
    case BoundTag::General: return "General";
  }
  return "?";
}

BoundTag bound_tag_from_string(const std::string& text) {
  for (auto tag : {BoundTag::PrimeOrPseudoNot5Mod20, BoundTag::PrimeOrPseudo5Mod20, BoundTag::General})
    if (to_string(tag) == text) return tag;
  throw ParseError("unknown bound case '" + text + "'");
}

BoundCase classify_bound_case(std::uint64_t m) {
  if (m < 2) throw UsageError(fmt::format("bound case needs m >= 2, got {}", m));
  const BigNat n = BigNat::mersenne(2 * m);  // period N
  const BigNat m_minus_1(m - 1);
  if (is_prime_or_2_pseudoprime(m_minus_1)) {
    if ((m - 1) % 20 == 5) return {BoundTag::PrimeOrPseudo5Mod20, n - BigNat(6)};
    return {BoundTag::PrimeOrPseudoNot5Mod20, n - BigNat(1)};
  }
  // (N + 1) - log2(N + 1) = N + 1 - 2m
  return {BoundTag::General, n + BigNat(1) - BigNat(2 * m)};
}

}  // namespace seqlab::nt
