#include "seqlab/analysis.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

#include "seqlab/errors.hpp"

namespace seqlab::an {

namespace {

std::uint64_t expected_period(int m) { return (std::uint64_t{1} << (2 * m)) - 1; }

void require_period(const Sequence& s, int m) {
  if (m < 2 || m > 16 || s.period() != expected_period(m))
    throw UsageError(fmt::format("period {} is not 2^(2m) - 1 for m = {}", s.period(), m));
}

}  // namespace

ACSpectrum autocorrelation(const Sequence& s) {
  ACSpectrum out;
  out.period = s.period();
  out.values.resize(out.period);
  const CyclicWindow window(s.bits());
  const auto n = static_cast<std::int64_t>(out.period);
  for (std::uint64_t tau = 0; tau < out.period; ++tau)
    out.values[tau] = n - 2 * static_cast<std::int64_t>(window.xor_popcount(s.bits(), tau));
  return out;
}

std::int64_t autocorrelation_at(const Sequence& s, const CyclicWindow& window, std::uint64_t tau) {
  if (tau >= s.period()) throw UsageError(fmt::format("shift {} is not below period {}", tau, s.period()));
  return static_cast<std::int64_t>(s.period()) -
         2 * static_cast<std::int64_t>(window.xor_popcount(s.bits(), tau));
}

std::int64_t autocorrelation_at(const Sequence& s, std::uint64_t tau) {
  return autocorrelation_at(s, CyclicWindow(s.bits()), tau);
}

std::int64_t ac_from_support(const Sequence& s, std::uint64_t tau) {
  const std::uint64_t n = s.period();
  if (tau >= n) throw UsageError(fmt::format("shift {} is not below period {}", tau, n));
  // d_C(tau) = #{c in C : c - tau in C}, with the bit vector as membership table.
  std::uint64_t d = 0;
  for (auto c : s.support().elements()) d += s.bits().test((c + n - tau) % n) ? 1 : 0;
  const auto k = static_cast<std::int64_t>(s.support().size());
  return static_cast<std::int64_t>(n) - 4 * (k - static_cast<std::int64_t>(d));
}

std::int64_t ac_via_difference(const Sequence& s, std::uint64_t tau) {
  const std::int64_t via_support = ac_from_support(s, tau);
  const std::int64_t via_bits = autocorrelation_at(s, tau);
  if (via_support != via_bits)
    throw ConsistencyError(fmt::format("AC({}) is {} from the support but {} from the bits", tau,
                                       via_support, via_bits));
  return via_support;
}

DistributionCheck verify_ac_distribution(const Sequence& s, int m) {
  DistributionCheck out;
  const std::uint64_t n = s.period();
  if (m < 2 || m > 16 || n != expected_period(m)) {
    out.pass = false;
    return out;
  }
  const std::uint64_t q = std::uint64_t{1} << m;
  const std::uint64_t step = q + 1;
  auto predicted = [&](std::uint64_t tau) {
    return tau % step == 0 && tau / step >= 1 && tau / step <= q - 2 ? std::int64_t{-1} : std::int64_t{3};
  };
  auto record = [&](std::uint64_t tau, std::int64_t value) {
    if (value == -1) {
      ++out.minus1_count;
      out.minus1_positions.push_back(tau);
    } else if (value == 3) {
      ++out.three_count;
    }
    if (value != predicted(tau)) out.offending.push_back(tau);
  };

  if (n <= kFullSpectrumLimit) {
    const ACSpectrum spectrum = autocorrelation(s);
    for (std::uint64_t tau = 1; tau < n; ++tau) record(tau, spectrum.values[tau]);
    out.pass = out.offending.empty() && out.minus1_count == q - 2 && out.three_count == n - 1 - (q - 2);
    return out;
  }

  out.sampled = true;
  std::vector<std::uint64_t> taus;
  for (std::uint64_t t = 1; t <= q - 2; ++t) taus.push_back(t * step);
  std::mt19937_64 rng(0xac5eedULL);
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  for (int i = 0; i < 4096; ++i) taus.push_back(dist(rng));
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  const CyclicWindow window(s.bits());
  for (auto tau : taus)
    record(tau, static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(window.xor_popcount(s.bits(), tau)));
  out.pass = out.offending.empty() && out.minus1_count == q - 2;
  return out;
}

BigNat s_of_two(const Sequence& s) { return BigNat::from_words(s.bits().words()); }

BigNat t_of_two_inverse(const Sequence& s) {
  const std::uint64_t n = s.period();
  if (n < 2) throw UsageError("T(2^-1) needs period >= 2");
  // 2^{-1} = 2^{N-1} mod 2^N - 1, so x^{-i} evaluates to 2^{(N - i) mod N}.
  BitVec plus(n), minus(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t at = (n - i) % n;
    if (s.bits().test(i)) minus.set(at);
    else plus.set(at);
  }
  mpz_class value = BigNat::from_words(plus.words()).mpz() - BigNat::from_words(minus.words()).mpz();
  const mpz_class modulus = BigNat::mersenne(n).mpz();
  mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return BigNat::from_mpz(std::move(value));
}

std::vector<std::int64_t> cyclic_convolve(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw UsageError("cyclic convolution needs equal lengths");
  const std::size_t n = a.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    std::size_t k = i;
    for (std::size_t j = 0; j < n; ++j) {
      out[k] += a[i] * b[j];
      if (++k == n) k = 0;
    }
  }
  return out;
}

bool verify_polynomial_identity(const Sequence& s) {
  const std::uint64_t n = s.period();
  if (n == 0 || n > kPolynomialCheckLimit)
    throw UsageError(fmt::format("polynomial check supports 1 <= N <= {}, got {}", kPolynomialCheckLimit, n));
  std::vector<std::int64_t> s_poly(n), t_inv(n), ones(n, 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    s_poly[i] = s.bits().test(i) ? 1 : 0;
    // x^{-i} = x^{(N - i) mod N}
    t_inv[(n - i) % n] = s.bits().test(i) ? -1 : 1;
  }
  std::vector<std::int64_t> lhs = cyclic_convolve(s_poly, t_inv);
  for (auto& c : lhs) c *= -2;

  const ACSpectrum ac = autocorrelation(s);
  std::vector<std::int64_t> rhs = cyclic_convolve(t_inv, ones);
  for (auto& c : rhs) c = -c;
  rhs[0] += static_cast<std::int64_t>(n);
  for (std::uint64_t tau = 1; tau < n; ++tau) rhs[tau] += ac.values[tau];
  return lhs == rhs;
}

BigNat small_mersenne_factor(int m) {
  return BigNat::mersenne((std::size_t{1} << m) + 1);
}

BigNat large_mersenne_cofactor(int m) {
  return BigNat::mersenne(expected_period(m)) / small_mersenne_factor(m);
}

CongruenceCheck verify_product_congruence(const Sequence& s, int m) {
  require_period(s, m);
  const BigNat modulus = BigNat::mersenne(s.period());
  CongruenceCheck out;
  out.lhs = (s_of_two(s) * t_of_two_inverse(s)) % modulus;
  mpz_class rhs = large_mersenne_cofactor(m).mpz();
  rhs -= BigNat::power_of_two(2 * static_cast<std::size_t>(m) - 2).mpz();
  rhs *= 2;
  mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), modulus.mpz().get_mpz_t());
  out.rhs = BigNat::from_mpz(std::move(rhs));
  return out;
}

GcdAnalysis gcd_bound_analysis(const Sequence& s, int m) {
  require_period(s, m);
  GcdAnalysis out;
  const std::size_t small_exp = (std::size_t{1} << m) + 1;
  const BigNat small = small_mersenne_factor(m);
  if (m <= kExactGcdMaxM) {
    const BigNat product = (s_of_two(s) * t_of_two_inverse(s)) % BigNat::mersenne(s.period());
    out.g1 = nt::gcd(product, large_mersenne_cofactor(m));
    out.g2 = nt::gcd(product, small);
  } else {
    out.exact = false;
    const BigNat folded = (nt::mod_mersenne(s_of_two(s), small_exp) *
                           nt::mod_mersenne(t_of_two_inverse(s), small_exp)) % small;
    out.g2 = nt::gcd(folded, small);
  }
  const BigNat base = BigNat::mersenne(static_cast<std::size_t>(m) - 1);
  out.g2_identity = nt::gcd(base * base, small);
  if (nt::is_prime_or_2_pseudoprime(BigNat(static_cast<std::uint64_t>(m) - 1)))
    out.g2_expected = BigNat((m - 1) % 20 == 5 ? 31 : 1);
  return out;
}

Complexity two_adic_complexity(const Sequence& s) {
  Complexity out;
  const BigNat modulus = BigNat::mersenne(s.period());
  out.gcd = nt::gcd(s_of_two(s), modulus);
  const BigNat reduced = modulus / out.gcd;
  out.phi = reduced.bit_length() == 0 ? 0 : reduced.bit_length() - 1;
  return out;
}

bool verify_complexity_bounds(const Sequence& s, int m) {
  require_period(s, m);
  const BigNat phi(two_adic_complexity(s).phi);
  const BigNat general = BigNat(s.period() + 1 - 2 * static_cast<std::uint64_t>(m));
  return phi >= nt::classify_bound_case(static_cast<std::uint64_t>(m)).bound && phi >= general;
}

}  // namespace seqlab::an
