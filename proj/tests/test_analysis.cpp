#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "seqlab/analysis.hpp"
#include "seqlab/errors.hpp"

using namespace seqlab::an;
using seqlab::BigNat;
using seqlab::seq::build_default;

namespace {

Sequence from_ints(const std::vector<int>& bits) {
  seqlab::BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v.set(i);
  return Sequence::from_bits(v);
}

std::vector<int> to_ints(const Sequence& s) {
  std::vector<int> out(s.period());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.bits().test(i);
  return out;
}

using u128 = unsigned __int128;
using i128 = __int128;

// S(2) T(2^{-1}) and the predicted right side, both mod 2^N - 1, in 128-bit
// arithmetic. Valid for N <= 63.
std::pair<u128, u128> congruence_by_int128(const std::vector<int>& s, int m) {
  const std::size_t n = s.size();
  const u128 mod = (u128{1} << n) - 1;
  u128 s2 = 0;
  i128 t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i]) s2 += u128{1} << i;
    const i128 term = i128{1} << ((n - i) % n);
    t += s[i] ? -term : term;
  }
  t %= static_cast<i128>(mod);
  if (t < 0) t += static_cast<i128>(mod);
  const u128 lhs = (s2 % mod) * static_cast<u128>(t) % mod;
  const u128 small = (u128{1} << ((1u << m) + 1)) - 1;
  const i128 inner = (i128{1} << (2 * m - 2)) - static_cast<i128>(mod / small);
  i128 rhs = (-2 * inner) % static_cast<i128>(mod);
  if (rhs < 0) rhs += static_cast<i128>(mod);
  return {lhs, static_cast<u128>(rhs)};
}

BigNat from_u128(u128 x) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x >> 64)};
  return BigNat::from_words(words);
}

}  // namespace

TEST_CASE("m-sequence has ideal autocorrelation") {
  const auto s = Sequence::from_string("1110100");
  const ACSpectrum ac = autocorrelation(s);
  CHECK(ac.period == 7);
  CHECK(ac.values[0] == 7);
  for (std::size_t tau = 1; tau < 7; ++tau) CHECK(ac.values[tau] == -1);
  CHECK(s_of_two(s) == BigNat(23));
  CHECK(two_adic_complexity(s).phi == 6);
}

TEST_CASE("m = 2 spectrum") {
  const auto c = build_default(2);
  const ACSpectrum ac = autocorrelation(c.sequence);
  for (std::size_t tau = 1; tau < 15; ++tau) CHECK(ac.values[tau] == ((tau == 5 || tau == 10) ? -1 : 3));
  const auto check = verify_ac_distribution(c.sequence, 2);
  CHECK(check.pass);
  CHECK_FALSE(check.sampled);
  CHECK(check.minus1_positions == std::vector<std::uint64_t>{5, 10});
  CHECK(check.three_count == 12);
}

TEST_CASE("distribution check rejects broken sequences") {
  auto bits = to_ints(build_default(3).sequence);
  bits[10] ^= 1;
  const auto broken = verify_ac_distribution(from_ints(bits), 3);
  CHECK_FALSE(broken.pass);
  CHECK_FALSE(broken.offending.empty());
  CHECK_FALSE(verify_ac_distribution(from_ints(std::vector<int>(15, 0)), 2).pass);
  for (int m = 2; m <= 6; ++m) CHECK(verify_ac_distribution(build_default(m).sequence, m).pass);
}

TEST_CASE("autocorrelation paths agree with brute force on random sequences") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const auto bits = oracle::random_bits(rng, n);
    const Sequence s = from_ints(bits);
    const ACSpectrum ac = autocorrelation(s);
    const seqlab::CyclicWindow window(s.bits());
    for (std::size_t tau = 0; tau < n; ++tau) {
      const auto expected = oracle::ac(bits, tau);
      CHECK(ac.values[tau] == expected);
      CHECK(autocorrelation_at(s, tau) == expected);
      CHECK(autocorrelation_at(s, window, tau) == expected);
      CHECK(ac_from_support(s, tau) == expected);
      CHECK(ac_via_difference(s, tau) == expected);
      CHECK(((expected - static_cast<std::int64_t>(n)) % 4 + 4) % 4 == 0);
      CHECK(ac.values[tau] == ac.values[(n - tau) % n]);
    }
  }
}

TEST_CASE("S(2) and T(2^{-1})") {
  CHECK(t_of_two_inverse(Sequence::from_string("100")) == BigNat(5));  // -1 + 2^2 + 2^1
  CHECK(t_of_two_inverse(Sequence::from_string("0000000")) == BigNat(0));  // sum 2^i = 2^N - 1
  CHECK(s_of_two(Sequence::from_string("0000")) == BigNat(0));
  const auto c = build_default(3);
  CHECK(s_of_two(c.sequence) == BigNat::from_hex("0x113024b150971de"));
  CHECK(t_of_two_inverse(c.sequence) == BigNat::from_hex("0x8e2deae5b7e6efe"));
}

TEST_CASE("cyclic convolution") {
  CHECK(cyclic_convolve({1, 2, 3}, {1, 0, 0}) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(cyclic_convolve({1, 2, 3}, {0, 1, 0}) == std::vector<std::int64_t>{3, 1, 2});
  CHECK(cyclic_convolve({1, -1}, {1, 1}) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("polynomial identity holds for arbitrary sequences") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 509;
    CHECK(verify_polynomial_identity(from_ints(oracle::random_bits(rng, n))));
  }
  CHECK(verify_polynomial_identity(Sequence::from_string("0000")));
  CHECK(verify_polynomial_identity(Sequence::from_string("1111")));
  for (int m = 2; m <= 6; ++m) CHECK(verify_polynomial_identity(build_default(m).sequence));
  seqlab::BitVec big((std::uint64_t{1} << 13) - 1);
  CHECK_THROWS_AS(verify_polynomial_identity(Sequence::from_bits(big)), seqlab::UsageError);
}

TEST_CASE("product congruence against a 128-bit oracle") {
  for (int m : {2, 3}) {
    const auto c = build_default(m);
    const auto [lhs, rhs] = congruence_by_int128(to_ints(c.sequence), m);
    CHECK(lhs == rhs);
    const CongruenceCheck check = verify_product_congruence(c.sequence, m);
    CHECK(check.lhs == from_u128(lhs));
    CHECK(check.rhs == from_u128(rhs));
  }
  for (int m = 4; m <= 8; ++m) CHECK(verify_product_congruence(build_default(m).sequence, m).holds());
  CHECK_THROWS_AS(verify_product_congruence(build_default(2).sequence, 3), seqlab::UsageError);
}

TEST_CASE("congruence fails once a bit is flipped") {
  auto bits = to_ints(build_default(3).sequence);
  bits[5] ^= 1;
  const auto [lhs, rhs] = congruence_by_int128(bits, 3);
  CHECK(verify_product_congruence(from_ints(bits), 3).holds() == (lhs == rhs));
  CHECK_FALSE(verify_product_congruence(from_ints(bits), 3).holds());
}

TEST_CASE("Mersenne factors") {
  CHECK(small_mersenne_factor(2) == BigNat(31));
  CHECK(large_mersenne_cofactor(2) == BigNat(1057));  // 32767 / 31
  CHECK(small_mersenne_factor(3) == BigNat(511));
  CHECK(large_mersenne_cofactor(3) * BigNat(511) == BigNat::mersenne(63));
}

TEST_CASE("gcd analysis matches the frozen oracle") {
  // m: (g1, g2, gcd(S(2), 2^N - 1), phi)
  const std::vector<std::tuple<int, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> frozen = {
      {2, 1, 1, 1, 14},    {3, 1, 1, 1, 62},       {4, 1, 1, 1, 254},      {5, 1, 1, 1, 1022},
      {6, 1, 31, 31, 4090}, {7, 1, 7, 7, 16380}, {8, 1, 1, 1, 65534}};
  for (const auto& [m, g1, g2, full, phi] : frozen) {
    CAPTURE(m);
    const auto s = build_default(m).sequence;
    const GcdAnalysis g = gcd_bound_analysis(s, m);
    CHECK(g.exact);
    REQUIRE(g.g1.has_value());
    CHECK(*g.g1 == BigNat(g1));
    CHECK(g.g2 == BigNat(g2));
    CHECK(g.g2_matches_identity());
    CHECK(g.pass());
    const Complexity cx = two_adic_complexity(s);
    CHECK(cx.gcd == BigNat(full));
    CHECK(cx.phi == phi);
    CHECK(verify_complexity_bounds(s, m));
  }
}
