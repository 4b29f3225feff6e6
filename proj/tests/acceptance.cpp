// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracle.hpp"
#include "seqlab/analysis.hpp"
#include "seqlab/diffset.hpp"
#include "seqlab/numtheory.hpp"
#include "seqlab/seqgen.hpp"

using seqlab::BigNat;
using namespace seqlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

seq::Sequence from_ints(const std::vector<int>& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v.set(i);
  return seq::Sequence::from_bits(v);
}

// Built once and shared across criteria.
std::vector<seq::Construction> constructions;

const seq::Sequence& sequence_for(int m) { return constructions[static_cast<std::size_t>(m - 2)].sequence; }

Outcome autocorrelation_distribution() {
  Outcome r;
  for (int m = 2; m <= 8; ++m) {
    const auto& s = sequence_for(m);
    const an::ACSpectrum ac = an::autocorrelation(s);
    const std::uint64_t n = s.period(), step = pow2(m) + 1;
    std::uint64_t minus1 = 0, three = 0;
    for (std::uint64_t tau = 1; tau < n; ++tau) {
      const bool multiple = tau % step == 0;
      const std::int64_t want = multiple ? -1 : 3;
      r.require(ac.values[tau] == want, fmt::format("m={} tau={} AC={}", m, tau, ac.values[tau]));
      minus1 += ac.values[tau] == -1;
      three += ac.values[tau] == 3;
    }
    r.require(minus1 == pow2(m) - 2, fmt::format("m={} has {} shifts at -1", m, minus1));
    r.require(three == n - 1 - (pow2(m) - 2), fmt::format("m={} has {} shifts at 3", m, three));
  }
  return r;
}

Outcome ads_certificate() {
  Outcome r;
  for (int m = 2; m <= 6; ++m) {
    const auto& c = sequence_for(m).support();
    const std::uint64_t lambda = pow2(2 * m - 2) - pow2(m);
    r.require(ds::verify_ads(c, pow2(2 * m) - 1, pow2(2 * m - 1) - pow2(m), lambda, pow2(m) - 2),
              fmt::format("m={} ADS", m));
    for (std::uint64_t t = 1; t <= pow2(m) - 2; ++t)
      r.require(ds::difference_function(c, (pow2(m) + 1) * t) == lambda, fmt::format("m={} d_C at t={}", m, t));
  }
  return r;
}

Outcome polynomial_identity() {
  Outcome r;
  std::mt19937_64 rng(0x7e57);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + rng() % 509;
    r.require(an::verify_polynomial_identity(from_ints(oracle::random_bits(rng, n))), fmt::format("random N={}", n));
  }
  for (int m = 2; m <= 6; ++m) r.require(an::verify_polynomial_identity(sequence_for(m)), fmt::format("m={}", m));
  return r;
}

Outcome product_congruence() {
  Outcome r;
  for (int m = 2; m <= 8; ++m) r.require(an::verify_product_congruence(sequence_for(m), m).holds(), fmt::format("m={}", m));
  return r;
}

Outcome gcd_values() {
  Outcome r;
  for (int m = 2; m <= 8; ++m) {
    const an::GcdAnalysis g = an::gcd_bound_analysis(sequence_for(m), m);
    r.require(g.g2 == g.g2_identity, fmt::format("m={} g2 != identity", m));
    if (m == 3 || m == 4 || m == 8) r.require(g.g2 == BigNat(1), fmt::format("m={} g2={}", m, g.g2.to_decimal()));
    if (m == 6) r.require(g.g2 == BigNat(31), fmt::format("m=6 g2={}", g.g2.to_decimal()));
    if (m <= 6) r.require(g.g1 && *g.g1 == BigNat(1), fmt::format("m={} g1", m));
  }
  return r;
}

Outcome complexity_bounds() {
  Outcome r;
  for (int m = 2; m <= 8; ++m) {
    const an::Complexity cx = an::two_adic_complexity(sequence_for(m));
    const std::uint64_t n = pow2(2 * m) - 1, phi = cx.phi;
    r.require(phi + 2 * m >= n + 1, fmt::format("m={} phi={} below N+1-2m", m, phi));
    r.require(2 * phi > n, fmt::format("m={} phi={} not above N/2", m, phi));
    if (m == 3 || m == 4 || m == 8) {
      r.require(phi >= n - 1, fmt::format("m={} phi={} below N-1", m, phi));
      r.require(cx.gcd == BigNat(1), fmt::format("m={} gcd(S(2), 2^N-1) != 1", m));
    }
    if (m == 6) r.require(phi >= n - 6, fmt::format("m=6 phi={} below N-6", phi));
  }
  return r;
}

Outcome number_theory() {
  Outcome r;
  r.require(nt::is_2_pseudoprime(341) && nt::is_2_pseudoprime(561), "341 / 561");
  int primes = 0;
  for (std::uint64_t p = 2; primes < 20; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    ++primes;
    r.require(!nt::is_2_pseudoprime(p), fmt::format("prime {}", p));
  }
  const BigNat big = BigNat::mersenne(341);
  r.require((big % BigNat::mersenne(11)).is_zero(), "2^11-1 does not divide 2^341-1");
  r.require(nt::modpow(2, big - BigNat(1), big) == BigNat(1), "2^(2^341-2) mod 2^341-1");
  for (std::uint64_t a = 1; a <= 40; ++a)
    for (std::uint64_t b = 1; b <= 40; ++b)
      r.require(nt::mersenne_quotient_residue(a, b).holds(), fmt::format("quotient residue n'={} m'={}", a, b));
  for (std::uint64_t a = 1; a <= 64; ++a)
    for (std::uint64_t b = 1; b <= 64; ++b)
      r.require(nt::gcd(BigNat::mersenne(a), BigNat::mersenne(b)) == BigNat::mersenne(std::gcd(a, b)),
                fmt::format("mersenne gcd a={} b={}", a, b));
  return r;
}

Outcome m_sequences() {
  Outcome r;
  r.require(an::two_adic_complexity(seq::Sequence::from_string("1110100")).phi == 6, "1110100");
  // s_{i+3} = s_{i+2} + s_i and s_{i+3} = s_{i+1} + s_i
  for (const auto& taps : {std::vector<int>{1, 0, 1}, std::vector<int>{1, 1, 0}}) {
    const auto base = oracle::lfsr(taps, 7);
    for (std::size_t shift = 0; shift < 7; ++shift) {
      std::vector<int> rotated(7);
      for (std::size_t i = 0; i < 7; ++i) rotated[i] = base[(i + shift) % 7];
      const auto s = from_ints(rotated);
      std::int64_t worst = 0;
      for (std::uint64_t tau = 1; tau < 7; ++tau) worst = std::max(worst, std::abs(an::autocorrelation_at(s, tau) + 1));
      r.require(worst == 0, "not an m-sequence");
      r.require(an::two_adic_complexity(s).phi == 6, fmt::format("shift {} phi != 6", shift));
    }
  }
  return r;
}

Outcome cross_path() {
  Outcome r;
  std::mt19937_64 rng(0xc055);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 1024;
    const auto s = from_ints(oracle::random_bits(rng, n));
    const an::ACSpectrum ac = an::autocorrelation(s);
    for (std::uint64_t tau = 0; tau < n; ++tau) {
      const std::int64_t v = ac.values[tau];
      r.require(v == an::ac_from_support(s, tau), fmt::format("N={} tau={}", n, tau));
      r.require(((v - static_cast<std::int64_t>(n)) % 4 + 4) % 4 == 0, fmt::format("N={} tau={} mod 4", n, tau));
    }
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: untimed
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "autocorrelation distribution m=2..8", 60, autocorrelation_distribution},
      {2, "almost difference set certificate m=2..6", 0, ads_certificate},
      {3, "polynomial identity on random and constructed sequences", 0, polynomial_identity},
      {4, "product congruence m=2..8", 30, product_congruence},
      {5, "gcd values g1 and g2", 0, gcd_values},
      {6, "2-adic complexity bounds m=2..8", 0, complexity_bounds},
      {7, "number-theory suite", 10, number_theory},
      {8, "period-7 m-sequences have complexity 6", 0, m_sequences},
      {9, "bitwise and difference-function autocorrelation agree", 0, cross_path},
  };

  using clock = std::chrono::steady_clock;
  const auto build_start = clock::now();
  for (int m = 2; m <= 8; ++m) constructions.push_back(seq::build_default(m));
  const double build_seconds = std::chrono::duration<double>(clock::now() - build_start).count();
  std::printf("built sequences m=2..8 in %.2fs\n", build_seconds);

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    // construction time counts toward the distribution criterion
    if (c.id == 1) seconds += build_seconds;
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = fmt::format("took {:.2f}s, limit {}s", seconds, c.limit_seconds);
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s (%.2fs)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.pass ? "" : (" -- " + o.detail).c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
