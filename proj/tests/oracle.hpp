#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Schoolbook GF(2)[x] product followed by long division.
inline std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, std::uint64_t poly, int n) {
  std::uint64_t product = 0;
  for (int i = 0; i < n; ++i)
    if ((b >> i) & 1) product ^= a << i;
  for (int bit = 2 * n - 2; bit >= n; --bit)
    if ((product >> bit) & 1) product ^= poly << (bit - n);
  return product;
}

inline std::int64_t ac(const std::vector<int>& s, std::size_t tau) {
  const std::size_t n = s.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += ((s[i] + s[(i + tau) % n]) % 2 == 0) ? 1 : -1;
  return total;
}

inline std::uint64_t diff(const std::vector<std::uint64_t>& c, std::uint64_t n, std::uint64_t tau) {
  const std::set<std::uint64_t> members(c.begin(), c.end());
  std::uint64_t count = 0;
  for (auto x : c)
    if (members.count((x + tau) % n)) ++count;  // |C ∩ (C - tau)| = |C ∩ (C + tau)|
  return count;
}

// Period-(2^k - 1) sequence from s_{i+k} = sum taps_j s_{i+j}, seed all ones.
inline std::vector<int> lfsr(const std::vector<int>& taps, std::size_t length) {
  const std::size_t k = taps.size();
  std::vector<int> s(k, 1);
  while (s.size() < length) {
    int next = 0;
    const std::size_t i = s.size() - k;
    for (std::size_t j = 0; j < k; ++j) next ^= taps[j] & s[i + j];
    s.push_back(next);
  }
  s.resize(length);
  return s;
}

inline std::vector<int> random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> s(n);
  for (auto& b : s) b = static_cast<int>(rng() & 1);
  return s;
}

}  // namespace oracle
