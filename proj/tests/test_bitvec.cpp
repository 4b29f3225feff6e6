#include <doctest.h>

#include <random>

#include "seqlab/bitvec.hpp"
#include "seqlab/errors.hpp"

using seqlab::BitVec;
using seqlab::CyclicWindow;

TEST_CASE("hex image puts bit 0 in the low bit of the first byte") {
  BitVec b(12);
  b.set(0);
  b.set(9);
  CHECK(b.to_hex() == "0102");
  CHECK(BitVec::from_hex("0102", 12) == b);
  CHECK_THROWS_AS(BitVec::from_hex("01", 12), seqlab::ParseError);
  CHECK_THROWS_AS(BitVec::from_hex("01f2", 12), seqlab::ParseError);  // bit 13 is past the end
  CHECK_THROWS_AS(BitVec::from_hex("0g02", 12), seqlab::ParseError);
}

TEST_CASE("cyclic window popcounts match a direct rotation") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 127u, 128u, 200u, 1000u}) {
    BitVec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1) a.set(i);
      if (rng() & 1) b.set(i);
    }
    const CyclicWindow w(b);
    for (std::size_t shift = 0; shift < n; shift += (n > 100 ? 7 : 1)) {
      std::size_t x = 0, y = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool bi = b.test((i + shift) % n);
        x += a.test(i) != bi;
        y += a.test(i) && bi;
      }
      CHECK(w.xor_popcount(a, shift) == x);
      CHECK(w.and_popcount(a, shift) == y);
    }
  }
}
