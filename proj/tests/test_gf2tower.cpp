#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/gf2tower.hpp"

using namespace seqlab::gf2;

namespace {

// Exhaustive primitivity scan written independently of the library: the
// class of x must generate all 2^n - 1 nonzero residues.
std::uint64_t smallest_primitive_by_scan(int n) {
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t poly = std::uint64_t{1} << n; poly < (std::uint64_t{1} << (n + 1)); ++poly) {
    std::uint64_t x = 1, steps = 0;
    do {
      x = oracle::gf_mul(x, 2, poly, n);
      ++steps;
    } while (x != 1 && x != 0 && steps <= order);
    if (x == 1 && steps == order) return poly;
  }
  return 0;
}

}  // namespace

TEST_CASE("find_field_spec picks the smallest primitive polynomial") {
  CHECK(find_field_spec(2).poly() == 0b10011);
  CHECK(find_field_spec(3).poly() == 0b1000011);
  CHECK(smallest_primitive_by_scan(4) == 0b10011);
  CHECK(smallest_primitive_by_scan(6) == 0b1000011);
  for (int m = 2; m <= 5; ++m) CHECK(find_field_spec(m).poly() == smallest_primitive_by_scan(2 * m));
  CHECK(find_field_spec(2).generator() == FieldElement{2});
}

TEST_CASE("find_field_spec range errors") {
  CHECK_THROWS_AS(find_field_spec(1), seqlab::UsageError);
  CHECK_THROWS_AS(find_field_spec(17), seqlab::UsageError);
  CHECK_NOTHROW(find_field_spec(16));
  CHECK_THROWS_AS(FieldSpec(2, 0b10001), seqlab::UsageError);  // x^4 + 1
  CHECK_THROWS_AS(FieldSpec(2, 0b11111), seqlab::UsageError);  // irreducible, order 5
}

TEST_CASE("multiplication in GF(16)") {
  const FieldSpec f = find_field_spec(2);
  CHECK(mul(f, {0b0010}, {0b1000}) == FieldElement{0b0011});
  std::mt19937 rng(1);
  for (int i = 0; i < 16; ++i) {
    const FieldElement a{static_cast<std::uint32_t>(rng() & 15)};
    CHECK(mul(f, a, kOne) == a);
    CHECK(mul(f, a, kZero) == kZero);
  }
}

TEST_CASE("field axioms against the schoolbook oracle") {
  std::mt19937_64 rng(99);
  for (int m : {2, 3, 5, 8, 12, 16}) {
    const FieldSpec f = find_field_spec(m);
    const std::uint64_t mask = f.order();
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElement a{static_cast<std::uint32_t>(rng() & mask)};
      const FieldElement b{static_cast<std::uint32_t>(rng() & mask)};
      const FieldElement c{static_cast<std::uint32_t>(rng() & mask)};
      CHECK(mul(f, a, b).coords == oracle::gf_mul(a.coords, b.coords, f.poly(), f.degree()));
      CHECK(mul(f, a, b) == mul(f, b, a));
      CHECK(mul(f, a, mul(f, b, c)) == mul(f, mul(f, a, b), c));
      CHECK(mul(f, a, b + c) == mul(f, a, b) + mul(f, a, c));
    }
  }
}

TEST_CASE("powers and the generator order") {
  for (int m : {2, 3, 4, 6, 8}) {
    const FieldSpec f = find_field_spec(m);
    const FieldElement alpha = f.generator();
    CHECK(pow(f, alpha, 0) == kOne);
    CHECK(pow(f, kZero, 0) == kOne);
    CHECK(pow(f, alpha, f.order()) == kOne);
    CHECK(mul(f, alpha, pow(f, alpha, f.order() - 1)) == kOne);
    CHECK(multiplicative_order(f, alpha) == f.order());
    CHECK(multiplicative_order(f, subfield_generator(f)) == f.subfield_order());
  }
  // exhaustive for GF(16): no smaller e with alpha^e = 1
  const FieldSpec f = find_field_spec(2);
  for (std::uint64_t e = 1; e < 15; ++e) CHECK(pow(f, f.generator(), e) != kOne);
}

TEST_CASE("relative trace lands in the subfield with the right multiplicities") {
  const FieldSpec f = find_field_spec(2);
  CHECK(relative_trace(f, kZero) == kZero);
  std::map<std::uint32_t, int> hist;
  for (std::uint64_t i = 0; i < 15; ++i) ++hist[relative_trace(f, pow(f, f.generator(), i)).coords];
  REQUIRE(hist.size() == 4);
  for (const auto& [value, count] : hist) {
    CHECK(in_subfield(f, {value}));
    CHECK(count == (value == 0 ? 3 : 4));
  }
}

TEST_CASE("relative trace is additive and subfield-linear") {
  std::mt19937_64 rng(5);
  for (int m : {2, 3, 4, 7}) {
    const FieldSpec f = find_field_spec(m);
    const FieldElement beta = subfield_generator(f);
    for (int trial = 0; trial < 200; ++trial) {
      const FieldElement x{static_cast<std::uint32_t>(rng() & f.order())};
      const FieldElement y{static_cast<std::uint32_t>(rng() & f.order())};
      const FieldElement u = pow(f, beta, rng() % f.subfield_order());
      CHECK(in_subfield(f, u));
      CHECK(in_subfield(f, relative_trace(f, x)));
      CHECK(relative_trace(f, x + y) == relative_trace(f, x) + relative_trace(f, y));
      CHECK(relative_trace(f, mul(f, u, x)) == mul(f, u, relative_trace(f, x)));
    }
  }
}

TEST_CASE("subfield membership is the Frobenius fixed-point set") {
  const FieldSpec f = find_field_spec(3);
  int count = 0;
  for (std::uint32_t c = 0; c <= f.order(); ++c) {
    const bool fixed = pow(f, {c}, 8) == FieldElement{c};
    CHECK(in_subfield(f, {c}) == fixed);
    count += fixed;
  }
  CHECK(count == 8);
  // the trace image is exactly the 2^m subfield elements
  std::set<std::uint32_t> image;
  for (std::uint32_t c = 0; c <= f.order(); ++c) image.insert(relative_trace(f, {c}).coords);
  CHECK(image.size() == 8);
}

TEST_CASE("log table") {
  const FieldSpec f = find_field_spec(3);
  const LogTable t = build_log_table(f);
  CHECK(t.antilog(0) == kOne);
  CHECK(t.antilog(1) == f.generator());
  const FieldElement a2 = pow(f, f.generator(), 2), a3 = pow(f, f.generator(), 3);
  CHECK(t.dlog(mul(f, a2, a3)) == 5);
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    CHECK(t.dlog(t.antilog(i)) == i);
    CHECK(t.antilog(i) == pow(f, f.generator(), i));
  }
  CHECK_THROWS_AS(build_log_table(find_field_spec(13)), seqlab::UsageError);
}

TEST_CASE("hex helpers") {
  CHECK(to_hex({0x13}) == "0x13");
  CHECK(parse_hex("0x1053") == 0x1053);
  CHECK(parse_hex("1d") == 0x1d);
  CHECK_THROWS_AS(parse_hex("0xzz"), seqlab::ParseError);
  CHECK(find_field_spec(6).poly_hex() == "0x1053");
}
