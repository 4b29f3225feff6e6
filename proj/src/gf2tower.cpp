#include "seqlab/gf2tower.hpp"

#include <bit>

#include <fmt/format.h>

#include "seqlab/errors.hpp"

namespace seqlab::gf2 {

namespace {

// Carry-less product of two elements of degree < n, reduced mod poly.
std::uint32_t clmul_reduce(std::uint64_t a, std::uint64_t b, std::uint64_t poly, int n) {
  std::uint64_t acc = 0;
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
  }
  for (int bit = 2 * n - 2; bit >= n; --bit) {
    if ((acc >> bit) & 1) acc ^= poly << (bit - n);
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t pow_raw(std::uint64_t a, std::uint64_t e, std::uint64_t poly, int n) {
  std::uint64_t result = 1;
  while (e != 0) {
    if (e & 1) result = clmul_reduce(result, a, poly, n);
    a = clmul_reduce(a, a, poly, n);
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_primitive_poly(std::uint64_t poly, int n) {
  if (n < 1 || n > 32 || std::bit_width(poly) != static_cast<unsigned>(n + 1)) return false;
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  if (pow_raw(2 % poly, order, poly, n) != 1) return false;
  for (auto p : distinct_prime_factors(order)) {
    if (pow_raw(2 % poly, order / p, poly, n) == 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int m, std::uint64_t poly) : m_(m), poly_(poly) {
  if (m < 2 || m > 16)
    throw UsageError(fmt::format("m = {} is outside the supported range 2..16", m));
  if (!is_primitive_poly(poly, 2 * m))
    throw UsageError(fmt::format("0x{:x} is not a primitive polynomial of degree {}", poly, 2 * m));
}

std::string FieldSpec::poly_hex() const { return fmt::format("0x{:x}", poly_); }

FieldSpec find_field_spec(int m) {
  if (m < 2 || m > 16)
    throw UsageError(fmt::format("m = {} is outside the supported range 2..16", m));
  const int n = 2 * m;
  // Primitive polynomials have a nonzero constant term, so odd masks only.
  for (std::uint64_t poly = (std::uint64_t{1} << n) | 1; poly < (std::uint64_t{1} << (n + 1));
       poly += 2) {
    if (is_primitive_poly(poly, n)) return FieldSpec(m, poly);
  }
  throw ConsistencyError(fmt::format("no primitive polynomial of degree {} found", n));
}

FieldElement mul(const FieldSpec& spec, FieldElement a, FieldElement b) {
  return {clmul_reduce(a.coords, b.coords, spec.poly(), spec.degree())};
}

FieldElement square(const FieldSpec& spec, FieldElement a) { return mul(spec, a, a); }

FieldElement pow(const FieldSpec& spec, FieldElement a, std::uint64_t e) {
  return {pow_raw(a.coords, e, spec.poly(), spec.degree())};
}

FieldElement inverse(const FieldSpec& spec, FieldElement a) {
  if (a == kZero) throw UsageError("zero has no multiplicative inverse");
  return pow(spec, a, spec.order() - 1);
}

FieldElement frobenius(const FieldSpec& spec, FieldElement a, int k) {
  for (int i = 0; i < k; ++i) a = square(spec, a);
  return a;
}

FieldElement relative_trace(const FieldSpec& spec, FieldElement x) {
  return x + frobenius(spec, x, spec.m());
}

FieldElement subfield_trace(const FieldSpec& spec, FieldElement u) {
  FieldElement acc = kZero;
  for (int j = 0; j < spec.m(); ++j) {
    acc = acc + u;
    u = square(spec, u);
  }
  return acc;
}

bool in_subfield(const FieldSpec& spec, FieldElement e) {
  return frobenius(spec, e, spec.m()) == e;
}

FieldElement subfield_generator(const FieldSpec& spec) {
  return pow(spec, spec.generator(), (std::uint64_t{1} << spec.m()) + 1);
}

std::uint64_t multiplicative_order(const FieldSpec& spec, FieldElement a) {
  if (a == kZero) throw UsageError("zero has no multiplicative order");
  std::uint64_t order = spec.order();
  for (auto p : distinct_prime_factors(spec.order())) {
    while (order % p == 0 && pow(spec, a, order / p) == kOne) order /= p;
  }
  return order;
}

LogTable::LogTable(const FieldSpec& spec) {
  if (spec.degree() > kLogTableMaxDegree)
    throw UsageError(fmt::format("log table too large for degree {} (limit {})", spec.degree(),
                                 kLogTableMaxDegree));
  const std::uint64_t n = spec.order();
  antilog_.resize(n);
  dlog_.assign(n + 1, 0);
  FieldElement x = kOne;
  for (std::uint64_t i = 0; i < n; ++i) {
    antilog_[i] = x.coords;
    dlog_[x.coords] = static_cast<std::uint32_t>(i);
    // multiply by x: shift and reduce
    std::uint64_t next = std::uint64_t{x.coords} << 1;
    if ((next >> spec.degree()) & 1) next ^= spec.poly();
    x = {static_cast<std::uint32_t>(next)};
  }
}

std::string to_hex(FieldElement e) { return fmt::format("0x{:x}", e.coords); }

std::uint64_t parse_hex(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 16) throw ParseError("bad hex value '" + text + "'");
  std::uint64_t value = 0;
  for (char c : digits) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw ParseError("bad hex value '" + text + "'");
    value = value << 4 | static_cast<std::uint64_t>(v);
  }
  return value;
}

}  // namespace seqlab::gf2
