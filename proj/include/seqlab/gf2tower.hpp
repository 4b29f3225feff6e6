#pragma once

// Arithmetic in GF(2^{2m}) in polynomial basis, together with its subfield
// GF(2^m) (the fixed points of x -> x^{2^m}) and the relative trace onto it.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace seqlab::gf2 {

// Polynomial-basis coordinates; bit 0 is the constant term.
struct FieldElement {
  std::uint32_t coords = 0;

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.coords ^ b.coords};
  }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr FieldElement kZero{0};
inline constexpr FieldElement kOne{1};

class FieldSpec {
 public:
  // Throws UsageError unless poly has degree 2m with 2 <= m <= 16 and the
  // class of x has multiplicative order 2^{2m} - 1.
  FieldSpec(int m, std::uint64_t poly);

  int m() const { return m_; }
  int degree() const { return 2 * m_; }
  std::uint64_t poly() const { return poly_; }
  FieldElement generator() const { return {2}; }
  // 2^{2m} - 1, the multiplicative group order and the sequence period.
  std::uint64_t order() const { return (std::uint64_t{1} << degree()) - 1; }
  std::uint64_t subfield_order() const { return (std::uint64_t{1} << m_) - 1; }

  bool contains(FieldElement e) const { return e.coords <= order(); }

  std::string poly_hex() const;

 private:
  int m_;
  std::uint64_t poly_;
};

// Lexicographically smallest primitive polynomial of degree 2m.
FieldSpec find_field_spec(int m);

// True iff poly has degree n and x generates GF(2)[x]/(poly)^*.
bool is_primitive_poly(std::uint64_t poly, int n);

FieldElement mul(const FieldSpec& spec, FieldElement a, FieldElement b);
FieldElement square(const FieldSpec& spec, FieldElement a);
// 0^0 is 1.
FieldElement pow(const FieldSpec& spec, FieldElement a, std::uint64_t e);
FieldElement inverse(const FieldSpec& spec, FieldElement a);
// a^{2^k}
FieldElement frobenius(const FieldSpec& spec, FieldElement a, int k);

// x + x^{2^m}; always a subfield element.
FieldElement relative_trace(const FieldSpec& spec, FieldElement x);
// Absolute trace of a subfield element down to GF(2): sum of u^{2^j}, j < m.
FieldElement subfield_trace(const FieldSpec& spec, FieldElement u);
bool in_subfield(const FieldSpec& spec, FieldElement e);
// alpha^{2^m + 1}, a generator of the subfield's multiplicative group.
FieldElement subfield_generator(const FieldSpec& spec);

// Smallest e > 0 with a^e = 1 (a must be nonzero).
std::uint64_t multiplicative_order(const FieldSpec& spec, FieldElement a);

inline constexpr int kLogTableMaxDegree = 24;

class LogTable {
 public:
  // Throws UsageError ("table too large") when degree > kLogTableMaxDegree.
  explicit LogTable(const FieldSpec& spec);

  std::uint64_t modulus() const { return antilog_.size(); }
  FieldElement antilog(std::uint64_t i) const { return {antilog_[i % antilog_.size()]}; }
  // Discrete log of a nonzero element.
  std::uint64_t dlog(FieldElement e) const { return dlog_[e.coords]; }

 private:
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> dlog_;
};

inline LogTable build_log_table(const FieldSpec& spec) { return LogTable(spec); }

std::string to_hex(FieldElement e);
// Accepts an optional 0x prefix.
std::uint64_t parse_hex(const std::string& text);

}  // namespace seqlab::gf2
