#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace seqlab {

// Arbitrary-precision natural number. Thin value wrapper over a GMP integer
// that keeps the magnitude non-negative; subtraction below zero throws.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  static BigNat from_mpz(mpz_class v);
  static BigNat from_decimal(const std::string& text);
  static BigNat from_hex(const std::string& text);
  // Little-endian words, word 0 least significant.
  static BigNat from_words(std::span<const std::uint64_t> words);

  // 2^k
  static BigNat power_of_two(std::size_t k);
  // 2^k - 1
  static BigNat mersenne(std::size_t k);

  const mpz_class& mpz() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  // Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  std::string to_decimal() const { return v_.get_str(10); }
  std::string to_hex() const { return "0x" + v_.get_str(16); }

  BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
  BigNat& operator-=(const BigNat& o);
  BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  // Throws UsageError on division by zero.
  friend BigNat operator/(const BigNat& a, const BigNat& b);
  friend BigNat operator%(const BigNat& a, const BigNat& b);

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

}  // namespace seqlab
