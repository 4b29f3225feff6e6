#include "seqlab/bignat.hpp"

#include "seqlab/errors.hpp"

namespace seqlab {

BigNat::BigNat(std::uint64_t v) {
  mpz_import(v_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

BigNat BigNat::from_mpz(mpz_class v) {
  if (v < 0) throw UsageError("BigNat cannot hold a negative value");
  BigNat out;
  out.v_ = std::move(v);
  return out;
}

BigNat BigNat::from_decimal(const std::string& text) {
  mpz_class v;
  if (text.empty() || text[0] == '-' || v.set_str(text, 10) != 0)
    throw ParseError("not a natural number: '" + text + "'");
  return from_mpz(std::move(v));
}

BigNat BigNat::from_hex(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  mpz_class v;
  if (digits.empty() || digits[0] == '-' || v.set_str(digits, 16) != 0)
    throw ParseError("not a hex natural number: '" + text + "'");
  return from_mpz(std::move(v));
}

BigNat BigNat::from_words(std::span<const std::uint64_t> words) {
  BigNat out;
  if (!words.empty())
    mpz_import(out.v_.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  return out;
}

BigNat BigNat::power_of_two(std::size_t k) {
  BigNat out;
  mpz_setbit(out.v_.get_mpz_t(), k);
  return out;
}

BigNat BigNat::mersenne(std::size_t k) {
  BigNat out = power_of_two(k);
  out.v_ -= 1;
  return out;
}

std::size_t BigNat::bit_length() const {
  return v_ == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool BigNat::fits_u64() const { return bit_length() <= 64; }

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw UsageError("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v_.get_mpz_t());
  return out;
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (v_ < o.v_) throw UsageError("BigNat subtraction would go negative");
  v_ -= o.v_;
  return *this;
}

BigNat operator/(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw UsageError("division by zero");
  BigNat out;
  mpz_fdiv_q(out.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return out;
}

BigNat operator%(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw UsageError("division by zero");
  BigNat out;
  mpz_fdiv_r(out.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return out;
}

}  // namespace seqlab
