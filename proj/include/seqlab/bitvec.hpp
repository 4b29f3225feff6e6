#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seqlab {

// Fixed-length packed bit vector. Bit i lives in word i / 64 at position
// i % 64; bits past size() in the last word are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const;

  std::span<const std::uint64_t> words() const { return words_; }

  // Little-endian byte image: bit 0 is the least-significant bit of byte 0.
  std::string to_hex() const;
  static BitVec from_hex(const std::string& hex, std::size_t size);

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Precomputed view for cyclic shifts of one bit vector. Holds the vector
// twice back to back so that the 64-bit window starting at any bit offset
// can be read with one funnel shift.
class CyclicWindow {
 public:
  explicit CyclicWindow(const BitVec& bits);

  std::size_t size() const { return size_; }

  // Number of positions i where a[i] != bits[(i + shift) mod n].
  std::size_t xor_popcount(const BitVec& a, std::size_t shift) const;
  // Number of positions i where a[i] == 1 and bits[(i + shift) mod n] == 1.
  std::size_t and_popcount(const BitVec& a, std::size_t shift) const;

 private:
  std::uint64_t window(std::size_t bit_offset) const;

  std::size_t size_;
  std::vector<std::uint64_t> doubled_;
};

}  // namespace seqlab
