#include "seqlab/bitvec.hpp"

#include <bit>

#include "seqlab/errors.hpp"

namespace seqlab {

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nbytes = (size_ + 7) / 8;
  std::string out;
  out.reserve(2 * nbytes);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const auto byte = static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xffu);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xf]);
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVec BitVec::from_hex(const std::string& hex, std::size_t size) {
  const std::size_t nbytes = (size + 7) / 8;
  if (hex.size() != 2 * nbytes)
    throw ParseError("bits_hex has " + std::to_string(hex.size()) + " digits, expected " +
                     std::to_string(2 * nbytes));
  BitVec out(size);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int hi = hex_value(hex[2 * b]);
    const int lo = hex_value(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) throw ParseError("bits_hex contains a non-hex digit");
    const auto byte = static_cast<std::uint64_t>(hi * 16 + lo);
    out.words_[b / 8] |= byte << (8 * (b % 8));
  }
  if (size % 64 != 0 && !out.words_.empty()) {
    const std::uint64_t tail = out.words_.back() >> (size % 64);
    if (tail != 0) throw ParseError("bits_hex has bits set beyond the period");
  }
  return out;
}

CyclicWindow::CyclicWindow(const BitVec& bits) : size_(bits.size()) {
  // Bits [0, 2n) hold two copies, plus one guard word for the funnel shift.
  doubled_.assign((2 * size_ + 63) / 64 + 1, 0);
  const auto src = bits.words();
  for (std::size_t w = 0; w < src.size(); ++w) doubled_[w] = src[w];
  for (std::size_t w = 0; w < src.size(); ++w) {
    const std::size_t at = size_ + 64 * w;
    const std::size_t word = at >> 6, off = at & 63;
    doubled_[word] |= src[w] << off;
    if (off != 0) doubled_[word + 1] |= src[w] >> (64 - off);
  }
}

std::uint64_t CyclicWindow::window(std::size_t bit_offset) const {
  const std::size_t word = bit_offset >> 6, off = bit_offset & 63;
  if (off == 0) return doubled_[word];
  return (doubled_[word] >> off) | (doubled_[word + 1] << (64 - off));
}

std::size_t CyclicWindow::xor_popcount(const BitVec& a, std::size_t shift) const {
  const auto aw = a.words();
  const std::size_t full = size_ / 64;
  std::size_t total = 0;
  for (std::size_t w = 0; w < full; ++w)
    total += static_cast<std::size_t>(std::popcount(aw[w] ^ window(shift + 64 * w)));
  if (const std::size_t rem = size_ % 64; rem != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    total += static_cast<std::size_t>(std::popcount((aw[full] ^ window(shift + 64 * full)) & mask));
  }
  return total;
}

std::size_t CyclicWindow::and_popcount(const BitVec& a, std::size_t shift) const {
  const auto aw = a.words();
  std::size_t total = 0;
  // a has zero padding past size_, so the tail needs no mask.
  for (std::size_t w = 0; w < aw.size(); ++w)
    total += static_cast<std::size_t>(std::popcount(aw[w] & window(shift + 64 * w)));
  return total;
}

}  // namespace seqlab
