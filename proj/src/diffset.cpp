#include "seqlab/diffset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "seqlab/errors.hpp"

namespace seqlab::ds {

CyclicSet::CyclicSet(std::uint64_t modulus, std::vector<Residue> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ == 0) throw UsageError("cyclic set modulus must be positive");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw UsageError("cyclic set has duplicate elements");
  if (!elements_.empty() && elements_.back() >= modulus_)
    throw UsageError(fmt::format("element {} is not below modulus {}", elements_.back(), modulus_));
}

CyclicSet CyclicSet::from_indicator(const BitVec& bits) {
  std::vector<Residue> elems;
  elems.reserve(bits.count());
  const auto words = bits.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t word = words[w]; word != 0; word &= word - 1)
      elems.push_back(static_cast<Residue>(64 * w + static_cast<std::size_t>(std::countr_zero(word))));
  }
  return CyclicSet(bits.size(), std::move(elems));
}

bool CyclicSet::contains(Residue r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

BitVec CyclicSet::indicator() const {
  BitVec bits(modulus_);
  for (auto e : elements_) bits.set(e);
  return bits;
}

CyclicSet CyclicSet::translated(std::uint64_t shift) const {
  std::vector<Residue> out;
  out.reserve(elements_.size());
  for (auto e : elements_) out.push_back(static_cast<Residue>((e + shift) % modulus_));
  return CyclicSet(modulus_, std::move(out));
}

CyclicSet cyclic_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("elements"))
    throw ParseError("set file needs \"modulus\" and \"elements\"");
  const auto& mod = j.at("modulus");
  if (!mod.is_number_unsigned() || mod.get<std::uint64_t>() == 0)
    throw ParseError("set modulus must be a positive integer");
  const std::uint64_t modulus = mod.get<std::uint64_t>();
  std::vector<Residue> elems;
  for (const auto& e : j.at("elements")) {
    if (!e.is_number_unsigned()) throw ParseError("set elements must be non-negative integers");
    const auto v = e.get<std::uint64_t>();
    if (v >= modulus) throw ParseError(fmt::format("element {} is not below modulus {}", v, modulus));
    if (!elems.empty() && v <= elems.back())
      throw ParseError("set elements must be strictly increasing (sorted, no duplicates)");
    elems.push_back(static_cast<Residue>(v));
  }
  return CyclicSet(modulus, std::move(elems));
}

nlohmann::json to_json(const CyclicSet& set) {
  return {{"modulus", set.modulus()},
          {"elements", std::vector<Residue>(set.elements().begin(), set.elements().end())}};
}

CyclicSet load_cyclic_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
  return cyclic_set_from_json(j);
}

std::uint64_t difference_function(const CyclicSet& set, std::uint64_t tau) {
  const std::uint64_t n = set.modulus();
  if (tau >= n) throw UsageError(fmt::format("shift {} is not below modulus {}", tau, n));
  // c ∈ τ + C  ⇔  c - τ ∈ C
  std::uint64_t count = 0;
  for (auto c : set.elements()) {
    if (set.contains(static_cast<Residue>((c + n - tau) % n))) ++count;
  }
  return count;
}

namespace {

DiffProfile profile_packed(const CyclicSet& set) {
  DiffProfile out;
  const BitVec bits = set.indicator();
  const CyclicWindow window(bits);
  // bits[i] & bits[i + τ] counts i ∈ C with i + τ ∈ C, which is d_C(τ).
  for (std::uint64_t tau = 1; tau < set.modulus(); ++tau) ++out.counts[window.and_popcount(bits, tau)];
  return out;
}

DiffProfile profile_merge(const CyclicSet& set) {
  DiffProfile out;
  const std::uint64_t n = set.modulus();
  const auto elems = set.elements();
  std::vector<Residue> shifted(elems.size());
  for (std::uint64_t tau = 1; tau < n; ++tau) {
    // τ + C is C rotated: split at the wrap point instead of re-sorting.
    std::size_t wrap = static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), static_cast<Residue>(n - tau)) - elems.begin());
    std::size_t k = 0;
    for (std::size_t i = wrap; i < elems.size(); ++i) shifted[k++] = static_cast<Residue>(elems[i] + tau - n);
    for (std::size_t i = 0; i < wrap; ++i) shifted[k++] = static_cast<Residue>(elems[i] + tau);
    std::uint64_t hits = 0;
    auto a = elems.begin();
    auto b = shifted.begin();
    while (a != elems.end() && b != shifted.end()) {
      if (*a < *b) ++a;
      else if (*b < *a) ++b;
      else { ++hits; ++a; ++b; }
    }
    ++out.counts[hits];
  }
  return out;
}

}  // namespace

DiffProfile diff_profile(const CyclicSet& set) {
  if (set.modulus() <= kPackedProfileLimit) return profile_packed(set);
  return profile_merge(set);
}

bool verify_ds(const CyclicSet& set, std::uint64_t n, std::uint64_t k, std::uint64_t lambda) {
  if (set.modulus() != n || set.size() != k) return false;
  if (n == 1) return true;
  const DiffProfile p = diff_profile(set);
  return p.counts.size() == 1 && p.counts.begin()->first == lambda;
}

bool verify_ads(const CyclicSet& set, std::uint64_t n, std::uint64_t k, std::uint64_t lambda,
                std::uint64_t t) {
  if (set.modulus() != n || set.size() != k || t > n - 1) return false;
  DiffProfile expected;
  if (t > 0) expected.counts[lambda] = t;
  if (n - 1 - t > 0) expected.counts[lambda + 1] = n - 1 - t;
  return diff_profile(set) == expected;
}

DsParams c1prime_params(int m) {
  if (m < 2) throw UsageError(fmt::format("m = {} is below 2", m));
  const std::uint64_t q = std::uint64_t{1} << m;
  return {q - 1, q / 2 - 1, q / 4 - 1};
}

CyclicSet singer_c1prime(const gf2::FieldSpec& spec) {
  const int m = spec.m();
  const gf2::FieldElement beta = gf2::subfield_generator(spec);
  const std::uint64_t period = spec.subfield_order();
  std::vector<Residue> zeros;
  gf2::FieldElement power = gf2::kOne;
  for (std::uint64_t i = 0; i < period; ++i) {
    const auto tr = gf2::subfield_trace(spec, power);
    if (tr != gf2::kZero && tr != gf2::kOne)
      throw ConsistencyError("subfield trace left GF(2); field arithmetic is broken");
    if (tr == gf2::kZero) zeros.push_back(static_cast<Residue>(i));
    power = gf2::mul(spec, power, beta);
  }
  CyclicSet out(period, std::move(zeros));
  const auto p = c1prime_params(m);
  if (!verify_ds(out, p.n, p.k, p.lambda))
    throw ConsistencyError(fmt::format("Singer set for m = {} is not a ({}, {}, {}) difference set", m,
                                       p.n, p.k, p.lambda));
  return out;
}

CyclicSet scale_set(const CyclicSet& set, std::uint64_t factor, std::uint64_t new_modulus) {
  std::vector<Residue> out;
  out.reserve(set.size());
  for (auto c : set.elements()) out.push_back(static_cast<Residue>(factor * c % new_modulus));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ConsistencyError(fmt::format("scaling by {} into Z_{} is not injective on this set", factor,
                                       new_modulus));
  return CyclicSet(new_modulus, std::move(out));
}

namespace {

BitVec sum_indicator(const CyclicSet& a, const CyclicSet& b, std::uint64_t& hits) {
  if (a.modulus() != b.modulus())
    throw UsageError(fmt::format("sum set of Z_{} and Z_{} is undefined", a.modulus(), b.modulus()));
  const std::uint64_t n = a.modulus();
  BitVec bits(n);
  hits = 0;
  for (auto x : a.elements()) {
    for (auto y : b.elements()) {
      std::uint64_t s = std::uint64_t{x} + y;
      if (s >= n) s -= n;
      if (!bits.test(s)) {
        bits.set(s);
        ++hits;
      }
    }
  }
  return bits;
}

}  // namespace

CyclicSet sum_set(const CyclicSet& a, const CyclicSet& b) {
  std::uint64_t hits = 0;
  return CyclicSet::from_indicator(sum_indicator(a, b, hits));
}

CyclicSet sum_set_exact(const CyclicSet& a, const CyclicSet& b) {
  std::uint64_t hits = 0;
  BitVec bits = sum_indicator(a, b, hits);
  if (hits != a.size() * b.size())
    throw ConsistencyError(fmt::format("sum set has {} elements, expected |A|·|B| = {}", hits,
                                       a.size() * b.size()));
  return CyclicSet::from_indicator(bits);
}

}  // namespace seqlab::ds
