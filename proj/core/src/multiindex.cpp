#include "exalg/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace exalg {

namespace {

void check_ambient(int ambient) {
  if (ambient < 1 || ambient > kDimensionCap)
    throw std::invalid_argument("ambient dimension out of range [1, " +
                                std::to_string(kDimensionCap) + "]: " +
                                std::to_string(ambient));
}

void check_index(int index, int ambient) {
  if (index < 1 || index > ambient)
    throw std::invalid_argument("index " + std::to_string(index) +
                                " out of range for dimension " +
                                std::to_string(ambient));
}

}  // namespace

IndexSeq::IndexSeq(std::vector<int> seq, int ambient)
    : seq_(std::move(seq)), ambient_(ambient) {
  check_ambient(ambient_);
  for (int ix : seq_) check_index(ix, ambient_);
}

long IndexSeq::norm() const {
  long s = 0;
  for (int ix : seq_) s += ix;
  return s;
}

bool IndexSeq::nonrepeating() const {
  std::uint32_t seen = 0;
  for (int ix : seq_) {
    std::uint32_t bit = 1u << (ix - 1);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

IndexSeq IndexSeq::concat(const IndexSeq& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("IndexSeq::concat: ambient mismatch");
  std::vector<int> out = seq_;
  out.insert(out.end(), other.seq_.begin(), other.seq_.end());
  return IndexSeq(std::move(out), ambient_);
}

IndexSeq IndexSeq::sorted() const {
  std::vector<int> out = seq_;
  std::sort(out.begin(), out.end());
  return IndexSeq(std::move(out), ambient_);
}

std::string IndexSeq::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < seq_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(seq_[k]);
  }
  return out + ")";
}

MultiIndex::MultiIndex(std::uint32_t bits, int ambient)
    : bits_(bits), ambient_(ambient) {
  check_ambient(ambient_);
  if (ambient_ < 32 && (bits_ >> ambient_) != 0)
    throw std::invalid_argument("MultiIndex: bits exceed ambient dimension");
}

MultiIndex MultiIndex::full(int ambient) {
  check_ambient(ambient);
  return MultiIndex((ambient == 32) ? ~0u : ((1u << ambient) - 1u), ambient);
}

MultiIndex MultiIndex::single(int index, int ambient) {
  check_ambient(ambient);
  check_index(index, ambient);
  return MultiIndex(1u << (index - 1), ambient);
}

MultiIndex MultiIndex::from_indices(const std::vector<int>& indices, int ambient) {
  check_ambient(ambient);
  std::uint32_t bits = 0;
  for (int ix : indices) {
    check_index(ix, ambient);
    bits |= 1u << (ix - 1);
  }
  return MultiIndex(bits, ambient);
}

int MultiIndex::norm() const {
  int s = 0;
  for (std::uint32_t b = bits_; b;) {
    int bit = std::countr_zero(b);
    s += bit + 1;
    b &= b - 1;
  }
  return s;
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(grade());
  for (std::uint32_t b = bits_; b;) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

IndexSeq MultiIndex::to_seq() const { return IndexSeq(indices(), ambient_); }

std::string MultiIndex::to_string() const {
  if (bits_ == 0) return "1";
  std::vector<int> ix = indices();
  bool single_digit = ix.back() <= 9;
  std::string out = "e";
  if (single_digit) {
    for (int i : ix) out += static_cast<char>('0' + i);
  } else {
    out += "{";
    for (std::size_t k = 0; k < ix.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(ix[k]);
    }
    out += "}";
  }
  return out;
}

long pairs(const IndexSeq& r, const IndexSeq& s) {
  long count = 0;
  for (int a : r.seq())
    for (int b : s.seq())
      if (a > b) ++count;
  return count;
}

int pairs_bits(std::uint32_t i, std::uint32_t j) {
  // For each index of j, count the indices of i above it.
  int count = 0;
  for (std::uint32_t b = j; b;) {
    int bit = std::countr_zero(b);
    count += std::popcount(i & ~((2u << bit) - 1u));
    b &= b - 1;
  }
  return count;
}

int pairs(const MultiIndex& i, const MultiIndex& j) {
  return pairs_bits(i.bits(), j.bits());
}

Sign epsilon(const IndexSeq& r) {
  if (!r.nonrepeating()) return Sign::null();
  const auto& v = r.seq();
  long inversions = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++inversions;
  return Sign::from_parity(inversions);
}

Sign epsilon_concat(const MultiIndex& i, const MultiIndex& j) {
  if (i.bits() & j.bits()) return Sign::null();
  return Sign::from_parity(pairs_bits(i.bits(), j.bits()));
}

MultiIndex complement(const MultiIndex& i) {
  return MultiIndex(MultiIndex::full(i.ambient()).bits() & ~i.bits(),
                    i.ambient());
}

int zeta(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
    case 3:
      return 1;
    default:
      return -1;
  }
}

int xi(const IndexSeq& r) { return (r.norm() & 1) ? -1 : 1; }

int xi(const MultiIndex& i) {
  // (-1)^norm = parity of the number of odd indices; odd 1-based indices sit
  // at even bit positions.
  return (std::popcount(i.bits() & 0x55555555u) & 1) ? -1 : 1;
}

namespace {
int common_ambient(const MultiIndex& i, const MultiIndex& j) {
  if (i.ambient() != j.ambient())
    throw std::invalid_argument("MultiIndex set operation: ambient mismatch");
  return i.ambient();
}
}  // namespace

MultiIndex unite(const MultiIndex& i, const MultiIndex& j) {
  return MultiIndex(i.bits() | j.bits(), common_ambient(i, j));
}

MultiIndex intersect(const MultiIndex& i, const MultiIndex& j) {
  return MultiIndex(i.bits() & j.bits(), common_ambient(i, j));
}

MultiIndex difference(const MultiIndex& i, const MultiIndex& j) {
  return MultiIndex(i.bits() & ~j.bits(), common_ambient(i, j));
}

bool subset(const MultiIndex& i, const MultiIndex& j) {
  common_ambient(i, j);
  return (i.bits() & ~j.bits()) == 0;
}

bool disjoint(const MultiIndex& i, const MultiIndex& j) {
  common_ambient(i, j);
  return (i.bits() & j.bits()) == 0;
}

std::vector<MultiIndex> all_indices(int ambient) {
  std::vector<MultiIndex> out;
  out.reserve(1u << ambient);
  for (std::uint32_t b = 0; b < (1u << ambient); ++b)
    out.emplace_back(b, ambient);
  return out;
}

std::vector<MultiIndex> indices_of_grade(int ambient, int p) {
  std::vector<MultiIndex> out;
  if (p < 0 || p > ambient) return out;
  out.reserve(choose(ambient, p));
  if (p == 0) {
    out.push_back(MultiIndex::empty(ambient));
    return out;
  }
  std::vector<int> ix(p);
  for (int k = 0; k < p; ++k) ix[k] = k + 1;
  while (true) {
    out.push_back(MultiIndex::from_indices(ix, ambient));
    int k = p - 1;
    while (k >= 0 && ix[k] == ambient - (p - 1 - k)) --k;
    if (k < 0) break;
    ++ix[k];
    for (int m = k + 1; m < p; ++m) ix[m] = ix[m - 1] + 1;
  }
  return out;
}

long choose(int n, int p) {
  if (p < 0 || p > n) return 0;
  if (p > n - p) p = n - p;
  long v = 1;
  for (int k = 0; k < p; ++k) v = v * (n - k) / (k + 1);
  return v;
}

}  // namespace exalg
