#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "exalg/config.hpp"

namespace exalg {

// Sign of a permutation, with a distinguished zero for repeated indices or
// overlapping factors (so blade products can vanish silently downstream).
struct Sign {
  int value = 1;
  bool zero = false;

  static constexpr Sign plus() { return {1, false}; }
  static constexpr Sign minus() { return {-1, false}; }
  static constexpr Sign null() { return {1, true}; }
  static constexpr Sign from_parity(long p) { return {(p & 1) ? -1 : 1, false}; }

  friend constexpr Sign operator*(Sign a, Sign b) {
    return {a.value * b.value, a.zero || b.zero};
  }
  friend constexpr bool operator==(Sign a, Sign b) {
    return a.zero == b.zero && (a.zero || a.value == b.value);
  }
};

// Ordered list of 1-based indices, repeats allowed.  Non-repeating sequences
// are the elements of the paper-level multi-index monoid; repeats are kept so
// that epsilon() can flag them as zero.
class IndexSeq {
 public:
  IndexSeq() = default;
  IndexSeq(std::vector<int> seq, int ambient);

  const std::vector<int>& seq() const { return seq_; }
  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(seq_.size()); }
  bool empty() const { return seq_.empty(); }
  long norm() const;
  bool nonrepeating() const;

  // Concatenation (ambients must match).
  IndexSeq concat(const IndexSeq& other) const;
  IndexSeq sorted() const;

  std::string to_string() const;

 private:
  std::vector<int> seq_;
  int ambient_ = 1;
};

// Strictly increasing multi-index, coded as a bit set: bit (i-1) set iff the
// 1-based index i is present.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::uint32_t bits, int ambient);

  static MultiIndex empty(int ambient) { return MultiIndex(0u, ambient); }
  static MultiIndex full(int ambient);
  static MultiIndex single(int index, int ambient);
  static MultiIndex from_indices(const std::vector<int>& indices, int ambient);

  std::uint32_t bits() const { return bits_; }
  int ambient() const { return ambient_; }
  int grade() const { return std::popcount(bits_); }
  int norm() const;
  bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
  bool is_empty() const { return bits_ == 0; }

  std::vector<int> indices() const;  // ascending, 1-based
  IndexSeq to_seq() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.bits_ == b.bits_ && a.ambient_ == b.ambient_;
  }

  std::string to_string() const;  // e.g. "e134" or "e{4,13}"

 private:
  std::uint32_t bits_ = 0;
  int ambient_ = 1;
};

// |{(r, s) : r in rs, s in ss, r > s}|, counted with multiplicity.
long pairs(const IndexSeq& r, const IndexSeq& s);
int pairs(const MultiIndex& i, const MultiIndex& j);
int pairs_bits(std::uint32_t i, std::uint32_t j);

// Sign of the permutation sorting r; zero if r repeats an index.
Sign epsilon(const IndexSeq& r);

// epsilon of the concatenation ij of two increasing multi-indices:
// (-1)^pairs(i, j), zero when they overlap.
Sign epsilon_concat(const MultiIndex& i, const MultiIndex& j);

// Complement within the ambient dimension.
MultiIndex complement(const MultiIndex& i);

// zeta_k = (-1)^(k(k+1)/2), following the + - - + pattern in k mod 4.
int zeta(int k);
// xi_r = (-1)^norm(r).
int xi(const IndexSeq& r);
int xi(const MultiIndex& i);

// Set algebra on increasing multi-indices.
MultiIndex unite(const MultiIndex& i, const MultiIndex& j);
MultiIndex intersect(const MultiIndex& i, const MultiIndex& j);
MultiIndex difference(const MultiIndex& i, const MultiIndex& j);
bool subset(const MultiIndex& i, const MultiIndex& j);
bool disjoint(const MultiIndex& i, const MultiIndex& j);

// All 2^n multi-indices of the ambient space, in bit-set order.
std::vector<MultiIndex> all_indices(int ambient);
// Grade-p multi-indices in lexicographic order of their index lists.
std::vector<MultiIndex> indices_of_grade(int ambient, int p);
// Number of grade-p indices, C(n, p).
long choose(int n, int p);

}  // namespace exalg
