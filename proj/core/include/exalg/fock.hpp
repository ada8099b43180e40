#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "exalg/blade.hpp"
#include "exalg/multiindex.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

// Lazily applied operators on the exterior algebra viewed as fermionic Fock
// space: exterior/interior products by a multivector, creation/annihilation
// by basis blades, and the occupancy/vacancy projectors.
class FockOperator {
 public:
  static FockOperator exterior(Multivector m);   // N -> M ^ N
  static FockOperator interior(Multivector m);   // N -> M -| N
  static FockOperator creation(IndexSeq r);      // a_r^dagger, sign eps_r
  static FockOperator annihilation(IndexSeq r);  // a_r, sign eps_r
  static FockOperator occupancy(MultiIndex i);   // n_i = a_i^dagger a_i
  static FockOperator vacancy(MultiIndex i);     // m_i = a_i a_i^dagger
  static FockOperator composed(std::vector<FockOperator> ops);

  Multivector apply(const Multivector& m) const;
  int ambient() const { return ambient_; }
  // Parity (0 or 1) when the payload is homogeneous; empty otherwise.
  std::optional<int> parity() const;

  // Dense 2^n x 2^n matrix of the operator, columns over the bit-set order of
  // basis blades.  Test oracle.
  Eigen::MatrixXcd dense() const;

 private:
  enum class Kind {
    Exterior,
    Interior,
    Creation,
    Annihilation,
    Occupancy,
    Vacancy,
    Composed,
  };

  Kind kind_ = Kind::Exterior;
  int ambient_ = 1;
  Multivector payload_;
  IndexSeq seq_;
  MultiIndex index_;
  std::vector<FockOperator> children_;
};

// Dense matrix of an arbitrary linear operator on the exterior algebra.
Eigen::MatrixXcd dense_operator(
    const std::function<Multivector(const Multivector&)>& op, int ambient,
    Field field = Field::Complex);

// Brute-force supercommutator [[a_i^dagger, a_j]] M
//   = a_i^dagger(a_j M) - (-1)^(|i||j|) a_j(a_i^dagger M).
Multivector supercommutator_direct(const MultiIndex& i, const MultiIndex& j,
                                   const Multivector& m);

// Closed form of [[a_i^dagger, a_j]] e_k: a signed basis blade or zero.
struct SignedIndex {
  MultiIndex index;
  int sign = 1;
  bool zero = false;
};

SignedIndex supercommutator_closed(const MultiIndex& i, const MultiIndex& j,
                                   const MultiIndex& k);

// Max entry difference between the dense matrices of [[iota_B, eps_M]] and of
// its graded Leibniz expansion; B must carry a vector decomposition.
double leibniz_supercommutator_residual(const Blade& b, const Multivector& m);

}  // namespace exalg
