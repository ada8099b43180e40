#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "exalg/multiindex.hpp"

namespace exalg {

using Scalar = std::complex<double>;

enum class Field { Real, Complex };

// Sparse multivector over a fixed orthonormal basis: a map from bit-coded
// increasing multi-indices to complex coefficients.  Only coefficients with
// magnitude above the cleanup tolerance are stored.  Values are immutable
// after construction in practice; every operation returns a new value.
class Multivector {
 public:
  using TermMap = std::map<std::uint32_t, Scalar>;

  Multivector() = default;
  explicit Multivector(int ambient, Field field = Field::Complex,
                       double tol = kCoeffTol);

  static Multivector zero(int ambient, Field field = Field::Complex);
  static Multivector scalar(int ambient, Scalar value,
                            Field field = Field::Complex);
  static Multivector basis(const MultiIndex& i, Field field = Field::Complex);
  // Grade-1 multivector from n coordinates.
  static Multivector from_vector(const std::vector<Scalar>& coords, int ambient,
                                 Field field = Field::Complex);

  int ambient() const { return ambient_; }
  Field field() const { return field_; }
  double tol() const { return tol_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(std::uint32_t bits) const;
  Scalar coeff(const MultiIndex& i) const { return coeff(i.bits()); }
  Scalar scalar_part() const { return coeff(0u); }

  // Accumulate a term; drops the result if it falls below tolerance.  In the
  // real field a coefficient with |imag| > tol is rejected.
  void add_term(std::uint32_t bits, Scalar value);
  void add_term(const MultiIndex& i, Scalar value) { add_term(i.bits(), value); }

  double norm_squared() const;
  double norm() const;

  // Lowest/highest grade carrying a nonzero term; empty for the zero value.
  std::optional<int> bottom_grade() const;
  std::optional<int> top_grade() const;
  bool is_homogeneous() const;

  std::vector<Scalar> vector_coords() const;  // grade-1 part as coordinates

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(Scalar s);

  friend Multivector operator+(Multivector a, const Multivector& b) {
    a += b;
    return a;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    a -= b;
    return a;
  }
  friend Multivector operator*(Multivector a, Scalar s) {
    a *= s;
    return a;
  }
  friend Multivector operator*(Scalar s, Multivector a) {
    a *= s;
    return a;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
  int ambient_ = 1;
  Field field_ = Field::Complex;
  double tol_ = kCoeffTol;
};

enum class Involution { Grade, Reversion, Clifford, Check };

// Checks ambient and field agreement; throws std::invalid_argument otherwise.
void check_compatible(const Multivector& a, const Multivector& b);

Multivector wedge(const Multivector& a, const Multivector& b);
Scalar inner(const Multivector& a, const Multivector& b);

// Left contraction M -| N of the contractor M on the contractee N, defined by
// <L, M -| N> = <M ^ L, N>.  Conjugate-linear in M, linear in N.
Multivector contract_left(const Multivector& contractor,
                          const Multivector& contractee);
// Right contraction N |- M of the contractee N by the contractor M, defined
// by <L, N |- M> = <L ^ M, N>.
Multivector contract_right(const Multivector& contractee,
                           const Multivector& contractor);

Multivector involution(const Multivector& m, Involution kind);
// k-fold grade involution.
Multivector grade_involution_power(const Multivector& m, int k);
Multivector grade_project(const Multivector& m, int p);

// Contraction under the bookkeeping of other common conventions.  All reduce
// to compositions of this library's contractions and the reversion.
enum class ContractionConvention {
  ILeft,
  IRight,
  IILeft,
  IIRight,
  IIILeft,
  IIIRight,
  Hestenes,
};
Multivector convention_contract(ContractionConvention conv,
                                const Multivector& a, const Multivector& b);

}  // namespace exalg
