#pragma once

#include "exalg/blade.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

enum class Side { Left, Right };

// Orientation element Omega = unit * e_{1...n}, |unit| = 1.
class Orientation {
 public:
  explicit Orientation(int ambient, Scalar unit = Scalar(1.0));

  int ambient() const { return ambient_; }
  Scalar unit() const { return unit_; }
  Multivector multivector(Field field = Field::Complex) const;

 private:
  int ambient_;
  Scalar unit_;
};

// Star operators: left star of M is Omega |- M, right star is M -| Omega.
// Conjugate-linear, mutually inverse, grade p -> n-p.
Multivector star(const Multivector& m, Side side, const Orientation& omega);

// Stars with respect to a unit blade: left is B |- M, right is M -| B.
Multivector star_wrt_blade(const Multivector& m, Side side, const Blade& b);

// Regressive product, the star dual of the exterior product:
// rstar(M v N) = rstar(M) ^ rstar(N).
Multivector regressive(const Multivector& a, const Multivector& b,
                       const Orientation& omega);

// A deterministic unit blade spanning [A] + [B]: Gram-Schmidt over the
// generators of A then B, in order.
Blade join(const Blade& a, const Blade& b);

// Meet relative to a unit join J with [J] containing [A] + [B]:
// lstar_J(B) -| ... contracted on A.  Bilinear in A and B for fixed [J].
Multivector meet(const Blade& a, const Blade& b, const Blade& j);

}  // namespace exalg
