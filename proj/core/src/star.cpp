#include "exalg/star.hpp"

#include <stdexcept>

#include "exalg/spaces.hpp"
#include "linalg_detail.hpp"

namespace exalg {

Orientation::Orientation(int ambient, Scalar unit)
    : ambient_(ambient), unit_(unit) {
  if (ambient < 1 || ambient > kDimensionCap)
    throw std::invalid_argument("Orientation: ambient dimension out of range");
  if (std::abs(std::abs(unit) - 1.0) > 1e-9)
    throw std::invalid_argument("Orientation: unit scalar must have modulus 1");
}

Multivector Orientation::multivector(Field field) const {
  Multivector m(ambient_, field);
  m.add_term(MultiIndex::full(ambient_), unit_);
  return m;
}

Multivector star(const Multivector& m, Side side, const Orientation& omega) {
  if (m.ambient() != omega.ambient())
    throw std::invalid_argument("star: ambient mismatch");
  Multivector vol = omega.multivector(m.field());
  return side == Side::Right ? contract_left(m, vol) : contract_right(vol, m);
}

Multivector star_wrt_blade(const Multivector& m, Side side, const Blade& b) {
  if (std::abs(b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("star_wrt_blade: blade must be unit");
  return side == Side::Right ? contract_left(m, b.mv())
                             : contract_right(b.mv(), m);
}

Multivector regressive(const Multivector& a, const Multivector& b,
                       const Orientation& omega) {
  check_compatible(a, b);
  if (a.ambient() != omega.ambient())
    throw std::invalid_argument("regressive: ambient mismatch");
  const std::uint32_t full = MultiIndex::full(a.ambient()).bits();
  Multivector out(a.ambient(), a.field(), std::max(a.tol(), b.tol()));
  const Scalar scale = std::conj(omega.unit());
  for (const auto& [i, c] : a.terms()) {
    for (const auto& [j, d] : b.terms()) {
      if ((i | j) != full) continue;
      std::uint32_t imj = i & ~j, jmi = j & ~i;
      int sign = (pairs_bits(imj, jmi) & 1) ? -1 : 1;
      out.add_term(i & j, static_cast<double>(sign) * scale * c * d);
    }
  }
  return out;
}

Blade join(const Blade& a, const Blade& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("join: zero blade");
  // Stack the generators of A then B, in order, and orthonormalize.
  std::vector<Eigen::VectorXcd> gen_a = a.vectors_or_extract();
  std::vector<Eigen::VectorXcd> gen_b = b.vectors_or_extract();
  const int n = a.ambient();
  Eigen::MatrixXcd stacked(n, gen_a.size() + gen_b.size());
  Eigen::Index col = 0;
  for (const auto& v : gen_a) stacked.col(col++) = v;
  for (const auto& v : gen_b) stacked.col(col++) = v;
  Eigen::MatrixXcd q = detail::gram_schmidt(stacked);
  std::vector<Eigen::VectorXcd> cols;
  cols.reserve(q.cols());
  for (Eigen::Index k = 0; k < q.cols(); ++k) cols.push_back(q.col(k));
  return Blade::from_vectors(cols, n, a.mv().field());
}

Multivector meet(const Blade& a, const Blade& b, const Blade& j) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("meet: zero blade");
  if (std::abs(j.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("meet: join blade must be unit");
  SubspaceBasis span =
      subspace_sum(outer_space(a.mv()), outer_space(b.mv()));
  if (!subspace_contains(outer_space(j.mv()), span))
    throw std::invalid_argument("meet: join does not span [A] + [B]");
  return contract_left(star_wrt_blade(b.mv(), Side::Left, j), a.mv());
}

}  // namespace exalg
