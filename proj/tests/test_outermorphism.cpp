#include <doctest.h>

#include "exalg/outermorphism.hpp"
#include "exalg/spaces.hpp"
#include "test_util.hpp"

using namespace exalg;
using testutil::distance;
using testutil::random_multivector;

namespace {

Multivector basis(std::vector<int> ix, int n) {
  return Multivector::basis(MultiIndex::from_indices(ix, n));
}

Eigen::MatrixXcd random_matrix(testutil::Rng& rng, int n,
                               Field field = Field::Complex) {
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = testutil::random_scalar(rng, field);
  return m;
}

Eigen::MatrixXcd random_unitary(testutil::Rng& rng, int n, Field field) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(rng, n, field));
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

// The worked 3x3 map with det -3.
Eigen::MatrixXcd worked_map() {
  Eigen::MatrixXcd t(3, 3);
  t << Scalar(0), Scalar(1), Scalar(-1),
       Scalar(2), Scalar(1), Scalar(0),
       Scalar(1), Scalar(0), Scalar(2);
  return t;
}

// Orthonormal basis of a column span, for building expected subspaces.
SubspaceBasis span_of(const Eigen::MatrixXcd& a) {
  if (a.cols() == 0)
    return SubspaceBasis{Eigen::MatrixXcd(a.rows(), 0),
                         static_cast<int>(a.rows())};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  int r = 0;
  const auto& sigma = svd.singularValues();
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma[0] > 0 && sigma[k] > 1e-9 * sigma[0]) ++r;
  return SubspaceBasis{svd.matrixU().leftCols(r), static_cast<int>(a.rows())};
}

}  // namespace

TEST_CASE("identity and scaling extensions") {
  testutil::Rng rng(167);
  Outermorphism id = Outermorphism::identity(5);
  Multivector m = random_multivector(rng, 5, 8);
  CHECK(distance(id.apply(m), m) == 0);

  Scalar c(0.7, -0.2);
  Outermorphism scale(c * Eigen::MatrixXcd::Identity(5, 5));
  for (int p = 0; p <= 5; ++p) {
    Blade b = testutil::random_blade(rng, 5, p);
    CHECK(distance(scale.apply(b.mv()), std::pow(c, p) * b.mv()) <
          1e-9 * std::max(1.0, b.norm()));
  }
}

TEST_CASE("extension is multiplicative") {
  testutil::Rng rng(173);
  Outermorphism t(random_matrix(rng, 5));
  for (int k = 0; k < 30; ++k) {
    Multivector m = random_multivector(rng, 5, 5);
    Multivector n = random_multivector(rng, 5, 5);
    CHECK(distance(t.apply(wedge(m, n)), wedge(t.apply(m), t.apply(n))) <
          1e-8 * std::max(1.0, m.norm() * n.norm()));
  }
  CHECK(distance(t.apply(Multivector::scalar(5, 1.0)),
                 Multivector::scalar(5, 1.0)) == 0);
}

TEST_CASE("worked example: volume factor, induced orientation, inverse") {
  Outermorphism t(worked_map());
  Orientation omega(3);

  CHECK(std::abs(t.det() - Scalar(-3.0)) < 1e-12);
  CHECK(t.volume_factor() == doctest::Approx(3.0));
  CHECK(distance(t.apply(omega.multivector()), -3.0 * basis({1, 2, 3}, 3)) <
        1e-12);
  Orientation induced = t.induced_orientation(omega);
  CHECK(std::abs(induced.unit() - Scalar(-1.0)) < 1e-12);

  // T^{-1}(f2 + 3 f13) = 2 e23 - e13 + (-e3 - e2 + 2 e1) / 3.
  Multivector n = basis({2}, 3) + 3.0 * basis({1, 3}, 3);
  Multivector expected = 2.0 * basis({2, 3}, 3) - basis({1, 3}, 3) +
                         (-basis({3}, 3) - basis({2}, 3) + 2.0 * basis({1}, 3)) *
                             Scalar(1.0 / 3.0);
  CHECK(distance(t.inverse_apply(n, omega), expected) < 1e-9);
  CHECK(distance(Outermorphism::identity(3).inverse_apply(n, omega), n) <
        1e-12);
}

TEST_CASE("volume factor of orthogonal maps is one") {
  testutil::Rng rng(179);
  for (Field field : {Field::Real, Field::Complex}) {
    Outermorphism t(random_unitary(rng, 4, field));
    CHECK(t.volume_factor() == doctest::Approx(1.0));
  }
}

TEST_CASE("adjoint of adjoint and the defining pairing") {
  testutil::Rng rng(181);
  Outermorphism t(random_matrix(rng, 4));
  CHECK((t.adjoint().adjoint().matrix() - t.matrix()).norm() < 1e-14);
  for (int k = 0; k < 30; ++k) {
    Multivector m = random_multivector(rng, 4, 5);
    Multivector n = random_multivector(rng, 4, 5);
    CHECK(std::abs(inner(m, t.adjoint().apply(n)) - inner(t.apply(m), n)) <
          1e-9);
  }
}

TEST_CASE("inverse against the direct matrix-inverse extension") {
  testutil::Rng rng(191);
  Orientation omega(4);
  for (int k = 0; k < 20; ++k) {
    Eigen::MatrixXcd m = random_matrix(rng, 4);
    Outermorphism t(m);
    if (!t.invertible()) continue;
    Outermorphism direct(m.inverse());
    Multivector x = random_multivector(rng, 4, 6);
    Multivector a = t.inverse_apply(x, omega);
    Multivector b = direct.apply(x);
    CHECK(distance(a, b) <= 1e-8 * std::max(1.0, b.norm()));
  }
  Eigen::MatrixXcd singular = Eigen::MatrixXcd::Zero(4, 4);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(
      Outermorphism(singular).inverse_apply(basis({1}, 4), omega),
      std::invalid_argument);
}

TEST_CASE("orthogonal maps commute with contractions") {
  testutil::Rng rng(193);
  for (Field field : {Field::Real, Field::Complex}) {
    Outermorphism t(random_unitary(rng, 5, field));
    for (int k = 0; k < 20; ++k) {
      Multivector m = random_multivector(rng, 5, 5, field);
      Multivector n = random_multivector(rng, 5, 5, field);
      CHECK(distance(t.apply(contract_left(m, n)),
                     contract_left(t.apply(m), t.apply(n))) <
            1e-8 * std::max(1.0, m.norm() * n.norm()));
    }
  }
}

TEST_CASE("adjoint diagrams for contractions") {
  testutil::Rng rng(197);
  Outermorphism t(random_matrix(rng, 5));
  for (int k = 0; k < 30; ++k) {
    Multivector m = random_multivector(rng, 5, 4);
    Multivector n = random_multivector(rng, 5, 4);
    // T*(TM -| N) = M -| T*N.
    CHECK(distance(t.adjoint().apply(contract_left(t.apply(m), n)),
                   contract_left(m, t.adjoint().apply(n))) <
          1e-8 * std::max(1.0, m.norm() * n.norm()));
    // T(T*N -| M) = N -| TM.
    CHECK(distance(t.apply(contract_left(t.adjoint().apply(n), m)),
                   contract_left(n, t.apply(m))) <
          1e-8 * std::max(1.0, m.norm() * n.norm()));
  }
}

TEST_CASE("star diagrams") {
  testutil::Rng rng(199);
  Orientation omega(4);
  for (int k = 0; k < 20; ++k) {
    Eigen::MatrixXcd mat = random_matrix(rng, 4);
    Outermorphism t(mat);
    if (!t.invertible()) continue;
    Orientation induced = t.induced_orientation(omega);
    Multivector m = random_multivector(rng, 4, 5);
    // T*(rstar_*(TM)) = vf T rstar M.
    Multivector lhs =
        t.adjoint().apply(star(t.apply(m), Side::Right, induced));
    Multivector rhs = t.volume_factor() * star(m, Side::Right, omega);
    CHECK(distance(lhs, rhs) < 1e-8 * std::max(1.0, m.norm()));
    // With the plain star on both sides: T*(rstar(TM)) = conj(det) rstar M.
    Multivector lhs2 = t.adjoint().apply(star(t.apply(m), Side::Right, omega));
    Multivector rhs2 = std::conj(t.det()) * star(m, Side::Right, omega);
    CHECK(distance(lhs2, rhs2) < 1e-8 * std::max(1.0, m.norm()));
  }

  // Orthogonal maps: T(star M) = star_*(TM); special unitary commutes with
  // the plain star.
  for (int k = 0; k < 20; ++k) {
    Eigen::MatrixXcd q = random_unitary(rng, 4, Field::Complex);
    Outermorphism t(q);
    Orientation induced = t.induced_orientation(omega);
    Multivector m = random_multivector(rng, 4, 5);
    CHECK(distance(t.apply(star(m, Side::Right, omega)),
                   star(t.apply(m), Side::Right, induced)) <
          1e-8 * std::max(1.0, m.norm()));

    Eigen::MatrixXcd su = q / std::pow(q.determinant(), 0.25);
    Outermorphism ts(su);
    CHECK(distance(ts.apply(star(m, Side::Right, omega)),
                   star(ts.apply(m), Side::Right, omega)) <
          1e-7 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("images of inner and outer spaces") {
  testutil::Rng rng(211);
  for (int k = 0; k < 15; ++k) {
    Eigen::MatrixXcd mat = random_matrix(rng, 5);
    Outermorphism t(mat);
    if (!t.invertible()) continue;
    Multivector m = random_multivector(rng, 5, 4);
    Multivector tm = t.apply(m);
    SubspaceBasis isp_m = inner_space(m);
    SubspaceBasis osp_m = outer_space(m);
    // T(isp M) and T(osp M) as column spans.
    SubspaceBasis t_isp = span_of(mat * isp_m.columns);
    SubspaceBasis t_osp = span_of(mat * osp_m.columns);
    CHECK(subspace_contains(inner_space(tm), t_isp));
    CHECK(subspace_contains(t_osp, outer_space(tm)));
    CHECK(inner_space(tm).dim() == t_isp.dim());
    CHECK(outer_space(tm).dim() == t_osp.dim());
  }
}

TEST_CASE("grade blocks have binomial shapes and power determinants") {
  testutil::Rng rng(223);
  Eigen::MatrixXcd mat = random_matrix(rng, 4);
  Outermorphism t(mat);
  for (int p = 0; p <= 4; ++p) {
    const Eigen::MatrixXcd& block = t.grade_block(p);
    CHECK(block.rows() == choose(4, p));
    CHECK(block.cols() == choose(4, p));
  }
  // The top block is multiplication by det.
  CHECK(std::abs(t.grade_block(4)(0, 0) - t.det()) < 1e-12);
}
