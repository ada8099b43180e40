#include <doctest.h>

#include "exalg/geometry.hpp"
#include "exalg/spaces.hpp"
#include "exalg/star.hpp"
#include "test_util.hpp"

using namespace exalg;
using testutil::distance;
using testutil::random_multivector;

namespace {

Multivector basis(std::vector<int> ix, int n) {
  return Multivector::basis(MultiIndex::from_indices(ix, n));
}

}  // namespace

TEST_CASE("star table for the standard 4-dimensional orientation") {
  Orientation omega(4);
  auto r = [&](const Multivector& m) { return star(m, Side::Right, omega); };
  auto l = [&](const Multivector& m) { return star(m, Side::Left, omega); };

  CHECK(distance(r(basis({1}, 4)), basis({2, 3, 4}, 4)) == 0);
  CHECK(distance(l(basis({1}, 4)), -basis({2, 3, 4}, 4)) == 0);
  CHECK(distance(r(basis({2}, 4)), -basis({1, 3, 4}, 4)) == 0);
  CHECK(distance(r(basis({1, 2}, 4)), basis({3, 4}, 4)) == 0);
  CHECK(distance(l(basis({1, 2}, 4)), basis({3, 4}, 4)) == 0);
  CHECK(distance(r(basis({3, 4}, 4)), basis({1, 2}, 4)) == 0);
  CHECK(distance(r(basis({2, 3, 4}, 4)), -basis({1}, 4)) == 0);
  CHECK(distance(l(basis({2, 3, 4}, 4)), basis({1}, 4)) == 0);

  CHECK(distance(r(Multivector::scalar(4, 1.0)), omega.multivector()) == 0);
  CHECK(distance(r(omega.multivector()), Multivector::scalar(4, 1.0)) == 0);
}

TEST_CASE("stars are mutually inverse, also for complex orientations") {
  testutil::Rng rng(83);
  for (int n = 2; n <= 6; ++n) {
    Orientation plain(n);
    Orientation rotated(n, Scalar(0.6, 0.8));
    for (int t = 0; t < 20; ++t) {
      Multivector m = random_multivector(rng, n, 6);
      for (const Orientation& omega : {plain, rotated}) {
        CHECK(distance(star(star(m, Side::Right, omega), Side::Left, omega), m) <
              1e-12);
        CHECK(distance(star(star(m, Side::Left, omega), Side::Right, omega), m) <
              1e-12);
        // Double star is the check involution.
        CHECK(distance(star(star(m, Side::Left, omega), Side::Left, omega),
                       involution(m, Involution::Check)) < 1e-12);
        CHECK(distance(star(star(m, Side::Right, omega), Side::Right, omega),
                       involution(m, Involution::Check)) < 1e-12);
      }
    }
  }
}

TEST_CASE("stars coincide on even multivectors and in odd dimension") {
  testutil::Rng rng(89);
  Orientation omega5(5);
  for (int t = 0; t < 20; ++t) {
    Multivector m = random_multivector(rng, 5, 6);
    CHECK(distance(star(m, Side::Left, omega5), star(m, Side::Right, omega5)) <
          1e-12);
  }
  Orientation omega6(6);
  for (int t = 0; t < 20; ++t) {
    Multivector m = random_multivector(rng, 6, 6);
    Multivector even(6, Field::Complex);
    for (const auto& [bits, c] : m.terms())
      if (std::popcount(bits) % 2 == 0) even.add_term(bits, c);
    CHECK(distance(star(even, Side::Left, omega6),
                   star(even, Side::Right, omega6)) < 1e-12);
  }
}

TEST_CASE("anti-unitarity and duality exchanges") {
  testutil::Rng rng(97);
  Orientation omega(5, Scalar(0.28, 0.96));
  for (int t = 0; t < 40; ++t) {
    Multivector m = random_multivector(rng, 5, 5);
    Multivector n = random_multivector(rng, 5, 5);
    CHECK(std::abs(inner(star(m, Side::Right, omega), star(n, Side::Right, omega)) -
                   inner(n, m)) < 1e-9);
    CHECK(std::abs(star(m, Side::Right, omega).norm() - m.norm()) < 1e-9);

    // rstar(M ^ N) = N -| rstar M.
    CHECK(distance(star(wedge(m, n), Side::Right, omega),
                   contract_left(n, star(m, Side::Right, omega))) < 1e-9);
    // rstar(M |- N) = N ^ rstar M.
    CHECK(distance(star(contract_right(m, n), Side::Right, omega),
                   wedge(n, star(m, Side::Right, omega))) < 1e-9);
    // rstar M |- rstar N = M -| N.
    CHECK(distance(contract_right(star(m, Side::Right, omega),
                                  star(n, Side::Right, omega)),
                   contract_left(m, n)) < 1e-9);
  }

  // G ^ rstar H = <H, G> Omega on a common grade.
  for (int t = 0; t < 40; ++t) {
    Multivector g = testutil::random_homogeneous(rng, 5, 2, 4);
    Multivector h = testutil::random_homogeneous(rng, 5, 2, 4);
    Multivector lhs = wedge(g, star(h, Side::Right, omega));
    CHECK(distance(lhs, inner(h, g) * omega.multivector()) < 1e-9);
  }
}

TEST_CASE("geometric characterization of star duals") {
  testutil::Rng rng(101);
  Orientation omega(5);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> grade(1, 4);
    Blade b = testutil::random_blade(rng, 5, grade(rng), Field::Real);
    Multivector sb = star(b.mv(), Side::Left, omega);
    // [star B] = [B]^perp and norms agree.
    CHECK(subspace_contains(subspace_complement(outer_space(b.mv())),
                            outer_space(sb)));
    CHECK(outer_space(sb).dim() == 5 - b.grade());
    CHECK(std::abs(sb.norm() - b.norm()) < 1e-9);
    // lstar(B) ^ B has the orientation of Omega.
    Scalar align = inner(omega.multivector(Field::Real), wedge(sb, b.mv()));
    CHECK(align.real() > 0);
  }
}

TEST_CASE("stars with respect to a blade") {
  testutil::Rng rng(103);
  Orientation omega(5);
  Blade full = Blade::validated(omega.multivector());

  for (int t = 0; t < 30; ++t) {
    Multivector m = random_multivector(rng, 5, 5);
    Multivector n = random_multivector(rng, 5, 5);
    // B = Omega reduces to the plain star.
    CHECK(distance(star_wrt_blade(m, Side::Right, full),
                   star(m, Side::Right, omega)) < 1e-12);

    Blade b = testutil::random_blade(rng, 5, 3);
    Blade unit = Blade::validated(b.mv() * Scalar(1.0 / b.norm()));
    // rstar_B M = rstar_B (P_B M).
    Multivector projected = project(m, outer_space(unit.mv()));
    CHECK(distance(star_wrt_blade(m, Side::Right, unit),
                   star_wrt_blade(projected, Side::Right, unit)) < 1e-9);
    // rstar_B(M ^ N) = N -| rstar_B M.
    CHECK(distance(star_wrt_blade(wedge(m, n), Side::Right, unit),
                   contract_left(n, star_wrt_blade(m, Side::Right, unit))) <
          1e-9);
  }

  // rstar_B(A |- N) = (P_A N) ^ rstar_B A for a subblade A of B.
  for (int t = 0; t < 30; ++t) {
    Blade b = testutil::random_blade(rng, 5, 3);
    Blade unit = Blade::validated(b.mv() * Scalar(1.0 / b.norm()));
    const auto& vs = b.vectors();
    Blade a = Blade::from_vectors({vs[0], vs[1]}, 5);
    Multivector n = random_multivector(rng, 5, 5);
    Multivector lhs = star_wrt_blade(contract_right(a.mv(), n), Side::Right, unit);
    Multivector rhs = wedge(project(n, outer_space(a.mv())),
                            star_wrt_blade(a.mv(), Side::Right, unit));
    CHECK(distance(lhs, rhs) < 1e-8 * std::max(1.0, rhs.norm()));
  }

  Multivector nonunit(4, Field::Complex);
  nonunit.add_term(MultiIndex::from_indices({1, 2}, 4), 2.0);
  CHECK_THROWS_AS(star_wrt_blade(nonunit, Side::Right, Blade::validated(nonunit)),
                  std::invalid_argument);
}

TEST_CASE("regressive product basis values") {
  Orientation omega(4);
  CHECK(distance(regressive(basis({1, 4}, 4), basis({1, 2, 3}, 4), omega),
                 basis({1}, 4)) == 0);

  // A = (e12 + sqrt3 e14 - e23 + sqrt3 e34) / (2 sqrt2), B = e12:
  // A v B = sqrt6 / 4.
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  Multivector a(4, Field::Complex);
  a.add_term(MultiIndex::from_indices({1, 2}, 4), 1.0 / (2 * s2));
  a.add_term(MultiIndex::from_indices({1, 4}, 4), s3 / (2 * s2));
  a.add_term(MultiIndex::from_indices({2, 3}, 4), -1.0 / (2 * s2));
  a.add_term(MultiIndex::from_indices({3, 4}, 4), s3 / (2 * s2));
  Multivector ab = regressive(a, basis({1, 2}, 4), omega);
  CHECK(ab.top_grade().value_or(0) == 0);
  CHECK(std::abs(ab.scalar_part() - Scalar(std::sqrt(6.0) / 4)) < 1e-12);

  // A = e1 ^ (e2 + e4) ^ (e3 + e4), B = e123: A v B = e1 ^ (e3 - e2).
  Multivector a2 = basis({1, 2, 3}, 4) + basis({1, 2, 4}, 4) - basis({1, 3, 4}, 4);
  Multivector expected = basis({1, 3}, 4) - basis({1, 2}, 4);
  CHECK(distance(regressive(a2, basis({1, 2, 3}, 4), omega), expected) == 0);
}

TEST_CASE("regressive product properties") {
  testutil::Rng rng(107);
  for (const Scalar unit : {Scalar(1.0), Scalar(0.6, -0.8)}) {
    Orientation omega(5, unit);
    for (int t = 0; t < 40; ++t) {
      Multivector m = random_multivector(rng, 5, 5);
      Multivector n = random_multivector(rng, 5, 5);
      // Definition through the stars.
      Multivector via_stars = star(
          wedge(star(m, Side::Right, omega), star(n, Side::Right, omega)),
          Side::Left, omega);
      CHECK(distance(regressive(m, n, omega), via_stars) < 1e-9);
      // lstar(M) -| N = N v M.
      CHECK(distance(contract_left(star(m, Side::Left, omega), n),
                     regressive(n, m, omega)) < 1e-9);
      // Associativity.
      Multivector l = random_multivector(rng, 5, 5);
      CHECK(distance(regressive(regressive(l, m, omega), n, omega),
                     regressive(l, regressive(m, n, omega), omega)) < 1e-8);
    }
    // Graded anticommutation.
    for (int t = 0; t < 40; ++t) {
      std::uniform_int_distribution<int> grade(0, 5);
      int p = grade(rng), q = grade(rng);
      Multivector g = testutil::random_homogeneous(rng, 5, p, 3);
      Multivector h = testutil::random_homogeneous(rng, 5, q, 3);
      Multivector gh = regressive(g, h, omega);
      if (!gh.is_zero()) {
        CHECK(*gh.top_grade() == p + q - 5);
      }
      int sign = ((5 - p) * (5 - q)) % 2 ? -1 : 1;
      CHECK(distance(gh, static_cast<double>(sign) * regressive(h, g, omega)) <
            1e-9);
    }
  }
}

TEST_CASE("regressive product detects blade intersections") {
  Orientation omega(4);
  // Spanning pair: a plane and a 3-space meeting in a line.
  Blade a = Blade::validated(basis({1, 2}, 4));
  Blade b = Blade::validated(basis({2, 3, 4}, 4) + basis({1, 2, 3}, 4));
  CHECK(subspace_sum(outer_space(a.mv()), outer_space(b.mv())).dim() == 4);
  Multivector meet_ab = regressive(a.mv(), b.mv(), omega);
  CHECK(!meet_ab.is_zero());
  SubspaceBasis expected = subspace_intersection(outer_space(a.mv()),
                                                 outer_space(b.mv()));
  CHECK(expected.dim() == 1);
  CHECK(subspace_contains(expected, outer_space(meet_ab)));
  CHECK(outer_space(meet_ab).dim() == expected.dim());

  // Non-spanning pair gives zero.
  Blade c = Blade::validated(basis({1, 3}, 4));
  CHECK(regressive(a.mv(), c.mv(), omega).is_zero());
}

TEST_CASE("join and meet") {
  // The worked plane intersection: A = (e1+e4) ^ (e2+2e4), B = e12,
  // J = e124, meet = -2 e1 + e2.
  Eigen::VectorXcd v1 = Eigen::VectorXcd::Zero(4), v2 = Eigen::VectorXcd::Zero(4);
  v1[0] = 1;
  v1[3] = 1;
  v2[1] = 1;
  v2[3] = 2;
  Blade a = Blade::from_vectors({v1, v2}, 4);
  Blade b = Blade::validated(basis({1, 2}, 4));
  Blade j = Blade::validated(basis({1, 2, 4}, 4));
  CHECK(distance(meet(a, b, j), -2.0 * basis({1}, 4) + basis({2}, 4)) < 1e-12);

  // join(e1, e2) spans the plane (unit representative).
  Blade j12 = join(Blade::validated(basis({1}, 4)),
                   Blade::validated(basis({2}, 4)));
  CHECK(std::abs(j12.norm() - 1.0) < 1e-12);
  CHECK(distance(j12.mv(), basis({1, 2}, 4)) < 1e-12);

  // (M -| A) ^ B spans [A] + [B].
  Multivector m = meet(a, b, j);
  Multivector joined = wedge(contract_left(m, a.mv()), b.mv());
  SubspaceBasis sum = subspace_sum(outer_space(a.mv()), outer_space(b.mv()));
  CHECK(outer_space(joined).dim() == sum.dim());
  CHECK(subspace_contains(sum, outer_space(joined)));

  // Meet requires a spanning join.
  Blade too_small = Blade::validated(basis({1, 2}, 4));
  CHECK_THROWS_AS(meet(a, b, too_small), std::invalid_argument);
  // Join rejects zero blades.
  CHECK_THROWS_AS(join(Blade::validated(Multivector::zero(4)), b),
                  std::invalid_argument);
}

TEST_CASE("regressive norm equals the complement angle formula") {
  testutil::Rng rng(113);
  Orientation omega(5);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> grade(1, 4);
    Blade a = testutil::random_blade(rng, 5, grade(rng), Field::Real);
    Blade b = testutil::random_blade(rng, 5, grade(rng), Field::Real);
    double lhs = regressive(a.mv(), b.mv(), omega).norm();
    double rhs = a.norm() * b.norm() * cos_angle_complement_left(a, b);
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, a.norm() * b.norm()));
  }
}
