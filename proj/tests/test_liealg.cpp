#include <doctest.h>

#include <random>

#include "kmnil/liealg.hpp"
#include "kmnil/oracles.hpp"

using namespace kmnil;

TEST_CASE("boundary of a 2-chain is the bracket") {
  GradedAlgebra l1 = l1_algebra(8);
  Eigen::MatrixXd d2 = boundary_matrix(l1, {3}, 2);
  REQUIRE(d2.rows() == 1);
  REQUIRE(d2.cols() == 1);
  CHECK(d2(0, 0) == doctest::Approx(1.0));  // [e1,e2] = e3

  Eigen::MatrixXd d2b = boundary_matrix(l1, {5}, 2);
  REQUIRE(d2b.rows() == 1);
  REQUIRE(d2b.cols() == 2);
  CHECK(d2b(0, 0) == doctest::Approx(3.0));  // [e1,e4] = 3 e5
  CHECK(d2b(0, 1) == doctest::Approx(1.0));  // [e2,e3] = e5
}

TEST_CASE("boundary of a 1-chain in positive degree is zero") {
  GradedAlgebra l1 = l1_algebra(5);
  Eigen::MatrixXd d1 = boundary_matrix(l1, {3}, 1);
  CHECK(d1.rows() == 0);
  CHECK(d1.cols() == 1);
}

TEST_CASE("square of the boundary vanishes") {
  GradedAlgebra l1 = l1_algebra(10);
  for (int k = 1; k <= 10; ++k)
    for (int q = 2; q <= k; ++q) {
      ChainBasis top = wedge_basis(l1, {k}, q);
      ChainBasis mid = wedge_basis(l1, {k}, q - 1);
      ChainBasis bot = wedge_basis(l1, {k}, q - 2);
      if (top.dim() == 0 || bot.dim() == 0) continue;
      Eigen::MatrixXd composite =
          boundary_matrix(l1, bot, mid) * boundary_matrix(l1, mid, top);
      CHECK(max_abs(composite) < 1e-12);
    }
}

TEST_CASE("laplacian on the degree-3 component of l1") {
  GradedAlgebra l1 = l1_algebra(6);
  Eigen::MatrixXd lap1 = laplacian_matrix(l1, {3}, 1);
  REQUIRE(lap1.rows() == 1);
  CHECK(lap1(0, 0) == doctest::Approx(1.0));
  Eigen::MatrixXd lap2 = laplacian_matrix(l1, {3}, 2);
  REQUIRE(lap2.rows() == 1);
  CHECK(lap2(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("laplacian is symmetric positive semidefinite") {
  GradedAlgebra l1 = l1_algebra(9);
  for (int k = 2; k <= 9; ++k)
    for (int q = 1; q <= 4; ++q) {
      Eigen::MatrixXd lap = laplacian_matrix(l1, {k}, q);
      if (lap.size() == 0) continue;
      CHECK(max_abs(lap - lap.transpose()) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
      CHECK(solver.eigenvalues().minCoeff() > -1e-9);
    }
}

TEST_CASE("laplacian is unchanged by a global sign flip of the bracket") {
  GradedAlgebra nn3 = upper_triangular(3);
  GradedAlgebra flipped(nn3.rank(), nn3.bound());
  for (int i = 0; i < nn3.num_components(); ++i)
    flipped.add_component(nn3.component(i).degree, nn3.component(i).dim);
  for (const auto& [key, terms] : nn3.brackets()) {
    auto negated = terms;
    for (auto& t : negated) t.coeff = -t.coeff;
    flipped.set_bracket(key.first, key.second, std::move(negated));
  }
  for (const MultiDegree& k : degree_order(2, DegreeBound::total_bound(4)))
    for (int q = 1; q <= 3; ++q) {
      Eigen::MatrixXd a = laplacian_matrix(nn3, k, q);
      Eigen::MatrixXd b = laplacian_matrix(flipped, k, q);
      CHECK(max_abs(a - b) == 0.0);
    }
}

TEST_CASE("jacobi residual vanishes exactly for a commutator algebra") {
  GradedAlgebra nn4 = upper_triangular(4);
  for (const MultiDegree& k : degree_order(3, DegreeBound::box_bound({3, 4, 3})))
    CHECK(check_jacobi(nn4, k) == 0.0);
}

TEST_CASE("jacobi residual detects a corrupted constant") {
  GradedAlgebra nn4 = upper_triangular(4);
  // [E12, E23] = E13 -> bump the coefficient
  int e12 = nn4.generator_label(0);
  int e23 = nn4.generator_label(1);
  auto terms = nn4.bracket(e12, e23);
  REQUIRE(terms.size() == 1);
  terms[0].coeff += 0.5;
  nn4.set_bracket(e12, e23, terms);
  double worst = 0.0;
  for (const MultiDegree& k : degree_order(3, DegreeBound::box_bound({3, 4, 3})))
    worst = std::max(worst, check_jacobi(nn4, k));
  CHECK(worst > 0.1);
}

TEST_CASE("second-order identity for the laplacian on random chains") {
  GradedAlgebra l1 = l1_algebra(12);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  auto random_chain = [&](int k, int q) {
    Chain c = zero_chain(l1, {k}, q);
    for (int i = 0; i < c.coords.size(); ++i) c.coords[i] = coeff(rng);
    return c;
  };
  int checked = 0;
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2)
      for (int k3 = 1; k3 <= 4; ++k3)
        for (int q1 = 1; q1 <= 2; ++q1)
          for (int q2 = 1; q2 <= 2; ++q2) {
            if (k1 + k2 + k3 > 12) continue;
            Chain c1 = random_chain(k1, q1);
            Chain c2 = random_chain(k2, q2);
            Chain c3 = random_chain(k3, 1);
            if (c1.coords.size() == 0 || c2.coords.size() == 0 || c3.coords.size() == 0)
              continue;
            CHECK(check_order_two(l1, c1, c2, c3) < 1e-8);
            ++checked;
          }
  CHECK(checked > 50);
}

TEST_CASE("second-order identity with a repeated 1-chain is trivial") {
  GradedAlgebra l1 = l1_algebra(9);
  Chain c1 = zero_chain(l1, {2}, 1);
  c1.coords[0] = 1.0;
  Chain c2 = zero_chain(l1, {3}, 1);
  c2.coords[0] = 0.7;
  // c2 ^ c2 = 0, so every term vanishes
  Chain w = wedge(l1, c2, c2);
  CHECK(w.norm() == 0.0);
  CHECK(check_order_two(l1, c1, c2, c2) == 0.0);
}

TEST_CASE("iterated ad on generators") {
  GradedAlgebra nn3 = upper_triangular(3);
  Chain e23 = ad_power(nn3, 0, 1, 0);  // m = 0 returns the generator itself
  CHECK(e23.norm() == doctest::Approx(1.0));
  CHECK(e23.k == MultiDegree{0, 1});

  Chain e13 = ad_power(nn3, 0, 1, 1);  // [E12, E23] = E13
  CHECK(e13.k == MultiDegree{1, 1});
  CHECK(e13.norm() == doctest::Approx(1.0));

  Chain zero = ad_power(nn3, 0, 1, 2);  // lands in the empty (2,1) component
  CHECK(zero.norm() == 0.0);
}
