#include <doctest.h>

#include <random>

#include "kmnil/cartan.hpp"

using namespace kmnil;

namespace {

const std::vector<std::vector<long long>> kA2 = {{2, -1}, {-1, 2}};
const std::vector<std::vector<long long>> kB2 = {{2, -1}, {-2, 2}};
const std::vector<std::vector<long long>> kG2 = {{2, -1}, {-3, 2}};
const std::vector<std::vector<long long>> kA22 = {{2, -1}, {-4, 2}};
const std::vector<std::vector<long long>> kCyclic3 = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};

}  // namespace

TEST_CASE("minimal symmetrizer of the rank-2 matrices") {
  CHECK(validate_gcm(kG2).d == std::vector<long long>{3, 1});
  CHECK(validate_gcm(kA22).d == std::vector<long long>{4, 1});
  CHECK(validate_gcm(kB2).d == std::vector<long long>{2, 1});
}

TEST_CASE("symmetric matrices get the trivial symmetrizer") {
  CHECK(validate_gcm(kA2).d == std::vector<long long>{1, 1});
  CHECK(validate_gcm(kCyclic3).d == std::vector<long long>{1, 1, 1});
  CHECK(validate_gcm({{2, 0}, {0, 2}}).d == std::vector<long long>{1, 1});
}

TEST_CASE("gcm validation rejects malformed input") {
  CHECK_THROWS_AS(validate_gcm({{1, -1}, {-1, 2}}), Error);   // bad diagonal
  CHECK_THROWS_AS(validate_gcm({{2, 1}, {-1, 2}}), Error);    // positive off-diagonal
  CHECK_THROWS_AS(validate_gcm({{2, -1}, {0, 2}}), Error);    // asymmetric zero pattern
  CHECK_THROWS_AS(validate_gcm({{2, -1, -1}}), Error);        // not square
  // inconsistent ratio product around the 3-cycle
  CHECK_THROWS_AS(validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}), Error);
  try {
    validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetrizable);
  }
}

TEST_CASE("irreducibility is connectivity of the nonzero pattern") {
  CHECK(is_irreducible(validate_gcm(kA2)));
  CHECK_FALSE(is_irreducible(validate_gcm({{2, 0}, {0, 2}})));
  CHECK(is_irreducible(validate_gcm(kCyclic3)));
}

TEST_CASE("energy values") {
  CartanMatrix g2 = validate_gcm(kG2);
  CHECK(energy(g2, {2, 3}) == 6);       // 3p+q-3p^2-q^2+3pq at (2,3)
  CHECK(energy(g2, {1, 0}) == 0);
  CHECK(energy(g2, {0, 1}) == 0);
  CHECK(energy(g2, {1, 4}) == 0);       // degree of (ad e2)^4 e1
  CHECK(energy(g2, {2, 1}) == 0);       // degree of (ad e1)^2 e2
  CHECK(energy(g2, {1, 1}) == 3);

  CartanMatrix a22 = validate_gcm(kA22);
  CHECK(energy(a22, {1, 1}) == 4);      // 4p+q-4p^2-q^2+4pq at (1,1)

  CHECK_THROWS_AS(energy(g2, {1, 2, 3}), Error);
}

TEST_CASE("energy agrees with the full half-bilinear form") {
  for (const auto& m : {kA2, kB2, kG2, kA22}) {
    CartanMatrix cm = validate_gcm(m);
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        if (p + q == 0) continue;
        MultiDegree k = {p, q};
        double quad = 0.0;
        for (int i = 0; i < cm.n; ++i)
          for (int j = 0; j < cm.n; ++j)
            quad += static_cast<double>(cm.d[i] * cm.a[i][j]) * k[i] * k[j];
        double lin = 0.0;
        for (int i = 0; i < cm.n; ++i) lin += static_cast<double>(cm.d[i]) * k[i];
        CHECK(static_cast<double>(energy(cm, k)) == doctest::Approx(lin - 0.5 * quad));
      }
  }
}

TEST_CASE("energy respects matrix automorphisms") {
  CartanMatrix cyc = validate_gcm(kCyclic3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    MultiDegree k = {pick(rng), pick(rng), pick(rng)};
    MultiDegree rot = {k[2], k[0], k[1]};
    MultiDegree swp = {k[1], k[0], k[2]};  // reflection of the cycle
    CHECK(energy(cyc, k) == energy(cyc, rot));
    CHECK(energy(cyc, k) == energy(cyc, swp));
  }
}

TEST_CASE("degree-2 polynomial identity for the energy") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 3);
  for (const auto& m : {kA2, kG2, kA22, kCyclic3}) {
    CartanMatrix cm = validate_gcm(m);
    for (int trial = 0; trial < 100; ++trial) {
      auto rand_deg = [&] {
        MultiDegree k(cm.n);
        bool nonzero = false;
        for (int& v : k) {
          v = pick(rng);
          nonzero = nonzero || v > 0;
        }
        if (!nonzero) k[0] = 1;
        return k;
      };
      MultiDegree k1 = rand_deg(), k2 = rand_deg(), k3 = rand_deg();
      long long lhs = energy(cm, degree_add(degree_add(k1, k2), k3));
      long long rhs = energy(cm, degree_add(k1, k2)) + energy(cm, degree_add(k1, k3)) +
                      energy(cm, degree_add(k2, k3)) - energy(cm, k1) - energy(cm, k2) -
                      energy(cm, k3);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("energy vanishes exactly at every defining-relation degree") {
  for (const auto& m : {kA2, kB2, kG2, kA22, kCyclic3}) {
    CartanMatrix cm = validate_gcm(m);
    for (int i = 0; i < cm.n; ++i)
      for (int j = 0; j < cm.n; ++j) {
        if (i == j) continue;
        CHECK(energy(cm, serre_degree(cm, i, j)) == 0);
      }
  }
}
