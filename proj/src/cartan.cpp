#include "kmnil/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace kmnil {

namespace {

struct Rational {
  long long num = 0, den = 1;  // den > 0, reduced

  static Rational make(long long n, long long d) {
    long long g = std::gcd(std::abs(n), std::abs(d));
    if (g == 0) g = 1;
    if (d < 0) { n = -n; d = -d; }
    return Rational{n / g, d / g};
  }
  Rational times(long long n, long long d) const { return make(num * n, den * d); }
  bool equals(const Rational& o) const { return num == o.num && den == o.den; }
};

}  // namespace

CartanMatrix validate_gcm(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) fail(Errc::NotGCM, "empty matrix");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) fail(Errc::NotGCM, "matrix is not square");

  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) fail(Errc::NotGCM, "diagonal entry != 2 at row " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        fail(Errc::NotGCM, "positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        fail(Errc::NotGCM, "asymmetric zero pattern at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
    }
  }

  // Symmetrizer: fix a root in each connected block, propagate
  // d_j = d_i * a_ij / a_ji along edges, check every cross edge.
  std::vector<Rational> ratio(n);
  std::vector<bool> seen(n, false);
  std::vector<int> block(n, -1);
  int nblocks = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    int b = nblocks++;
    ratio[root] = Rational{1, 1};
    seen[root] = true;
    block[root] = b;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational r = ratio[i].times(a[i][j], a[j][i]);
        if (!seen[j]) {
          ratio[j] = r;
          seen[j] = true;
          block[j] = b;
          todo.push(j);
        } else if (!ratio[j].equals(r)) {
          fail(Errc::NotSymmetrizable,
               "ratio inconsistency on edge (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ")");
        }
      }
    }
  }

  // Scale each block to minimal positive integers with gcd 1.
  std::vector<long long> d(n, 0);
  for (int b = 0; b < nblocks; ++b) {
    long long lcm = 1;
    for (int i = 0; i < n; ++i)
      if (block[i] == b) lcm = std::lcm(lcm, ratio[i].den);
    long long g = 0;
    for (int i = 0; i < n; ++i)
      if (block[i] == b) {
        d[i] = ratio[i].num * (lcm / ratio[i].den);
        g = std::gcd(g, d[i]);
      }
    for (int i = 0; i < n; ++i)
      if (block[i] == b) d[i] /= g;
  }

  CartanMatrix cm;
  cm.n = n;
  cm.a = a;
  cm.d = std::move(d);
  return cm;
}

bool is_irreducible(const CartanMatrix& cm) {
  std::vector<bool> seen(cm.n, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int j = 0; j < cm.n; ++j)
      if (!seen[j] && cm.a[i][j] != 0) {
        seen[j] = true;
        ++count;
        todo.push(j);
      }
  }
  return count == cm.n;
}

long long energy(const CartanMatrix& cm, const MultiDegree& k) {
  if (static_cast<int>(k.size()) != cm.n)
    fail(Errc::DimensionMismatch, "energy: degree has rank " + std::to_string(k.size()) +
                                      ", matrix has rank " + std::to_string(cm.n));
  long long e = 0;
  for (int i = 0; i < cm.n; ++i) {
    long long ki = k[i];
    e += cm.d[i] * ki;        // linear part
    e -= cm.d[i] * ki * ki;   // diagonal of the quadratic form (a_ii = 2)
    for (int j = i + 1; j < cm.n; ++j)
      e -= cm.d[i] * cm.a[i][j] * ki * k[j];  // d_i a_ij = d_j a_ji
  }
  return e;
}

MultiDegree serre_degree(const CartanMatrix& cm, int i, int j) {
  if (i < 0 || i >= cm.n || j < 0 || j >= cm.n || i == j)
    fail(Errc::IndexOutOfRange, "serre_degree: bad generator pair");
  MultiDegree k(cm.n, 0);
  k[i] = static_cast<int>(1 - cm.a[i][j]);
  k[j] = 1;
  return k;
}

}  // namespace kmnil
