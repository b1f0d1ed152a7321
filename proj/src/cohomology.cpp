#include "kmnil/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kmnil {

std::vector<MultiDegree> harmonic_degrees(const CartanMatrix& cm, const DegreeBound& bound) {
  std::vector<MultiDegree> out;
  for (const MultiDegree& k : degree_order(cm.n, bound))
    if (energy(cm, k) == 0) out.push_back(k);
  return out;
}

std::vector<CohomologyClass> harmonic_basis(const GradedAlgebra& alg, const MultiDegree& k,
                                            int q, double kernel_tol) {
  std::vector<CohomologyClass> out;
  ChainBasis basis = wedge_basis(alg, k, q);
  if (basis.dim() == 0) return out;
  Eigen::MatrixXd delta = laplacian_matrix(alg, k, q);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta);
  for (int i = 0; i < basis.dim(); ++i) {
    if (std::abs(solver.eigenvalues()[i]) > kernel_tol) continue;
    CohomologyClass cls;
    cls.k = k;
    cls.q = q;
    cls.rep = solver.eigenvectors().col(i);
    out.push_back(std::move(cls));
  }
  return out;
}

CohomologyClass cup_product(const GradedAlgebra& alg, const CartanMatrix& cm,
                            const CohomologyClass& c1, const CohomologyClass& c2,
                            double kernel_tol) {
  CohomologyClass out;
  out.k = degree_add(c1.k, c2.k);
  out.q = c1.q + c2.q;
  if (!alg.covers(out.k))
    fail(Errc::OutOfBound, "cup product lands outside the constructed bound at " +
                               degree_str(out.k));
  if (energy(cm, out.k) != 0) return out;  // zero class: no homology in that degree
  Chain w = wedge(alg, Chain{c1.k, c1.q, c1.rep}, Chain{c2.k, c2.q, c2.rep});
  out.rep = w.coords;
  if (out.is_zero()) return out;
  // Harmonic wholesale when the Laplacian vanishes on the component;
  // otherwise project onto the kernel and flag the heuristic.
  Eigen::MatrixXd delta = laplacian_matrix(alg, out.k, out.q);
  if (max_abs(delta) > kernel_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta);
    Eigen::VectorXd projected = Eigen::VectorXd::Zero(out.rep.size());
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
      if (std::abs(solver.eigenvalues()[i]) > kernel_tol) continue;
      projected += solver.eigenvectors().col(i).dot(out.rep) * solver.eigenvectors().col(i);
    }
    out.rep = projected;
    out.projected = true;
  }
  return out;
}

std::vector<int> weyl_reflection(int i, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || i > n) fail(Errc::IndexOutOfRange, "weyl_reflection: i must be in 1..n");
  std::vector<int> y = x;
  const int left = i >= 2 ? x[i - 2] : 0;
  const int right = i <= n - 1 ? x[i] : 0;
  y[i - 1] = -x[i - 1] + left + right + 1;
  return y;
}

MultiDegree interval_vector(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n + 1))
    fail(Errc::IndexOutOfRange, "interval_vector: need 1 <= i < j <= n+1");
  MultiDegree v(n, 0);
  for (int s = i; s < j; ++s) v[s - 1] = 1;
  return v;
}

namespace {

// Exact-cover search for presentations of p as a sum of distinct intervals,
// stopping after the second solution. Every interval covering the first
// nonzero slot must start exactly there (earlier slots are zero), so the
// branching is on the interval ends at that start; ends are taken strictly
// increasing per start, which enforces distinctness and a canonical order.
void decompose(const std::vector<int>& p, int n, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& solutions) {
  if (solutions.size() >= 2) return;
  if (std::all_of(p.begin(), p.end(), [](int v) { return v == 0; })) {
    solutions.push_back(cur);
    return;
  }
  int s = 0;
  while (p[s] == 0) ++s;
  const int i = s + 1;
  for (int j = i + 1; j <= n + 1; ++j) {
    std::vector<int> rest = p;
    bool fits = true;
    for (int t = i; t < j; ++t) {
      if (--rest[t - 1] < 0) {
        fits = false;
        break;
      }
    }
    if (!fits) break;  // longer intervals contain the failing slot too
    if (!cur.empty() && cur.back().first == i && cur.back().second >= j) continue;
    cur.emplace_back(i, j);
    decompose(rest, n, cur, solutions);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::pair<int, int>> interval_decomposition(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int v : p)
    if (v < 0) fail(Errc::NoDecomposition, "negative entry in " + degree_str(p));
  std::vector<std::vector<std::pair<int, int>>> solutions;
  std::vector<std::pair<int, int>> cur;
  decompose(p, n, cur, solutions);
  if (solutions.empty())
    fail(Errc::NoDecomposition, "no interval presentation of " + degree_str(p));
  if (solutions.size() > 1)
    fail(Errc::NonUniqueDecomposition, "interval presentation of " + degree_str(p) +
                                           " is not unique");
  auto result = solutions.front();
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<OrbitPoint> weyl_orbit(int n, int max_length) {
  if (n < 1) fail(Errc::IndexOutOfRange, "weyl_orbit: n must be >= 1");
  std::map<std::vector<int>, int> depth;
  std::vector<std::vector<int>> frontier = {std::vector<int>(n, 0)};
  depth[frontier.front()] = 0;
  std::vector<OrbitPoint> out;
  out.push_back({frontier.front(), 0, {}});
  for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (int i = 1; i <= n; ++i) {
        std::vector<int> y = weyl_reflection(i, x);
        if (depth.count(y)) continue;
        depth[y] = len;
        next.push_back(y);
      }
    std::sort(next.begin(), next.end(), GradedLexLess{});
    for (const auto& y : next) {
      OrbitPoint pt;
      pt.x = y;
      pt.length = len;
      pt.intervals = interval_decomposition(y);
      out.push_back(std::move(pt));
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<OrbitProduct> product_table(const std::vector<OrbitPoint>& orbit) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < orbit.size(); ++i) index[orbit[i].x] = static_cast<int>(i);
  std::vector<OrbitProduct> out;
  for (size_t a = 0; a < orbit.size(); ++a) {
    if (orbit[a].length == 0) continue;
    for (size_t b = a + 1; b < orbit.size(); ++b) {
      if (orbit[b].length == 0) continue;
      OrbitProduct prod;
      prod.a = static_cast<int>(a);
      prod.b = static_cast<int>(b);
      std::set<std::pair<int, int>> ia(orbit[a].intervals.begin(), orbit[a].intervals.end());
      bool disjoint = true;
      for (const auto& iv : orbit[b].intervals) disjoint = disjoint && !ia.count(iv);
      if (disjoint) {
        std::vector<int> sum(orbit[a].x.size());
        for (size_t s = 0; s < sum.size(); ++s) sum[s] = orbit[a].x[s] + orbit[b].x[s];
        auto it = index.find(sum);
        if (it != index.end()) prod.target = it->second;
      }
      out.push_back(prod);
    }
  }
  return out;
}

}  // namespace kmnil
