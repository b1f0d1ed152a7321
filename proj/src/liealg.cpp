#include "kmnil/liealg.hpp"

#include <algorithm>

namespace kmnil {

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

// Inserts label c into the sorted tuple `rest`, returning the Koszul sign of
// moving c from the front past the smaller entries, or 0 if c repeats.
int insert_sorted(std::vector<int>& rest, int c) {
  auto it = std::lower_bound(rest.begin(), rest.end(), c);
  if (it != rest.end() && *it == c) return 0;
  int passed = static_cast<int>(it - rest.begin());
  rest.insert(it, c);
  return (passed % 2 == 0) ? 1 : -1;
}

}  // namespace

Eigen::MatrixXd boundary_matrix(const GradedAlgebra& alg, const ChainBasis& rows,
                                const ChainBasis& cols) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows.dim(), cols.dim());
  if (rows.dim() == 0 || cols.dim() == 0) return m;
  std::vector<int> rest;
  for (int col = 0; col < cols.dim(); ++col) {
    const auto& mono = cols.monomials[col];
    const int q = static_cast<int>(mono.size());
    for (int s = 0; s < q; ++s) {
      for (int t = s + 1; t < q; ++t) {
        const auto* terms = alg.bracket_ptr(mono[s], mono[t]);
        if (!terms) continue;
        // (−1)^{s+t-1} with 1-based positions; s,t here are 0-based.
        const double base_sign = ((s + t) % 2 == 1) ? 1.0 : -1.0;
        rest.clear();
        for (int u = 0; u < q; ++u)
          if (u != s && u != t) rest.push_back(mono[u]);
        for (const auto& term : *terms) {
          std::vector<int> target = rest;
          int ins = insert_sorted(target, term.c);
          if (ins == 0) continue;
          int row = rows.index_of(target);
          if (row < 0)
            fail(Errc::MissingComponent, "boundary image monomial missing from row basis at " +
                                             degree_str(rows.k));
          m(row, col) += base_sign * ins * term.coeff;
        }
      }
    }
  }
  return m;
}

Eigen::MatrixXd boundary_matrix(const GradedAlgebra& alg, const MultiDegree& k, int q) {
  if (q < 1) fail(Errc::IndexOutOfRange, "boundary_matrix: q must be >= 1");
  ChainBasis rows = wedge_basis(alg, k, q - 1);
  ChainBasis cols = wedge_basis(alg, k, q);
  return boundary_matrix(alg, rows, cols);
}

Eigen::MatrixXd laplacian_matrix(const GradedAlgebra& alg, const MultiDegree& k, int q) {
  if (q < 0) fail(Errc::IndexOutOfRange, "laplacian_matrix: q must be >= 0");
  ChainBasis mid = wedge_basis(alg, k, q);
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(mid.dim(), mid.dim());
  if (mid.dim() == 0) return delta;
  ChainBasis up = wedge_basis(alg, k, q + 1);
  if (up.dim() > 0) {
    Eigen::MatrixXd d_up = boundary_matrix(alg, mid, up);  // C_{q+1} -> C_q
    delta += d_up * d_up.transpose();
  }
  if (q >= 1) {
    ChainBasis down = wedge_basis(alg, k, q - 1);
    if (down.dim() > 0) {
      Eigen::MatrixXd d_q = boundary_matrix(alg, down, mid);  // C_q -> C_{q-1}
      delta += d_q.transpose() * d_q;
    }
  }
  return delta;
}

double check_scalarity(const GradedAlgebra& alg, const MultiDegree& k, int q, double lambda) {
  Eigen::MatrixXd m = laplacian_matrix(alg, k, q);
  if (m.size() == 0) return 0.0;
  m.diagonal().array() -= lambda;
  return max_abs(m);
}

double check_jacobi(const GradedAlgebra& alg, const MultiDegree& k) {
  ChainBasis c3 = wedge_basis(alg, k, 3);
  if (c3.dim() == 0) return 0.0;
  ChainBasis c2 = wedge_basis(alg, k, 2);
  ChainBasis c1 = wedge_basis(alg, k, 1);
  Eigen::MatrixXd d3 = boundary_matrix(alg, c2, c3);
  Eigen::MatrixXd d2 = boundary_matrix(alg, c1, c2);
  if (d2.rows() == 0) return 0.0;
  return max_abs(d2 * d3);
}

Chain zero_chain(const GradedAlgebra& alg, const MultiDegree& k, int q) {
  ChainBasis basis = wedge_basis(alg, k, q);
  Chain c;
  c.k = k;
  c.q = q;
  c.coords = Eigen::VectorXd::Zero(basis.dim());
  return c;
}

Chain wedge(const GradedAlgebra& alg, const Chain& c1, const Chain& c2) {
  MultiDegree k = degree_add(c1.k, c2.k);
  Chain out = zero_chain(alg, k, c1.q + c2.q);
  if (c1.coords.size() == 0 || c2.coords.size() == 0) return out;
  ChainBasis b1 = wedge_basis(alg, c1.k, c1.q);
  ChainBasis b2 = wedge_basis(alg, c2.k, c2.q);
  ChainBasis bout = wedge_basis(alg, k, out.q);
  for (int i = 0; i < b1.dim(); ++i) {
    if (c1.coords[i] == 0.0) continue;
    for (int j = 0; j < b2.dim(); ++j) {
      if (c2.coords[j] == 0.0) continue;
      // merge the two sorted tuples, counting crossings
      const auto& m1 = b1.monomials[i];
      const auto& m2 = b2.monomials[j];
      std::vector<int> merged;
      merged.reserve(m1.size() + m2.size());
      size_t p1 = 0, p2 = 0;
      long long crossings = 0;
      bool repeated = false;
      while (p1 < m1.size() && p2 < m2.size()) {
        if (m1[p1] == m2[p2]) {
          repeated = true;
          break;
        }
        if (m1[p1] < m2[p2]) {
          merged.push_back(m1[p1++]);
        } else {
          crossings += static_cast<long long>(m1.size() - p1);
          merged.push_back(m2[p2++]);
        }
      }
      if (repeated) continue;
      while (p1 < m1.size()) merged.push_back(m1[p1++]);
      while (p2 < m2.size()) merged.push_back(m2[p2++]);
      int row = bout.index_of(merged);
      if (row < 0) fail(Errc::MissingComponent, "wedge target monomial missing");
      double sign = (crossings % 2 == 0) ? 1.0 : -1.0;
      out.coords[row] += sign * c1.coords[i] * c2.coords[j];
    }
  }
  return out;
}

Chain apply_laplacian(const GradedAlgebra& alg, const Chain& c) {
  Chain out = c;
  if (c.coords.size() == 0) return out;
  out.coords = laplacian_matrix(alg, c.k, c.q) * c.coords;
  return out;
}

double check_order_two(const GradedAlgebra& alg, const Chain& c1, const Chain& c2,
                       const Chain& c3) {
  auto sgn = [](long long e) { return (e % 2 == 0) ? 1.0 : -1.0; };
  const long long d1 = c1.q, d2 = c2.q, d3 = c3.q;

  Chain w12 = wedge(alg, c1, c2);
  Chain w13 = wedge(alg, c1, c3);
  Chain w23 = wedge(alg, c2, c3);
  Chain w123 = wedge(alg, w12, c3);

  Chain lhs = apply_laplacian(alg, w123);

  Chain rhs = zero_chain(alg, lhs.k, lhs.q);
  auto acc = [&](const Chain& term, double s) {
    if (term.coords.size() > 0) rhs.coords += s * term.coords;
  };
  acc(wedge(alg, apply_laplacian(alg, w12), c3), 1.0);
  acc(wedge(alg, apply_laplacian(alg, w13), c2), sgn(d2 * d3));
  acc(wedge(alg, apply_laplacian(alg, w23), c1), sgn(d1 * (d2 + d3)));
  acc(wedge(alg, wedge(alg, apply_laplacian(alg, c1), c2), c3), -1.0);
  acc(wedge(alg, wedge(alg, apply_laplacian(alg, c2), c1), c3), -sgn(d1 * d2));
  acc(wedge(alg, wedge(alg, apply_laplacian(alg, c3), c1), c2), -sgn((d1 + d2) * d3));

  if (lhs.coords.size() == 0) return 0.0;
  return (lhs.coords - rhs.coords).cwiseAbs().maxCoeff();
}

Chain ad_power(const GradedAlgebra& alg, int i, int j, int m) {
  if (m < 0) fail(Errc::IndexOutOfRange, "ad_power: negative exponent");
  const int gi = alg.generator_label(i);
  const int gj = alg.generator_label(j);

  MultiDegree k = alg.label_degree(gj);
  Chain cur = zero_chain(alg, k, 1);
  if (cur.coords.size() > 0) cur.coords[0] = 1.0;

  for (int step = 0; step < m; ++step) {
    MultiDegree next_k = degree_add(k, alg.label_degree(gi));
    if (!alg.covers(next_k))
      fail(Errc::MissingComponent, "ad_power leaves the constructed bound at " +
                                       degree_str(next_k));
    Chain next = zero_chain(alg, next_k, 1);
    if (cur.coords.size() > 0 && next.coords.size() > 0) {
      ChainBasis cb = wedge_basis(alg, k, 1);
      for (int idx = 0; idx < cb.dim(); ++idx) {
        double x = cur.coords[idx];
        if (x == 0.0) continue;
        for (const auto& term : alg.bracket(gi, cb.monomials[idx][0]))
          next.coords[alg.label_intra(term.c)] += x * term.coeff;
      }
    }
    cur = std::move(next);
    k = std::move(next_k);
  }
  return cur;
}

}  // namespace kmnil
