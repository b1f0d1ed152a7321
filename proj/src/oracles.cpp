#include "kmnil/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace kmnil {

GradedAlgebra l1_algebra(int max_degree) {
  if (max_degree < 1) fail(Errc::BoundTooSmall, "l1_algebra: max_degree must be >= 1");
  GradedAlgebra alg(1, DegreeBound::total_bound(max_degree));
  for (int i = 1; i <= max_degree; ++i) alg.add_component({i}, 1);
  for (int i = 1; i <= max_degree; ++i)
    for (int j = i + 1; i + j <= max_degree; ++j)
      alg.set_bracket(i - 1, j - 1, {{i + j - 1, static_cast<double>(j - i)}});
  return alg;
}

namespace {

// --- T+(n) ------------------------------------------------------------

struct TplusItem {
  // off-diagonal current E_ij t^r, or (for i == j == 0) the gs-th vector of
  // the trace-zero diagonal space at power r
  int i = 0, j = 0, r = 0, gs = -1;
  MultiDegree degree;
};

MultiDegree tplus_degree(int n, int i, int j, int r) {
  MultiDegree d(n, r);
  if (i < j)
    for (int s = i; s < j; ++s) d[s - 1] = r + 1;
  else if (i > j)
    for (int s = j; s < i; ++s) d[s - 1] = r - 1;
  return d;
}

using SparseCurrent = std::map<std::tuple<int, int, int>, double>;  // (i,j,r) -> coeff

SparseCurrent current_commutator(const SparseCurrent& x, const SparseCurrent& y) {
  SparseCurrent out;
  auto acc = [&out](int i, int j, int r, double v) {
    if (v == 0.0) return;
    double& slot = out[{i, j, r}];
    slot += v;
    if (slot == 0.0) out.erase({i, j, r});
  };
  for (const auto& [ea, va] : x)
    for (const auto& [eb, vb] : y) {
      auto [i, j, r] = ea;
      auto [k, l, s] = eb;
      if (j == k) acc(i, l, r + s, va * vb);
      if (l == i) acc(k, j, r + s, -va * vb);
    }
  return out;
}

}  // namespace

long long tplus_scalar(const MultiDegree& k) {
  const int n = static_cast<int>(k.size());
  long long e = 0;
  for (int i = 0; i < n; ++i) {
    long long ki = k[i];
    e += ki - ki * ki + ki * k[(i + 1) % n];
  }
  return e;
}

GradedAlgebra tplus_algebra(int n, long long max_total) {
  if (n < 2) fail(Errc::BoundTooSmall, "tplus_algebra: n must be >= 2");
  if (max_total < 1) fail(Errc::BoundTooSmall, "tplus_algebra: bound must be >= 1");

  // Orthonormal basis of the trace-zero subspace of the diagonal, shared by
  // every power of t.
  std::vector<Eigen::VectorXd> gs_basis;
  for (int t = 0; t + 1 < n; ++t) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[t] = 1.0;
    v[t + 1] = -1.0;
    for (const auto& u : gs_basis) v -= u.dot(v) * u;
    gs_basis.push_back(v / v.norm());
  }

  std::vector<TplusItem> items;
  // below-diagonal currents have total degree r*n - (i-j), so powers up to
  // (max_total + n - 1) / n can still contribute
  for (int r = 0; static_cast<long long>(r) * n - (n - 1) <= max_total; ++r) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (i > j && r == 0) continue;
        MultiDegree d = tplus_degree(n, i, j, r);
        if (total_degree(d) < 1 || total_degree(d) > max_total) continue;
        items.push_back({i, j, r, -1, d});
      }
    if (r >= 1 && r * static_cast<long long>(n) <= max_total)
      for (int t = 0; t + 1 < n; ++t) items.push_back({0, 0, r, t, MultiDegree(n, r)});
  }
  std::stable_sort(items.begin(), items.end(), [](const TplusItem& a, const TplusItem& b) {
    GradedLexLess less;
    if (a.degree != b.degree) return less(a.degree, b.degree);
    return a.gs < b.gs;
  });

  GradedAlgebra alg(n, DegreeBound::total_bound(max_total));
  std::map<std::tuple<int, int, int>, int> offdiag_label;
  std::map<int, int> diag_first_label;  // power -> label of gs vector 0
  std::vector<SparseCurrent> element;
  for (size_t pos = 0; pos < items.size();) {
    size_t end = pos;
    while (end < items.size() && items[end].degree == items[pos].degree) ++end;
    alg.add_component(items[pos].degree, static_cast<int>(end - pos));
    for (size_t t = pos; t < end; ++t) {
      const TplusItem& it = items[t];
      int label = static_cast<int>(element.size());
      SparseCurrent cur;
      if (it.gs < 0) {
        offdiag_label[{it.i, it.j, it.r}] = label;
        cur[{it.i, it.j, it.r}] = 1.0;
      } else {
        if (it.gs == 0) diag_first_label[it.r] = label;
        for (int s = 0; s < n; ++s)
          if (gs_basis[it.gs][s] != 0.0) cur[{s + 1, s + 1, it.r}] = gs_basis[it.gs][s];
      }
      element.push_back(std::move(cur));
    }
    pos = end;
  }

  const int nlabels = static_cast<int>(element.size());
  for (int a = 0; a < nlabels; ++a)
    for (int b = a + 1; b < nlabels; ++b) {
      MultiDegree sum = degree_add(alg.label_degree(a), alg.label_degree(b));
      if (total_degree(sum) > max_total) continue;
      SparseCurrent comm = current_commutator(element[a], element[b]);
      // split into off-diagonal currents and per-power diagonal parts
      std::map<int, Eigen::VectorXd> diag;
      std::vector<BracketTerm> terms;
      for (const auto& [key, v] : comm) {
        auto [i, j, r] = key;
        if (i == j) {
          auto it = diag.find(r);
          if (it == diag.end()) it = diag.emplace(r, Eigen::VectorXd::Zero(n)).first;
          it->second[i - 1] = v;
        } else {
          terms.push_back({offdiag_label.at({i, j, r}), v});
        }
      }
      for (const auto& [r, vec] : diag) {
        int first = diag_first_label.at(r);
        for (int t = 0; t + 1 < n; ++t) {
          double c = gs_basis[t].dot(vec);
          if (std::abs(c) > 1e-14) terms.push_back({first + t, c});
        }
      }
      std::sort(terms.begin(), terms.end(),
                [](const BracketTerm& x, const BracketTerm& y) { return x.c < y.c; });
      if (!terms.empty()) alg.set_bracket(a, b, std::move(terms));
    }
  return alg;
}

// --- strictly upper triangular n(n) ------------------------------------

GradedAlgebra upper_triangular(int n) {
  if (n < 2) fail(Errc::BoundTooSmall, "upper_triangular: n must be >= 2");
  struct Entry {
    int i, j;
    MultiDegree degree;
  };
  std::vector<Entry> entries;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MultiDegree d(n - 1, 0);
      for (int s = i; s < j; ++s) d[s - 1] = 1;
      entries.push_back({i, j, std::move(d)});
    }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return GradedLexLess{}(a.degree, b.degree); });

  GradedAlgebra alg(n - 1, DegreeBound::unbounded());
  std::map<std::pair<int, int>, int> label_of;
  int next_label = 0;
  for (const auto& e : entries) {
    alg.add_component(e.degree, 1);
    label_of[{e.i, e.j}] = next_label++;
  }
  const int nlabels = static_cast<int>(entries.size());
  for (int a = 0; a < nlabels; ++a)
    for (int b = a + 1; b < nlabels; ++b) {
      const Entry& x = entries[a];
      const Entry& y = entries[b];
      std::vector<BracketTerm> terms;
      if (x.j == y.i) terms.push_back({label_of.at({x.i, y.j}), 1.0});
      if (y.j == x.i) terms.push_back({label_of.at({y.i, x.j}), -1.0});
      if (!terms.empty()) alg.set_bracket(a, b, std::move(terms));
    }
  return alg;
}

// --- G2 canonical table -------------------------------------------------

G2Data g2_canonical() {
  const double r3 = std::sqrt(3.0);
  std::vector<MultiDegree> degs = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  GradedAlgebra alg(2, DegreeBound::unbounded());
  std::map<MultiDegree, int> label_of;
  for (const auto& d : degs) {
    alg.add_component(d, 1);
    label_of[d] = static_cast<int>(label_of.size());
  }
  // The sign of [e11,e12] is pinned by the Jacobi identity on (e10,e01,e12):
  // [[e10,e01],e12] and [[e01,e12],e10] must cancel, so the products
  // [e01,e10]*[e11,e12] and [e01,e12]*[e10,e13] carry opposite signs. That
  // ratio is invariant under diagonal sign changes of the basis, so exactly
  // one of the four constants involved is negative in every valid table.
  std::vector<CanonicalRelation> rels = {
      {{0, 1}, {1, 0}, {1, 1}, r3},
      {{0, 1}, {1, 1}, {1, 2}, 2.0},
      {{0, 1}, {1, 2}, {1, 3}, r3},
      {{1, 0}, {1, 3}, {2, 3}, r3},
      {{1, 1}, {1, 2}, {2, 3}, -r3},
  };
  for (const auto& rel : rels) {
    int la = label_of.at(rel.a), lb = label_of.at(rel.b), lc = label_of.at(rel.c);
    if (la < lb)
      alg.set_bracket(la, lb, {{lc, rel.coeff}});
    else
      alg.set_bracket(lb, la, {{lc, -rel.coeff}});
  }
  return {std::move(alg), std::move(rels)};
}

// --- twisted A2(2) --------------------------------------------------------

double a22_alpha(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8) fail(Errc::IndexOutOfRange, "a22_alpha: residues in 1..8");
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0), r8 = std::sqrt(8.0);
  const double A[8][8] = {
      {0, 2, r6, -r6, -2, 0, r2, -r2},
      {-2, 0, 0, 0, 2, -r8, 0, r8},
      {-r6, 0, 0, r6, -r2, 2, -2, r2},
      {r6, 0, -r6, 0, r6, 0, -r6, 0},
      {2, -2, r2, -r6, 0, 0, r6, -r2},
      {0, r8, -2, 0, 0, 0, 2, -r8},
      {-r2, 0, 2, r6, -r6, -2, 0, r2},
      {r2, -r8, -r2, 0, r2, r8, -r2, 0},
  };
  return A[i - 1][j - 1];
}

MultiDegree a22_degree(int index) {
  if (index < 1) fail(Errc::IndexOutOfRange, "a22_degree: index must be >= 1");
  // index = 8n + s with s in [-1, 6]
  const int n = (index + 1) / 8;
  const int s = index - 8 * n;
  if (s <= 1) return {2 * n, 4 * n + s};
  return {2 * n + 1, 4 * n + s - 2};
}

A22Data a22_canonical(long long max_total) {
  if (max_total < 1) fail(Errc::BoundTooSmall, "a22_canonical: bound must be >= 1");
  struct Item {
    int index;
    MultiDegree degree;
  };
  std::vector<Item> items;
  for (int idx = 1;; ++idx) {
    MultiDegree d = a22_degree(idx);
    if (total_degree(d) > max_total) break;  // totals are nondecreasing in idx
    items.push_back({idx, std::move(d)});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return GradedLexLess{}(a.degree, b.degree); });

  GradedAlgebra alg(2, DegreeBound::total_bound(max_total));
  std::map<int, int> label_of;  // sequence index -> label
  std::vector<int> label_index;
  for (const auto& it : items) {
    alg.add_component(it.degree, 1);
    label_of[it.index] = static_cast<int>(label_index.size());
    label_index.push_back(it.index);
  }
  // [e_a, e_b] = alpha(a mod 8, b mod 8) e_{a+b} holds for either index order
  // (the alpha matrix is antisymmetric), so labels can be paired directly.
  for (size_t p = 0; p < items.size(); ++p)
    for (size_t q = p + 1; q < items.size(); ++q) {
      const int ia = label_index[p], ib = label_index[q];
      const double alpha = a22_alpha((ia - 1) % 8 + 1, (ib - 1) % 8 + 1);
      if (alpha == 0.0) continue;
      MultiDegree sum = degree_add(a22_degree(ia), a22_degree(ib));
      if (total_degree(sum) > max_total) continue;  // truncated
      auto target = label_of.find(ia + ib);
      if (target == label_of.end() || a22_degree(ia + ib) != sum)
        fail(Errc::InvariantViolation, "a22 bracket [" + std::to_string(ia) + "," +
                                           std::to_string(ib) + "] is not degree-additive");
      // set_bracket re-checks degree additivity against the stored grading
      alg.set_bracket(static_cast<int>(p), static_cast<int>(q), {{target->second, alpha}});
    }
  return {std::move(alg), std::move(label_index)};
}

LoopMatrix a22_matrix(int index) {
  if (index < 1) fail(Errc::IndexOutOfRange, "a22_matrix: index must be >= 1");
  const int u = index % 8;
  const int s = index / 8;
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  int power = 0;
  switch (u) {
    case 0:
      m(0, 0) = std::sqrt(2.0);
      m(2, 2) = -std::sqrt(2.0);
      power = 2 * s;
      break;
    case 1:
      m(0, 1) = m(1, 2) = 2.0;
      power = 2 * s;
      break;
    case 2:
      m(2, 0) = 1.0;
      power = 2 * s + 1;
      break;
    case 3:
      m(1, 0) = 1.0;
      m(2, 1) = -1.0;
      power = 2 * s + 1;
      break;
    case 4:
      m(0, 0) = m(2, 2) = std::sqrt(2.0 / 3.0);
      m(1, 1) = -2.0 * std::sqrt(2.0 / 3.0);
      power = 2 * s + 1;
      break;
    case 5:
      m(0, 1) = 2.0;
      m(1, 2) = -2.0;
      power = 2 * s + 1;
      break;
    case 6:
      m(0, 2) = 4.0;
      power = 2 * s + 1;
      break;
    case 7:
      m(1, 0) = m(2, 1) = 1.0;
      power = 2 * s + 2;
      break;
  }
  LoopMatrix out;
  out[power] = m;
  return out;
}

LoopMatrix loop_commutator(const LoopMatrix& x, const LoopMatrix& y) {
  LoopMatrix out;
  for (const auto& [p, mx] : x)
    for (const auto& [q, my] : y) {
      Eigen::Matrix3d c = mx * my - my * mx;
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      auto it = out.find(p + q);
      if (it == out.end())
        out[p + q] = c;
      else
        it->second += c;
    }
  return out;
}

LoopMatrix loop_scale(double s, const LoopMatrix& x) {
  LoopMatrix out;
  for (const auto& [p, m] : x) out[p] = s * m;
  return out;
}

double loop_distance(const LoopMatrix& x, const LoopMatrix& y) {
  double d = 0.0;
  for (const auto& [p, m] : x) {
    auto it = y.find(p);
    Eigen::Matrix3d diff = it == y.end() ? m : Eigen::Matrix3d(m - it->second);
    d = std::max(d, diff.cwiseAbs().maxCoeff());
  }
  for (const auto& [p, m] : y)
    if (x.find(p) == x.end()) d = std::max(d, m.cwiseAbs().maxCoeff());
  return d;
}

}  // namespace kmnil
