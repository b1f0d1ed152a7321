// Acceptance suite: one check per release criterion, each reported as a
// single PASS/FAIL line with its runtime. Exits nonzero when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "kmnil/cohomology.hpp"
#include "kmnil/construct.hpp"
#include "kmnil/oracles.hpp"
#include "kmnil/spectrum.hpp"

using namespace kmnil;

namespace {

CartanMatrix a2() { return validate_gcm({{2, -1}, {-1, 2}}); }
CartanMatrix b2() { return validate_gcm({{2, -1}, {-2, 2}}); }
CartanMatrix g2() { return validate_gcm({{2, -1}, {-3, 2}}); }
CartanMatrix a22() { return validate_gcm({{2, -1}, {-4, 2}}); }
CartanMatrix cyclic3() { return validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }

std::vector<CartanMatrix> sweep_matrices() { return {a2(), b2(), g2(), a22(), cyclic3()}; }

struct Checker {
  bool ok = true;
  std::ostringstream why;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

BuildResult build_total(const CartanMatrix& cm, long long bound) {
  BuildOptions options;
  options.bound = DegreeBound::total_bound(bound);
  return build(cm, options);
}

// ---- shared cohomology fixtures -----------------------------------------

CartanMatrix a_series(int n) {
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return validate_gcm(a);
}

CohomologyClass orbit_class(const GradedAlgebra& alg, const OrbitPoint& p, Checker& check) {
  CohomologyClass cls;
  cls.k = MultiDegree(p.x.begin(), p.x.end());
  cls.q = static_cast<int>(p.intervals.size());
  std::vector<int> labels;
  const int n = static_cast<int>(p.x.size());
  for (const auto& [i, j] : p.intervals) {
    auto comp = alg.find_component(interval_vector(i, j, n));
    check.expect(comp.has_value(), "missing interval component");
    if (!comp) return cls;
    labels.push_back(alg.component(*comp).first_label);
  }
  std::sort(labels.begin(), labels.end());
  ChainBasis basis = wedge_basis(alg, cls.k, cls.q);
  int row = basis.index_of(labels);
  check.expect(row >= 0, "monomial missing from the chain basis at " + degree_str(cls.k));
  cls.rep = Eigen::VectorXd::Zero(basis.dim());
  if (row >= 0) cls.rep[row] = 1.0;
  return cls;
}

// Tabulated nonzero products for the rank-3 case, by operand points.
struct NamedProduct {
  std::vector<std::vector<int>> factors;
  std::vector<int> target;
};

const std::vector<NamedProduct> kRank3Products = {
    {{{1, 0, 0}, {0, 0, 1}}, {1, 0, 1}},
    {{{1, 0, 0}, {1, 2, 0}}, {2, 2, 0}},
    {{{0, 1, 0}, {2, 1, 0}}, {2, 2, 0}},
    {{{0, 1, 0}, {0, 1, 2}}, {0, 2, 2}},
    {{{0, 0, 1}, {0, 2, 1}}, {0, 2, 2}},
    {{{1, 0, 0}, {1, 2, 3}}, {2, 2, 3}},
    {{{0, 1, 0}, {1, 2, 3}}, {1, 3, 3}},
    {{{0, 1, 0}, {3, 2, 1}}, {3, 3, 1}},
    {{{0, 0, 1}, {3, 2, 1}}, {3, 2, 2}},
    {{{0, 0, 1}, {2, 4, 2}}, {2, 4, 3}},
    {{{1, 2, 0}, {1, 2, 3}}, {2, 4, 3}},
    {{{2, 1, 0}, {1, 2, 3}}, {3, 3, 3}},
    {{{0, 1, 2}, {3, 2, 1}}, {3, 3, 3}},
    {{{1, 0, 0}, {2, 4, 2}}, {3, 4, 2}},
    {{{0, 2, 1}, {3, 2, 1}}, {3, 4, 2}},
    // triple products and the middle-degree pair, all landing on the top class
    {{{2, 1, 2}, {1, 3, 1}}, {3, 4, 3}},
    {{{1, 0, 0}, {0, 0, 1}, {2, 4, 2}}, {3, 4, 3}},
    {{{1, 0, 0}, {1, 2, 0}, {1, 2, 3}}, {3, 4, 3}},
    {{{0, 1, 0}, {2, 1, 0}, {1, 2, 3}}, {3, 4, 3}},
    {{{0, 1, 0}, {0, 1, 2}, {3, 2, 1}}, {3, 4, 3}},
    {{{0, 0, 1}, {0, 2, 1}, {3, 2, 1}}, {3, 4, 3}},
};

const std::vector<NamedProduct> kRank2Products = {
    {{{1, 0}, {1, 2}}, {2, 2}},
    {{{0, 1}, {2, 1}}, {2, 2}},
};

// ---- criteria ------------------------------------------------------------

bool criterion_g2(Checker& check) {
  BuildResult built = build_total(g2(), 5);
  const GradedAlgebra& alg = built.algebra;
  int total = 0;
  for (int i = 0; i < alg.num_components(); ++i) total += alg.component(i).dim;
  check.expect(total == 6, "total dimension " + std::to_string(total) + " != 6");
  for (const MultiDegree& k :
       {MultiDegree{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}})
    check.expect(alg.component_dim(k) == 1, "missing component " + degree_str(k));

  check.expect(alg.brackets().size() == 5, "expected exactly five nonzero brackets");
  std::vector<double> magnitudes;
  for (const auto& [key, terms] : alg.brackets()) {
    check.expect(terms.size() == 1, "bracket with several targets");
    magnitudes.push_back(std::abs(terms[0].coeff));
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  const std::vector<double> want = {std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0),
                                    std::sqrt(3.0), 2.0};
  for (size_t i = 0; i < want.size() && i < magnitudes.size(); ++i)
    check.expect(std::abs(magnitudes[i] - want[i]) < 1e-9,
                 "constant magnitude off at slot " + std::to_string(i));

  // diagonal ±1 matcher against the canonical table
  GradedAlgebra table = g2_canonical().algebra;
  bool matched = false;
  for (int mask = 0; mask < 64 && !matched; ++mask) {
    auto eps = [&](int label) { return (mask >> label) & 1 ? -1.0 : 1.0; };
    bool ok = true;
    for (int x = 0; x < 6 && ok; ++x)
      for (int y = x + 1; y < 6 && ok; ++y) {
        auto ta = alg.bracket(x, y);
        auto tb = table.bracket(x, y);
        if (ta.size() != tb.size()) {
          ok = false;
          break;
        }
        for (size_t t = 0; t < ta.size(); ++t)
          if (ta[t].c != tb[t].c ||
              std::abs(eps(x) * eps(y) * eps(ta[t].c) * ta[t].coeff - tb[t].coeff) > 1e-9)
            ok = false;
      }
    matched = ok;
  }
  check.expect(matched, "no diagonal sign change matches the canonical table");
  return check.ok;
}

bool criterion_scalarity(Checker& check) {
  for (const CartanMatrix& cm : sweep_matrices()) {
    BuildResult built = build_total(cm, 8);
    for (const MultiDegree& k : degree_order(cm.n, DegreeBound::total_bound(8))) {
      const double lambda = static_cast<double>(energy(cm, k));
      const double limit = 1e-8 * std::max(1.0, std::abs(lambda));
      for (int q = 1; q <= total_degree(k); ++q) {
        const double residual = check_scalarity(built.algebra, k, q, lambda);
        check.expect(residual < limit, "residual " + std::to_string(residual) + " at " +
                                           degree_str(k) + ", q=" + std::to_string(q));
        if (!check.ok) return false;
      }
    }
  }
  return check.ok;
}

bool criterion_spectrum(Checker& check) {
  GradedAlgebra l1 = l1_algebra(18);
  for (int d = 1; d <= 18; ++d) {
    SpectrumDiff diff =
        compare_spectra(predicted_spectrum(d), numeric_spectrum(l1, {d}, 1e-6), 1e-6);
    check.expect(diff.equal, "spectrum mismatch at degree " + std::to_string(d) +
                                 (diff.mismatches.empty() ? "" : ": " + diff.mismatches[0]));
  }
  // the two zero-energy ladders, as far as they fit under degree 18
  check.expect(e_value({1}) == 0 && e_value({1, 4}) == 0 && e_value({1, 4, 7}) == 0,
               "first ladder is not null");
  check.expect(e_value({2}) == 0 && e_value({2, 5}) == 0 && e_value({2, 5, 8}) == 0,
               "second ladder is not null");
  return check.ok;
}

bool criterion_current_algebra(Checker& check) {
  for (int n : {2, 3}) {
    GradedAlgebra alg = tplus_algebra(n, 8);
    for (const MultiDegree& k : degree_order(n, DegreeBound::total_bound(8))) {
      const double lambda = static_cast<double>(tplus_scalar(k));
      const double limit = 1e-8 * std::max(1.0, std::abs(lambda));
      for (int q = 1; q <= total_degree(k); ++q) {
        const double residual = check_scalarity(alg, k, q, lambda);
        check.expect(residual < limit, "rank " + std::to_string(n) + " residual at " +
                                           degree_str(k) + ", q=" + std::to_string(q));
        if (!check.ok) return false;
      }
    }
  }
  // the cyclic construction reproduces the rank-3 current algebra dimension
  // by dimension
  BuildResult built = build_total(cyclic3(), 8);
  GradedAlgebra t3 = tplus_algebra(3, 8);
  for (const MultiDegree& k : degree_order(3, DegreeBound::total_bound(8)))
    check.expect(built.algebra.component_dim(k) == t3.component_dim(k),
                 "dimension differs at " + degree_str(k));
  return check.ok;
}

bool criterion_serre(Checker& check) {
  for (const CartanMatrix& cm : sweep_matrices()) {
    BuildResult built = build_total(cm, 8);
    for (const SerreEntry& entry : serre_check(built.algebra, cm)) {
      check.expect(entry.in_bound, "relation degree outside bound at " + degree_str(entry.k));
      check.expect(entry.energy == 0, "E nonzero at " + degree_str(entry.k));
      check.expect(entry.dim == 0, "component nonzero at " + degree_str(entry.k));
    }
  }
  return check.ok;
}

bool criterion_euler(Checker& check) {
  for (const CartanMatrix& cm : sweep_matrices()) {
    BuildResult built = build_total(cm, 8);
    for (const DegreeRecord& rec : built.records) {
      const double scale = std::max(1.0, std::abs(static_cast<double>(rec.energy)));
      if (total_degree(rec.k) >= 2 && rec.energy > 0)
        check.expect(euler_dimension(built.algebra, rec.k) == rec.dim,
                     "alternating sum mismatch at " + degree_str(rec.k));
      check.expect(rec.gram_residual < 1e-8 * scale, "gram residual at " + degree_str(rec.k));
      check.expect(rec.jacobi_residual < 1e-8, "jacobi residual at " + degree_str(rec.k));
      check.expect(rec.complement_leak < 1e-9, "complement leak at " + degree_str(rec.k));
      if (!check.ok) return false;
    }
  }
  return check.ok;
}

bool criterion_cohomology(Checker& check) {
  for (int n : {2, 3}) {
    GradedAlgebra alg = upper_triangular(n + 1);
    CartanMatrix cm = a_series(n);
    auto orbit = weyl_orbit(n, n * (n + 1) / 2);
    std::map<std::vector<int>, const OrbitPoint*> by_point;
    MultiDegree box(n, 0);
    for (const auto& p : orbit) {
      by_point[p.x] = &p;
      for (int s = 0; s < n; ++s) box[s] = std::max(box[s], p.x[s]);
    }

    // total dimension and per-(k,q) class counts
    long long total = 1;
    for (const MultiDegree& k : harmonic_degrees(cm, DegreeBound::box_bound(box))) {
      auto it = by_point.find(k);
      check.expect(it != by_point.end(), "harmonic degree off the orbit: " + degree_str(k));
      for (int q = 1; q <= std::min<long long>(total_degree(k), alg.num_labels()); ++q) {
        long long count = harmonic_basis(alg, k, q).size();
        total += count;
        long long want = (it != by_point.end() && it->second->length == q) ? 1 : 0;
        check.expect(count == want, "class count at " + degree_str(k) + ", q=" +
                                        std::to_string(q) + " is " + std::to_string(count));
      }
    }
    const long long expected_total = n == 2 ? 6 : 24;
    check.expect(total == expected_total,
                 "total cohomology dimension " + std::to_string(total));

    // the tabulated relations, up to sign
    const auto& products = n == 2 ? kRank2Products : kRank3Products;
    for (const auto& rel : products) {
      CohomologyClass acc = orbit_class(alg, *by_point.at(rel.factors[0]), check);
      for (size_t f = 1; f < rel.factors.size(); ++f)
        acc = cup_product(alg, cm, acc, orbit_class(alg, *by_point.at(rel.factors[f]), check));
      CohomologyClass target = orbit_class(alg, *by_point.at(rel.target), check);
      check.expect(!acc.is_zero(), "tabulated product vanished");
      if (acc.rep.size() == target.rep.size() && !acc.is_zero())
        check.expect(std::abs(std::abs(acc.rep.dot(target.rep)) - 1.0) < 1e-9,
                     "product does not match its tabulated class");
    }

    // square-free, exhaustively
    for (const auto& p : orbit) {
      if (p.length == 0) continue;
      CohomologyClass c = orbit_class(alg, p, check);
      if (!alg.covers(degree_add(c.k, c.k))) continue;
      check.expect(cup_product(alg, cm, c, c).is_zero(),
                   "square of a class is nonzero at " + degree_str(c.k));
    }

    // cohomological length: every product of n+1 positive classes vanishes
    std::vector<const OrbitPoint*> positive;
    for (const auto& p : orbit)
      if (p.length > 0) positive.push_back(&p);
    std::function<bool(size_t, const CohomologyClass&, int)> vanishes =
        [&](size_t start, const CohomologyClass& acc, int count) -> bool {
      if (count == n + 1) return acc.is_zero();
      if (acc.is_zero()) return true;  // stays zero under further factors
      for (size_t i = start; i < positive.size(); ++i) {
        if (positive.size() - i < static_cast<size_t>(n + 1 - count)) break;
        CohomologyClass next =
            cup_product(alg, cm, acc, orbit_class(alg, *positive[i], check));
        if (!vanishes(i + 1, next, count + 1)) return false;
      }
      return true;
    };
    bool all_zero = true;
    for (size_t i = 0; i < positive.size() && all_zero; ++i)
      all_zero = vanishes(i + 1, orbit_class(alg, *positive[i], check), 1);
    check.expect(all_zero, "a product of more than n positive classes is nonzero");
  }
  return check.ok;
}

bool criterion_orbit(Checker& check) {
  for (int n : {2, 3}) {
    auto orbit = weyl_orbit(n, n * (n + 1) / 2);
    const size_t expected = n == 2 ? 6 : 24;
    check.expect(orbit.size() == expected, "orbit size " + std::to_string(orbit.size()));
    CartanMatrix cm = a_series(n);
    MultiDegree box(n, 0);
    std::set<std::vector<int>> points;
    for (const auto& p : orbit) {
      points.insert(p.x);
      for (int s = 0; s < n; ++s) box[s] = std::max(box[s], p.x[s]);
      if (!is_zero_degree(MultiDegree(p.x.begin(), p.x.end())))
        check.expect(energy(cm, MultiDegree(p.x.begin(), p.x.end())) == 0,
                     "orbit point off the zero set: " + degree_str(p.x));
      auto decomposition = interval_decomposition(p.x);  // throws unless unique
      check.expect(static_cast<int>(decomposition.size()) == p.length,
                   "presentation size != word length at " + degree_str(p.x));
    }
    std::set<std::vector<int>> zeros = {std::vector<int>(n, 0)};
    for (const MultiDegree& k : degree_order(n, DegreeBound::box_bound(box)))
      if (energy(cm, k) == 0) zeros.insert(k);
    check.expect(points == zeros, "orbit differs from the lattice zero set");
  }
  return check.ok;
}

bool criterion_determinism(Checker& check) {
  // byte-identical dumps from two runs of the actual executable
  const std::string matrix_file = "acceptance_matrix.json";
  {
    std::ofstream out(matrix_file);
    out << "{\"matrix\": [[2, -1], [-3, 2]]}\n";
  }
  auto run_build = [&](const std::string& out_file) {
    std::string cmd = std::string(KMNIL_CLI_PATH) + " build --matrix " + matrix_file +
                      " --total-bound 6 --out " + out_file;
    return std::system(cmd.c_str()) == 0;
  };
  check.expect(run_build("acceptance_build_a.json"), "first build run failed");
  check.expect(run_build("acceptance_build_b.json"), "second build run failed");
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp("acceptance_build_a.json");
  const std::string b = slurp("acceptance_build_b.json");
  check.expect(!a.empty(), "first dump is empty");
  check.expect(a == b, "dumps differ between runs");

  // and the in-process builds agree byte for byte as well
  BuildResult first = build_total(cyclic3(), 7);
  BuildResult second = build_total(cyclic3(), 7);
  check.expect(algebra_to_json_text(first.algebra) == algebra_to_json_text(second.algebra),
               "in-process builds differ");
  return check.ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string name;
    std::function<bool(Checker&)> fn;
    double time_limit;
  };
  const std::vector<Entry> entries = {
      {1, "g2 reconstruction with canonical constants", criterion_g2, 1.0},
      {2, "scalar laplacian sweep, five matrices, |k| <= 8", criterion_scalarity, 120.0},
      {3, "line-algebra spectrum through degree 18", criterion_spectrum, 60.0},
      {4, "current-algebra scalarity and cyclic dimensions", criterion_current_algebra, 120.0},
      {5, "defining-relation degrees are null and empty", criterion_serre, 120.0},
      {6, "euler consistency and completion residuals", criterion_euler, 120.0},
      {7, "cohomology of nn(3) and nn(4)", criterion_cohomology, 60.0},
      {8, "reflection orbit and interval presentations", criterion_orbit, 60.0},
      {9, "byte-identical repeated builds", criterion_determinism, 60.0},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = entry.fn(check);
      detail = check.why.str();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= entry.time_limit) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "runtime " + std::to_string(seconds) + "s over limit";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", entry.id,
                entry.name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
