#include "kmnil/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace kmnil {

bool valid_tuple(const IndexTuple& t) {
  if (t.empty() || t.front() < 1) return false;
  for (size_t r = 1; r < t.size(); ++r)
    if (t[r] - t[r - 1] < 3) return false;
  return true;
}

long long e_value(const IndexTuple& t) {
  if (!valid_tuple(t)) fail(Errc::InvalidTuple, "index tuple violates the gap condition");
  long long e = 0, sum = 0, pairsum = 0;
  for (int i : t) {
    long long v = i;
    e += v * (v - 1) * (v - 2) / 6;  // C(i,3)
    pairsum += sum * v;
    sum += v;
  }
  return e - pairsum;
}

int alpha(const IndexTuple& t) {
  if (!valid_tuple(t)) fail(Errc::InvalidTuple, "index tuple violates the gap condition");
  int a = t.front() >= 3 ? 1 : 0;
  for (size_t r = 1; r < t.size(); ++r)
    if (t[r] - t[r - 1] > 3) ++a;
  return a;
}

long long SpectrumTable::total_multiplicity() const {
  long long m = 0;
  for (const auto& e : entries) m += e.second;
  return m;
}

namespace {

void enumerate_tuples(int min_next, int remaining, IndexTuple& cur,
                      std::map<long long, long long>& acc) {
  if (remaining == 0 && !cur.empty()) {
    acc[e_value(cur)] += 1LL << alpha(cur);
    return;
  }
  for (int i = min_next; i <= remaining; ++i) {
    cur.push_back(i);
    enumerate_tuples(i + 3, remaining - i, cur, acc);
    cur.pop_back();
  }
}

}  // namespace

SpectrumTable predicted_spectrum(int total) {
  if (total < 1) fail(Errc::BoundTooSmall, "predicted_spectrum: total degree must be >= 1");
  std::map<long long, long long> acc;
  IndexTuple cur;
  enumerate_tuples(1, total, cur, acc);
  SpectrumTable table;
  for (const auto& [e, m] : acc) table.entries.emplace_back(static_cast<double>(e), m);
  return table;
}

SpectrumTable numeric_spectrum(const GradedAlgebra& alg, const MultiDegree& k,
                               double cluster_tol, long long max_dim) {
  std::vector<double> eig;
  for (int q = 1; q <= total_degree(k); ++q) {
    ChainBasis basis = wedge_basis(alg, k, q);
    if (basis.dim() == 0) continue;
    if (basis.dim() > max_dim)
      fail(Errc::MatrixTooLarge, "chain space at " + degree_str(k) + ", q=" + std::to_string(q) +
                                     " has dimension " + std::to_string(basis.dim()));
    Eigen::MatrixXd delta = laplacian_matrix(alg, k, q);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta, Eigen::EigenvaluesOnly);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) eig.push_back(solver.eigenvalues()[i]);
  }
  std::sort(eig.begin(), eig.end());
  SpectrumTable table;
  size_t pos = 0;
  while (pos < eig.size()) {
    size_t end = pos;
    while (end < eig.size() && eig[end] - eig[pos] <= cluster_tol) ++end;
    double mean = 0.0;
    for (size_t i = pos; i < end; ++i) mean += eig[i];
    mean /= static_cast<double>(end - pos);
    table.entries.emplace_back(mean, static_cast<long long>(end - pos));
    pos = end;
  }
  return table;
}

SpectrumDiff compare_spectra(const SpectrumTable& a, const SpectrumTable& b, double tol) {
  SpectrumDiff diff;
  auto report = [&diff](const std::string& msg) {
    diff.equal = false;
    diff.mismatches.push_back(msg);
  };
  size_t ia = 0, ib = 0;
  while (ia < a.entries.size() || ib < b.entries.size()) {
    if (ia == a.entries.size()) {
      std::ostringstream os;
      os << "extra eigenvalue " << b.entries[ib].first << " (x" << b.entries[ib].second
         << ") on the right";
      report(os.str());
      ++ib;
      continue;
    }
    if (ib == b.entries.size()) {
      std::ostringstream os;
      os << "extra eigenvalue " << a.entries[ia].first << " (x" << a.entries[ia].second
         << ") on the left";
      report(os.str());
      ++ia;
      continue;
    }
    double va = a.entries[ia].first, vb = b.entries[ib].first;
    if (std::abs(va - vb) <= tol) {
      if (a.entries[ia].second != b.entries[ib].second) {
        std::ostringstream os;
        os << "eigenvalue " << va << ": multiplicity " << a.entries[ia].second << " vs "
           << b.entries[ib].second;
        report(os.str());
      }
      ++ia;
      ++ib;
    } else if (va < vb) {
      std::ostringstream os;
      os << "eigenvalue " << va << " (x" << a.entries[ia].second << ") missing on the right";
      report(os.str());
      ++ia;
    } else {
      std::ostringstream os;
      os << "eigenvalue " << vb << " (x" << b.entries[ib].second << ") missing on the left";
      report(os.str());
      ++ib;
    }
  }
  return diff;
}

}  // namespace kmnil
