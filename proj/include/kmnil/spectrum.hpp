#pragma once

#include <string>
#include <vector>

#include "kmnil/liealg.hpp"

namespace kmnil {

/// Index tuple (i_1 < ... < i_q) of positive integers with gaps
/// i_r - i_{r-1} >= 3; parametrizes the closed-form eigenvalues of the
/// Laplacian on the chain complex of l1.
using IndexTuple = std::vector<int>;

bool valid_tuple(const IndexTuple& t);

/// E(i_1,...,i_q) = Σ C(i_s,3) − Σ_{l<m} i_l i_m (exact integer). Zero exactly
/// on the two ladders (1,4,7,...) and (2,5,8,...).
long long e_value(const IndexTuple& t);

/// Exponent of the multiplicity 2^α: per position, 1 if the first index is
/// >= 3 or an interior gap exceeds 3, else 0.
int alpha(const IndexTuple& t);

/// Multiset of (eigenvalue, multiplicity), sorted by eigenvalue.
struct SpectrumTable {
  std::vector<std::pair<double, long long>> entries;
  long long total_multiplicity() const;
};

/// Predicted spectrum at one total degree: all index tuples summing to it,
/// merged by eigenvalue with multiplicities 2^α added.
SpectrumTable predicted_spectrum(int total);

/// Eigenvalues of Δ_q pooled over every q, clustered with an absolute
/// tolerance into (value, multiplicity) pairs.
SpectrumTable numeric_spectrum(const GradedAlgebra& alg, const MultiDegree& k,
                               double cluster_tol = 1e-6, long long max_dim = 4000);

struct SpectrumDiff {
  bool equal = true;
  std::vector<std::string> mismatches;
};

SpectrumDiff compare_spectra(const SpectrumTable& a, const SpectrumTable& b, double tol);

}  // namespace kmnil
