#pragma once

#include <Eigen/Dense>
#include <map>

#include "kmnil/algebra.hpp"

namespace kmnil {

/// Polynomial vector fields on the line vanishing to second order at 0:
/// basis e_i (i >= 1), deg e_i = i, [e_i, e_j] = (j - i) e_{i+j}, truncated
/// above max_degree. The basis is declared orthonormal.
GradedAlgebra l1_algebra(int max_degree);

/// Nilpotent current algebra T+(n): polynomial matrices p(t) with p(0)
/// strictly upper triangular and tr p = 0. Basis: the elementary currents
/// E_ij t^r (orthonormal) with the diagonal trace-zero subspace per power
/// replaced by a fixed Gram-Schmidt orthonormal basis. Truncated above
/// max_total in total degree.
GradedAlgebra tplus_algebra(int n, long long max_total);

/// The |k|-quadratic scalar by which the Laplacian acts on each multidegree
/// component of T+(n): -Σ k_i² + Σ k_i k_{i+1} + Σ k_i with cyclic indices
/// (k_{n+1} = k_1).
long long tplus_scalar(const MultiDegree& k);

/// Strictly upper triangular n×n matrices with the orthonormal basis E_ij
/// (i < j), graded over Z^{n-1} by deg E_ij = δ_i + ... + δ_{j-1}.
GradedAlgebra upper_triangular(int n);

/// One relation of a canonical table, identified by component degrees since
/// all components involved are one-dimensional: [e_a, e_b] = coeff · e_c.
struct CanonicalRelation {
  MultiDegree a, b, c;
  double coeff;
};

struct G2Data {
  GradedAlgebra algebra;
  std::vector<CanonicalRelation> relations;
};

/// The six-dimensional maximal nilpotent subalgebra of G2 with its canonical
/// orthonormal basis e_{i,j} in degrees (0,1),(1,0),(1,1),(1,2),(1,3),(2,3)
/// and the five nonzero bracket relations.
G2Data g2_canonical();

/// Twisted loop algebra A2^(2) (center factored out): canonical basis e_i,
/// i >= 1, with [e_a, e_b] = alpha(a mod 8, b mod 8) e_{a+b} and the 8-periodic
/// degree rule. Truncated above total degree max_total.
struct A22Data {
  GradedAlgebra algebra;
  std::vector<int> label_index;  // label -> position i in the canonical sequence e_i
};
A22Data a22_canonical(long long max_total);

/// alpha coefficient for residues 1..8 of the two indices.
double a22_alpha(int i, int j);

/// Degree of e_index under the canonical grading (generators at the unit
/// degrees, (1,0) carrying the symmetrizer weight 4).
MultiDegree a22_degree(int index);

/// Explicit 3×3 realization of e_index inside sl(3)⊗R[t,1/t], as a map from
/// t-power to coefficient matrix. Brackets of the canonical basis can be
/// cross-checked against literal commutators of these currents.
using LoopMatrix = std::map<int, Eigen::Matrix3d>;
LoopMatrix a22_matrix(int index);
LoopMatrix loop_commutator(const LoopMatrix& x, const LoopMatrix& y);
LoopMatrix loop_scale(double s, const LoopMatrix& x);
double loop_distance(const LoopMatrix& x, const LoopMatrix& y);

}  // namespace kmnil
