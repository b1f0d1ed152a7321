#pragma once

#include <Eigen/Dense>

#include "kmnil/grading.hpp"

namespace kmnil {

/// Matrix of the chain differential ∂: C_q^(k) -> C_{q-1}^(k) in the
/// orthonormal wedge bases, shape dim C_{q-1} × dim C_q. The sign convention
/// makes ∂(a∧b) = +[a,b]; the coboundary δ_q is exactly the transpose of
/// ∂_{q+1}, and the Laplacian is independent of the sign choice.
Eigen::MatrixXd boundary_matrix(const GradedAlgebra& alg, const ChainBasis& rows,
                                const ChainBasis& cols);
Eigen::MatrixXd boundary_matrix(const GradedAlgebra& alg, const MultiDegree& k, int q);

/// Δ_q = ∂_{q+1} ∂_{q+1}^T + ∂_q^T ∂_q on C_q^(k); symmetric PSD.
Eigen::MatrixXd laplacian_matrix(const GradedAlgebra& alg, const MultiDegree& k, int q);

/// Max-norm of Δ_q − λ·Id (0 on an empty component). The caller compares
/// against its tolerance policy.
double check_scalarity(const GradedAlgebra& alg, const MultiDegree& k, int q, double lambda);

/// Max-norm of ∂_2∘∂_3 on C_3^(k); zero iff the Jacobi identity holds in
/// degree k.
double check_jacobi(const GradedAlgebra& alg, const MultiDegree& k);

/// Homogeneous chain: coefficient vector over wedge_basis(alg, k, q).
struct Chain {
  MultiDegree k;
  int q = 0;
  Eigen::VectorXd coords;

  double norm() const { return coords.size() == 0 ? 0.0 : coords.norm(); }
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }
};

Chain zero_chain(const GradedAlgebra& alg, const MultiDegree& k, int q);
Chain wedge(const GradedAlgebra& alg, const Chain& c1, const Chain& c2);
Chain apply_laplacian(const GradedAlgebra& alg, const Chain& c);

/// Residual of the second-order identity for Δ on a triple of homogeneous
/// chains: Δ(c1∧c2∧c3) minus the six-term combination of Δ on pairs and
/// singles with the Koszul signs (−1)^{d2 d3}, (−1)^{d1(d2+d3)}, (−1)^{d1 d2},
/// (−1)^{(d1+d2)d3}.
double check_order_two(const GradedAlgebra& alg, const Chain& c1, const Chain& c2,
                       const Chain& c3);

/// (ad e_i)^m e_j as a degree-homogeneous element of g^(m·δ_i + δ_j).
Chain ad_power(const GradedAlgebra& alg, int i, int j, int m);

double max_abs(const Eigen::MatrixXd& m);

}  // namespace kmnil
