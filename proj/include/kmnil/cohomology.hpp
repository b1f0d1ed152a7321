#pragma once

#include "kmnil/cartan.hpp"
#include "kmnil/liealg.hpp"

namespace kmnil {

/// All degrees 0 ≺ k within the bound with E(k) = 0; exactly the degrees
/// that can carry nonzero (co)homology.
std::vector<MultiDegree> harmonic_degrees(const CartanMatrix& cm, const DegreeBound& bound);

/// A (co)homology class represented by its unique harmonic representative.
/// For algebras whose Laplacian is scalar the E(k) = 0 components are
/// harmonic wholesale; elsewhere the representative is a numerical kernel
/// vector and `projected` marks products that had to be projected.
struct CohomologyClass {
  MultiDegree k;
  int q = 0;
  Eigen::VectorXd rep;
  bool projected = false;

  bool is_zero(double tol = 1e-9) const { return rep.size() == 0 || rep.norm() <= tol; }
};

/// Orthonormal basis of ker Δ_q on C_q^(k).
std::vector<CohomologyClass> harmonic_basis(const GradedAlgebra& alg, const MultiDegree& k,
                                            int q, double kernel_tol = 1e-6);

/// Cup product of two classes: wedge of the representatives. The class is
/// zero whenever E(k1+k2) != 0; when the wedge is not already harmonic it is
/// projected onto the numerical kernel and flagged.
CohomologyClass cup_product(const GradedAlgebra& alg, const CartanMatrix& cm,
                            const CohomologyClass& c1, const CohomologyClass& c2,
                            double kernel_tol = 1e-6);

/// Affine reflection s_i(x)_i = -x_i + x_{i-1} + x_{i+1} + 1 (boundary
/// coordinates taken as 0); an involution.
std::vector<int> weyl_reflection(int i, const std::vector<int>& x);

/// A point of the orbit of the origin under s_1..s_n together with its
/// minimal word length and its unique presentation as a sum of distinct
/// interval vectors.
struct OrbitPoint {
  std::vector<int> x;
  int length = 0;
  std::vector<std::pair<int, int>> intervals;  // (i, j), 1 <= i < j <= n+1
};

/// Breadth-first closure of the origin under the n reflections; for the
/// symmetric group action this has (n+1)! points once max_length reaches
/// n(n+1)/2.
std::vector<OrbitPoint> weyl_orbit(int n, int max_length);

/// Indicator vector of the interval [i, j): ones in slots i..j-1.
MultiDegree interval_vector(int i, int j, int n);

/// The unique presentation of p as a sum of distinct interval vectors,
/// found by exact-cover search. Existence or uniqueness failures throw —
/// they would falsify the parametrization.
std::vector<std::pair<int, int>> interval_decomposition(const std::vector<int>& p);

/// Nonzero products of the basis classes from the disjointness rule: if the
/// presentations of two points are disjoint and their union presents a third
/// orbit point, the product is that point's class; otherwise it vanishes.
struct OrbitProduct {
  int a = 0, b = 0;   // indices into the orbit list
  int target = -1;    // index of the product class, -1 when the product is 0
};
std::vector<OrbitProduct> product_table(const std::vector<OrbitPoint>& orbit);

}  // namespace kmnil
