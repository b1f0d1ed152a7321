#pragma once

#include <vector>

#include "kmnil/multidegree.hpp"

namespace kmnil {

/// A validated symmetrizable generalized Cartan matrix together with the
/// minimal positive integral symmetrizer d (diag(d)·a symmetric, gcd(d)=1
/// on every connected block of the nonzero pattern).
struct CartanMatrix {
  int n = 0;
  std::vector<std::vector<long long>> a;
  std::vector<long long> d;
};

/// Checks the generalized-Cartan axioms (2 on the diagonal, non-positive
/// integers off it, symmetric zero pattern) and computes the symmetrizer by
/// propagating the ratios d_i/d_j = a_ji/a_ij along edges of the nonzero
/// pattern, verifying consistency around every cycle.
CartanMatrix validate_gcm(const std::vector<std::vector<long long>>& a);

/// True iff the nonzero-pattern graph on {1..n} is connected.
bool is_irreducible(const CartanMatrix& cm);

/// E(k) = sum_i d_i k_i - 1/2 sum_{i,j} d_i a_ij k_i k_j, evaluated in exact
/// integer arithmetic (the 1/2 cancels since diag(d)·a is symmetric with 2s
/// on the diagonal).
long long energy(const CartanMatrix& cm, const MultiDegree& k);

/// Degree of (ad e_i)^{1-a_ij} e_j: the component that must vanish for the
/// defining relations to hold. E is exactly zero there.
MultiDegree serre_degree(const CartanMatrix& cm, int i, int j);

}  // namespace kmnil
