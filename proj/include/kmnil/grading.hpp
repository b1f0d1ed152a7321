#pragma once

#include <map>
#include <vector>

#include "kmnil/algebra.hpp"

namespace kmnil {

/// All multidegrees 0 ≺ k within the bound, sorted by GradedLexLess. The
/// list is topologically sorted for the componentwise order, so iterating it
/// visits every degree after all of its predecessors.
std::vector<MultiDegree> degree_order(int n, const DegreeBound& bound,
                                      size_t max_count = 1u << 22);

/// Ordered wedge-monomial basis of (Λ^q g)^(k). Monomials are strictly
/// increasing label tuples listed in lexicographic order; wedge products of
/// orthonormal component bases, so the list is itself orthonormal.
struct ChainBasis {
  MultiDegree k;
  int q = 0;
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, int> index;

  int dim() const { return static_cast<int>(monomials.size()); }
  int index_of(const std::vector<int>& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

/// Enumerates all strictly increasing q-tuples of labels whose degrees sum
/// to k. Every component ⪯ k that could contribute must already be declared
/// (inside the algebra's bound); q > |k| gives the empty basis. Bases larger
/// than the enumeration budget raise BudgetExceeded.
ChainBasis wedge_basis(const GradedAlgebra& alg, const MultiDegree& k, int q);

/// Process-wide cap on enumerated basis sizes. Initialized from the
/// KMNIL_BUDGET environment variable when present, else 2^20 entries.
long long enumeration_budget();
void set_enumeration_budget(long long cap);

}  // namespace kmnil
