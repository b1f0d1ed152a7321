#pragma once

#include <Eigen/Dense>

#include "kmnil/cartan.hpp"
#include "kmnil/liealg.hpp"
#include "kmnil/tolerances.hpp"

namespace kmnil {

/// The completion problem at one multidegree k with E(k) > 0: the block
/// matrix of all boundary/coboundary maps at k, rows indexed by the even
/// wedge bases (q = 2, 4, ...) and columns by the odd ones. The q >= 3
/// columns are fully determined by lower components ("known"); the q = 1
/// columns encode the bracket (Λ²g)^(k) -> g^(k) and are produced by
/// completing the known set to sqrt(E(k)) times an orthogonal matrix.
struct CompletionProblem {
  MultiDegree k;
  long long energy = 0;
  std::vector<ChainBasis> even_bases;  // q = 2, 4, ..., ascending
  int lambda2_dim = 0;                 // size of the q = 2 row block (first rows)
  int rows = 0;
  Eigen::MatrixXd known;   // rows × (number of odd q >= 3 monomials)
  double gram_residual = 0.0;
};

struct ComponentResult {
  int dim = 0;                  // rows - known columns
  Eigen::MatrixXd new_columns;  // lambda2_dim × dim, scaled by sqrt(E)
  double gram_residual = 0.0;   // of the augmented column set vs E·Id
  double complement_leak = 0.0; // complement mass outside the Λ² block
};

/// Assembles the known columns of the completion problem at k from the
/// finalized components ≺ k. Every odd q >= 3 monomial c contributes the
/// column [∂c | δc] over the even row blocks; both use only lower brackets.
/// The known columns must be pairwise orthogonal with squared norm E(k) —
/// a violation falsifies the inductive step and throws.
CompletionProblem assemble_problem(const GradedAlgebra& state, const CartanMatrix& cm,
                                   const MultiDegree& k, const Tolerances& tol = {});

/// Completes the known columns to sqrt(E)·(orthogonal matrix): standard
/// basis vectors of the Λ² row block are projected in lexicographic order
/// through modified Gram-Schmidt with a drop tolerance. The complement is
/// provably confined to the Λ² block; the measured leak guards that step
/// instead of trusting it. New basis vectors are sign-normalized so their
/// first nonzero coefficient is positive.
ComponentResult complete_component(const CompletionProblem& problem, const Tolerances& tol = {});

/// Predicted dim g^(k) from the alternating sum over q >= 2 of the wedge
/// dimensions (chain spaces at k with q >= 2 use only components ≺ k).
long long euler_dimension(const GradedAlgebra& state, const MultiDegree& k);

struct DegreeRecord {
  MultiDegree k;
  long long energy = 0;
  int dim = 0;
  long long euler = 0;          // alternating-sum prediction (E > 0 degrees)
  double gram_residual = 0.0;
  double jacobi_residual = 0.0;
  double complement_leak = 0.0;
  bool forced_zero = false;     // E > 0 but the completion needed no new columns
};

struct BuildOptions {
  DegreeBound bound;
  Tolerances tol;
  size_t max_degrees = 1u << 22;  // cap on the degree list; chain-space sizes
                                  // are capped by the enumeration budget
};

struct BuildResult {
  GradedAlgebra algebra;
  std::vector<DegreeRecord> records;
};

/// Builds the algebra degree by degree over the topologically sorted degree
/// list: unit degrees get one generator of norm 1, degrees with |k| >= 2 and
/// E(k) <= 0 are zero, everything else goes through assemble/complete. The
/// result is deterministic down to the byte.
BuildResult build(const CartanMatrix& cm, const BuildOptions& options);

struct SerreEntry {
  int i = 0, j = 0;  // ordered generator pair, 0-based
  MultiDegree k;
  long long energy = 0;
  int dim = 0;
  bool in_bound = false;
};

/// For each ordered pair i != j, reports E and the constructed dimension at
/// the degree of (ad e_i)^{1-a_ij} e_j. E must be exactly zero and the
/// component empty.
std::vector<SerreEntry> serre_check(const GradedAlgebra& alg, const CartanMatrix& cm);

}  // namespace kmnil
