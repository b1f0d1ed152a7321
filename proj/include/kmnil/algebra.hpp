#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmnil/multidegree.hpp"

namespace kmnil {

struct BracketTerm {
  int c;         // target label
  double coeff;
};

struct Component {
  MultiDegree degree;
  int dim = 0;
  int first_label = 0;
};

/// Multigraded Euclidean Lie algebra given by structure constants relative to
/// declared-orthonormal component bases. Basis vectors carry global integer
/// labels ordered by (total degree, graded-lex degree, index within the
/// component); all operator matrices downstream inherit this order, which is
/// what makes the whole pipeline reproducible.
class GradedAlgebra {
public:
  GradedAlgebra(int rank, DegreeBound bound);

  int rank() const { return rank_; }
  const DegreeBound& bound() const { return bound_; }

  /// Appends a component; degrees must arrive in strictly increasing
  /// GradedLexLess order. Returns the component index. dim 0 records the
  /// component as known-zero.
  int add_component(const MultiDegree& k, int dim);

  int num_components() const { return static_cast<int>(components_.size()); }
  const Component& component(int idx) const { return components_[idx]; }
  std::optional<int> find_component(const MultiDegree& k) const;

  /// Dimension of the degree-k component; absent components covered by the
  /// bound count as zero, degrees outside the bound are an error.
  int component_dim(const MultiDegree& k) const;
  bool covers(const MultiDegree& k) const { return bound_.covers(k); }

  int num_labels() const { return static_cast<int>(label_component_.size()); }
  const MultiDegree& label_degree(int label) const;
  int label_component(int label) const;
  int label_intra(int label) const;

  /// Label of the single basis vector in degree δ_i.
  int generator_label(int i) const;

  /// Structure constants for [x_a, x_b] with a < b; degree additivity is
  /// checked on insertion.
  void set_bracket(int a, int b, std::vector<BracketTerm> terms);
  const std::vector<BracketTerm>* bracket_ptr(int a, int b) const;  // a < b, null if zero
  std::vector<BracketTerm> bracket(int a, int b) const;             // any order, antisymmetric

  const std::map<std::pair<int, int>, std::vector<BracketTerm>>& brackets() const {
    return brackets_;
  }

private:
  void check_label(int label) const;

  int rank_;
  DegreeBound bound_;
  std::vector<Component> components_;
  std::map<MultiDegree, int, GradedLexLess> index_;
  std::vector<int> label_component_;
  std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets_;
};

/// JSON round-trip of the dump schema (components in graded order, brackets
/// sorted by label pair; floats serialized shortest-round-trip, so repeated
/// dumps of the same algebra are byte-identical).
std::string algebra_to_json_text(const GradedAlgebra& alg);
GradedAlgebra algebra_from_json_text(const std::string& text);

}  // namespace kmnil
