#pragma once

#include <string>
#include <vector>

#include "kmnil/error.hpp"

namespace kmnil {

/// Multidegree (k_1,...,k_n): exponent vector indexing one component of a
/// multigraded object. Componentwise order: a ⪯ b iff a_i <= b_i for all i.
using MultiDegree = std::vector<int>;

long long total_degree(const MultiDegree& k);
bool is_zero_degree(const MultiDegree& k);
bool degree_leq(const MultiDegree& a, const MultiDegree& b);
bool degree_prec(const MultiDegree& a, const MultiDegree& b);  // a ⪯ b and a != b
MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b);
MultiDegree unit_degree(int n, int i);
std::string degree_str(const MultiDegree& k);

/// Total order refining the componentwise partial order: ascending total
/// degree, ties broken by descending lexicographic comparison. Any list
/// sorted by it is a valid inductive construction order.
struct GradedLexLess {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const;
};

struct DegreeBound {
  enum class Kind { Total, Box, All };
  Kind kind = Kind::All;
  long long total = 0;
  MultiDegree box;

  static DegreeBound total_bound(long long t);
  static DegreeBound box_bound(MultiDegree b);
  static DegreeBound unbounded();

  bool covers(const MultiDegree& k) const;
};

}  // namespace kmnil
