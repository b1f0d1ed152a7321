#include "kmnil/multidegree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kmnil {

long long total_degree(const MultiDegree& k) {
  return std::accumulate(k.begin(), k.end(), 0LL);
}

bool is_zero_degree(const MultiDegree& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

bool degree_leq(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "degree_leq: rank mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool degree_prec(const MultiDegree& a, const MultiDegree& b) {
  return degree_leq(a, b) && a != b;
}

MultiDegree degree_add(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "degree_add: rank mismatch");
  MultiDegree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiDegree unit_degree(int n, int i) {
  if (i < 0 || i >= n) fail(Errc::IndexOutOfRange, "unit_degree: index out of range");
  MultiDegree k(n, 0);
  k[i] = 1;
  return k;
}

std::string degree_str(const MultiDegree& k) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

bool GradedLexLess::operator()(const MultiDegree& a, const MultiDegree& b) const {
  long long ta = total_degree(a), tb = total_degree(b);
  if (ta != tb) return ta < tb;
  return a > b;  // descending lex within equal total degree
}

DegreeBound DegreeBound::total_bound(long long t) {
  DegreeBound b;
  b.kind = Kind::Total;
  b.total = t;
  return b;
}

DegreeBound DegreeBound::box_bound(MultiDegree box) {
  DegreeBound b;
  b.kind = Kind::Box;
  b.box = std::move(box);
  return b;
}

DegreeBound DegreeBound::unbounded() { return DegreeBound{}; }

bool DegreeBound::covers(const MultiDegree& k) const {
  switch (kind) {
    case Kind::All:
      return true;
    case Kind::Total:
      return total_degree(k) <= total;
    case Kind::Box:
      return degree_leq(k, box);
  }
  return false;
}

}  // namespace kmnil
