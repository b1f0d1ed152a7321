#include "kmnil/grading.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace kmnil {

namespace {

long long initial_budget() {
  if (const char* env = std::getenv("KMNIL_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1 << 20;
}

std::atomic<long long> g_budget{initial_budget()};

}  // namespace

long long enumeration_budget() { return g_budget.load(); }

void set_enumeration_budget(long long cap) {
  if (cap > 0) g_budget.store(cap);
}

namespace {

void enumerate_box(const MultiDegree& box, MultiDegree& cur, size_t slot,
                   std::vector<MultiDegree>& out, size_t max_count) {
  if (slot == box.size()) {
    if (!is_zero_degree(cur)) {
      if (out.size() >= max_count)
        fail(Errc::BoundTooLarge, "degree enumeration exceeds cap of " +
                                      std::to_string(max_count) + " entries");
      out.push_back(cur);
    }
    return;
  }
  for (int v = 0; v <= box[slot]; ++v) {
    cur[slot] = v;
    enumerate_box(box, cur, slot + 1, out, max_count);
  }
  cur[slot] = 0;
}

void enumerate_total(int n, long long budget, MultiDegree& cur, size_t slot,
                     std::vector<MultiDegree>& out, size_t max_count) {
  if (slot == static_cast<size_t>(n)) {
    if (!is_zero_degree(cur)) {
      if (out.size() >= max_count)
        fail(Errc::BoundTooLarge, "degree enumeration exceeds cap of " +
                                      std::to_string(max_count) + " entries");
      out.push_back(cur);
    }
    return;
  }
  for (long long v = 0; v <= budget; ++v) {
    cur[slot] = static_cast<int>(v);
    enumerate_total(n, budget - v, cur, slot + 1, out, max_count);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<MultiDegree> degree_order(int n, const DegreeBound& bound, size_t max_count) {
  if (n <= 0) fail(Errc::DimensionMismatch, "degree_order: rank must be positive");
  std::vector<MultiDegree> out;
  MultiDegree cur(n, 0);
  switch (bound.kind) {
    case DegreeBound::Kind::Total:
      if (bound.total < 1) fail(Errc::BoundTooSmall, "total bound must be >= 1");
      enumerate_total(n, bound.total, cur, 0, out, max_count);
      break;
    case DegreeBound::Kind::Box:
      if (static_cast<int>(bound.box.size()) != n)
        fail(Errc::DimensionMismatch, "componentwise bound has wrong rank");
      if (is_zero_degree(bound.box)) fail(Errc::BoundTooSmall, "componentwise bound is zero");
      enumerate_box(bound.box, cur, 0, out, max_count);
      break;
    case DegreeBound::Kind::All:
      fail(Errc::BoundTooLarge, "cannot enumerate an unbounded degree set");
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

namespace {

struct WedgeEnumerator {
  const GradedAlgebra& alg;
  int q;
  long long max_dim;
  std::vector<int> tuple;
  ChainBasis* basis;

  void run(int next_label, const MultiDegree& remaining, int slots_left) {
    if (slots_left == 0) {
      if (!is_zero_degree(remaining)) return;
      if (basis->dim() >= max_dim)
        fail(Errc::BudgetExceeded, "chain basis at " + degree_str(basis->k) + ", q=" +
                                       std::to_string(basis->q) + " exceeds cap " +
                                       std::to_string(max_dim));
      basis->index.emplace(tuple, basis->dim());
      basis->monomials.push_back(tuple);
      return;
    }
    if (total_degree(remaining) < slots_left) return;  // every factor has total degree >= 1
    for (int label = next_label; label < alg.num_labels(); ++label) {
      const MultiDegree& d = alg.label_degree(label);
      if (total_degree(d) > total_degree(remaining) - (slots_left - 1)) break;  // labels sorted
      if (!degree_leq(d, remaining)) continue;
      MultiDegree rest(remaining.size());
      for (size_t i = 0; i < rest.size(); ++i) rest[i] = remaining[i] - d[i];
      tuple.push_back(label);
      run(label + 1, rest, slots_left - 1);
      tuple.pop_back();
    }
  }
};

}  // namespace

ChainBasis wedge_basis(const GradedAlgebra& alg, const MultiDegree& k, int q) {
  if (static_cast<int>(k.size()) != alg.rank())
    fail(Errc::DimensionMismatch, "wedge_basis: degree rank mismatch");
  if (!alg.covers(k))
    fail(Errc::MissingComponent, "wedge_basis: " + degree_str(k) + " outside constructed bound");
  ChainBasis basis;
  basis.k = k;
  basis.q = q;
  if (q < 0 || is_zero_degree(k)) return basis;
  if (q == 0 || total_degree(k) < q) return basis;  // empty
  WedgeEnumerator en{alg, q, enumeration_budget(), {}, &basis};
  en.tuple.reserve(q);
  en.run(0, k, q);
  return basis;
}

}  // namespace kmnil
