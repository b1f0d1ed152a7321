#include "kmnil/algebra.hpp"

#include <json.hpp>

#include "kmnil/json_io.hpp"

namespace kmnil {

GradedAlgebra::GradedAlgebra(int rank, DegreeBound bound) : rank_(rank), bound_(std::move(bound)) {
  if (rank <= 0) fail(Errc::DimensionMismatch, "algebra rank must be positive");
}

int GradedAlgebra::add_component(const MultiDegree& k, int dim) {
  if (static_cast<int>(k.size()) != rank_)
    fail(Errc::DimensionMismatch, "component degree has wrong rank");
  if (is_zero_degree(k)) fail(Errc::InvariantViolation, "degree 0 carries no component");
  if (dim < 0) fail(Errc::InvariantViolation, "negative dimension");
  if (!bound_.covers(k)) fail(Errc::OutOfBound, "component " + degree_str(k) + " outside bound");
  GradedLexLess less;
  if (!components_.empty() && !less(components_.back().degree, k))
    fail(Errc::InvariantViolation,
         "components must be added in graded order; got " + degree_str(k) + " after " +
             degree_str(components_.back().degree));
  Component comp;
  comp.degree = k;
  comp.dim = dim;
  comp.first_label = num_labels();
  int idx = static_cast<int>(components_.size());
  components_.push_back(std::move(comp));
  index_.emplace(k, idx);
  label_component_.insert(label_component_.end(), dim, idx);
  return idx;
}

std::optional<int> GradedAlgebra::find_component(const MultiDegree& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GradedAlgebra::component_dim(const MultiDegree& k) const {
  auto idx = find_component(k);
  if (idx) return components_[*idx].dim;
  if (!bound_.covers(k))
    fail(Errc::MissingComponent, "component " + degree_str(k) + " outside constructed bound");
  return 0;
}

void GradedAlgebra::check_label(int label) const {
  if (label < 0 || label >= num_labels())
    fail(Errc::IndexOutOfRange, "label " + std::to_string(label) + " out of range");
}

const MultiDegree& GradedAlgebra::label_degree(int label) const {
  check_label(label);
  return components_[label_component_[label]].degree;
}

int GradedAlgebra::label_component(int label) const {
  check_label(label);
  return label_component_[label];
}

int GradedAlgebra::label_intra(int label) const {
  check_label(label);
  return label - components_[label_component_[label]].first_label;
}

int GradedAlgebra::generator_label(int i) const {
  auto idx = find_component(unit_degree(rank_, i));
  if (!idx || components_[*idx].dim == 0)
    fail(Errc::MissingComponent, "no generator in degree slot " + std::to_string(i + 1));
  return components_[*idx].first_label;
}

void GradedAlgebra::set_bracket(int a, int b, std::vector<BracketTerm> terms) {
  check_label(a);
  check_label(b);
  if (a >= b) fail(Errc::InvariantViolation, "set_bracket requires a < b");
  MultiDegree sum = degree_add(label_degree(a), label_degree(b));
  for (const auto& t : terms) {
    check_label(t.c);
    if (label_degree(t.c) != sum)
      fail(Errc::InvariantViolation, "bracket term violates degree additivity at " +
                                         degree_str(sum));
  }
  if (terms.empty()) {
    brackets_.erase({a, b});
  } else {
    brackets_[{a, b}] = std::move(terms);
  }
}

const std::vector<BracketTerm>* GradedAlgebra::bracket_ptr(int a, int b) const {
  auto it = brackets_.find({a, b});
  return it == brackets_.end() ? nullptr : &it->second;
}

std::vector<BracketTerm> GradedAlgebra::bracket(int a, int b) const {
  check_label(a);
  check_label(b);
  if (a == b) return {};
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const auto* terms = bracket_ptr(a, b);
  if (!terms) return {};
  std::vector<BracketTerm> out = *terms;
  for (auto& t : out) t.coeff *= sign;
  return out;
}

nlohmann::json bound_to_json(const DegreeBound& bound) {
  nlohmann::json j;
  switch (bound.kind) {
    case DegreeBound::Kind::All:
      j["kind"] = "all";
      break;
    case DegreeBound::Kind::Total:
      j["kind"] = "total";
      j["total"] = bound.total;
      break;
    case DegreeBound::Kind::Box:
      j["kind"] = "box";
      j["box"] = bound.box;
      break;
  }
  return j;
}

DegreeBound bound_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "all") return DegreeBound::unbounded();
  if (kind == "total") return DegreeBound::total_bound(j.at("total").get<long long>());
  if (kind == "box") return DegreeBound::box_bound(j.at("box").get<MultiDegree>());
  fail(Errc::IoError, "unknown bound kind '" + kind + "'");
}

nlohmann::json algebra_to_json(const GradedAlgebra& alg) {
  nlohmann::json j;
  j["format"] = "kmnil-algebra-v1";
  j["n"] = alg.rank();
  j["bound"] = bound_to_json(alg.bound());
  nlohmann::json comps = nlohmann::json::array();
  for (int i = 0; i < alg.num_components(); ++i) {
    const auto& c = alg.component(i);
    comps.push_back({{"degree", c.degree}, {"dim", c.dim}});
  }
  j["components"] = std::move(comps);
  nlohmann::json brs = nlohmann::json::array();
  for (const auto& [key, terms] : alg.brackets()) {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : terms) ts.push_back({{"c", t.c}, {"coeff", t.coeff}});
    brs.push_back({{"a", key.first}, {"b", key.second}, {"terms", std::move(ts)}});
  }
  j["brackets"] = std::move(brs);
  return j;
}

GradedAlgebra algebra_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "kmnil-algebra-v1")
    fail(Errc::IoError, "not a kmnil algebra dump");
  GradedAlgebra alg(j.at("n").get<int>(), bound_from_json(j.at("bound")));
  for (const auto& c : j.at("components"))
    alg.add_component(c.at("degree").get<MultiDegree>(), c.at("dim").get<int>());
  for (const auto& b : j.at("brackets")) {
    std::vector<BracketTerm> terms;
    for (const auto& t : b.at("terms"))
      terms.push_back({t.at("c").get<int>(), t.at("coeff").get<double>()});
    alg.set_bracket(b.at("a").get<int>(), b.at("b").get<int>(), std::move(terms));
  }
  return alg;
}

std::string algebra_to_json_text(const GradedAlgebra& alg) { return algebra_to_json(alg).dump(2); }

GradedAlgebra algebra_from_json_text(const std::string& text) {
  return algebra_from_json(nlohmann::json::parse(text));
}

}  // namespace kmnil
