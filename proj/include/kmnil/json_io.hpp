#pragma once

#include <json.hpp>

#include "kmnil/algebra.hpp"

namespace kmnil {

nlohmann::json bound_to_json(const DegreeBound& bound);
DegreeBound bound_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const GradedAlgebra& alg);
GradedAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace kmnil
