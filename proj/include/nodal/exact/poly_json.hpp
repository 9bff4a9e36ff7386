#pragma once

#include "nodal/exact/matrix.hpp"
#include "nodal/exact/multipoly.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace nodal {

/// {"vars": [...], "terms": [{"num","den","exp"}...]}, leading term first.
nlohmann::json to_json(const MultiPoly &f, const std::vector<std::string> &vars);
MultiPoly poly_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Rational &r);
nlohmann::json to_json(const QVector &v);
nlohmann::json to_json(const QMatrix &m);

std::vector<std::string> default_var_names(std::size_t n, const std::string &stem);

} // namespace nodal
