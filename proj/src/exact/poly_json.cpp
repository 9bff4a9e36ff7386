#include "nodal/exact/poly_json.hpp"

#include <stdexcept>

namespace nodal {

nlohmann::json to_json(const MultiPoly &f, const std::vector<std::string> &vars) {
  if (vars.size() != f.num_vars()) throw std::invalid_argument("variable name count");
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[e, c] : f.terms())
    terms.push_back({{"num", c.num().get_str()}, {"den", c.den().get_str()}, {"exp", e}});
  return {{"vars", vars}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json &j) {
  auto n = j.at("vars").size();
  MultiPoly f(n);
  for (const auto &t : j.at("terms")) {
    Integer num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
    auto e = t.at("exp").get<Exponent>();
    if (e.size() != n) throw std::invalid_argument("exponent length");
    f.add_term(e, Rational(num, den));
  }
  return f;
}

nlohmann::json to_json(const Rational &r) { return r.str(); }

nlohmann::json to_json(const QVector &v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &x : v) a.push_back(x.str());
  return a;
}

nlohmann::json to_json(const QMatrix &m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

std::vector<std::string> default_var_names(std::size_t n, const std::string &stem) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

} // namespace nodal
