#include "nodal/configs/incidence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nodal::configs {

std::string ConfigurationType::str() const {
  if (points == blocks && point_degree == block_size)
    return "(" + std::to_string(points) + "_" + std::to_string(point_degree) + ")";
  return "(" + std::to_string(points) + "_" + std::to_string(point_degree) + "," +
         std::to_string(blocks) + "_" + std::to_string(block_size) + ")";
}

IncidenceStructure::IncidenceStructure(std::vector<std::string> point_labels,
                                       std::vector<std::string> block_labels,
                                       std::vector<std::vector<bool>> incidence)
    : points_(std::move(point_labels)), blocks_(std::move(block_labels)), inc_(std::move(incidence)) {
  if (inc_.size() != points_.size()) throw std::invalid_argument("incidence rows != points");
  for (const auto &row : inc_)
    if (row.size() != blocks_.size()) throw std::invalid_argument("incidence cols != blocks");
}

std::size_t IncidenceStructure::point_degree(std::size_t p) const {
  return static_cast<std::size_t>(std::count(inc_[p].begin(), inc_[p].end(), true));
}

std::size_t IncidenceStructure::block_size(std::size_t b) const {
  std::size_t k = 0;
  for (const auto &row : inc_) k += row[b];
  return k;
}

std::vector<std::size_t> IncidenceStructure::block_points(std::size_t b) const {
  std::vector<std::size_t> v;
  for (std::size_t p = 0; p < inc_.size(); ++p)
    if (inc_[p][b]) v.push_back(p);
  return v;
}

std::optional<ConfigurationType> IncidenceStructure::type() const {
  if (points_.empty() || blocks_.empty()) return std::nullopt;
  std::size_t r = point_degree(0), k = block_size(0);
  for (std::size_t p = 1; p < num_points(); ++p)
    if (point_degree(p) != r) return std::nullopt;
  for (std::size_t b = 1; b < num_blocks(); ++b)
    if (block_size(b) != k) return std::nullopt;
  return ConfigurationType{num_points(), r, num_blocks(), k};
}

nlohmann::json IncidenceStructure::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto &row : inc_) m.push_back(std::vector<bool>(row.begin(), row.end()));
  return {{"points", points_}, {"blocks", blocks_}, {"incidence", m}};
}

IncidenceStructure trope_incidence_model() {
  std::vector<std::string> pl, bl;
  for (const auto &s : all_synthemes()) pl.push_back(s.str());
  for (const auto &t : all_triples()) bl.push_back(t.str());
  std::vector<std::vector<bool>> inc;
  for (const auto &s : all_synthemes()) {
    std::vector<bool> row;
    for (const auto &t : all_triples()) row.push_back(trope_contains(t, s));
    inc.push_back(std::move(row));
  }
  return {pl, bl, inc};
}

IncidenceStructure line_incidence_model() {
  std::vector<std::string> pl, bl;
  for (const auto &d : all_duads()) pl.push_back(d.str());
  for (const auto &s : all_synthemes()) bl.push_back(s.str());
  std::vector<std::vector<bool>> inc;
  for (const auto &d : all_duads()) {
    std::vector<bool> row;
    for (const auto &s : all_synthemes()) row.push_back(s.contains(d));
    inc.push_back(std::move(row));
  }
  return {pl, bl, inc};
}

namespace {

using Block = std::vector<std::size_t>;

std::vector<std::vector<std::size_t>> common_blocks(const IncidenceStructure &s) {
  std::vector<std::vector<std::size_t>> c(s.num_points(), std::vector<std::size_t>(s.num_points()));
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    auto pts = s.block_points(b);
    for (auto i : pts)
      for (auto j : pts) ++c[i][j];
  }
  return c;
}

} // namespace

bool check_relabeling(const IncidenceStructure &a, const IncidenceStructure &b, const Relabeling &r) {
  if (r.point_map.size() != a.num_points() || r.block_map.size() != a.num_blocks()) return false;
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks()) return false;
  auto is_bij = [](std::vector<std::size_t> m, std::size_t n) {
    std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != i || i >= n) return false;
    return true;
  };
  if (!is_bij(r.point_map, b.num_points()) || !is_bij(r.block_map, b.num_blocks())) return false;
  for (std::size_t p = 0; p < a.num_points(); ++p)
    for (std::size_t k = 0; k < a.num_blocks(); ++k)
      if (a.incident(p, k) != b.incident(r.point_map[p], r.block_map[k])) return false;
  return true;
}

std::optional<Relabeling> incidence_isomorphic(const IncidenceStructure &a, const IncidenceStructure &b) {
  const std::size_t n = a.num_points();
  if (n != b.num_points() || a.num_blocks() != b.num_blocks()) return std::nullopt;
  auto ca = common_blocks(a), cb = common_blocks(b);
  {
    // Degree sequences must agree.
    std::vector<std::size_t> da, db, ka, kb;
    for (std::size_t p = 0; p < n; ++p) da.push_back(ca[p][p]), db.push_back(cb[p][p]);
    for (std::size_t k = 0; k < a.num_blocks(); ++k) ka.push_back(a.block_size(k)), kb.push_back(b.block_size(k));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (da != db || ka != kb) return std::nullopt;
  }
  std::map<Block, std::size_t> b_blocks;
  for (std::size_t k = 0; k < b.num_blocks(); ++k) b_blocks.emplace(b.block_points(k), k);
  if (b_blocks.size() != b.num_blocks()) return std::nullopt; // repeated blocks are out of scope

  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::optional<Relabeling> found;

  auto finish = [&]() -> bool {
    Relabeling r{map, std::vector<std::size_t>(a.num_blocks())};
    for (std::size_t k = 0; k < a.num_blocks(); ++k) {
      Block img;
      for (auto p : a.block_points(k)) img.push_back(map[p]);
      std::sort(img.begin(), img.end());
      auto it = b_blocks.find(img);
      if (it == b_blocks.end()) return false;
      r.block_map[k] = it->second;
    }
    if (!check_relabeling(a, b, r)) return false;
    found = std::move(r);
    return true;
  };

  auto rec = [&](auto &self, std::size_t i) -> bool {
    if (i == n) return finish();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || ca[i][i] != cb[j][j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = ca[i][k] == cb[j][map[k]];
      if (!ok) continue;
      used[j] = true;
      map[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

} // namespace nodal::configs
