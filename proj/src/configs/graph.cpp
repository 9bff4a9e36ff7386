#include "nodal/configs/graph.hpp"

#include "nodal/configs/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nodal::configs {

MarkedGraph::MarkedGraph(int n, std::vector<std::string> labels, std::vector<int> marks)
    : n_(n), labels_(std::move(labels)), marks_(std::move(marks)),
      mult_(labels_.size(), std::vector<int>(labels_.size(), 0)) {
  if (labels_.size() != marks_.size()) throw std::invalid_argument("labels and marks differ in size");
}

void MarkedGraph::set_multiplicity(std::size_t u, std::size_t v, int m) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  mult_[u][v] = mult_[v][u] = m;
}

std::size_t MarkedGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(mult_[v].begin(), mult_[v].end(), [](int m) { return m > 0; }));
}

std::optional<std::size_t> MarkedGraph::find(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

MarkedGraph MarkedGraph::induced(const std::vector<std::size_t> &vs) const {
  std::vector<std::string> l;
  std::vector<int> m;
  for (auto v : vs) l.push_back(labels_[v]), m.push_back(marks_[v]);
  MarkedGraph g(n_, l, m);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.set_multiplicity(i, j, mult_[vs[i]][vs[j]]);
  return g;
}

int MarkedGraph::rule_multiplicity(std::size_t u, std::size_t v) const {
  return u == v ? 0 : std::max(marks_[u] + marks_[v] - n_, 0);
}

bool MarkedGraph::contains_rule_edges() const {
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = 0; v < size(); ++v)
      if (mult_[u][v] < rule_multiplicity(u, v)) return false;
  return true;
}

bool MarkedGraph::rule_edges_only() const {
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = 0; v < size(); ++v)
      if (mult_[u][v] != rule_multiplicity(u, v)) return false;
  return true;
}

nlohmann::json MarkedGraph::to_json() const {
  return {{"n", n_}, {"labels", labels_}, {"marks", marks_}, {"multiplicity", mult_}};
}

MarkedGraph conjugacy_graph(int n, const std::vector<int> &alpha) {
  if (n == 3) {
    std::vector<std::string> labels;
    std::vector<int> marks;
    std::vector<Duad> petersen;
    for (const auto &d : all_duads())
      if (d.b <= 5) petersen.push_back(d), labels.push_back(d.str()), marks.push_back(1);
    for (int a = 1; a <= 5; ++a) labels.push_back(Duad(a, 6).str()), marks.push_back(2);
    MarkedGraph g(3, labels, marks);
    for (std::size_t i = 0; i < petersen.size(); ++i) {
      for (std::size_t j = i + 1; j < petersen.size(); ++j)
        if (petersen[i].disjoint(petersen[j])) g.set_multiplicity(i, j, 1);
      g.set_multiplicity(i, 10 + static_cast<std::size_t>(petersen[i].a - 1), 1);
      g.set_multiplicity(i, 10 + static_cast<std::size_t>(petersen[i].b - 1), 1);
    }
    for (std::size_t a = 10; a < 15; ++a)
      for (std::size_t b = a + 1; b < 15; ++b) g.set_multiplicity(a, b, 1);
    return g;
  }
  if (alpha.empty()) throw std::invalid_argument("conjugacy graph for n=" + std::to_string(n) + " needs marks");
  std::vector<std::string> labels;
  std::vector<int> marks;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) {
      labels.push_back("h" + std::to_string(i + 1) + "." + std::to_string(k + 1));
      marks.push_back(static_cast<int>(i + 1));
    }
  MarkedGraph g(n, labels, marks);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (int m = g.rule_multiplicity(u, v)) g.set_multiplicity(u, v, m);
  return g;
}

std::optional<std::size_t> girth(const MarkedGraph &g) {
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<long> dist(g.size(), -1), parent(g.size(), -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (!g.multiplicity(u, v)) continue;
        if (g.multiplicity(u, v) > 1) return 2;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<long>(u);
          q.push_back(v);
        } else if (parent[u] != static_cast<long>(v)) {
          auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<std::size_t>> graph_isomorphism(const MarkedGraph &a, const MarkedGraph &b,
                                                          std::size_t u, std::size_t v) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> order{u};
  for (std::size_t i = 0; i < n; ++i)
    if (i != u) order.push_back(i);
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  auto compatible = [&](std::size_t i, std::size_t j) {
    if (a.mark(i) != b.mark(j) || a.degree(i) != b.degree(j)) return false;
    for (std::size_t k = 0; k < n; ++k)
      if (map[k] != n && a.multiplicity(i, k) != b.multiplicity(j, map[k])) return false;
    return true;
  };
  auto rec = [&](auto &self, std::size_t pos) -> bool {
    if (pos == n) return true;
    std::size_t i = order[pos];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || (pos == 0 && j != v) || !compatible(i, j)) continue;
      map[i] = j;
      used[j] = true;
      if (self(self, pos + 1)) return true;
      map[i] = n;
      used[j] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

bool vertex_transitive(const MarkedGraph &g) {
  for (std::size_t v = 1; v < g.size(); ++v)
    if (!graph_isomorphism(g, g, 0, v)) return false;
  return true;
}

} // namespace nodal::configs
