#include "nodal/surface/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nodal::surface {

Word word_of(const DivisorClass &d) {
  Word w = 0;
  const auto twice = d.doubled();
  for (std::size_t i = 0; i < kRank; ++i)
    if (twice[i] % 2 != 0) w |= Word(1u << i);
  return w;
}

int node_weight(Word w) { return std::popcount(static_cast<unsigned>(w & ~Word(1))); }

bool eta_bit(Word w) { return w & 1u; }

std::string word_str(Word w) {
  std::string s = eta_bit(w) ? "eta" : "";
  for (std::size_t i = 1; i < kRank; ++i)
    if (w & (1u << i)) s += (s.empty() ? "" : ",") + configs::all_duads()[i - 1].str();
  return "{" + s + "}";
}

Word act(const configs::Perm &g, Word w) {
  Word out = w & 1u;
  for (const auto &x : configs::all_duads())
    if (w & (1u << coord(x))) out |= Word(1u << coord(configs::act(g, x)));
  return out;
}

bool EvenSetCode::contains(Word w) const { return std::binary_search(words.begin(), words.end(), w); }

nlohmann::json EvenSetCode::to_json() const {
  nlohmann::json j;
  j["dimension"] = dimension;
  j["generators"] = nlohmann::json::array();
  for (Word g : generators) j["generators"].push_back(word_str(g));
  j["node_weight_enumerator"] = nlohmann::json::object();
  for (auto [w, n] : node_weight_enumerator) j["node_weight_enumerator"][std::to_string(w)] = n;
  j["words"] = nlohmann::json::array();
  for (Word w : words) j["words"].push_back(word_str(w));
  return j;
}

const std::vector<Duad> &code_basis_duads() {
  static const std::vector<Duad> v{Duad(1, 2), Duad(2, 3), Duad(3, 4), Duad(4, 5), Duad(1, 5)};
  return v;
}

EvenSetCode even_set_code() {
  EvenSetCode c;
  for (const auto &d : code_basis_duads()) c.generators.push_back(word_of(sigma_E(d)));
  // F2 rank by elimination on the generator bits.
  std::vector<Word> rows = c.generators;
  for (int bit = 15; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + static_cast<long>(c.dimension), rows.end(),
                           [&](Word w) { return w & (1u << bit); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(c.dimension), it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != c.dimension && (rows[i] & (1u << bit))) rows[i] ^= rows[c.dimension];
    ++c.dimension;
  }
  for (unsigned mask = 0; mask < (1u << c.generators.size()); ++mask) {
    Word w = 0;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
      if (mask & (1u << i)) w ^= c.generators[i];
    c.words.push_back(w);
  }
  std::sort(c.words.begin(), c.words.end());
  c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
  for (Word w : c.words) c.node_weight_enumerator[node_weight(w)]++;
  return c;
}

std::vector<WordOrbit> code_word_orbits(const EvenSetCode &c) {
  std::vector<Word> nonzero;
  for (Word w : c.words)
    if (w) nonzero.push_back(w);
  auto orbits = configs::s6_orbits(nonzero, [](const configs::Perm &g, Word w) { return act(g, w); });
  std::vector<WordOrbit> out;
  for (const auto &o : orbits) {
    WordOrbit wo;
    for (auto i : o.members) wo.words.push_back(nonzero[i]);
    wo.node_weight = node_weight(wo.words.front());
    wo.stabilizer_order = o.stabilizer_order;
    out.push_back(std::move(wo));
  }
  return out;
}

} // namespace nodal::surface
