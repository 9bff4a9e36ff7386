#pragma once

#include "nodal/configs/orbits.hpp"
#include "nodal/surface/divisor.hpp"

#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace nodal::surface {

/// Bit 0 marks eta, bit coord(x) marks node x.
using Word = std::uint16_t;

/// Positions with non-integral coordinate; throws std::domain_error outside (1/2)Z.
Word word_of(const DivisorClass &d);
int node_weight(Word w);
bool eta_bit(Word w);
std::string word_str(Word w);
Word act(const configs::Perm &g, Word w);

struct EvenSetCode {
  std::vector<Word> generators;
  std::vector<Word> words; // sorted
  std::size_t dimension = 0;
  std::map<int, int> node_weight_enumerator;

  [[nodiscard]] bool contains(Word w) const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Span of the words of sigma(E12), sigma(E23), sigma(E34), sigma(E45), sigma(E15).
EvenSetCode even_set_code();
/// Generator duads of the code, in order.
const std::vector<Duad> &code_basis_duads();

struct WordOrbit {
  int node_weight = 0;
  std::vector<Word> words;
  std::size_t stabilizer_order = 0;
};

/// S6 orbits on the nonzero words; throws configs::NotAnAction if the code is not S6-stable.
std::vector<WordOrbit> code_word_orbits(const EvenSetCode &c);

} // namespace nodal::surface
