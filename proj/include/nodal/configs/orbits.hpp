#pragma once

#include "nodal/configs/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace nodal::configs {

struct Orbit {
  std::vector<std::size_t> members; // indices into the element list, sorted
  std::size_t stabilizer_order = 0;
};

/// Thrown when a claimed action fails the group-action axioms.
class NotAnAction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Orbits of S6 on `elements` under act(g, x). The action is checked on the generators,
/// and |orbit| * |stabilizer| = 720 is checked for each orbit.
template <class T, class Act>
std::vector<Orbit> s6_orbits(const std::vector<T> &elements, Act act) {
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  if (index.size() != elements.size()) throw std::invalid_argument("s6_orbits: repeated element");
  auto image = [&](const Perm &g, std::size_t i) {
    auto it = index.find(act(g, elements[i]));
    if (it == index.end()) throw NotAnAction("image leaves the element set under " + g.str());
    return it->second;
  };
  const auto gens = s6_generators();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (image(Perm(), i) != i) throw NotAnAction("identity moves an element");
    for (const auto &g : gens)
      for (const auto &h : gens)
        if (image(g * h, i) != image(g, image(h, i)))
          throw NotAnAction("compatibility fails for " + g.str() + " and " + h.str());
  }
  std::vector<Orbit> out;
  std::vector<bool> seen(elements.size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    Orbit o;
    std::vector<bool> in(elements.size(), false);
    for (const auto &g : symmetric_group()) {
      auto j = image(g, i);
      if (j == i) ++o.stabilizer_order;
      if (!in[j]) in[j] = true, seen[j] = true, o.members.push_back(j);
    }
    std::sort(o.members.begin(), o.members.end());
    if (o.members.size() * o.stabilizer_order != symmetric_group().size())
      throw std::logic_error("orbit-stabilizer identity fails");
    out.push_back(std::move(o));
  }
  return out;
}

} // namespace nodal::configs
