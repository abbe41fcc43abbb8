#include "coxeter/hasse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coxeter/notation.hpp"

namespace coxeter {

std::vector<std::pair<std::size_t, std::size_t>> covering_relations(
    const CoxeterSystem& ambient, const Enumeration& universe, OrderKind order) {
  // Covers leave the ball by one letter, and the reflection test conjugates
  // by words of up to twice that length.
  const CoxeterSystem system =
      ambient.with_length_cap(std::max(ambient.length_cap(), 4 * universe.cap + 4));
  const auto& all = universe.elements;
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (order == OrderKind::Weak) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (Generator s = 0; s < system.rank(); ++s) {
        if (system.is_right_descent(all[i], s)) continue;
        auto it = index.find(system.multiply(all[i], s));
        if (it != index.end()) edges.emplace_back(i, it->second);
      }
    }
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      const GroupElement lower_inverse = system.inverse(all[i]);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (all[j].length() != all[i].length() + 1) continue;
        if (is_reflection(system, system.multiply(lower_inverse, all[j])))
          edges.emplace_back(i, j);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const CoxeterSystem& system, const Enumeration& universe,
                      OrderKind order) {
  const char* name = order == OrderKind::Weak ? "weak_order" : "bruhat_order";
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  if (universe.truncated)
    out << "  label=" << quote("truncated ball, length cap " + std::to_string(universe.cap))
        << ";\n";
  for (std::size_t i = 0; i < universe.elements.size(); ++i)
    out << "  n" << i << " [label=" << quote(format_element(universe.elements[i]))
        << "];\n";
  for (auto [lower, upper] : covering_relations(system, universe, order))
    out << "  n" << lower << " -> n" << upper << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxeter
