#pragma once

#include <string>

#include "graycube/cube.hpp"
#include "graycube/poset.hpp"

namespace graycube {

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Hasse diagram of a poset: one node per element, one edge per covering
/// pair, drawn bottom-up.
inline std::string poset_to_dot(const FinitePoset& p,
                                const std::string& name = "hom") {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (const auto& e : p.elements())
    out += "  " + detail::dot_quote(e) + ";\n";
  for (const auto& [lo, hi] : p.covering_pairs())
    out += "  " + detail::dot_quote(lo) + " -> " + detail::dot_quote(hi) + ";\n";
  return out + "}\n";
}

/// The atom graph of the cube: objects as nodes, atoms as edges labelled
/// by their direction.
inline std::string cube_skeleton_to_dot(int d, const std::string& name = "cube") {
  if (d < 0) throw std::invalid_argument("cube dimension must be nonnegative");
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (const Obj& eps : cube_objects(d))
    out += "  " + detail::dot_quote(eps) + ";\n";
  for (const Obj& eps : cube_objects(d))
    for (int a = 1; a <= d; ++a)
      if (eps[static_cast<std::size_t>(a) - 1] == '0')
        out += "  " + detail::dot_quote(eps) + " -> " +
               detail::dot_quote(flip_bit(eps, a)) + " [label=" +
               detail::dot_quote(std::to_string(a)) + "];\n";
  return out + "}\n";
}

}  // namespace graycube
