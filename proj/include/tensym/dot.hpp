#pragma once

#include <string>
#include <vector>

#include "tensym/model.hpp"

namespace tensym {

namespace detail {

inline void dot_nodes(std::string& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + names[i] + "\"];\n";
}

inline void dot_covers(std::string& out, const Poset& p) {
  for (const auto& [a, b] : cover_pairs(p))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
}

inline void dot_map(std::string& out, const std::vector<std::uint8_t>& t,
                    const char* label) {
  for (std::size_t i = 0; i < t.size(); ++i)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(static_cast<int>(t[i])) +
           " [style=dashed,label=\"" + label + "\"];\n";
}

inline void dot_relation(std::string& out, const Relation& r, const char* label,
                         const char* color) {
  for (const auto& [a, b] : r.pairs())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [color=" + color +
           ",label=\"" + label + "\"];\n";
}

inline void dot_colored_map(std::string& out, const std::vector<std::uint8_t>& t,
                            const char* label, const char* color) {
  for (std::size_t i = 0; i < t.size(); ++i)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(static_cast<int>(t[i])) +
           " [color=" + color + ",label=\"" + label + "\"];\n";
}

}  // namespace detail

/// Hasse covers solid, the negation dashed, tense operators colored. Node
/// order follows the canonical indices, so output is byte-stable.
inline std::string render_dot(const TmsAlgebra& a,
                              const std::vector<std::string>& names = {}) {
  const auto nm = detail::default_names(a.n(), names);
  std::string out = "digraph algebra {\n  rankdir=BT;\n  node [shape=box];\n";
  detail::dot_nodes(out, nm);
  detail::dot_covers(out, a.lat.order);
  detail::dot_map(out, a.N, "N");
  detail::dot_colored_map(out, a.G, "G", "blue");
  detail::dot_colored_map(out, a.H, "H", "red");
  out += "}\n";
  return out;
}

/// Hasse covers solid, g dashed, relations colored and labeled.
inline std::string render_dot(const TmsSpace& s,
                              const std::vector<std::string>& names = {}) {
  const auto nm = detail::default_names(s.n(), names);
  std::string out = "digraph space {\n  rankdir=BT;\n  node [shape=circle];\n";
  detail::dot_nodes(out, nm);
  detail::dot_covers(out, s.order);
  detail::dot_map(out, s.g, "g");
  detail::dot_relation(out, s.rg, "RG", "blue");
  detail::dot_relation(out, s.rh, "RH", "red");
  out += "}\n";
  return out;
}

}  // namespace tensym
