#ifndef SATAKE_DOT_HPP
#define SATAKE_DOT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "satake/boundary.hpp"
#include "satake/families.hpp"

namespace satake {

/// "<Type>:<members>" with '+' joining the types of a disconnected set; "∅" for the empty set.
inline std::string set_label(const DynkinDiagram& d, NodeSet s) {
  if (s.empty()) return "∅";
  std::string type;
  for (NodeSet c : d.graph().components(s)) type += (type.empty() ? "" : "+") + classify_component(d, c).name();
  std::string members;
  for (const auto& n : d.names_of(s)) members += (members.empty() ? "" : ",") + n;
  return type + ":" + members;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// DOT digraph of a Hasse diagram, covers pointing left to right. Nodes flagged
/// in `hollow` are drawn dashed with a "∘" suffix.
inline std::string emit_dot(const HasseDiagram& h, const DynkinDiagram& d, const std::string& graph = "hasse",
                            const std::vector<bool>& hollow = {}) {
  std::ostringstream out;
  out << "digraph " << graph << " {\n";
  if (!h.nodes.empty()) {
    out << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      const bool dashed = i < hollow.size() && hollow[i];
      out << "  \"n" << i << "\" [label=\"" << detail::dot_escape(set_label(d, h.nodes[i])) << (dashed ? " ∘" : "")
          << "\"" << (dashed ? ", style=dashed" : "") << "];\n";
    }
    for (auto [a, b] : h.covers) out << "  \"n" << a << "\" -> \"n" << b << "\";\n";
  }
  out << "}\n";
  return out.str();
}

/// DOT digraph of the boundary poset; nodes carry the hermitian part of each component.
inline std::string emit_dot(const BoundaryPoset& p, const DynkinDiagram& d) {
  HasseDiagram h;
  for (const BoundaryComponent& b : p.components) h.nodes.push_back(b.hermitian_c);
  const int n = static_cast<int>(p.components.size());
  auto less = [&](int i, int j) {
    return i != j && p.components[i].kappa_r.subset_of(p.components[j].kappa_r) &&
           p.components[i].kappa_r != p.components[j].kappa_r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(less(i, k) && less(k, j));
      if (cover) h.covers.emplace_back(i, j);
    }
  return emit_dot(h, d, "boundary");
}

}  // namespace satake

#endif  // SATAKE_DOT_HPP
