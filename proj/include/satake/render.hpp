#ifndef SATAKE_RENDER_HPP
#define SATAKE_RENDER_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "satake/index.hpp"

namespace satake {

namespace detail {

inline std::string node_cell(const TwoLevelIndex& index, NodeSet delta, int v) {
  std::string s = index.diagram.name(v);
  if (index.aniso_r.contains(v)) s += '*';
  if (index.aniso_q.contains(v)) s = "[" + s + "]";
  if (delta.contains(v)) s += "(δ)";
  return s;
}

// Display width, counting each UTF-8 sequence once.
inline std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

inline std::string bond(const DynkinDiagram& d, int a, int b) {
  const int label = d.label(a, b);
  if (label == 0) return "   ";
  if (label == 3) return "---";
  const bool towards = d.shorter(a, b) == b;
  if (label == 4) return towards ? "=>=" : "=<=";
  return towards ? "≡>≡" : "≡<≡";
}

}  // namespace detail

/// Plain-text Satake diagram. Components in one Galois orbit are stacked with
/// aligned columns; `*` marks R-anisotropic nodes, `[...]` Q-anisotropic ones
/// and `(δ)` members of δ. Edges between non-consecutive columns are listed
/// under their row.
inline std::string render_satake(const TwoLevelIndex& index, NodeSet delta) {
  const DynkinDiagram& d = index.diagram;
  const GaloisClosure closure = galois_closure(index);
  std::vector<std::vector<std::vector<int>>> blocks;
  NodeSet placed;
  for (NodeSet c : d.components()) {
    if (c.intersects(placed)) continue;
    const std::vector<int> base = classify(d, c).order;
    std::vector<std::vector<int>> rows{base};
    placed |= c;
    for (const Permutation& g : closure.elements()) {
      const NodeSet image = g(c);
      if (image.intersects(placed)) continue;
      std::vector<int> row;
      for (int v : base) row.push_back(g(v));
      rows.push_back(std::move(row));
      placed |= image;
    }
    blocks.push_back(std::move(rows));
  }

  std::ostringstream out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out << '\n';
    const auto& rows = blocks[b];
    const std::size_t cols = rows.front().size();
    std::vector<std::size_t> w(cols, 0);
    for (const auto& row : rows)
      for (std::size_t k = 0; k < cols; ++k) w[k] = std::max(w[k], detail::width(detail::node_cell(index, delta, row[k])));
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t k = 0; k < cols; ++k) {
        const std::string cell = detail::node_cell(index, delta, row[k]);
        line += cell;
        if (k + 1 < cols) {
          line += std::string(w[k] - detail::width(cell), ' ');
          line += " " + detail::bond(d, row[k], row[k + 1]) + " ";
        }
      }
      out << line << '\n';
      std::string extra;
      for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i + 2; j < cols; ++j)
          if (d.label(row[i], row[j]) != 0)
            extra += "  " + d.name(row[i]) + " " + detail::bond(d, row[i], row[j]) + " " + d.name(row[j]);
      if (!extra.empty()) out << "  also:" << extra << '\n';
    }
  }
  return out.str();
}

}  // namespace satake

#endif  // SATAKE_RENDER_HPP
