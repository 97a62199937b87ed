#ifndef SATAKE_DIAGRAM_HPP
#define SATAKE_DIAGRAM_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "satake/bitset.hpp"
#include "satake/graph.hpp"
#include "satake/permutation.hpp"

namespace satake {

class NotADynkinDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Series { A, B, C, D, E6, E7, E8, F4, G2 };

struct ComponentType {
  Series series = Series::A;
  int rank = 1;

  /// "A5", "B3", "E6", ...
  std::string name() const {
    switch (series) {
      case Series::A: return "A" + std::to_string(rank);
      case Series::B: return "B" + std::to_string(rank);
      case Series::C: return "C" + std::to_string(rank);
      case Series::D: return "D" + std::to_string(rank);
      case Series::E6: return "E6";
      case Series::E7: return "E7";
      case Series::E8: return "E8";
      case Series::F4: return "F4";
      case Series::G2: return "G2";
    }
    return "?";
  }

  bool operator==(const ComponentType&) const = default;
};

/// Parse "A", "B", ..., "E6", "F4", "G2" (case-insensitive family letter) plus a rank.
/// Exceptional series ignore `rank` except for validation.
inline std::optional<ComponentType> make_component_type(const std::string& series, int rank) {
  std::string s;
  for (char c : series) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto fixed = [&](Series x, int r) -> std::optional<ComponentType> {
    if (rank != r) return std::nullopt;
    return ComponentType{x, r};
  };
  if (s == "A" && rank >= 1) return ComponentType{Series::A, rank};
  if (s == "B" && rank >= 2) return ComponentType{Series::B, rank};
  if (s == "C" && rank >= 2) return ComponentType{Series::C, rank};
  if (s == "D" && rank >= 4) return ComponentType{Series::D, rank};
  if (s == "E6" || (s == "E" && rank == 6)) return fixed(Series::E6, 6);
  if (s == "E7" || (s == "E" && rank == 7)) return fixed(Series::E7, 7);
  if (s == "E8" || (s == "E" && rank == 8)) return fixed(Series::E8, 8);
  if (s == "F4" || s == "F") return fixed(Series::F4, 4);
  if (s == "G2" || s == "G") return fixed(Series::G2, 2);
  return std::nullopt;
}

/// Edge of a Dynkin diagram. `label` is the Coxeter label (3, 4 or 6);
/// for labels above 3, `shorter` names the endpoint carrying the short root.
struct Edge {
  int u = 0;
  int v = 0;
  int label = 3;
  int shorter = -1;

  bool operator==(const Edge&) const = default;
};

/// Result of classifying a connected node subset: its type together with the
/// subset's nodes listed in Bourbaki order.
struct Classification {
  ComponentType type;
  std::vector<int> order;
};

class DynkinDiagram;
inline Classification classify(const DynkinDiagram& d, NodeSet subset);

/// Labeled multigraph of simple C-roots. Immutable after construction; every
/// connected component is a valid Dynkin diagram.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;

  DynkinDiagram(std::vector<std::string> names, std::vector<Edge> edges)
      : names_(std::move(names)), edges_(std::move(edges)), graph_(static_cast<int>(names_.size())) {
    if (names_.size() > static_cast<std::size_t>(kMaxVertices))
      throw NotADynkinDiagram("diagram has more than 64 nodes");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw NotADynkinDiagram("duplicate node '" + names_[i] + "'");
    }
    labels_.assign(names_.size() * names_.size(), 0);
    shorter_.assign(names_.size() * names_.size(), -1);
    for (const Edge& e : edges_) {
      const int n = size();
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw NotADynkinDiagram("edge endpoint out of range");
      if (e.u == e.v) throw NotADynkinDiagram("loop at '" + names_[e.u] + "'");
      if (e.label != 3 && e.label != 4 && e.label != 6)
        throw NotADynkinDiagram("edge label must be 3, 4 or 6");
      if ((e.label > 3) != (e.shorter >= 0))
        throw NotADynkinDiagram("short root required exactly on edges labeled 4 or 6");
      if (e.shorter >= 0 && e.shorter != e.u && e.shorter != e.v)
        throw NotADynkinDiagram("short root is not an endpoint of its edge");
      if (graph_.adjacent(e.u, e.v))
        throw NotADynkinDiagram("multiple edges between '" + names_[e.u] + "' and '" + names_[e.v] + "'");
      graph_.add_edge(e.u, e.v);
      labels_[slot(e.u, e.v)] = labels_[slot(e.v, e.u)] = e.label;
      shorter_[slot(e.u, e.v)] = shorter_[slot(e.v, e.u)] = e.shorter;
    }
    for (NodeSet c : graph_.components(all())) classify(*this, c);
  }

  int size() const { return static_cast<int>(names_.size()); }
  NodeSet all() const { return NodeSet::range(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const AdjacencyGraph<NodeTag>& graph() const { return graph_; }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Coxeter label of the edge {u, v}; 0 when not adjacent.
  int label(int u, int v) const { return labels_[slot(u, v)]; }
  /// Short endpoint of a multiple edge {u, v}; -1 for simple edges or non-edges.
  int shorter(int u, int v) const { return shorter_[slot(u, v)]; }

  /// Names of the members of `s`, in declaration order.
  std::vector<std::string> names_of(NodeSet s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(names_[i]); });
    return out;
  }

  /// Connected components, ordered by smallest member.
  std::vector<NodeSet> components() const { return graph_.components(all()); }

 private:
  std::size_t slot(int u, int v) const { return static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v); }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  AdjacencyGraph<NodeTag> graph_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> labels_;
  std::vector<int> shorter_;
};

namespace detail {

// Walk the path starting at `from` (leaving `prev` behind) inside `within`.
inline std::vector<int> walk_arm(const DynkinDiagram& d, int prev, int from, NodeSet within) {
  std::vector<int> arm{from};
  while (true) {
    NodeSet next = d.graph().neighbors[arm.back()] & within;
    if (prev >= 0) next.erase(prev);
    if (next.empty()) break;
    if (next.size() > 1) throw NotADynkinDiagram("more than one branch node");
    prev = arm.back();
    arm.push_back(next.first());
  }
  return arm;
}

}  // namespace detail

/// Classify a connected node subset (with the induced labels) as a Dynkin type.
///
/// Canonical forms: a two-node double edge is B2; a three-node fork cannot occur
/// (it is a chain A3); B and C are told apart by whether the terminal root of the
/// double edge is short (B) or long (C).
inline Classification classify(const DynkinDiagram& d, NodeSet s) {
  const auto& g = d.graph();
  if (!g.connected(s)) throw NotADynkinDiagram("subset is not connected");
  const int n = s.size();
  if (n == 1) return {{Series::A, 1}, {s.first()}};

  int edge_count = 0;
  int branch = -1;
  int multi_u = -1;
  int multi_v = -1;
  int multi_count = 0;
  std::vector<int> ends;
  s.for_each([&](int v) {
    NodeSet nb = g.neighbors[v] & s;
    edge_count += nb.size();
    if (nb.size() > 3) throw NotADynkinDiagram("node '" + d.name(v) + "' has more than three neighbors");
    if (nb.size() == 3) {
      if (branch >= 0) throw NotADynkinDiagram("more than one branch node");
      branch = v;
    }
    if (nb.size() == 1) ends.push_back(v);
    nb.for_each([&](int w) {
      if (w > v && d.label(v, w) > 3) {
        ++multi_count;
        multi_u = v;
        multi_v = w;
      }
    });
  });
  edge_count /= 2;
  if (edge_count != n - 1) throw NotADynkinDiagram("diagram contains a cycle");
  if (multi_count > 1) throw NotADynkinDiagram("more than one multiple edge in a component");

  if (branch >= 0) {
    if (multi_count > 0) throw NotADynkinDiagram("branch node together with a multiple edge");
    std::vector<std::vector<int>> arms;
    (g.neighbors[branch] & s).for_each([&](int w) { arms.push_back(detail::walk_arm(d, branch, w, s)); });
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.back() < b.back();
    });
    const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
    if (p == 1 && q == 1) {
      // D_n: long arm tip ... center, then the two short tips.
      std::vector<int> order(arms[2].rbegin(), arms[2].rend());
      if (r == 1) {
        order = {arms[0][0], branch, arms[1][0], arms[2][0]};
        return {{Series::D, 4}, order};
      }
      order.push_back(branch);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
      return {{Series::D, n}, order};
    }
    if (p == 1 && q == 2 && r >= 2 && r <= 4) {
      // E_n: a1 - a3 - a4(center) - a5 - ..., with a2 hanging off the center.
      std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], branch};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
      Series series = r == 2 ? Series::E6 : (r == 3 ? Series::E7 : Series::E8);
      return {{series, n}, order};
    }
    throw NotADynkinDiagram("branch arms do not form a D or E diagram");
  }

  // Chain: walk from the endpoint declared first.
  std::sort(ends.begin(), ends.end());
  std::vector<int> path = detail::walk_arm(d, -1, ends[0], s);
  if (multi_count == 0) return {{Series::A, n}, path};

  auto pos = [&](int v) { return static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin()); };
  int i = std::min(pos(multi_u), pos(multi_v));
  const int short_node = d.shorter(multi_u, multi_v);
  if (d.label(multi_u, multi_v) == 6) {
    if (n != 2) throw NotADynkinDiagram("triple edge outside a G2 component");
    int long_node = short_node == multi_u ? multi_v : multi_u;
    return {{Series::G2, 2}, {long_node, short_node}};
  }
  if (n == 2) {
    int long_node = short_node == multi_u ? multi_v : multi_u;
    return {{Series::B, 2}, {long_node, short_node}};
  }
  if (n == 4 && i == 1) {
    // F4: a1 - a2 => a3 - a4 with a3 short.
    if (path[1] == short_node) std::reverse(path.begin(), path.end());
    return {{Series::F4, 4}, path};
  }
  if (i != 0 && i != n - 2) throw NotADynkinDiagram("double edge in the interior of a chain");
  if (i == 0) std::reverse(path.begin(), path.end());
  Series series = path.back() == short_node ? Series::B : Series::C;
  return {{series, n}, path};
}

/// Type of a connected component (or any connected node subset).
inline ComponentType classify_component(const DynkinDiagram& d, NodeSet component) {
  return classify(d, component).type;
}

/// Opposition involution of the root subsystem with simple roots `subset`,
/// acting on `subset` and fixing every other node.
inline Permutation opposition_involution(const DynkinDiagram& d, NodeSet subset) {
  std::vector<int> images(static_cast<std::size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) images[i] = i;
  for (NodeSet c : d.graph().components(subset)) {
    const Classification cl = classify(d, c);
    const auto& o = cl.order;
    const int n = cl.type.rank;
    switch (cl.type.series) {
      case Series::A:
        for (int k = 0; k < n; ++k) images[o[k]] = o[n - 1 - k];
        break;
      case Series::D:
        if (n % 2 == 1) std::swap(images[o[n - 2]], images[o[n - 1]]);
        break;
      case Series::E6:
        std::swap(images[o[0]], images[o[5]]);
        std::swap(images[o[2]], images[o[4]]);
        break;
      default:
        break;
    }
  }
  return Permutation(std::move(images));
}

/// Opposition involution of the whole diagram.
inline Permutation opposition_involution(const DynkinDiagram& d) { return opposition_involution(d, d.all()); }

/// `subset` together with every node joined to it by an edge.
inline NodeSet theta_plus(const DynkinDiagram& d, NodeSet subset) { return d.graph().closure(subset); }

/// True when `p` preserves edges, labels and short-root designations.
inline bool is_automorphism(const DynkinDiagram& d, const Permutation& p) {
  if (p.size() != d.size()) return false;
  for (const Edge& e : d.edges()) {
    const int u = p(e.u), v = p(e.v);
    if (d.label(u, v) != e.label) return false;
    if (e.shorter >= 0 && d.shorter(u, v) != p(e.shorter)) return false;
  }
  return true;
}

/// Standard diagram of the given type with nodes `<prefix>1 ... <prefix>n`
/// numbered in Bourbaki order.
inline DynkinDiagram standard_diagram(ComponentType t, const std::string& prefix = "a") {
  const int n = t.rank;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<Edge> edges;
  auto simple = [&](int a, int b) { edges.push_back({a - 1, b - 1, 3, -1}); };
  auto multiple = [&](int a, int b, int label, int s) { edges.push_back({a - 1, b - 1, label, s - 1}); };
  switch (t.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) simple(i, i + 1);
      break;
    case Series::B:
      for (int i = 1; i + 1 < n; ++i) simple(i, i + 1);
      multiple(n - 1, n, 4, n);
      break;
    case Series::C:
      for (int i = 1; i + 1 < n; ++i) simple(i, i + 1);
      multiple(n - 1, n, 4, n - 1);
      break;
    case Series::D:
      for (int i = 1; i + 2 < n; ++i) simple(i, i + 1);
      simple(n - 2, n - 1);
      simple(n - 2, n);
      break;
    case Series::E6:
    case Series::E7:
    case Series::E8:
      simple(1, 3);
      simple(2, 4);
      simple(3, 4);
      for (int i = 4; i < n; ++i) simple(i, i + 1);
      break;
    case Series::F4:
      simple(1, 2);
      multiple(2, 3, 4, 3);
      simple(3, 4);
      break;
    case Series::G2:
      multiple(1, 2, 6, 2);
      break;
  }
  return DynkinDiagram(std::move(names), std::move(edges));
}

/// Every (series, rank) with rank in [1, max_rank], after canonicalization
/// (no C2, no D3 or lower).
inline std::vector<ComponentType> all_types(int max_rank) {
  std::vector<ComponentType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Series::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Series::D, n});
  if (max_rank >= 6) out.push_back({Series::E6, 6});
  if (max_rank >= 7) out.push_back({Series::E7, 7});
  if (max_rank >= 8) out.push_back({Series::E8, 8});
  if (max_rank >= 4) out.push_back({Series::F4, 4});
  if (max_rank >= 2) out.push_back({Series::G2, 2});
  return out;
}

}  // namespace satake

#endif  // SATAKE_DIAGRAM_HPP
