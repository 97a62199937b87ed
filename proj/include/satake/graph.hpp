#ifndef SATAKE_GRAPH_HPP
#define SATAKE_GRAPH_HPP

#include <cassert>
#include <unordered_set>
#include <vector>

#include "satake/bitset.hpp"

namespace satake {

/// Simple undirected graph on at most 64 vertices stored as neighbor masks.
template <class Tag>
struct AdjacencyGraph {
  using Set = BitSet<Tag>;

  std::vector<Set> neighbors;

  AdjacencyGraph() = default;
  explicit AdjacencyGraph(int n) : neighbors(static_cast<std::size_t>(n)) { assert(n <= kMaxVertices); }

  int size() const { return static_cast<int>(neighbors.size()); }
  Set vertices() const { return Set::range(size()); }

  void add_edge(int u, int v) {
    neighbors[u].insert(v);
    neighbors[v].insert(u);
  }
  bool adjacent(int u, int v) const { return neighbors[u].contains(v); }

  /// Vertices joined by an edge to some member of `s` (members of `s` excluded).
  Set boundary(Set s) const {
    Set out;
    s.for_each([&](int v) { out |= neighbors[v]; });
    return out - s;
  }

  /// `s` together with its edge-neighbors.
  Set closure(Set s) const { return s | boundary(s); }

  /// Connected component of `start` inside the induced subgraph on `within`.
  Set component_of(int start, Set within) const {
    Set seen = Set::single(start);
    Set frontier = seen;
    while (!frontier.empty()) {
      Set next;
      frontier.for_each([&](int v) { next |= neighbors[v]; });
      next = (next & within) - seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  /// Connected components of the induced subgraph on `s`, ordered by smallest member.
  std::vector<Set> components(Set s) const {
    std::vector<Set> out;
    while (!s.empty()) {
      Set c = component_of(s.first(), s);
      out.push_back(c);
      s -= c;
    }
    return out;
  }

  bool connected(Set s) const { return !s.empty() && component_of(s.first(), s) == s; }

  /// Nodes reachable from `start` along paths whose interior vertices all lie in `via`.
  /// `start` itself is included.
  Set reach_through(int start, Set via) const {
    Set interior = component_of(start, via | Set::single(start));
    return interior | boundary(interior);
  }

  /// Every nonempty connected subset contained in `within`.
  std::vector<Set> connected_subsets(Set within) const {
    std::unordered_set<Set> seen;
    std::vector<Set> frontier;
    within.for_each([&](int v) {
      Set s = Set::single(v);
      if (seen.insert(s).second) frontier.push_back(s);
    });
    std::vector<Set> out(frontier);
    while (!frontier.empty()) {
      std::vector<Set> next;
      for (Set s : frontier) {
        (boundary(s) & within).for_each([&](int v) {
          Set t = s | Set::single(v);
          if (seen.insert(t).second) next.push_back(t);
        });
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }
};

}  // namespace satake

#endif  // SATAKE_GRAPH_HPP
