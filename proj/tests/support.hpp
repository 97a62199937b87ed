#ifndef SATAKE_TESTS_SUPPORT_HPP
#define SATAKE_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "satake/satake.hpp"

namespace satake::testing {

inline NodeSet nodes(const DynkinDiagram& d, std::initializer_list<const char*> names) {
  NodeSet s;
  for (const char* n : names) s.insert(*d.index_of(n));
  return s;
}

// Two B3 rows, a3 black, a3 and b3 boxed, σ swaps the rows.
inline TwoLevelIndex ex1() {
  DynkinDiagram d({"a1", "a2", "a3", "b1", "b2", "b3"},
                  {{0, 1, 3, -1}, {1, 2, 4, 2}, {3, 4, 3, -1}, {4, 5, 4, 5}});
  return {d, NodeSet::single(2), NodeSet::single(2) | NodeSet::single(5), Permutation::identity(6),
          {Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})}};
}

// Standard connected type with nothing anisotropic; c* is the identity
// (split form) or ι.
inline TwoLevelIndex split(ComponentType t, bool cstar_is_iota = false) {
  DynkinDiagram d = standard_diagram(t);
  Permutation c = cstar_is_iota ? opposition_involution(d) : Permutation::identity(d.size());
  return {d, {}, {}, c, {}};
}

// Two split B2 rows swapped by σ.
inline TwoLevelIndex split_b2_pair() {
  DynkinDiagram d({"a1", "a2", "b1", "b2"}, {{0, 1, 4, 1}, {2, 3, 4, 3}});
  return {d, {}, {}, Permutation::identity(4), {Permutation::from_cycles(4, {{0, 2}, {1, 3}})}};
}

inline std::vector<std::string> names(const DynkinDiagram& d, NodeSet s) { return d.names_of(s); }

inline std::vector<std::vector<std::string>> name_lists(const DynkinDiagram& d, const std::vector<NodeSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (NodeSet s : sets) out.push_back(d.names_of(s));
  return out;
}

// Documents built from random indices, with nodes spread over several lines.
inline IndexDocument random_document(Rng& rng, int n) {
  const TwoLevelIndex idx = random_index(rng);
  const NodeSet delta = random_invariant_delta(rng, idx);
  std::optional<NodeSet> mu;
  if (rng() % 2) mu = random_invariant_delta(rng, idx);
  IndexDocument doc = make_document("random " + std::to_string(n), idx, delta, mu);
  if (rng() % 2) {
    std::vector<std::vector<std::string>> lines;
    for (const std::string& name : doc.node_lines.front()) {
      if (lines.empty() || rng() % 3 == 0) lines.emplace_back();
      lines.back().push_back(name);
    }
    doc.node_lines = lines;
  }
  if (rng() % 2) {
    const bool rational = rng() % 2 == 0;
    doc.expect = Expectation{rational, rng() % 2 ? std::optional<std::string>("EqualRankMain") : std::nullopt};
  }
  return doc;
}

}  // namespace satake::testing

#endif  // SATAKE_TESTS_SUPPORT_HPP
