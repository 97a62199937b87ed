#ifndef SATAKE_BOUNDARY_HPP
#define SATAKE_BOUNDARY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satake/operators.hpp"

namespace satake {

class BoundaryTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kBoundaryRankCap = 20;

/// Root-set shadow of a standard real boundary component.
struct BoundaryComponent {
  RootSet theta;
  RootSet kappa_r;
  NodeSet hermitian_c;
  NodeSet centralizer_c;
  NodeSet normalizer_type;

  bool operator==(const BoundaryComponent&) const = default;
};

/// Boundary components ordered by κ-containment; `order` holds strict pairs (i, j) with κ_i ⊂ κ_j.
struct BoundaryPoset {
  LevelStructure real;
  std::vector<BoundaryComponent> components;
  std::vector<std::pair<int, int>> order;
};

inline BoundaryPoset boundary_components(const TwoLevelIndex& index, NodeSet delta) {
  BoundaryPoset poset;
  poset.real = level_structure(index, Level::R);
  const LevelStructure& ls = poset.real;
  if (ls.size() > kBoundaryRankCap)
    throw BoundaryTooLarge("R-rank " + std::to_string(ls.size()) + " exceeds the boundary enumeration cap");

  const auto& g = index.diagram.graph();
  const RootSet r_delta = k_delta(index.diagram, ls, delta);
  auto visit = [&](RootSet k) {
    if (!is_delta_connected(ls.graph, k, r_delta)) return;
    const NodeSet eps = ls.epsilon(k);
    poset.components.push_back({k, k, kappa(g, eps, delta), zeta(g, eps, delta),
                                ls.epsilon(omega(ls.graph, k, r_delta))});
  };
  for_each_subset(ls.all(), visit);
  std::sort(poset.components.begin(), poset.components.end(), [](const auto& a, const auto& b) {
    if (a.kappa_r.size() != b.kappa_r.size()) return a.kappa_r.size() < b.kappa_r.size();
    return a.kappa_r < b.kappa_r;
  });
  const int n = static_cast<int>(poset.components.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && poset.components[i].kappa_r.subset_of(poset.components[j].kappa_r)) poset.order.emplace_back(i, j);
  return poset;
}

}  // namespace satake

#endif  // SATAKE_BOUNDARY_HPP
