#ifndef SATAKE_OPERATORS_HPP
#define SATAKE_OPERATORS_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/index.hpp"

namespace satake {

/// Every connected component of `s` meets `delta`; the empty set qualifies.
template <class Tag>
bool is_delta_connected(const AdjacencyGraph<Tag>& g, BitSet<Tag> s, BitSet<Tag> delta) {
  for (auto c : g.components(s))
    if (!c.intersects(delta)) return false;
  return true;
}

/// Largest δ-connected subset of `theta`.
template <class Tag>
BitSet<Tag> kappa(const AdjacencyGraph<Tag>& g, BitSet<Tag> theta, BitSet<Tag> delta) {
  BitSet<Tag> out;
  for (auto c : g.components(theta))
    if (c.intersects(delta)) out |= c;
  return out;
}

/// Vertices outside δ, outside κ(θ) and not adjacent to κ(θ).
template <class Tag>
BitSet<Tag> zeta(const AdjacencyGraph<Tag>& g, BitSet<Tag> theta, BitSet<Tag> delta) {
  return g.vertices() - delta - g.closure(kappa(g, theta, delta));
}

/// Largest Υ with κ(Υ) = κ(θ).
template <class Tag>
BitSet<Tag> omega(const AdjacencyGraph<Tag>& g, BitSet<Tag> theta, BitSet<Tag> delta) {
  return kappa(g, theta, delta) | zeta(g, theta, delta);
}

/// Highest weight in fundamental-weight coordinates, indexed by node.
struct DominantWeight {
  std::vector<int> coords;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> c) : coords(std::move(c)) {
    for (int x : coords)
      if (x < 0) throw std::invalid_argument("dominant weight has a negative coordinate");
  }
  static DominantWeight zero(int n) { return DominantWeight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  bool operator==(const DominantWeight&) const = default;
};

/// Support of the weight: the simple roots whose reflection moves it.
inline NodeSet delta_from_weight(const DominantWeight& w) {
  NodeSet s;
  for (std::size_t i = 0; i < w.coords.size(); ++i)
    if (w.coords[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

namespace detail {
// `v` joins `target` through a connected set of `aniso` nodes (`v` itself counts).
inline bool reaches_through(const DynkinDiagram& d, int v, NodeSet aniso, NodeSet target) {
  return d.graph().component_of(v, aniso | NodeSet::single(v)).intersects(target);
}
}  // namespace detail

/// kδ as positions in `ls.fibers`.
inline RootSet k_delta(const DynkinDiagram& d, const LevelStructure& ls, NodeSet delta) {
  RootSet out;
  for (int i = 0; i < ls.size(); ++i) {
    bool hit = false;
    ls.fibers[i].for_each([&](int v) { hit = hit || detail::reaches_through(d, v, ls.anisotropic, delta); });
    if (hit) out.insert(i);
  }
  return out;
}

/// kδ as a list of k-roots.
inline std::vector<KRoot> k_delta(const TwoLevelIndex& index, Level level, NodeSet delta) {
  const LevelStructure ls = level_structure(index, level);
  std::vector<KRoot> out;
  k_delta(index.diagram, ls, delta).for_each([&](int i) { out.push_back({ls.fibers[i], level}); });
  return out;
}

class DifferenceNotInRootLattice : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Every χ' in `others` is codominant to χ₀ with δ_{χ₀}-connected support.
inline bool condition_R(const DynkinDiagram& d, const DominantWeight& chi0, std::span<const DominantWeight> others) {
  const IntMatrix c = cartan_matrix(d);
  const NodeSet delta0 = delta_from_weight(chi0);
  for (const DominantWeight& other : others) {
    std::vector<Rational> diff(static_cast<std::size_t>(d.size()));
    for (int i = 0; i < d.size(); ++i) diff[i] = chi0.coords[i] - other.coords[i];
    const auto coeffs = solve_exact(c, diff);
    if (!coeffs) throw DifferenceNotInRootLattice("Cartan matrix is singular");
    NodeSet support;
    bool nonnegative = true;
    for (int i = 0; i < d.size(); ++i) {
      const Rational& x = (*coeffs)[i];
      if (x.denominator() != 1) throw DifferenceNotInRootLattice("weight difference is not in the root lattice");
      if (x.numerator() < 0) nonnegative = false;
      if (x.numerator() != 0) support.insert(i);
    }
    if (!nonnegative || !is_delta_connected(d.graph(), support, delta0)) return false;
  }
  return true;
}

/// δ of the compactification built from a spherical weight μ in the original construction.
inline NodeSet original_construction_delta(const TwoLevelIndex& index, NodeSet delta_mu) {
  NodeSet out;
  (index.diagram.all() - index.aniso_r).for_each([&](int v) {
    if (detail::reaches_through(index.diagram, v, index.aniso_r, delta_mu)) out.insert(v);
  });
  return out;
}

/// Weight coordinates are constant on orbits of the level's group.
inline bool is_projectively_rational(const TwoLevelIndex& index, const DominantWeight& w, Level level = Level::Q) {
  const auto gens = index.generators(level);
  for (const auto& g : gens)
    for (int i = 0; i < index.diagram.size(); ++i)
      if (w.coords[g(i)] != w.coords[i]) return false;
  return true;
}

inline bool is_strongly_rational(const TwoLevelIndex& index, Level level, const DominantWeight& w) {
  return is_projectively_rational(index, w, level) && !delta_from_weight(w).intersects(index.anisotropic(level));
}

/// Necessary conditions for δ to come from a spherical representation.
inline bool spherical_necessary(const TwoLevelIndex& index, NodeSet delta) {
  return index.cstar.fixes(delta) && !delta.intersects(index.aniso_r);
}

}  // namespace satake

#endif  // SATAKE_OPERATORS_HPP
