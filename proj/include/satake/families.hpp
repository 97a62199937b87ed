#ifndef SATAKE_FAMILIES_HPP
#define SATAKE_FAMILIES_HPP

#include <algorithm>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "satake/operators.hpp"

namespace satake {

enum class FamilyKind { Ftilde, F, Fstar, Fcirc, B, Bstar };

inline const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Ftilde: return "Ftilde";
    case FamilyKind::F: return "F";
    case FamilyKind::Fstar: return "Fstar";
    case FamilyKind::Fcirc: return "Fcirc";
    case FamilyKind::B: return "B";
    case FamilyKind::Bstar: return "Bstar";
  }
  return "?";
}

/// Canonical order on node sets: by size, then by declaration order of members.
inline bool canonical_less(NodeSet a, NodeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

/// A family of node sets computed within `component`.
struct Family {
  FamilyKind kind = FamilyKind::Ftilde;
  NodeSet component;
  std::vector<NodeSet> members;

  bool contains(NodeSet s) const { return std::find(members.begin(), members.end(), s) != members.end(); }

  void normalize() {
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
};

/// Cover relation of a family ordered by inclusion: (i, j) means members[j] covers members[i].
struct HasseDiagram {
  std::vector<NodeSet> nodes;
  std::vector<std::pair<int, int>> covers;
};

inline HasseDiagram hasse(std::span<const NodeSet> members) {
  HasseDiagram h{std::vector<NodeSet>(members.begin(), members.end()), {}};
  const int n = static_cast<int>(h.nodes.size());
  auto below = [&](int i, int j) { return i != j && h.nodes[i].subset_of(h.nodes[j]) && h.nodes[i] != h.nodes[j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!below(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(below(i, k) && below(k, j));
      if (cover) h.covers.emplace_back(i, j);
    }
  return h;
}

inline HasseDiagram hasse(const Family& f) { return hasse(std::span<const NodeSet>(f.members)); }

namespace detail {

// ψ⁺ ∖ ψ has at most one orbit under ι.
inline bool single_boundary_orbit(const DynkinDiagram& d, const Permutation& iota, NodeSet psi) {
  const NodeSet rest = theta_plus(d, psi) - psi;
  if (rest.empty()) return true;
  const int x = rest.first();
  return rest == (NodeSet::single(x) | NodeSet::single(iota(x)));
}

}  // namespace detail

/// Nonempty connected ι-invariant ψ with ι|ψ = ι_ψ.
inline Family family_Ftilde(const DynkinDiagram& d, NodeSet component) {
  const Permutation iota = opposition_involution(d, component);
  Family f{FamilyKind::Ftilde, component, {}};
  for (NodeSet psi : d.graph().connected_subsets(component)) {
    if (!iota.fixes(psi)) continue;
    const Permutation local = opposition_involution(d, psi);
    bool same = true;
    psi.for_each([&](int v) { same = same && local(v) == iota(v); });
    if (same) f.members.push_back(psi);
  }
  f.normalize();
  return f;
}

inline Family family_F(const DynkinDiagram& d, NodeSet component) {
  const Family ft = family_Ftilde(d, component);
  const Permutation iota = opposition_involution(d, component);
  const std::set<NodeSet> in_ft(ft.members.begin(), ft.members.end());
  Family f{FamilyKind::F, component, {}};
  for (NodeSet psi : ft.members) {
    if (!detail::single_boundary_orbit(d, iota, psi)) continue;
    const NodeSet plus = theta_plus(d, psi);
    const bool extends = std::any_of(ft.members.begin(), ft.members.end(), [&](NodeSet wider) {
      if (!plus.subset_of(wider) || !detail::single_boundary_orbit(d, iota, wider)) return false;
      for (NodeSet c : d.graph().components(wider - plus))
        if (!in_ft.contains(c)) return false;
      return true;
    });
    if (extends) f.members.push_back(psi);
  }
  f.normalize();
  return f;
}

/// F minus the A1 members covered (within F) by a component of type B, C or G2.
inline Family family_Fcirc(const DynkinDiagram& d, NodeSet component) {
  Family f = family_F(d, component);
  f.kind = FamilyKind::Fcirc;
  const Series s = classify_component(d, component).series;
  if (s != Series::B && s != Series::C && s != Series::G2) return f;
  const Family full = f;
  std::erase_if(f.members, [&](NodeSet psi) {
    if (psi.size() != 1 || psi == component) return false;
    return std::none_of(full.members.begin(), full.members.end(), [&](NodeSet mid) {
      return psi.subset_of(mid) && psi != mid && mid.subset_of(component) && mid != component;
    });
  });
  return f;
}

/// F̃ without the cardinality-1 members that are not whole components.
inline Family family_Fstar(const DynkinDiagram& d, NodeSet component) {
  Family f = family_Ftilde(d, component);
  f.kind = FamilyKind::Fstar;
  std::erase_if(f.members, [&](NodeSet psi) { return psi.size() == 1 && psi != component; });
  return f;
}

/// B within each R-simple factor C ∪ c*C, in factor order.
inline std::vector<Family> family_B(const TwoLevelIndex& index, NodeSet delta) {
  const LevelStructure ls = level_structure(index, Level::R);
  const RootSet r_delta = k_delta(index.diagram, ls, delta);
  const auto& g = index.diagram.graph();
  std::vector<Family> out;
  for (NodeSet factor : real_factors(index)) {
    Family f{FamilyKind::B, factor, {}};
    RootSet local;
    for (int i = 0; i < ls.size(); ++i)
      if (ls.fibers[i].subset_of(factor)) local.insert(i);
    for (RootSet theta : ls.graph.connected_subsets(local)) {
      if (!theta.intersects(r_delta)) continue;
      const NodeSet k = kappa(g, ls.epsilon(theta) & factor, delta);
      if (!k.empty()) f.members.push_back(k);
    }
    f.normalize();
    out.push_back(std::move(f));
  }
  return out;
}

/// B without the cardinality-1 members that are not components of the diagram.
inline std::vector<Family> family_Bstar(const TwoLevelIndex& index, NodeSet delta) {
  auto fams = family_B(index, delta);
  const auto comps = index.diagram.components();
  for (Family& f : fams) {
    f.kind = FamilyKind::Bstar;
    std::erase_if(f.members, [&](NodeSet psi) {
      return psi.size() == 1 && std::find(comps.begin(), comps.end(), psi) == comps.end();
    });
  }
  return fams;
}

/// Hasse diagram of F̃ without its A1 members outside F; `hollow[i]` flags the
/// remaining nodes that lie in F̃ but not in F.
struct MarkedHasse {
  HasseDiagram hasse;
  std::vector<bool> hollow;
};

inline MarkedHasse figure_hasse(const DynkinDiagram& d, NodeSet component) {
  const Family ft = family_Ftilde(d, component);
  const Family f = family_F(d, component);
  std::vector<NodeSet> kept;
  for (NodeSet psi : ft.members)
    if (f.contains(psi) || psi.size() > 1) kept.push_back(psi);
  MarkedHasse out{hasse(std::span<const NodeSet>(kept)), {}};
  for (NodeSet psi : out.hasse.nodes) out.hollow.push_back(!f.contains(psi));
  return out;
}

}  // namespace satake

#endif  // SATAKE_FAMILIES_HPP
