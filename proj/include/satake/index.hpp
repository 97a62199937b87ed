#ifndef SATAKE_INDEX_HPP
#define SATAKE_INDEX_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/diagram.hpp"

namespace satake {

/// Field level of the tower Q ⊂ R ⊂ C.
enum class Level { Q, R, C };

inline const char* level_name(Level l) {
  switch (l) {
    case Level::Q: return "Q";
    case Level::R: return "R";
    case Level::C: return "C";
  }
  return "?";
}

enum class Severity { Error, Warning, Info };

inline const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

inline bool has_errors(std::span<const Diagnostic> ds) {
  return std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ForeignKRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kClosureCap = 1'000'000;

/// Combinatorial Q-index refined by the R-index: a diagram, the R- and
/// Q-anisotropic node sets, complex conjugation's *-action and generators of
/// the Galois *-action over Q.
struct TwoLevelIndex {
  DynkinDiagram diagram;
  NodeSet aniso_r;
  NodeSet aniso_q;
  Permutation cstar;
  std::vector<Permutation> galois_gens;

  NodeSet anisotropic(Level l) const {
    switch (l) {
      case Level::Q: return aniso_q;
      case Level::R: return aniso_r;
      case Level::C: return {};
    }
    return {};
  }

  /// Generators of the group whose orbits are the fibers at `l`.
  std::vector<Permutation> generators(Level l) const {
    switch (l) {
      case Level::Q: {
        std::vector<Permutation> g(galois_gens);
        g.push_back(cstar);
        return g;
      }
      case Level::R: return {cstar};
      case Level::C: return {};
    }
    return {};
  }
};

/// Finite permutation group, elements sorted with the identity first.
class GaloisClosure {
 public:
  GaloisClosure() = default;
  explicit GaloisClosure(std::vector<Permutation> elements) : elements_(std::move(elements)) {}

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  bool fixes(NodeSet s) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& g) { return g.fixes(s); });
  }

  /// Union of the images of `s` under every element.
  NodeSet orbit(NodeSet s) const {
    NodeSet out;
    for (const auto& g : elements_) out |= g(s);
    return out;
  }

 private:
  std::vector<Permutation> elements_;
};

/// Group generated by `gens` acting on `n` points.
inline GaloisClosure generated_group(int n, std::span<const Permutation> gens, std::size_t cap = kClosureCap) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h).second) {
          if (seen.size() > cap) throw ClosureCapExceeded("Galois closure exceeds " + std::to_string(cap) + " elements");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return GaloisClosure(std::vector<Permutation>(seen.begin(), seen.end()));
}

/// Closure of the Galois generators together with c*.
inline GaloisClosure galois_closure(const TwoLevelIndex& index, std::size_t cap = kClosureCap) {
  auto gens = index.generators(Level::Q);
  return generated_group(index.diagram.size(), gens, cap);
}

/// Orbits of the group generated by `gens` on the points of `within`, ordered by smallest member.
inline std::vector<NodeSet> orbits(int n, std::span<const Permutation> gens, NodeSet within) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<NodeSet> by_root(static_cast<std::size_t>(n));
  within.for_each([&](int i) { by_root[find(i)].insert(i); });
  std::vector<NodeSet> out;
  for (const auto& s : by_root)
    if (!s.empty()) out.push_back(s);
  std::sort(out.begin(), out.end(), [](NodeSet a, NodeSet b) { return a.first() < b.first(); });
  return out;
}

/// Check every TwoLevelIndex invariant; an empty result means the index is valid.
inline std::vector<Diagnostic> validate(const TwoLevelIndex& index) {
  std::vector<Diagnostic> out;
  const auto& d = index.diagram;
  auto error = [&](std::string code, std::string msg) { out.push_back({Severity::Error, std::move(code), std::move(msg)}); };

  if (index.cstar.size() != d.size()) {
    error("cstar-size", "c* does not act on the diagram's nodes");
    return out;
  }
  for (const auto& g : index.galois_gens)
    if (g.size() != d.size()) {
      error("generator-size", "Galois generator does not act on the diagram's nodes");
      return out;
    }

  if (!index.aniso_r.subset_of(index.aniso_q)) error("aniso-containment", "aniso_r ⊄ aniso_q");
  if (!is_automorphism(d, index.cstar)) error("cstar-not-automorphism", "c* is not a diagram automorphism");
  if (!(index.cstar * index.cstar).is_identity()) error("cstar-not-involution", "c* is not an involution");
  for (std::size_t i = 0; i < index.galois_gens.size(); ++i) {
    const auto& g = index.galois_gens[i];
    if (!is_automorphism(d, g))
      error("generator-not-automorphism", "generator not a diagram automorphism: " + format_cycles(g, d.names()));
    if (!g.fixes(index.aniso_q))
      error("generator-aniso-q", "generator does not preserve aniso_q: " + format_cycles(g, d.names()));
  }
  if (!index.cstar.fixes(index.aniso_r)) error("cstar-aniso-r", "c* does not preserve aniso_r");
  if (!index.cstar.fixes(index.aniso_q)) error("cstar-aniso-q", "c* does not preserve aniso_q");

  for (NodeSet psi : d.graph().components(index.aniso_r)) {
    const Permutation iota = opposition_involution(d, psi);
    bool ok = index.cstar.fixes(psi);
    psi.for_each([&](int v) { ok = ok && index.cstar(v) == iota(v); });
    if (!ok)
      error("real-index-opposition",
            "c* differs from the opposition involution on the R-anisotropic component {" +
                [&] {
                  std::string s;
                  for (const auto& n : d.names_of(psi)) s += (s.empty() ? "" : ",") + n;
                  return s;
                }() +
                "}");
  }

  try {
    galois_closure(index);
  } catch (const ClosureCapExceeded& e) {
    error("closure-cap", e.what());
  }
  return out;
}

/// A simple k-root, represented by its fiber of simple C-roots.
struct KRoot {
  NodeSet fiber;
  Level level = Level::C;

  bool operator==(const KRoot&) const = default;
};

/// The simple k-roots at one level together with the k-level Dynkin graph.
struct LevelStructure {
  Level level = Level::C;
  NodeSet anisotropic;
  std::vector<NodeSet> fibers;
  std::vector<int> fiber_of;  // node -> fiber position, -1 for anisotropic nodes
  AdjacencyGraph<RootTag> graph;

  int size() const { return static_cast<int>(fibers.size()); }
  RootSet all() const { return RootSet::range(size()); }

  /// res^{-1}(theta ∪ {0}).
  NodeSet epsilon(RootSet theta) const {
    NodeSet out = anisotropic;
    theta.for_each([&](int i) { out |= fibers[i]; });
    return out;
  }

  /// Union of the fibers in `theta` (anisotropic nodes excluded).
  NodeSet lift(RootSet theta) const {
    NodeSet out;
    theta.for_each([&](int i) { out |= fibers[i]; });
    return out;
  }

  /// k-roots whose fibers meet `nodes`.
  RootSet roots_meeting(NodeSet nodes) const {
    RootSet out;
    nodes.for_each([&](int v) {
      if (fiber_of[v] >= 0) out.insert(fiber_of[v]);
    });
    return out;
  }

  /// Position of a fiber; throws ForeignKRoot when `r` is not a k-root at this level.
  int position(const KRoot& r) const {
    if (r.level == level) {
      for (int i = 0; i < size(); ++i)
        if (fibers[i] == r.fiber) return i;
    }
    throw ForeignKRoot("not a simple root at level " + std::string(level_name(level)));
  }
};

namespace detail {

// Every lift of `a` reaches some lift of `b` through anisotropic nodes only.
inline bool lifts_connected(const DynkinDiagram& d, NodeSet aniso, NodeSet a, NodeSet b) {
  bool all = true;
  a.for_each([&](int x) { all = all && d.graph().reach_through(x, aniso).intersects(b); });
  return all;
}

}  // namespace detail

/// Fibers of res_{C/k}: orbits of the level's group on the non-anisotropic nodes.
inline std::vector<KRoot> restriction_fibers(const TwoLevelIndex& index, Level level) {
  const auto gens = index.generators(level);
  std::vector<KRoot> out;
  for (NodeSet o : orbits(index.diagram.size(), gens, index.diagram.all() - index.anisotropic(level)))
    out.push_back({o, level});
  return out;
}

/// Whether the k-roots `alpha` and `beta` are joined in the k-level Dynkin diagram.
inline bool k_adjacency(const TwoLevelIndex& index, Level level, const KRoot& alpha, const KRoot& beta) {
  return detail::lifts_connected(index.diagram, index.anisotropic(level), alpha.fiber, beta.fiber);
}

inline LevelStructure level_structure(const TwoLevelIndex& index, Level level) {
  LevelStructure ls;
  ls.level = level;
  ls.anisotropic = index.anisotropic(level);
  for (const KRoot& r : restriction_fibers(index, level)) ls.fibers.push_back(r.fiber);
  ls.fiber_of.assign(static_cast<std::size_t>(index.diagram.size()), -1);
  for (int i = 0; i < ls.size(); ++i) ls.fibers[i].for_each([&](int v) { ls.fiber_of[v] = i; });
  ls.graph = AdjacencyGraph<RootTag>(ls.size());
  for (int i = 0; i < ls.size(); ++i)
    for (int j = i + 1; j < ls.size(); ++j)
      if (detail::lifts_connected(index.diagram, ls.anisotropic, ls.fibers[i], ls.fibers[j])) ls.graph.add_edge(i, j);
  return ls;
}

/// ε_{C/k}(θ) for a set of k-roots given as KRoot values.
inline NodeSet epsilon(const TwoLevelIndex& index, Level level, std::span<const KRoot> theta) {
  const LevelStructure ls = level_structure(index, level);
  RootSet t;
  for (const auto& r : theta) t.insert(ls.position(r));
  return ls.epsilon(t);
}

inline int k_rank(const TwoLevelIndex& index, Level level) {
  return static_cast<int>(restriction_fibers(index, level).size());
}

/// R-simple factors: unions C ∪ c*C of diagram components, ordered by smallest member.
inline std::vector<NodeSet> real_factors(const TwoLevelIndex& index) {
  std::vector<NodeSet> out;
  NodeSet done;
  for (NodeSet c : index.diagram.components()) {
    if (c.intersects(done)) continue;
    NodeSet f = c | index.cstar(c);
    out.push_back(f);
    done |= f;
  }
  return out;
}

/// R-rank of the R-simple factor containing `component`.
inline int rrank_of_component(const TwoLevelIndex& index, NodeSet component) {
  const NodeSet factor = component | index.cstar(component);
  const Permutation gens[] = {index.cstar};
  return static_cast<int>(orbits(index.diagram.size(), gens, factor - index.aniso_r).size());
}

}  // namespace satake

#endif  // SATAKE_INDEX_HPP
