#ifndef SATAKE_GENERATE_HPP
#define SATAKE_GENERATE_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "satake/index.hpp"

namespace satake {

using Rng = std::mt19937_64;

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace detail

/// Disjoint union of standard diagrams; component k uses node prefix 'a' + k.
inline DynkinDiagram disjoint_union(const std::vector<ComponentType>& types) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < types.size(); ++k) {
    const DynkinDiagram part = standard_diagram(types[k], std::string(1, static_cast<char>('a' + k)));
    const int base = static_cast<int>(names.size());
    names.insert(names.end(), part.names().begin(), part.names().end());
    for (Edge e : part.edges()) {
      e.u += base;
      e.v += base;
      if (e.shorter >= 0) e.shorter += base;
      edges.push_back(e);
    }
  }
  return DynkinDiagram(std::move(names), std::move(edges));
}

/// Automorphisms of a standard diagram of type `t`, as permutations of Bourbaki positions.
inline std::vector<std::vector<int>> local_automorphisms(ComponentType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> out{detail::iota_vec(n)};
  auto with_swaps = [&](std::vector<std::pair<int, int>> swaps) {
    auto p = detail::iota_vec(n);
    for (auto [a, b] : swaps) std::swap(p[a], p[b]);
    out.push_back(p);
  };
  switch (t.series) {
    case Series::A:
      if (n >= 2) {
        auto p = detail::iota_vec(n);
        std::reverse(p.begin(), p.end());
        out.push_back(p);
      }
      break;
    case Series::D:
      if (n == 4) {
        std::vector<int> tips{0, 2, 3};
        while (std::next_permutation(tips.begin(), tips.end())) out.push_back({tips[0], 1, tips[1], tips[2]});
      } else {
        with_swaps({{n - 2, n - 1}});
      }
      break;
    case Series::E6: with_swaps({{0, 5}, {2, 4}}); break;
    default: break;
  }
  return out;
}

namespace detail {

inline bool is_involution(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[p[i]] != static_cast<int>(i)) return false;
  return true;
}

// Random automorphism of a disjoint union of standard diagrams: isomorphic
// components are permuted, each placed with a random local automorphism.
inline Permutation random_automorphism(Rng& rng, const std::vector<ComponentType>& types, bool involution) {
  std::vector<int> offset;
  int n = 0;
  for (const auto& t : types) {
    offset.push_back(n);
    n += t.rank;
  }
  std::vector<bool> done(types.size(), false);
  std::vector<int> img(static_cast<std::size_t>(n));
  auto place = [&](std::size_t from, std::size_t to, const std::vector<int>& local) {
    for (int k = 0; k < types[from].rank; ++k) img[offset[from] + k] = offset[to] + local[k];
  };
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> same;
    for (std::size_t j = i; j < types.size(); ++j)
      if (!done[j] && types[j] == types[i]) same.push_back(j);
    auto locals = local_automorphisms(types[i]);
    if (involution) {
      std::erase_if(locals, [](const auto& p) { return !is_involution(p); });
      std::shuffle(same.begin(), same.end(), rng);
      for (std::size_t k = 0; k < same.size(); ++k) {
        if (k + 1 < same.size() && coin(rng)) {
          const auto& loc = locals[uniform(rng, 0, static_cast<int>(locals.size()) - 1)];
          std::vector<int> inv(loc.size());
          for (std::size_t q = 0; q < loc.size(); ++q) inv[loc[q]] = static_cast<int>(q);
          place(same[k], same[k + 1], loc);
          place(same[k + 1], same[k], inv);
          done[same[k]] = done[same[k + 1]] = true;
          ++k;
        } else {
          place(same[k], same[k], locals[uniform(rng, 0, static_cast<int>(locals.size()) - 1)]);
          done[same[k]] = true;
        }
      }
    } else {
      std::vector<std::size_t> perm(same);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t k = 0; k < same.size(); ++k) {
        place(same[k], perm[k], locals[uniform(rng, 0, static_cast<int>(locals.size()) - 1)]);
        done[same[k]] = true;
      }
    }
  }
  return Permutation(std::move(img));
}

inline bool valid_real_aniso(const TwoLevelIndex& idx, NodeSet aniso_r) {
  if (!idx.cstar.fixes(aniso_r)) return false;
  for (NodeSet psi : idx.diagram.graph().components(aniso_r)) {
    const Permutation iota = opposition_involution(idx.diagram, psi);
    bool ok = idx.cstar.fixes(psi);
    psi.for_each([&](int v) { ok = ok && idx.cstar(v) == iota(v); });
    if (!ok) return false;
  }
  return true;
}

inline NodeSet random_subset(Rng& rng, NodeSet universe, double p) {
  NodeSet s;
  universe.for_each([&](int v) {
    if (coin(rng, p)) s.insert(v);
  });
  return s;
}

inline std::vector<ComponentType> random_types(Rng& rng, int max_rank) {
  const auto pool = all_types(max_rank);
  std::vector<ComponentType> out;
  int used = 0;
  // Favour repeated components so that Galois actions are nontrivial.
  const ComponentType first = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
  out.push_back(first);
  used = first.rank;
  while (used < max_rank && coin(rng, 0.6)) {
    ComponentType next = coin(rng, 0.6) ? first : pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
    if (used + next.rank > max_rank) break;
    out.push_back(next);
    used += next.rank;
  }
  return out;
}

}  // namespace detail

/// Random valid TwoLevelIndex with at most `max_rank` nodes; no equal-rank or realizability constraint.
inline TwoLevelIndex random_index(Rng& rng, int max_rank = 8) {
  const auto types = detail::random_types(rng, max_rank);
  TwoLevelIndex idx{disjoint_union(types), {}, {}, {}, {}};
  idx.cstar = detail::random_automorphism(rng, types, true);
  const int gens = detail::uniform(rng, 0, 2);
  for (int i = 0; i < gens; ++i) idx.galois_gens.push_back(detail::random_automorphism(rng, types, false));
  const GaloisClosure closure = galois_closure(idx);

  for (int attempt = 0; attempt < 8; ++attempt) {
    NodeSet r = detail::random_subset(rng, idx.diagram.all(), 0.35);
    r |= idx.cstar(r);
    if (detail::valid_real_aniso(idx, r)) {
      idx.aniso_r = r;
      break;
    }
  }
  idx.aniso_q = closure.orbit(idx.aniso_r | detail::random_subset(rng, idx.diagram.all(), 0.25));
  return idx;
}

/// Union of Galois orbits of a random subset.
inline NodeSet random_invariant_delta(Rng& rng, const TwoLevelIndex& idx) {
  return galois_closure(idx).orbit(detail::random_subset(rng, idx.diagram.all(), 0.3));
}

/// Black-node sets (1-based Bourbaki positions) of the equal-rank real forms of `t`.
inline std::vector<std::vector<int>> equal_rank_black_sets(ComponentType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> out;
  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  };
  switch (t.series) {
    case Series::A:
      for (int p = 0; 2 * p <= n + 1; ++p) out.push_back(range(p + 1, n - p));
      break;
    case Series::B:
      for (int r = 0; r <= n; ++r) out.push_back(range(r + 1, n));
      break;
    case Series::C:
      for (int p = 0; 2 * p <= n; ++p) {
        std::vector<int> v;
        for (int i = 1; i <= n; ++i)
          if (i > 2 * p || i % 2 == 1) v.push_back(i);
        out.push_back(v);
      }
      break;
    case Series::D: {
      for (int r = 0; r <= n - 2; r += 2) out.push_back(range(r + 1, n));
      out.push_back({});
      std::vector<int> odd;
      for (int i = 1; i <= (n % 2 == 0 ? n - 1 : n - 2); i += 2) odd.push_back(i);
      out.push_back(odd);
      break;
    }
    case Series::E6: out = {{}, {3, 4, 5}, range(1, 6)}; break;
    case Series::E7: out = {{}, {2, 5, 7}, {2, 3, 4, 5}, range(1, 7)}; break;
    case Series::E8: out = {{}, {2, 3, 4, 5}, range(1, 8)}; break;
    case Series::F4: out = {{}, {1, 2, 3}, range(1, 4)}; break;
    case Series::G2: out = {{}, {1, 2}}; break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Random restriction of scalars with real equal-rank rows: `d` copies of one
/// type, c* = ι, a cyclic row shift (plus a row swap for three rows) as Galois
/// generators and per-row real forms. δ is c*-invariant, avoids black nodes
/// and meets every noncompact row. The caller filters with is_real_equal_rank.
struct EqualRankSample {
  TwoLevelIndex index;
  NodeSet delta;
};

inline EqualRankSample random_equal_rank(Rng& rng, int max_rank = 8) {
  std::vector<ComponentType> pool;
  for (const auto& t : all_types(max_rank))
    if (t.rank >= 2) pool.push_back(t);
  // Weight B, C and G2 of small rank: they carry the exceptional cases.
  for (int k = 0; k < 4; ++k)
    for (const ComponentType t : {ComponentType{Series::B, 2}, ComponentType{Series::B, 3}, ComponentType{Series::C, 3},
                                  ComponentType{Series::G2, 2}})
      pool.push_back(t);
  ComponentType t = pool[detail::uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
  const int max_rows = std::min(3, max_rank / t.rank);
  const int rows = detail::uniform(rng, 1, max_rows);
  const std::vector<ComponentType> types(static_cast<std::size_t>(rows), t);

  TwoLevelIndex idx{disjoint_union(types), {}, {}, {}, {}};
  idx.cstar = opposition_involution(idx.diagram);
  const int n = t.rank;
  auto node = [&](int row, int pos) { return row * n + pos - 1; };
  if (rows > 1) {
    std::vector<int> shift(static_cast<std::size_t>(rows * n));
    for (int r = 0; r < rows; ++r)
      for (int p = 1; p <= n; ++p) shift[node(r, p)] = node((r + 1) % rows, p);
    idx.galois_gens.push_back(Permutation(shift));
    if (rows == 3 && detail::coin(rng, 0.3)) {
      std::vector<int> swap = detail::iota_vec(rows * n);
      for (int p = 1; p <= n; ++p) std::swap(swap[node(0, p)], swap[node(1, p)]);
      idx.galois_gens.push_back(Permutation(swap));
    }
  }

  const auto forms = equal_rank_black_sets(t);
  std::vector<std::vector<int>> black(static_cast<std::size_t>(rows));
  std::vector<int> needed;
  for (int r = 0; r < rows; ++r) {
    black[r] = forms[detail::uniform(rng, 0, static_cast<int>(forms.size()) - 1)];
    for (int p : black[r]) idx.aniso_r.insert(node(r, p));
    needed.insert(needed.end(), black[r].begin(), black[r].end());
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  // Q-anisotropic pattern shared by all rows; the compact pattern always qualifies.
  std::vector<std::vector<int>> patterns;
  for (const auto& s : forms)
    if (std::includes(s.begin(), s.end(), needed.begin(), needed.end())) patterns.push_back(s);
  const auto& q = patterns[detail::uniform(rng, 0, static_cast<int>(patterns.size()) - 1)];
  for (int r = 0; r < rows; ++r)
    for (int p : q) idx.aniso_q.insert(node(r, p));

  NodeSet delta;
  for (int r = 0; r < rows; ++r) {
    NodeSet white;
    for (int p = 1; p <= n; ++p)
      if (!idx.aniso_r.contains(node(r, p))) white.insert(node(r, p));
    if (white.empty()) continue;
    NodeSet pick;
    while (pick.empty()) pick = detail::random_subset(rng, white, 0.4);
    delta |= pick | idx.cstar(pick);
  }
  return {std::move(idx), delta};
}

}  // namespace satake

#endif  // SATAKE_GENERATE_HPP
