#ifndef SATAKE_RATIONALITY_HPP
#define SATAKE_RATIONALITY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/boundary.hpp"
#include "satake/families.hpp"

namespace satake {

enum class Route {
  CasselmanDirect,
  DeltaGaloisInvariant,
  OriginalConstruction,
  EqualRankMain,
  ExceptionalQRank2,
  ExceptionalQRank1,
  NotApplicable,
};

inline const char* route_name(Route r) {
  switch (r) {
    case Route::CasselmanDirect: return "CasselmanDirect";
    case Route::DeltaGaloisInvariant: return "DeltaGaloisInvariant";
    case Route::OriginalConstruction: return "OriginalConstruction";
    case Route::EqualRankMain: return "EqualRankMain";
    case Route::ExceptionalQRank2: return "ExceptionalQRank2";
    case Route::ExceptionalQRank1: return "ExceptionalQRank1";
    case Route::NotApplicable: return "NotApplicable";
  }
  return "?";
}

inline std::optional<Route> route_from_name(const std::string& s) {
  for (Route r : {Route::CasselmanDirect, Route::DeltaGaloisInvariant, Route::OriginalConstruction, Route::EqualRankMain,
                  Route::ExceptionalQRank2, Route::ExceptionalQRank1, Route::NotApplicable})
    if (s == route_name(r)) return r;
  return std::nullopt;
}

class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A failing Casselman condition, the closure element exhibiting it and the offending image.
struct Witness {
  int condition = 0;
  Permutation element;
  NodeSet image;
};

struct Verdict {
  bool geometrically_rational = false;
  Route route = Route::NotApplicable;
  std::optional<Witness> witness;
  std::optional<bool> cross_check;

  bool applicable() const { return route != Route::NotApplicable; }
};

/// κ, ω, ζ of Δ⁰_{C/Q} and the two Galois conditions.
struct CasselmanData {
  NodeSet kappa0;
  NodeSet omega0;
  NodeSet zeta0;
  bool cond1 = true;
  bool cond2 = true;
  std::optional<Witness> witness;

  bool rational() const { return cond1 && cond2; }
};

inline CasselmanData casselman_data(const TwoLevelIndex& index, NodeSet delta, const GaloisClosure& closure) {
  const auto& g = index.diagram.graph();
  CasselmanData out;
  out.kappa0 = kappa(g, index.aniso_q, delta);
  out.zeta0 = zeta(g, index.aniso_q, delta);
  out.omega0 = out.kappa0 | out.zeta0;
  std::optional<Witness> second;
  for (const Permutation& p : closure.elements()) {
    const NodeSet w = p(out.omega0);
    if (out.cond1 && w != out.omega0) {
      out.cond1 = false;
      out.witness = Witness{1, p, w};
    }
    const NodeSet k = p(out.kappa0);
    if (out.cond2 && !k.subset_of(out.kappa0 | index.aniso_r)) {
      out.cond2 = false;
      second = Witness{2, p, k};
    }
  }
  if (!out.witness) out.witness = second;
  return out;
}

inline CasselmanData casselman_data(const TwoLevelIndex& index, NodeSet delta) {
  return casselman_data(index, delta, galois_closure(index));
}

inline Verdict casselman(const TwoLevelIndex& index, NodeSet delta) {
  CasselmanData c = casselman_data(index, delta);
  return {c.rational(), Route::CasselmanDirect, c.witness, std::nullopt};
}

inline bool delta_galois_invariant(const TwoLevelIndex& index, NodeSet delta) {
  return galois_closure(index).fixes(delta);
}

/// c* equals the opposition involution of the whole diagram.
inline bool is_equal_rank_group(const TwoLevelIndex& index) {
  return index.cstar == opposition_involution(index.diagram);
}

/// Equal-rank group whose boundary components (family B) are all equal-rank as well.
inline bool is_real_equal_rank(const TwoLevelIndex& index, NodeSet delta) {
  if (!is_equal_rank_group(index)) return false;
  for (const Family& f : family_B(index, delta))
    for (NodeSet psi : f.members) {
      if (!index.cstar.fixes(psi)) return false;
      const Permutation local = opposition_involution(index.diagram, psi);
      bool same = true;
      psi.for_each([&](int v) { same = same && index.cstar(v) == local(v); });
      if (!same) return false;
    }
  return true;
}

/// Galois closure acts transitively on diagram components.
inline bool is_almost_q_simple(const TwoLevelIndex& index, const GaloisClosure& closure) {
  const auto comps = index.diagram.components();
  if (comps.empty()) return false;
  return closure.orbit(comps.front()) == index.diagram.all();
}

/// R-simple factors with R-rank 2, C-type B, C or G2 and a cardinality-1 member of B.
inline std::vector<NodeSet> exceptional_factors(const TwoLevelIndex& index, NodeSet delta) {
  std::vector<NodeSet> out;
  for (const Family& f : family_B(index, delta)) {
    const NodeSet c = index.diagram.graph().component_of(f.component.first(), f.component);
    const Series s = classify_component(index.diagram, c).series;
    if (s != Series::B && s != Series::C && s != Series::G2) continue;
    if (rrank_of_component(index, c) != 2) continue;
    if (std::any_of(f.members.begin(), f.members.end(), [](NodeSet m) { return m.size() == 1; }))
      out.push_back(f.component);
  }
  return out;
}

/// δ meets every R-simple factor of positive R-rank.
inline bool meets_noncompact_factors(const TwoLevelIndex& index, NodeSet delta) {
  for (NodeSet f : real_factors(index))
    if (!(f - index.aniso_r).empty() && !delta.intersects(f)) return false;
  return true;
}

namespace detail {

inline Verdict checked(const TwoLevelIndex& index, NodeSet delta, Route route, bool rational) {
  return {rational, route, std::nullopt, casselman(index, delta).geometrically_rational == rational};
}

inline Verdict not_applicable() { return {false, Route::NotApplicable, std::nullopt, std::nullopt}; }

// Shared hypotheses of the equal-rank theorems.
inline bool equal_rank_setting(const TwoLevelIndex& index, NodeSet delta, const GaloisClosure& closure) {
  return is_almost_q_simple(index, closure) && spherical_necessary(index, delta) &&
         meets_noncompact_factors(index, delta) && is_real_equal_rank(index, delta);
}

}  // namespace detail

/// Main theorem: almost Q-simple, real equal-rank and no exceptional factor give rationality.
inline Verdict main_theorem_verdict(const TwoLevelIndex& index, NodeSet delta) {
  const GaloisClosure closure = galois_closure(index);
  if (!detail::equal_rank_setting(index, delta, closure) || !exceptional_factors(index, delta).empty())
    return detail::not_applicable();
  return detail::checked(index, delta, Route::EqualRankMain, true);
}

/// Restriction of scalars of B, C or G2 with an exceptional factor, Q-rank 1 or 2.
inline Verdict special_cases_verdict(const TwoLevelIndex& index, NodeSet delta) {
  const GaloisClosure closure = galois_closure(index);
  const auto comps = index.diagram.components();
  if (comps.empty()) return detail::not_applicable();
  const ComponentType t = classify_component(index.diagram, comps.front());
  if (t.series != Series::B && t.series != Series::C && t.series != Series::G2) return detail::not_applicable();
  for (NodeSet c : comps)
    if (!(classify_component(index.diagram, c) == t)) return detail::not_applicable();
  if (!detail::equal_rank_setting(index, delta, closure) || exceptional_factors(index, delta).empty())
    return detail::not_applicable();

  const int q_rank = k_rank(index, Level::Q);
  if (q_rank == 2) return detail::checked(index, delta, Route::ExceptionalQRank2, closure.fixes(delta));
  if (q_rank == 1) {
    const NodeSet meet = delta & index.aniso_q;
    bool ok = true;
    if (!meet.empty())
      for (NodeSet c : comps)
        if (rrank_of_component(index, c) >= 2 && !meet.intersects(c)) ok = false;
    return detail::checked(index, delta, Route::ExceptionalQRank1, ok);
  }
  return detail::not_applicable();
}

/// Outcome of one theorem route inside a report.
struct RouteResult {
  Route route = Route::NotApplicable;
  bool applicable = false;
  bool rational = false;
  std::optional<bool> cross_check;
};

struct ComponentInfo {
  NodeSet nodes;
  ComponentType type;
  int rrank = 0;
};

struct Report {
  std::vector<Diagnostic> diagnostics;
  int q_rank = 0;
  int r_rank = 0;
  std::vector<ComponentInfo> components;
  NodeSet delta;
  std::optional<NodeSet> delta_mu;
  std::vector<NodeSet> r_delta;
  std::vector<NodeSet> q_delta;
  CasselmanData casselman;
  std::vector<RouteResult> routes;
  Verdict verdict;
  bool equal_rank_group = false;
  bool equal_rank_compactification = false;
  std::vector<NodeSet> exceptional;
  std::optional<BoundaryPoset> boundary;
  std::vector<Family> families_B;
};

/// Full analysis of (index, δ): Casselman verdict of record plus every theorem route.
/// Throws CrossCheckFailure when an applicable route contradicts Casselman.
inline Report classify(const TwoLevelIndex& index, NodeSet delta, std::optional<NodeSet> delta_mu = std::nullopt) {
  Report rep;
  rep.diagnostics = validate(index);
  rep.delta = delta;
  rep.delta_mu = delta_mu;
  const GaloisClosure closure = galois_closure(index);
  const auto& d = index.diagram;

  rep.q_rank = k_rank(index, Level::Q);
  rep.r_rank = k_rank(index, Level::R);
  for (NodeSet c : d.components()) rep.components.push_back({c, classify_component(d, c), rrank_of_component(index, c)});
  for (const KRoot& r : k_delta(index, Level::R, delta)) rep.r_delta.push_back(r.fiber);
  for (const KRoot& r : k_delta(index, Level::Q, delta)) rep.q_delta.push_back(r.fiber);
  rep.casselman = casselman_data(index, delta, closure);
  rep.equal_rank_group = is_equal_rank_group(index);
  rep.equal_rank_compactification = is_real_equal_rank(index, delta);
  rep.exceptional = exceptional_factors(index, delta);
  rep.families_B = family_B(index, delta);
  try {
    rep.boundary = boundary_components(index, delta);
  } catch (const BoundaryTooLarge& e) {
    rep.diagnostics.push_back({Severity::Info, "boundary-skipped", e.what()});
  }

  if (!spherical_necessary(index, delta))
    rep.diagnostics.push_back(
        {Severity::Info, "not-spherical", "δ is not c*-invariant or meets the R-anisotropic roots"});
  if (delta_mu && !(*delta_mu).empty() && original_construction_delta(index, *delta_mu) != delta)
    rep.diagnostics.push_back({Severity::Warning, "delta-mu-mismatch", "δ differs from the set derived from δ_μ"});
  if (rep.equal_rank_compactification)
    for (const ComponentInfo& c : rep.components)
      if (c.type.series == Series::F4 && c.rrank > 1)
        rep.diagnostics.push_back({Severity::Warning, "f4-rrank",
                                   "F4 component of a real equal-rank compactification has R-rank " +
                                       std::to_string(c.rrank) + " (expected 0 or 1)"});

  const bool rational = rep.casselman.rational();
  auto record = [&](Route route, bool applicable, bool verdict) {
    RouteResult r{route, applicable, applicable && verdict, std::nullopt};
    if (applicable) r.cross_check = verdict == rational;
    rep.routes.push_back(r);
  };
  record(Route::CasselmanDirect, true, rational);
  record(Route::DeltaGaloisInvariant, closure.fixes(delta), true);
  if (delta_mu)
    record(Route::OriginalConstruction,
           closure.fixes(*delta_mu) && original_construction_delta(index, *delta_mu) == delta, true);
  const Verdict main = main_theorem_verdict(index, delta);
  record(Route::EqualRankMain, main.applicable(), main.geometrically_rational);
  const Verdict special = special_cases_verdict(index, delta);
  record(Route::ExceptionalQRank2, special.route == Route::ExceptionalQRank2, special.geometrically_rational);
  record(Route::ExceptionalQRank1, special.route == Route::ExceptionalQRank1, special.geometrically_rational);

  if (special.applicable()) {
    if (special.route == Route::ExceptionalQRank2 && rational)
      for (const ComponentInfo& c : rep.components)
        if (c.rrank != 2)
          rep.diagnostics.push_back({Severity::Warning, "qrank2-factor-rrank",
                                     "rational Q-rank 2 exceptional case with an R-simple factor of R-rank " +
                                         std::to_string(c.rrank)});
    if (special.route == Route::ExceptionalQRank1) {
      const NodeSet meet = delta & index.aniso_q;
      for (const ComponentInfo& c : rep.components)
        if (c.rrank > 2 && !meet.empty() && !meet.intersects(c.nodes))
          rep.diagnostics.push_back({Severity::Warning, "qrank1-large-factor",
                                     "δ ∩ Δ⁰_Q misses a component of R-rank " + std::to_string(c.rrank)});
    }
  }

  rep.verdict = {rational, Route::CasselmanDirect, rep.casselman.witness, std::nullopt};
  for (const RouteResult& r : rep.routes) {
    if (r.route == Route::CasselmanDirect || !r.applicable) continue;
    if (!*r.cross_check)
      throw CrossCheckFailure(std::string("route ") + route_name(r.route) + " contradicts the Casselman criterion");
    if (rep.verdict.route == Route::CasselmanDirect) {
      rep.verdict.route = r.route;
      rep.verdict.cross_check = true;
    }
  }
  return rep;
}

}  // namespace satake

#endif  // SATAKE_RATIONALITY_HPP
