#ifndef SATAKE_REPORT_JSON_HPP
#define SATAKE_REPORT_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "satake/rationality.hpp"

namespace satake {

namespace detail {

inline nlohmann::json names(const DynkinDiagram& d, NodeSet s) { return d.names_of(s); }

inline nlohmann::json name_lists(const DynkinDiagram& d, const std::vector<NodeSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (NodeSet s : sets) out.push_back(d.names_of(s));
  return out;
}

}  // namespace detail

/// Fixed-key JSON tree for a report; node sets appear as name arrays in declaration order.
inline nlohmann::json report_json(const std::string& name, const TwoLevelIndex& index, const Report& rep,
                                  bool with_families = false) {
  using nlohmann::json;
  const DynkinDiagram& d = index.diagram;
  json j = json::object();
  j["name"] = name;
  j["valid"] = !has_errors(rep.diagnostics);
  j["diagnostics"] = json::array();
  for (const Diagnostic& x : rep.diagnostics)
    j["diagnostics"].push_back({{"severity", severity_name(x.severity)}, {"code", x.code}, {"message", x.message}});
  j["q_rank"] = rep.q_rank;
  j["components"] = json::array();
  for (const ComponentInfo& c : rep.components)
    j["components"].push_back({{"nodes", detail::names(d, c.nodes)}, {"type", c.type.name()}, {"rrank", c.rrank}});
  j["delta"] = detail::names(d, rep.delta);
  j["r_delta"] = detail::name_lists(d, rep.r_delta);
  j["q_delta"] = detail::name_lists(d, rep.q_delta);
  j["kappa0"] = detail::names(d, rep.casselman.kappa0);
  j["omega0"] = detail::names(d, rep.casselman.omega0);
  j["zeta0"] = detail::names(d, rep.casselman.zeta0);

  json cass = {{"rational", rep.casselman.rational()}, {"cond1", rep.casselman.cond1}, {"cond2", rep.casselman.cond2}};
  if (rep.casselman.witness) {
    const Witness& w = *rep.casselman.witness;
    cass["witness"] = {{"condition", w.condition},
                       {"element", format_cycles(w.element, d.names())},
                       {"image", detail::names(d, w.image)}};
  }
  j["casselman"] = cass;

  j["routes"] = json::array();
  for (const RouteResult& r : rep.routes) {
    json cc = r.cross_check ? json(*r.cross_check) : json(nullptr);
    j["routes"].push_back(
        {{"route", route_name(r.route)}, {"applicable", r.applicable}, {"rational", r.rational}, {"cross_check", cc}});
  }
  j["equal_rank"] = {{"group", rep.equal_rank_group}, {"compactification", rep.equal_rank_compactification}};
  j["exceptional"] = detail::name_lists(d, rep.exceptional);

  j["boundary"] = json::array();
  if (rep.boundary) {
    const LevelStructure& ls = rep.boundary->real;
    for (const BoundaryComponent& b : rep.boundary->components) {
      json theta = json::array();
      b.theta.for_each([&](int i) { theta.push_back(d.names_of(ls.fibers[i])); });
      j["boundary"].push_back({{"theta", theta},
                               {"hermitian", detail::names(d, b.hermitian_c)},
                               {"centralizer", detail::names(d, b.centralizer_c)},
                               {"normalizer", detail::names(d, b.normalizer_type)}});
    }
  }

  if (with_families) {
    json fams = json::array();
    for (const Family& f : rep.families_B)
      fams.push_back({{"kind", family_kind_name(f.kind)},
                      {"component", detail::names(d, f.component)},
                      {"members", detail::name_lists(d, f.members)}});
    j["families"] = fams;
  }
  return j;
}

inline std::string emit_report(const std::string& name, const TwoLevelIndex& index, const Report& rep,
                               bool with_families = false) {
  return report_json(name, index, rep, with_families).dump(2) + "\n";
}

}  // namespace satake

#endif  // SATAKE_REPORT_JSON_HPP
