// Command-line front end: validate, analyze and classify index documents,
// print families and boundary posets, and run the bundled corpus.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "satake/satake.hpp"

namespace {

using namespace satake;

enum Exit : int { kOk = 0, kParse = 2, kInvalid = 3, kUsage = 4, kCrossCheck = 5 };

struct ExitWith {
  int code;
};

std::string braces(const DynkinDiagram& d, NodeSet s) {
  std::string out;
  for (const auto& n : d.names_of(s)) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

std::string fibers(const DynkinDiagram& d, const std::vector<NodeSet>& fs) {
  std::string out;
  for (NodeSet f : fs) out += (out.empty() ? "" : " ") + braces(d, f);
  return out.empty() ? "∅" : out;
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

struct Loaded {
  IndexDocument doc;
  LoadedIndex li;
};

// Read, parse and validate; errors go to stderr and end the command.
Loaded load_file(const std::string& path, bool require_valid = true) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw ExitWith{kUsage};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Loaded out;
  try {
    out.doc = parse(buf.str());
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << "\n";
    throw ExitWith{kParse};
  }
  try {
    out.li = load(out.doc);
  } catch (const NotADynkinDiagram& e) {
    std::cerr << path << ": invalid diagram: " << e.what() << "\n";
    throw ExitWith{kInvalid};
  }
  if (require_valid) {
    const auto diags = validate(out.li.index);
    if (has_errors(diags)) {
      for (const auto& d : diags) std::cerr << path << ": " << severity_name(d.severity) << ": " << d.message << "\n";
      throw ExitWith{kInvalid};
    }
  }
  return out;
}

Report run_classify(const Loaded& l) {
  try {
    return classify(l.li.index, l.li.delta, l.li.delta_mu);
  } catch (const CrossCheckFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    throw ExitWith{kCrossCheck};
  }
}

std::string casselman_line(const Report& rep) {
  const CasselmanData& c = rep.casselman;
  return std::string("geometrically rational: ") + (c.rational() ? "true" : "false") + " (Casselman: cond1 " +
         mark(c.cond1) + " cond2 " + mark(c.cond2) + ")";
}

std::string witness_line(const DynkinDiagram& d, const CasselmanData& c) {
  if (!c.witness) return {};
  return "witness: condition " + std::to_string(c.witness->condition) + " fails under " +
         format_cycles(c.witness->element, d.names()) + ", image " + braces(d, c.witness->image);
}

void print_analysis(const Loaded& l, const Report& rep) {
  const DynkinDiagram& d = l.li.index.diagram;
  std::cout << "index: " << l.doc.name << "\n";
  for (const ComponentInfo& c : rep.components)
    std::cout << "component " << braces(d, c.nodes) << ": " << c.type.name() << ", R-rank " << c.rrank << "\n";
  std::cout << "Q-rank: " << rep.q_rank << "\nR-rank: " << rep.r_rank << "\n";
  std::cout << "delta: " << braces(d, rep.delta) << "\n";
  std::cout << "R-delta: " << fibers(d, rep.r_delta) << "\nQ-delta: " << fibers(d, rep.q_delta) << "\n";
  std::cout << "kappa0: " << braces(d, rep.casselman.kappa0) << "\nomega0: " << braces(d, rep.casselman.omega0)
            << "\nzeta0: " << braces(d, rep.casselman.zeta0) << "\n";
  std::cout << "equal-rank group: " << (rep.equal_rank_group ? "true" : "false")
            << "\nreal equal-rank compactification: " << (rep.equal_rank_compactification ? "true" : "false") << "\n";
  std::cout << "exceptional factors: " << fibers(d, rep.exceptional) << "\n";
  for (const Family& f : rep.families_B) {
    std::cout << "B" << braces(d, f.component) << ":";
    for (NodeSet m : f.members) std::cout << " " << set_label(d, m);
    std::cout << "\n";
  }
  std::cout << casselman_line(rep) << "\n";
  if (const auto w = witness_line(d, rep.casselman); !w.empty()) std::cout << w << "\n";
  std::cout << "route: " << route_name(rep.verdict.route) << "\n";
  for (const Diagnostic& x : rep.diagnostics)
    std::cout << severity_name(x.severity) << " [" << x.code << "]: " << x.message << "\n";
}

int cmd_validate(const std::string& path) {
  const Loaded l = load_file(path, false);
  const auto diags = validate(l.li.index);
  for (const auto& d : diags) std::cout << severity_name(d.severity) << " [" << d.code << "]: " << d.message << "\n";
  if (has_errors(diags)) return kInvalid;
  std::cout << "valid\n";
  return kOk;
}

int cmd_analyze(const std::string& path, bool json, bool families) {
  const Loaded l = load_file(path);
  const Report rep = run_classify(l);
  if (json)
    std::cout << emit_report(l.doc.name, l.li.index, rep, families);
  else
    print_analysis(l, rep);
  return kOk;
}

int cmd_rationality(const std::string& path, bool json) {
  const Loaded l = load_file(path);
  const Report rep = run_classify(l);
  if (json) {
    nlohmann::json j = report_json(l.doc.name, l.li.index, rep);
    std::cout << nlohmann::json{{"name", j["name"]}, {"casselman", j["casselman"]}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << casselman_line(rep) << "\n";
  if (const auto w = witness_line(l.li.index.diagram, rep.casselman); !w.empty()) std::cout << w << "\n";
  return kOk;
}

int cmd_classify(const std::string& path, bool json) {
  const Loaded l = load_file(path);
  const Report rep = run_classify(l);
  if (json) {
    nlohmann::json j = report_json(l.doc.name, l.li.index, rep);
    std::cout << nlohmann::json{{"name", j["name"]},
                                {"rational", rep.verdict.geometrically_rational},
                                {"route", route_name(rep.verdict.route)},
                                {"routes", j["routes"]}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "route: " << route_name(rep.verdict.route) << "\n";
  std::cout << "geometrically rational: " << (rep.verdict.geometrically_rational ? "true" : "false") << "\n";
  for (const RouteResult& r : rep.routes) {
    std::cout << "  " << route_name(r.route) << ": ";
    if (!r.applicable) {
      std::cout << "not applicable\n";
      continue;
    }
    std::cout << (r.rational ? "rational" : "not rational");
    if (r.cross_check) std::cout << (*r.cross_check ? " (agrees with Casselman)" : " (DISAGREES with Casselman)");
    std::cout << "\n";
  }
  return kOk;
}

int cmd_families(const std::string& type, int rank, bool dot) {
  // "G2" and "E6" carry their rank; "B" needs --rank.
  if (rank == 0 && type.size() > 1 && std::isdigit(static_cast<unsigned char>(type[1]))) rank = std::stoi(type.substr(1));
  const auto t = make_component_type(type, rank);
  if (!t) {
    std::cerr << "error: no Dynkin type " << type << " of rank " << rank << "\n";
    return kUsage;
  }
  const DynkinDiagram d = standard_diagram(*t);
  if (dot) {
    const MarkedHasse m = figure_hasse(d, d.all());
    std::cout << emit_dot(m.hasse, d, "hasse", m.hollow);
    return kOk;
  }
  const Family ft = family_Ftilde(d, d.all());
  const Family f = family_F(d, d.all());
  const Family fc = family_Fcirc(d, d.all());
  const Family fs = family_Fstar(d, d.all());
  std::cout << "type " << classify_component(d, d.all()).name() << ": " << ft.members.size() << " members of Ftilde\n";
  for (NodeSet psi : ft.members) {
    std::cout << "  " << set_label(d, psi);
    if (f.contains(psi)) std::cout << "  F";
    if (fc.contains(psi)) std::cout << "  Fcirc";
    if (fs.contains(psi)) std::cout << "  Fstar";
    std::cout << "\n";
  }
  return kOk;
}

int cmd_boundary(const std::string& path, bool dot) {
  const Loaded l = load_file(path);
  const DynkinDiagram& d = l.li.index.diagram;
  BoundaryPoset p;
  try {
    p = boundary_components(l.li.index, l.li.delta);
  } catch (const BoundaryTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (dot) {
    std::cout << emit_dot(p, d);
    return kOk;
  }
  for (const BoundaryComponent& b : p.components) {
    std::vector<NodeSet> theta;
    b.theta.for_each([&](int i) { theta.push_back(p.real.fibers[i]); });
    std::cout << "theta=" << fibers(d, theta) << " hermitian=" << set_label(d, b.hermitian_c)
              << " centralizer=" << braces(d, b.centralizer_c) << " normalizer=" << braces(d, b.normalizer_type) << "\n";
  }
  return kOk;
}

int cmd_corpus(bool json) {
  int matches = 0;
  nlohmann::json all = nlohmann::json::array();
  const auto& entries = corpus_entries();
  for (const CorpusEntry& e : entries) {
    const IndexDocument doc = parse(e.text);
    const LoadedIndex li = load(doc);
    Report rep;
    try {
      rep = classify(li.index, li.delta, li.delta_mu);
    } catch (const CrossCheckFailure& ex) {
      std::cerr << doc.name << ": internal error: " << ex.what() << "\n";
      return kCrossCheck;
    }
    const bool rational_ok = doc.expect && doc.expect->rational == rep.verdict.geometrically_rational;
    const bool route_ok = doc.expect && (!doc.expect->route || *doc.expect->route == route_name(rep.verdict.route));
    if (rational_ok && route_ok) ++matches;
    if (json) {
      all.push_back({{"file", e.file}, {"expect_match", rational_ok && route_ok}, {"report", report_json(doc.name, li.index, rep)}});
    } else {
      std::cout << doc.name << ": rational=" << (rep.verdict.geometrically_rational ? "true" : "false")
                << " route=" << route_name(rep.verdict.route) << (rational_ok && route_ok ? "  ok" : "  MISMATCH") << "\n";
    }
  }
  if (json)
    std::cout << all.dump(2) << "\n";
  else
    std::cout << matches << "/" << entries.size() << " match\n";
  return matches == static_cast<int>(entries.size()) ? kOk : kCrossCheck;
}

int cmd_render(const std::string& path) {
  const Loaded l = load_file(path);
  std::cout << render_satake(l.li.index, l.li.delta);
  return kOk;
}

int cmd_generate(std::uint64_t seed, const std::string& kind) {
  Rng rng(seed);
  if (kind == "equal-rank") {
    const EqualRankSample s = random_equal_rank(rng);
    std::cout << serialize(make_document("equal-rank-" + std::to_string(seed), s.index, s.delta));
  } else {
    const TwoLevelIndex idx = random_index(rng);
    std::cout << serialize(make_document("random-" + std::to_string(seed), idx, random_invariant_delta(rng, idx)));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satake compactifications: indices, families and geometric rationality"};
  app.require_subcommand(1);
  std::string file;
  bool json = false;
  bool dot = false;
  bool families = false;
  std::string type;
  int rank = 0;
  std::uint64_t seed = 0;
  std::string kind = "random";

  auto* validate_cmd = app.add_subcommand("validate", "check the invariants of an index document");
  validate_cmd->add_option("file", file, "index document (.sidx)")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for an index document");
  analyze_cmd->add_option("file", file, "index document (.sidx)")->required();
  analyze_cmd->add_flag("--json", json, "emit the JSON report");
  analyze_cmd->add_flag("--families", families, "include family B in the JSON report");
  auto* rationality_cmd = app.add_subcommand("rationality", "Casselman verdict");
  rationality_cmd->add_option("file", file, "index document (.sidx)")->required();
  rationality_cmd->add_flag("--json", json, "emit JSON");
  auto* classify_cmd = app.add_subcommand("classify", "verdict with every theorem route");
  classify_cmd->add_option("file", file, "index document (.sidx)")->required();
  classify_cmd->add_flag("--json", json, "emit JSON");
  auto* families_cmd = app.add_subcommand("families", "families of a standard connected diagram");
  families_cmd->add_option("--type", type, "series: A, B, C, D, E, F or G")->required();
  families_cmd->add_option("--rank", rank, "rank, implied by E6, E7, E8, F4 and G2");
  families_cmd->add_flag("--dot", dot, "emit the Hasse diagram as DOT");
  auto* boundary_cmd = app.add_subcommand("boundary", "real boundary component poset");
  boundary_cmd->add_option("file", file, "index document (.sidx)")->required();
  boundary_cmd->add_flag("--dot", dot, "emit DOT");
  auto* corpus_cmd = app.add_subcommand("corpus", "classify the bundled examples against their expectations");
  corpus_cmd->add_flag("--json", json, "emit JSON reports");
  auto* render_cmd = app.add_subcommand("render", "plain-text Satake diagram");
  render_cmd->add_option("file", file, "index document (.sidx)")->required();
  auto* generate_cmd = app.add_subcommand("generate", "print a random index document");
  generate_cmd->add_option("--seed", seed, "random seed")->required();
  generate_cmd->add_option("--kind", kind, "random or equal-rank")->check(CLI::IsMember({"random", "equal-rank"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*analyze_cmd) return cmd_analyze(file, json, families);
    if (*rationality_cmd) return cmd_rationality(file, json);
    if (*classify_cmd) return cmd_classify(file, json);
    if (*families_cmd) return cmd_families(type, rank, dot);
    if (*boundary_cmd) return cmd_boundary(file, dot);
    if (*corpus_cmd) return cmd_corpus(json);
    if (*render_cmd) return cmd_render(file);
    if (*generate_cmd) return cmd_generate(seed, kind);
  } catch (const ExitWith& e) {
    return e.code;
  }
  return kUsage;
}
