#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "satake/satake.hpp"
#include "schema_check.hpp"
#include "support.hpp"

using namespace satake;
using satake::testing::ex1;
using satake::testing::nodes;
using satake::testing::random_document;

namespace {

const char* const kEx1Text = R"(# first diagram
index "ex1"
node a1 a2 a3
node b1 b2 b3
edge a1 a2
edge a2 a3 4 short=a3
edge b1 b2
edge b2 b3 4 short=b3

aniso r: a3
aniso q: a3 b3
galois: (a1 b1)(a2 b2)(a3 b3)
delta: a2 b3
)";

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError::Kind::Syntax;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SATAKE_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Parse, Ex1Document) {
  const IndexDocument doc = parse(kEx1Text);
  EXPECT_EQ(doc.name, "ex1");
  EXPECT_EQ(doc.nodes(), (std::vector<std::string>{"a1", "a2", "a3", "b1", "b2", "b3"}));
  EXPECT_EQ(doc.edges.size(), 4U);
  EXPECT_EQ(doc.edges[1], (EdgeDecl{"a2", "a3", 4, "a3"}));
  EXPECT_TRUE(doc.cstar.empty());
  const LoadedIndex l = load(doc);
  const TwoLevelIndex want = ex1();
  EXPECT_EQ(l.index.aniso_r, want.aniso_r);
  EXPECT_EQ(l.index.aniso_q, want.aniso_q);
  EXPECT_EQ(l.index.cstar, want.cstar);
  EXPECT_EQ(l.index.galois_gens, want.galois_gens);
  EXPECT_EQ(l.delta, nodes(want.diagram, {"a2", "b3"}));
  EXPECT_FALSE(l.delta_mu);
  EXPECT_TRUE(validate(l.index).empty());
}

TEST(Parse, DeltaFromDeltaMu) {
  std::string text = kEx1Text;
  text.replace(text.find("delta: a2 b3"), 12, "delta_mu: a3 b3");
  const LoadedIndex l = load(parse(text));
  EXPECT_EQ(l.delta, nodes(l.index.diagram, {"a2", "b3"}));
  EXPECT_EQ(l.delta_mu, nodes(l.index.diagram, {"a3", "b3"}));
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nedge a1 a2 4\n"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nedge a1 a3\n"), ParseError::Kind::UnknownNode);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nnode a2\n"), ParseError::Kind::DuplicateNode);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\ngalois: (a1 a2\n"), ParseError::Kind::BadCycleNotation);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\ncstar: a1 a2\n"), ParseError::Kind::BadCycleNotation);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\ngalois: (a1 a2)(a2)\n"), ParseError::Kind::BadCycleNotation);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nedge a1 a2 5 short=a1\n"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nfrobnicate\n"), ParseError::Kind::Syntax);
  EXPECT_EQ(kind_of("index \"x\"\nnode a1 a2\nexpect: route=EqualRankMain\n"), ParseError::Kind::Syntax);
}

TEST(Parse, ErrorPosition) {
  try {
    parse("index \"x\"\nnode a1 a2\nedge a1 a2 4\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 12);
  }
  try {
    parse("index \"x\"\nnode a1\naniso r: a1 zz\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownNode);
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 13);
  }
}

TEST(Serialize, CanonicalForm) {
  const IndexDocument doc = parse(kEx1Text);
  EXPECT_EQ(serialize(doc),
            "index \"ex1\"\nnode a1 a2 a3\nnode b1 b2 b3\nedge a1 a2\nedge a2 a3 4 short=a3\nedge b1 b2\n"
            "edge b2 b3 4 short=b3\naniso r: a3\naniso q: a3 b3\ngalois: (a1 b1)(a2 b2)(a3 b3)\ndelta: a2 b3\n");
  EXPECT_EQ(parse(serialize(doc)), doc);
}

TEST(Serialize, RoundTripCorpus) {
  for (const CorpusEntry& e : corpus_entries()) {
    const IndexDocument doc = parse(e.text);
    EXPECT_EQ(serialize(doc), e.text) << e.file;
    EXPECT_EQ(parse(serialize(doc)), doc) << e.file;
  }
}

TEST(Serialize, RoundTripRandom) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const IndexDocument doc = random_document(rng, i);
    const std::string text = serialize(doc);
    const IndexDocument back = parse(text);
    EXPECT_EQ(back, doc) << text;
    EXPECT_EQ(serialize(back), text);
    const LoadedIndex l = load(back);
    EXPECT_EQ(l.index.diagram.size(), static_cast<int>(doc.nodes().size()));
  }
}

TEST(Corpus, FilesMatchBundledCopies) {
  EXPECT_EQ(corpus_entries().size(), 12U);
  for (const CorpusEntry& e : corpus_entries())
    EXPECT_EQ(read_file(std::string(SATAKE_SOURCE_DIR) + "/corpus/" + std::string(e.file)), e.text) << e.file;
}

TEST(Corpus, VerdictsMatchExpectations) {
  const std::map<std::string, bool> published = {
      {"ex1a", true},           {"ex1b", false},           {"dim1-a", false},          {"dim1-b", true},
      {"dim1-c", true},         {"ex2a", true},            {"ex2b", true},             {"ex2c", false},
      {"ex3-quadratic-1", true}, {"ex3-quadratic-2", true}, {"ex3-cubic-1", true},      {"ex3-cubic-2", false}};
  for (const IndexDocument& doc : corpus()) {
    ASSERT_TRUE(doc.expect) << doc.name;
    ASSERT_TRUE(published.contains(doc.name)) << doc.name;
    EXPECT_EQ(doc.expect->rational, published.at(doc.name)) << doc.name;
    const LoadedIndex l = load(doc);
    EXPECT_FALSE(has_errors(validate(l.index))) << doc.name;
    const Report r = classify(l.index, l.delta, l.delta_mu);
    EXPECT_EQ(r.verdict.geometrically_rational, doc.expect->rational) << doc.name;
    if (doc.expect->route) {
      EXPECT_EQ(route_name(r.verdict.route), *doc.expect->route) << doc.name;
    }
  }
}

TEST(ReportJson, MatchesSchema) {
  const satake::testing::SchemaCheck schema(satake::testing::load_report_schema());
  for (const IndexDocument& doc : corpus()) {
    const LoadedIndex l = load(doc);
    const Report r = classify(l.index, l.delta, l.delta_mu);
    for (bool fams : {false, true}) {
      const auto j = nlohmann::json::parse(emit_report(doc.name, l.index, r, fams));
      EXPECT_EQ(schema.errors(j), std::vector<std::string>{}) << doc.name;
    }
  }
  auto bad = nlohmann::json::parse(emit_report("x", ex1(), classify(ex1(), NodeSet{})));
  bad["extra"] = 1;
  bad.erase("q_rank");
  EXPECT_EQ(schema.errors(bad).size(), 2U);
}

TEST(ReportJson, Ex1Fields) {
  const TwoLevelIndex idx = ex1();
  const auto j = report_json("ex1", idx, classify(idx, nodes(idx.diagram, {"a2", "b3"})));
  EXPECT_EQ(j["kappa0"], nlohmann::json({"b3"}));
  EXPECT_EQ(j["omega0"], nlohmann::json({"a1", "a3", "b1", "b3"}));
  EXPECT_EQ(j["q_delta"], nlohmann::json::array({nlohmann::json({"a2", "b2"})}));
  EXPECT_EQ(j["casselman"]["rational"], true);
  EXPECT_FALSE(j["casselman"].contains("witness"));
  const auto k = report_json("ex1", idx, classify(idx, nodes(idx.diagram, {"a1", "b3"})));
  EXPECT_EQ(k["casselman"]["witness"]["condition"], 1);
  EXPECT_EQ(k["casselman"]["witness"]["element"], "(a1 b1)(a2 b2)(a3 b3)");
}

TEST(Dot, Wellformed) {
  for (ComponentType t : all_types(8)) {
    const DynkinDiagram d = standard_diagram(t);
    const MarkedHasse m = figure_hasse(d, d.all());
    const std::string dot = emit_dot(m.hasse, d, "hasse", m.hollow);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '{'), std::count(dot.begin(), dot.end(), '}'));
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '"') % 2, 0);
    EXPECT_EQ(dot.back(), '\n');
  }
}

TEST(Render, Ex1) {
  const TwoLevelIndex idx = ex1();
  EXPECT_EQ(render_satake(idx, nodes(idx.diagram, {"a2", "b3"})),
            "a1 --- a2(δ) =>= [a3*]\n"
            "b1 --- b2    =>= [b3](δ)\n");
}

TEST(Cli, ExitCodes) {
  const std::string dir = std::string(SATAKE_SOURCE_DIR) + "/corpus/";
  const CliResult ok = run_cli("rationality " + dir + "ex1a.sidx");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "geometrically rational: true (Casselman: cond1 ✓ cond2 ✓)\n");
  EXPECT_EQ(run_cli("rationality " + dir + "ex1b.sidx").code, 0);
  EXPECT_EQ(run_cli("validate " + temp_file("bad_parse.sidx", "index \"x\"\nnode a1 a2\nedge a1 a2 4\n")).code, 2);
  EXPECT_EQ(run_cli("validate " + temp_file("broken.sidx", "index \"x\"\nnode a1 a2\nedge a1 a2\naniso r: a1\n")).code,
            3);
  EXPECT_EQ(run_cli("").code, 4);
  EXPECT_EQ(run_cli("validate /nonexistent/file.sidx").code, 4);
  EXPECT_EQ(run_cli("families --type Q --rank 3").code, 4);
}

TEST(Cli, CorpusAndFamilies) {
  const CliResult c = run_cli("corpus");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("12/12"), std::string::npos);
  const CliResult f = run_cli("families --type B --rank 3 --dot");
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("\"B3:a1,a2,a3\""), std::string::npos);
  EXPECT_NE(f.out.find("rankdir=LR"), std::string::npos);
}

TEST(Cli, GenerateIsDeterministic) {
  const CliResult a = run_cli("generate --seed 17 --kind equal-rank");
  const CliResult b = run_cli("generate --seed 17 --kind equal-rank");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse(a.out));
}
