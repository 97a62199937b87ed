#ifndef SATAKE_DSL_HPP
#define SATAKE_DSL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "satake/operators.hpp"

namespace satake {

/// Failure to read an index document, with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownNode, DuplicateNode, BadCycleNotation };

  ParseError(Kind kind, int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

using Cycles = std::vector<std::vector<std::string>>;

struct EdgeDecl {
  std::string u;
  std::string v;
  int label = 3;
  std::string shorter;

  bool operator==(const EdgeDecl&) const = default;
};

struct Expectation {
  bool rational = false;
  std::optional<std::string> route;

  bool operator==(const Expectation&) const = default;
};

/// Textual form of a TwoLevelIndex plus δ data. Node lists are kept in
/// declaration order and cycles in normalized form.
struct IndexDocument {
  std::string name;
  std::vector<std::vector<std::string>> node_lines;
  std::vector<EdgeDecl> edges;
  std::vector<std::string> aniso_r;
  std::vector<std::string> aniso_q;
  Cycles cstar;
  std::vector<Cycles> galois;
  std::optional<std::vector<std::string>> delta;
  std::optional<std::vector<std::string>> delta_mu;
  std::optional<Expectation> expect;

  std::vector<std::string> nodes() const {
    std::vector<std::string> out;
    for (const auto& l : node_lines) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  bool operator==(const IndexDocument&) const = default;
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;
};

struct Reference {
  std::string name;
  int line = 0;
  int column = 0;
};

inline bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '-';
}

class Parser {
 public:
  IndexDocument run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line_ = line_no;
      parse_line(text.substr(pos, end - pos));
      pos = end + 1;
    }
    finish();
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(ParseError::Kind k, int column, const std::string& msg) const {
    throw ParseError(k, line_, column, msg);
  }

  // Split on whitespace, keeping the 1-based start column of each token.
  static std::vector<Token> split(std::string_view s, int offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i == s.size()) break;
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({std::string(s.substr(i, j - i)), offset + static_cast<int>(i) + 1});
      i = j;
    }
    return out;
  }

  Reference id(const Token& t) {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), is_id_char))
      fail(ParseError::Kind::Syntax, t.column, "invalid node identifier '" + t.text + "'");
    return {t.text, line_, t.column};
  }

  void once(const std::string& directive, int column) {
    if (!seen_.insert(directive).second) fail(ParseError::Kind::Syntax, column, "repeated '" + directive + "' line");
  }

  std::vector<Reference> id_list(const std::vector<Token>& toks, std::size_t from) {
    std::vector<Reference> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(id(toks[i]));
    return out;
  }

  std::vector<std::vector<Reference>> cycles(std::string_view s, int offset) {
    std::vector<std::vector<Reference>> out;
    std::size_t i = 0;
    while (true) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i == s.size()) break;
      if (s[i] != '(') fail(ParseError::Kind::BadCycleNotation, offset + static_cast<int>(i) + 1, "expected '('");
      const std::size_t close = s.find(')', i);
      const std::size_t nested = s.find('(', i + 1);
      if (close == std::string_view::npos || (nested != std::string_view::npos && nested < close))
        fail(ParseError::Kind::BadCycleNotation, offset + static_cast<int>(i) + 1, "unbalanced parentheses");
      std::vector<Reference> c;
      for (const Token& t : split(s.substr(i + 1, close - i - 1), offset + static_cast<int>(i) + 1)) {
        if (!std::all_of(t.text.begin(), t.text.end(), is_id_char))
          fail(ParseError::Kind::BadCycleNotation, t.column, "invalid token '" + t.text + "' in cycle");
        c.push_back({t.text, line_, t.column});
      }
      out.push_back(std::move(c));
      i = close + 1;
    }
    if (out.empty()) fail(ParseError::Kind::BadCycleNotation, offset + 1, "missing cycles");
    return out;
  }

  void parse_line(std::string_view raw) {
    std::size_t cut = std::string_view::npos;
    bool quoted = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') quoted = !quoted;
      if (raw[i] == '#' && !quoted) {
        cut = i;
        break;
      }
    }
    const std::string_view s = raw.substr(0, cut);
    const auto toks = split(s, 0);
    if (toks.empty()) return;
    const std::string& head = toks[0].text;
    const int col = toks[0].column;
    auto after = [&](const Token& t) {
      const std::size_t at = static_cast<std::size_t>(t.column - 1) + t.text.size();
      return std::pair{s.substr(at), static_cast<int>(at)};
    };

    if (head == "index") {
      once("index", col);
      const auto [rest, off] = after(toks[0]);
      const std::size_t open = rest.find('"');
      const std::size_t close = open == std::string_view::npos ? open : rest.find('"', open + 1);
      if (open == std::string_view::npos || close == std::string_view::npos)
        fail(ParseError::Kind::Syntax, col, "index name must be a quoted string");
      for (std::size_t i = 0; i < rest.size(); ++i)
        if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(rest[i])))
          fail(ParseError::Kind::Syntax, off + static_cast<int>(i) + 1, "unexpected text after index name");
      doc_.name = std::string(rest.substr(open + 1, close - open - 1));
    } else if (head == "node") {
      if (toks.size() < 2) fail(ParseError::Kind::Syntax, col, "node line declares no nodes");
      std::vector<std::string> line;
      for (const Reference& r : id_list(toks, 1)) {
        if (!declared_.emplace(r.name, static_cast<int>(declared_.size())).second)
          fail(ParseError::Kind::DuplicateNode, r.column, "node '" + r.name + "' declared twice");
        line.push_back(r.name);
      }
      doc_.node_lines.push_back(std::move(line));
    } else if (head == "edge") {
      if (toks.size() == 4) fail(ParseError::Kind::Syntax, toks[3].column, "multiple edge requires short=<node>");
      if (toks.size() != 3 && toks.size() != 5)
        fail(ParseError::Kind::Syntax, col, "expected 'edge <u> <v>' or 'edge <u> <v> <4|6> short=<u|v>'");
      EdgeDecl e{id(toks[1]).name, id(toks[2]).name, 3, {}};
      refs_.push_back({e.u, line_, toks[1].column});
      refs_.push_back({e.v, line_, toks[2].column});
      if (toks.size() == 5) {
        if (toks[3].text != "4" && toks[3].text != "6")
          fail(ParseError::Kind::Syntax, toks[3].column, "edge label must be 4 or 6");
        e.label = toks[3].text == "4" ? 4 : 6;
        const std::string& sh = toks[4].text;
        if (sh.rfind("short=", 0) != 0) fail(ParseError::Kind::Syntax, toks[4].column, "expected 'short=<node>'");
        e.shorter = sh.substr(6);
        if (e.shorter != e.u && e.shorter != e.v)
          fail(ParseError::Kind::Syntax, toks[4].column + 6, "short root must be an endpoint of the edge");
      }
      doc_.edges.push_back(std::move(e));
    } else if (head == "aniso") {
      if (toks.size() < 2 || (toks[1].text != "r:" && toks[1].text != "q:"))
        fail(ParseError::Kind::Syntax, col, "expected 'aniso r:' or 'aniso q:'");
      once("aniso " + toks[1].text, col);
      (toks[1].text == "r:" ? aniso_r_ : aniso_q_) = id_list(toks, 2);
    } else if (head == "cstar:") {
      once("cstar", col);
      const auto [rest, off] = after(toks[0]);
      cstar_ = cycles(rest, off);
    } else if (head == "galois:") {
      const auto [rest, off] = after(toks[0]);
      galois_.push_back(cycles(rest, off));
    } else if (head == "delta:") {
      once("delta", col);
      delta_ = id_list(toks, 1);
    } else if (head == "delta_mu:") {
      once("delta_mu", col);
      delta_mu_ = id_list(toks, 1);
    } else if (head == "expect:") {
      once("expect", col);
      Expectation e;
      bool have_rational = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t == "rational=true" || t == "rational=false") {
          if (have_rational) fail(ParseError::Kind::Syntax, toks[i].column, "repeated rational=");
          have_rational = true;
          e.rational = t == "rational=true";
        } else if (t.rfind("route=", 0) == 0 && t.size() > 6 && !e.route) {
          e.route = t.substr(6);
        } else {
          fail(ParseError::Kind::Syntax, toks[i].column, "unexpected '" + t + "' in expect line");
        }
      }
      if (!have_rational) fail(ParseError::Kind::Syntax, col, "expect line requires rational=<true|false>");
      doc_.expect = e;
    } else {
      fail(ParseError::Kind::Syntax, col, "unknown directive '" + head + "'");
    }
  }

  int resolve(const Reference& r) const {
    auto it = declared_.find(r.name);
    if (it == declared_.end())
      throw ParseError(ParseError::Kind::UnknownNode, r.line, r.column, "unknown node '" + r.name + "'");
    return it->second;
  }

  // Names sorted by declaration order; duplicates rejected.
  std::vector<std::string> node_set(const std::vector<Reference>& refs) const {
    std::map<int, std::string> out;
    for (const Reference& r : refs)
      if (!out.emplace(resolve(r), r.name).second)
        throw ParseError(ParseError::Kind::DuplicateNode, r.line, r.column, "node '" + r.name + "' listed twice");
    std::vector<std::string> v;
    for (auto& [_, n] : out) v.push_back(n);
    return v;
  }

  // Drop fixed points, rotate each cycle to its earliest-declared node, sort cycles.
  Cycles normalize(const std::vector<std::vector<Reference>>& cs) const {
    std::vector<std::vector<int>> idx;
    std::vector<bool> used(declared_.size(), false);
    for (const auto& c : cs) {
      std::vector<int> v;
      for (const Reference& r : c) {
        const int i = resolve(r);
        if (used[i]) throw ParseError(ParseError::Kind::BadCycleNotation, r.line, r.column, "node '" + r.name + "' repeated in cycles");
        used[i] = true;
        v.push_back(i);
      }
      if (v.size() < 2) continue;
      std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
      idx.push_back(std::move(v));
    }
    std::sort(idx.begin(), idx.end());
    std::vector<std::string> names(declared_.size());
    for (const auto& [n, i] : declared_) names[i] = n;
    Cycles out;
    for (const auto& c : idx) {
      std::vector<std::string> v;
      for (int i : c) v.push_back(names[i]);
      out.push_back(std::move(v));
    }
    return out;
  }

  void finish() {
    for (const Reference& r : refs_) resolve(r);
    doc_.aniso_r = node_set(aniso_r_);
    doc_.aniso_q = node_set(aniso_q_);
    doc_.cstar = normalize(cstar_);
    for (const auto& g : galois_) doc_.galois.push_back(normalize(g));
    if (delta_) doc_.delta = node_set(*delta_);
    if (delta_mu_) doc_.delta_mu = node_set(*delta_mu_);
  }

  IndexDocument doc_;
  int line_ = 0;
  std::unordered_map<std::string, int> declared_;
  std::vector<Reference> refs_;
  std::vector<Reference> aniso_r_;
  std::vector<Reference> aniso_q_;
  std::vector<std::vector<Reference>> cstar_;
  std::vector<std::vector<std::vector<Reference>>> galois_;
  std::optional<std::vector<Reference>> delta_;
  std::optional<std::vector<Reference>> delta_mu_;
  std::set<std::string> seen_;
};

}  // namespace detail

inline IndexDocument parse(std::string_view text) { return detail::Parser().run(text); }

namespace detail {

inline void join(std::ostringstream& out, const std::vector<std::string>& xs) {
  for (const auto& x : xs) out << ' ' << x;
}

inline void write_cycles(std::ostringstream& out, const Cycles& cs) {
  if (cs.empty()) {
    out << " ()";
    return;
  }
  out << ' ';
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
}

}  // namespace detail

/// Canonical text of a document; parse(serialize(d)) == d.
inline std::string serialize(const IndexDocument& doc) {
  std::ostringstream out;
  out << "index \"" << doc.name << "\"\n";
  for (const auto& l : doc.node_lines) {
    out << "node";
    detail::join(out, l);
    out << '\n';
  }
  for (const EdgeDecl& e : doc.edges) {
    out << "edge " << e.u << ' ' << e.v;
    if (e.label != 3) out << ' ' << e.label << " short=" << e.shorter;
    out << '\n';
  }
  out << "aniso r:";
  detail::join(out, doc.aniso_r);
  out << "\naniso q:";
  detail::join(out, doc.aniso_q);
  out << '\n';
  if (!doc.cstar.empty()) {
    out << "cstar:";
    detail::write_cycles(out, doc.cstar);
    out << '\n';
  }
  for (const Cycles& g : doc.galois) {
    out << "galois:";
    detail::write_cycles(out, g);
    out << '\n';
  }
  if (doc.delta) {
    out << "delta:";
    detail::join(out, *doc.delta);
    out << '\n';
  }
  if (doc.delta_mu) {
    out << "delta_mu:";
    detail::join(out, *doc.delta_mu);
    out << '\n';
  }
  if (doc.expect) {
    out << "expect: rational=" << (doc.expect->rational ? "true" : "false");
    if (doc.expect->route) out << " route=" << *doc.expect->route;
    out << '\n';
  }
  return out.str();
}

/// Index together with the δ data of a document.
struct LoadedIndex {
  TwoLevelIndex index;
  NodeSet delta;
  std::optional<NodeSet> delta_mu;
};

/// Build the index; throws NotADynkinDiagram for malformed diagrams.
inline TwoLevelIndex to_index(const IndexDocument& doc) {
  const std::vector<std::string> names = doc.nodes();
  std::unordered_map<std::string, int> at;
  for (std::size_t i = 0; i < names.size(); ++i) at.emplace(names[i], static_cast<int>(i));
  auto node = [&](const std::string& n) {
    auto it = at.find(n);
    if (it == at.end()) throw std::invalid_argument("unknown node '" + n + "'");
    return it->second;
  };
  auto set = [&](const std::vector<std::string>& xs) {
    NodeSet s;
    for (const auto& x : xs) s.insert(node(x));
    return s;
  };
  auto perm = [&](const Cycles& cs) {
    std::vector<std::vector<int>> v;
    for (const auto& c : cs) {
      std::vector<int> w;
      for (const auto& x : c) w.push_back(node(x));
      v.push_back(std::move(w));
    }
    return Permutation::from_cycles(static_cast<int>(names.size()), v);
  };
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) throw NotADynkinDiagram("diagram has more than 64 nodes");
  std::vector<Edge> edges;
  for (const EdgeDecl& e : doc.edges)
    edges.push_back({node(e.u), node(e.v), e.label, e.label == 3 ? -1 : node(e.shorter)});
  TwoLevelIndex index{DynkinDiagram(names, edges), set(doc.aniso_r), set(doc.aniso_q), perm(doc.cstar), {}};
  for (const Cycles& g : doc.galois) index.galois_gens.push_back(perm(g));
  return index;
}

inline NodeSet node_set(const DynkinDiagram& d, const std::vector<std::string>& names) {
  NodeSet s;
  for (const auto& n : names) {
    auto i = d.index_of(n);
    if (!i) throw std::invalid_argument("unknown node '" + n + "'");
    s.insert(*i);
  }
  return s;
}

/// Index and δ; when δ is absent but δ_μ is present, δ is derived through the original construction map.
inline LoadedIndex load(const IndexDocument& doc) {
  LoadedIndex out{to_index(doc), {}, std::nullopt};
  if (doc.delta_mu) out.delta_mu = node_set(out.index.diagram, *doc.delta_mu);
  if (doc.delta)
    out.delta = node_set(out.index.diagram, *doc.delta);
  else if (out.delta_mu)
    out.delta = original_construction_delta(out.index, *out.delta_mu);
  return out;
}

/// Document describing `index` with all nodes on one line.
inline IndexDocument make_document(const std::string& name, const TwoLevelIndex& index,
                                   std::optional<NodeSet> delta = std::nullopt,
                                   std::optional<NodeSet> delta_mu = std::nullopt) {
  const DynkinDiagram& d = index.diagram;
  IndexDocument doc;
  doc.name = name;
  if (d.size() > 0) doc.node_lines.push_back(d.names());
  for (const Edge& e : d.edges())
    doc.edges.push_back({d.name(e.u), d.name(e.v), e.label, e.shorter >= 0 ? d.name(e.shorter) : std::string{}});
  doc.aniso_r = d.names_of(index.aniso_r);
  doc.aniso_q = d.names_of(index.aniso_q);
  auto cycles = [&](const Permutation& p) {
    Cycles out;
    for (const auto& c : p.cycles()) {
      std::vector<std::string> v;
      for (int i : c) v.push_back(d.name(i));
      out.push_back(std::move(v));
    }
    return out;
  };
  doc.cstar = cycles(index.cstar);
  for (const auto& g : index.galois_gens) doc.galois.push_back(cycles(g));
  if (delta) doc.delta = d.names_of(*delta);
  if (delta_mu) doc.delta_mu = d.names_of(*delta_mu);
  return doc;
}

}  // namespace satake

#endif  // SATAKE_DSL_HPP
