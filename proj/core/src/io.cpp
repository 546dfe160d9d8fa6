#include "flatlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace flatlat {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

class LabelIndex {
 public:
  void define(const Line& line) {
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& tok = line.tokens[i];
      if (!index_.emplace(tok.text, labels_.size()).second) {
        throw SyntaxError(line.number, tok.column, "duplicate label '" + tok.text + "'");
      }
      labels_.push_back(tok.text);
    }
  }
  std::size_t lookup(const Line& line, std::size_t i, ErrorCode code) const {
    const auto& tok = line.tokens[i];
    auto it = index_.find(tok.text);
    if (it == index_.end()) {
      throw Error(code, "line " + std::to_string(line.number) + ", column " + std::to_string(tok.column) +
                            ": unknown label '" + tok.text + "'");
    }
    return it->second;
  }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> labels_;
};

void expect_arity(const Line& line, std::size_t args) {
  if (line.tokens.size() != args + 1) {
    const std::size_t col = line.tokens.size() > args + 1 ? line.tokens[args + 1].column : line.tokens[0].column;
    throw SyntaxError(line.number, col,
                      "'" + line.tokens[0].text + "' takes " + std::to_string(args) + " argument(s)");
  }
}

[[noreturn]] void unknown_directive(const Line& line, const char* kind) {
  throw SyntaxError(line.number, line.tokens[0].column,
                    "unknown directive '" + line.tokens[0].text + "' in " + kind + " document");
}

Document parse_lattice(const std::vector<Line>& lines, std::size_t first, std::size_t last_line) {
  LabelIndex labels;
  bool have_elements = false;
  std::vector<std::pair<Element, Element>> covers_list;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& d = line.tokens[0].text;
    if (d == "elements") {
      if (have_elements) throw SyntaxError(line.number, line.tokens[0].column, "'elements' given twice");
      if (line.tokens.size() < 2) throw SyntaxError(line.number, line.tokens[0].column, "'elements' needs labels");
      labels.define(line);
      have_elements = true;
    } else if (d == "cover") {
      if (!have_elements) throw SyntaxError(line.number, line.tokens[0].column, "'cover' before 'elements'");
      expect_arity(line, 2);
      covers_list.emplace_back(labels.lookup(line, 1, ErrorCode::kValidationError),
                               labels.lookup(line, 2, ErrorCode::kValidationError));
    } else {
      unknown_directive(line, "lattice");
    }
  }
  if (!have_elements) throw SyntaxError(last_line + 1, 1, "lattice document has no 'elements' line");
  return Document{lattice_from_covers(labels.labels(), covers_list)};
}

Document parse_complex(const std::vector<Line>& lines, std::size_t first, std::size_t last_line) {
  LabelIndex labels;
  bool have_vertices = false;
  std::vector<IndexSet> faces;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& d = line.tokens[0].text;
    if (d == "vertices") {
      if (have_vertices) throw SyntaxError(line.number, line.tokens[0].column, "'vertices' given twice");
      if (line.tokens.size() < 2) throw SyntaxError(line.number, line.tokens[0].column, "'vertices' needs labels");
      labels.define(line);
      if (labels.labels().size() > kMaxIndexSetSize) {
        throw Error(ErrorCode::kLimitExceeded, "complexes are limited to 64 vertices");
      }
      have_vertices = true;
    } else if (d == "facet") {
      if (!have_vertices) throw SyntaxError(line.number, line.tokens[0].column, "'facet' before 'vertices'");
      IndexSet face;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        face = face.with(labels.lookup(line, t, ErrorCode::kUnknownVertex));
      }
      faces.push_back(face);
    } else {
      unknown_directive(line, "complex");
    }
  }
  if (!have_vertices) throw SyntaxError(last_line + 1, 1, "complex document has no 'vertices' line");
  return Document{from_faces(labels.labels(), faces)};
}

Document parse_graph(const std::vector<Line>& lines, std::size_t first, std::size_t last_line) {
  LabelIndex labels;
  std::optional<SimpleGraph> graph;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& d = line.tokens[0].text;
    if (d == "vertices") {
      if (graph) throw SyntaxError(line.number, line.tokens[0].column, "'vertices' given twice");
      if (line.tokens.size() < 2) throw SyntaxError(line.number, line.tokens[0].column, "'vertices' needs labels");
      labels.define(line);
      graph.emplace(labels.labels());
    } else if (d == "edge") {
      if (!graph) throw SyntaxError(line.number, line.tokens[0].column, "'edge' before 'vertices'");
      expect_arity(line, 2);
      const auto u = labels.lookup(line, 1, ErrorCode::kValidationError);
      const auto v = labels.lookup(line, 2, ErrorCode::kValidationError);
      if (u == v) throw SyntaxError(line.number, line.tokens[2].column, "self-loop");
      graph->add_edge(u, v);
    } else {
      unknown_directive(line, "graph");
    }
  }
  if (!graph) throw SyntaxError(last_line + 1, 1, "graph document has no 'vertices' line");
  return Document{std::move(*graph)};
}

std::string join_tokens(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

ordered_json label_list(const std::vector<std::string>& labels, IndexSet set) {
  return ordered_json(sorted_labels(labels, set));
}

ordered_json element_labels(const FiniteLattice& lattice, std::vector<Element> elems) {
  std::vector<std::string> out;
  for (Element x : elems) out.push_back(lattice.label(x));
  std::sort(out.begin(), out.end());
  return ordered_json(out);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kLattice: return "lattice";
    case DocumentKind::kComplex: return "complex";
    case DocumentKind::kGraph: return "graph";
  }
  return "unknown";
}

Document parse(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tokens[0].text == "format") {
    expect_arity(lines[i], 1);
    if (lines[i].tokens[1].text != "1") {
      throw SyntaxError(lines[i].number, lines[i].tokens[1].column, "unsupported format version");
    }
    ++i;
  }
  if (i == lines.size()) throw SyntaxError(1, 1, "missing document kind (lattice, complex or graph)");
  const Line& head = lines[i];
  expect_arity(head, 0);
  const std::size_t last_line = lines.back().number;
  const std::string& kind = head.tokens[0].text;
  if (kind == "lattice") return parse_lattice(lines, i + 1, last_line);
  if (kind == "complex") return parse_complex(lines, i + 1, last_line);
  if (kind == "graph") return parse_graph(lines, i + 1, last_line);
  throw SyntaxError(head.number, head.tokens[0].column, "unknown document kind '" + kind + "'");
}

std::string print(const FiniteLattice& lattice) {
  std::string out = "lattice\nelements " + join_tokens(lattice.labels()) + "\n";
  for (auto [lo, hi] : cover_pairs(lattice)) out += "cover " + lattice.label(lo) + " " + lattice.label(hi) + "\n";
  return out;
}

std::string print(const SimplicialComplex& complex) {
  std::string out = "complex\nvertices " + join_tokens(complex.labels()) + "\n";
  for (IndexSet f : complex.facets()) {
    out += "facet";
    f.for_each([&](std::size_t v) { out += " " + complex.label(v); });
    out += "\n";
  }
  return out;
}

std::string print(const SimpleGraph& graph) {
  std::string out = "graph\nvertices " + join_tokens(graph.labels()) + "\n";
  for (auto [u, v] : graph.edges()) out += "edge " + graph.label(u) + " " + graph.label(v) + "\n";
  return out;
}

std::string print(const Document& document) {
  return std::visit([](const auto& body) { return print(body); }, document.body);
}

std::string emit_dot_hasse(const FiniteLattice& lattice) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element x = 0; x < lattice.size(); ++x) {
    os << "  n" << x << " [label=\"" << dot_escape(lattice.label(x)) << "\"];\n";
  }
  os << "  { rank=min; n" << lattice.bottom() << "; }\n";
  for (auto [lo, hi] : cover_pairs(lattice)) os << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot_graph(const SimpleGraph& graph, const std::vector<IndexSet>& highlight) {
  IndexSet marked;
  for (IndexSet s : highlight) marked = marked | s;
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < graph.size(); ++v) {
    os << "  n" << v << " [label=\"" << dot_escape(graph.label(v)) << "\"";
    if (marked.contains(v)) os << ", style=filled, fillcolor=lightgrey";
    os << "];\n";
  }
  for (auto [u, v] : graph.edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_matrix(const BooleanMatrix& matrix, const FiniteLattice& lattice) {
  std::vector<std::string> rows, cols;
  for (Element x : matrix.rows) rows.push_back(lattice.label(x));
  for (Element a : matrix.columns) cols.push_back(lattice.label(a));
  std::string out = "# rows: " + join_tokens(rows) + "\n# columns: " + join_tokens(cols) + "\n";
  for (const auto& row : matrix.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> sorted_labels(const std::vector<std::string>& labels, IndexSet set) {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(labels[i]); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string emit_json(const Classification& c, const FiniteLattice& lattice) {
  ordered_json j;
  j["size"] = c.size;
  j["atoms"] = element_labels(lattice, c.atoms);
  j["height"] = c.height;
  j["atomistic"] = c.atomistic;
  j["semimodular"] = !c.semimodular_violation.has_value();
  if (c.semimodular_violation) {
    const auto& v = *c.semimodular_violation;
    // Keep the a, b, c, d, e roles; this list is positional, not sorted.
    j["semimodular_violation"] = {lattice.label(v.a), lattice.label(v.b), lattice.label(v.c), lattice.label(v.d),
                                  lattice.label(v.e)};
  } else {
    j["semimodular_violation"] = nullptr;
  }
  j["cover_semimodular"] = c.cover_semimodular;
  j["geometric"] = c.geometric;
  j["boolean"] = c.boolean;
  return dump(j);
}

std::string emit_json(const RealizabilityReport& r, const FiniteLattice& lattice) {
  ordered_json j;
  j["atomistic"] = r.atomistic;
  j["realizable"] = r.realizable;
  j["method"] = to_string(r.method);
  j["lattice_size"] = r.lattice_size;
  j["height"] = r.height;
  j["atom_count"] = r.atom_count;
  j["flats_count"] = r.flats_count ? ordered_json(*r.flats_count) : ordered_json(nullptr);
  j["non_atomistic_element"] =
      r.non_atomistic_element ? ordered_json(lattice.label(*r.non_atomistic_element)) : ordered_json(nullptr);
  std::vector<std::vector<std::string>> cliques;
  for (const auto& s : r.supercliques) cliques.push_back(element_labels(lattice, s).get<std::vector<std::string>>());
  std::sort(cliques.begin(), cliques.end());
  j["supercliques"] = cliques;
  return dump(j);
}

std::string emit_json(const FlatFamily& flats) {
  const auto& labels = flats.complex().labels();
  ordered_json j;
  j["count"] = flats.size();
  ordered_json list = ordered_json::array();
  for (IndexSet f : flats.flats()) list.push_back(label_list(labels, f));
  j["flats"] = std::move(list);
  ordered_json covers_json = ordered_json::array();
  for (auto [lo, hi] : cover_pairs(flats.lattice())) covers_json.push_back({lo, hi});
  j["covers"] = std::move(covers_json);
  return dump(j);
}

std::string emit_json(const RepresentabilityReport& report, const SimplicialComplex& complex) {
  ordered_json j;
  j["boolean_representable"] = !report.non_representable_face.has_value();
  if (report.non_representable_face) j["witness"] = label_list(complex.labels(), *report.non_representable_face);
  if (!report.witnesses.empty()) {
    ordered_json list = ordered_json::array();
    for (const auto& [face, w] : report.witnesses) {
      ordered_json item;
      item["face"] = label_list(complex.labels(), face);
      std::vector<std::string> ordering;
      for (Vertex v : w.ordering) ordering.push_back(complex.label(v));
      item["ordering"] = ordering;
      ordered_json chain = ordered_json::array();
      for (IndexSet f : w.chain) chain.push_back(label_list(complex.labels(), f));
      item["chain"] = std::move(chain);
      list.push_back(std::move(item));
    }
    j["transversals"] = std::move(list);
  }
  return dump(j);
}

std::string emit_json_supercliques(const SimpleGraph& graph, const std::vector<IndexSet>& supercliques) {
  std::vector<std::vector<std::string>> cliques;
  for (IndexSet s : supercliques) cliques.push_back(sorted_labels(graph.labels(), s));
  std::sort(cliques.begin(), cliques.end());
  ordered_json j;
  j["supercliques"] = cliques;
  return dump(j);
}

std::string emit_json_closure(const SimplicialComplex& complex, IndexSet set, IndexSet closed) {
  ordered_json j;
  j["set"] = label_list(complex.labels(), set);
  j["closure"] = label_list(complex.labels(), closed);
  return dump(j);
}

std::string emit_json_matrix(const BooleanMatrix& matrix, const FiniteLattice& lattice) {
  ordered_json j;
  std::vector<std::string> rows, cols;
  for (Element x : matrix.rows) rows.push_back(lattice.label(x));
  for (Element a : matrix.columns) cols.push_back(lattice.label(a));
  j["rows"] = rows;
  j["columns"] = cols;
  j["entries"] = matrix.entries;
  return dump(j);
}

}  // namespace flatlat
