#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flatlat/io.hpp"

namespace flatlat::cli {
namespace {

/// Raised when a fast path and its brute-force oracle disagree.
struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  Limits limits;
  bool json = false;
  bool oracle = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kValidationError, "cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

template <typename T>
T load(const Context& ctx, const std::string& path) {
  Document doc = parse(read_input(path, ctx.in));
  if (auto* body = std::get_if<T>(&doc.body)) return std::move(*body);
  const char* wanted = std::is_same_v<T, FiniteLattice> ? "lattice" : std::is_same_v<T, SimplicialComplex> ? "complex" : "graph";
  throw Error(ErrorCode::kValidationError,
              std::string("expected a ") + wanted + " document, got a " + to_string(doc.kind()));
}

void oracle_check(bool agree, const std::string& what) {
  if (!agree) throw OracleFailure("oracle disagreement: " + what);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string element_list(const FiniteLattice& lattice, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + lattice.label(xs[i]);
  return out + "}";
}

IndexSet parse_set(const SimplicialComplex& complex, const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',' || c == '{' || c == '}') c = ' ';
  }
  std::istringstream tokens(normalized);
  IndexSet set;
  for (std::string label; tokens >> label;) {
    auto v = complex.find(label);
    if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + label + "'");
    set = set.with(*v);
  }
  return set;
}

int do_classify(const Context& ctx, const std::string& path) {
  const auto lattice = load<FiniteLattice>(ctx, path);
  const auto c = classify(lattice);
  if (ctx.oracle) {
    oracle_check(c.semimodular_violation.has_value() != c.cover_semimodular,
                 "forbidden-sublattice and cover forms of semimodularity");
  }
  if (ctx.json) {
    ctx.out << emit_json(c, lattice);
    return kTrue;
  }
  auto& os = ctx.out;
  os << "size: " << c.size << "\n";
  os << "atoms: " << element_list(lattice, c.atoms) << "\n";
  os << "height: " << c.height << "\n";
  os << "atomistic: " << yes_no(c.atomistic) << "\n";
  os << "semimodular: " << yes_no(!c.semimodular_violation) << "\n";
  if (const auto& v = c.semimodular_violation) {
    os << "semimodular violation (a b c d e): " << lattice.label(v->a) << " " << lattice.label(v->b) << " "
       << lattice.label(v->c) << " " << lattice.label(v->d) << " " << lattice.label(v->e) << "\n";
  }
  os << "geometric: " << yes_no(c.geometric) << "\n";
  os << "boolean: " << yes_no(c.boolean) << "\n";
  return kTrue;
}

int do_flats(const Context& ctx, const std::string& path, bool dot) {
  const auto complex = load<SimplicialComplex>(ctx, path);
  const auto family = all_flats(complex, ctx.limits);
  if (ctx.oracle) {
    for_each_subset(complex.ground(), [&](IndexSet x) {
      oracle_check(family.contains(x) == oracle_is_flat(complex, x), "flat test on " + complex.format(x));
    });
  }
  if (dot) {
    ctx.out << emit_dot_hasse(family.lattice());
  } else if (ctx.json) {
    ctx.out << emit_json(family);
  } else {
    ctx.out << "flats: " << family.size() << "\n";
    for (IndexSet f : family.flats()) ctx.out << complex.format(f) << "\n";
    ctx.out << "covers:\n";
    for (auto [lo, hi] : cover_pairs(family.lattice())) {
      ctx.out << family.lattice().label(lo) << " < " << family.lattice().label(hi) << "\n";
    }
  }
  return kTrue;
}

int do_closure(const Context& ctx, const std::string& path, const std::string& set_text) {
  const auto complex = load<SimplicialComplex>(ctx, path);
  const IndexSet x = parse_set(complex, set_text);
  const auto family = all_flats(complex, ctx.limits);
  const IndexSet closed = family.closure(x);
  if (ctx.oracle) {
    IndexSet meet = complex.ground();
    for (IndexSet f : family.flats()) {
      if (x.subset_of(f)) meet = meet & f;
    }
    oracle_check(meet == closed, "closure of " + complex.format(x));
  }
  if (ctx.json) {
    ctx.out << emit_json_closure(complex, x, closed);
  } else {
    ctx.out << complex.format(closed) << "\n";
  }
  return kTrue;
}

int do_brsc(const Context& ctx, const std::string& path, bool verbose) {
  const auto complex = load<SimplicialComplex>(ctx, path);
  const auto family = all_flats(complex, ctx.limits);
  RepresentabilityReport report;
  report.non_representable_face = non_representable_face(family);
  if (ctx.oracle) {
    for (IndexSet f : complex.facets()) {
      oracle_check(is_transversal(family, f).has_value() == oracle_is_transversal(family, f, ctx.limits),
                   "transversal test on " + complex.format(f));
    }
  }
  if (verbose) {
    for (IndexSet f : complex.facets()) {
      if (auto w = is_transversal(family, f)) report.witnesses.emplace_back(f, std::move(*w));
    }
  }
  if (ctx.json) {
    ctx.out << emit_json(report, complex);
  } else {
    ctx.out << "boolean representable: " << yes_no(!report.non_representable_face) << "\n";
    if (report.non_representable_face) {
      ctx.out << "face not transversal: " << complex.format(*report.non_representable_face) << "\n";
    }
    for (const auto& [face, w] : report.witnesses) {
      ctx.out << complex.format(face) << ": ordering";
      for (Vertex v : w.ordering) ctx.out << " " << complex.label(v);
      ctx.out << "; chain";
      for (IndexSet c : w.chain) ctx.out << " " << complex.format(c);
      ctx.out << "\n";
    }
  }
  return report.non_representable_face ? kFalse : kTrue;
}

int do_realizable(const Context& ctx, const std::string& path, MethodChoice choice) {
  const auto lattice = load<FiniteLattice>(ctx, path);
  const auto report = is_realizable(lattice, choice, ctx.limits);
  if (ctx.oracle && report.atomistic && report.method != RealizeMethod::kCanonical) {
    const auto general = is_realizable(lattice, MethodChoice::kGeneral, ctx.limits);
    oracle_check(general.realizable == report.realizable,
                 std::string(to_string(report.method)) + " shortcut against the general method");
  }
  if (ctx.json) {
    ctx.out << emit_json(report, lattice);
  } else {
    auto& os = ctx.out;
    os << "atomistic: " << yes_no(report.atomistic) << "\n";
    os << "method: " << to_string(report.method) << "\n";
    os << "realizable: " << yes_no(report.realizable) << "\n";
    os << "lattice size: " << report.lattice_size << "\n";
    os << "height: " << report.height << "\n";
    os << "atoms: " << report.atom_count << "\n";
    if (report.flats_count) os << "flats of canonical complex: " << *report.flats_count << "\n";
    if (report.non_atomistic_element) {
      os << "not a join of atoms: " << lattice.label(*report.non_atomistic_element) << "\n";
    }
    for (const auto& s : report.supercliques) os << "superclique: " << element_list(lattice, s) << "\n";
  }
  return report.realizable ? kTrue : kFalse;
}

int do_construct(const Context& ctx, const std::string& path, bool verify) {
  const auto lattice = load<FiniteLattice>(ctx, path);
  const auto built = lattice_complex(lattice, ctx.limits);
  if (verify) verify_lattice_complex(lattice, ctx.limits);
  ctx.out << print(built.complex);
  if (verify) ctx.out << "# verified: flats lattice is isomorphic to the input\n";
  return kTrue;
}

int do_tl(const Context& ctx, const std::string& path) {
  const auto lattice = load<FiniteLattice>(ctx, path);
  const auto tl = transversal_complex(lattice, ctx.limits);
  if (ctx.oracle) {
    for (IndexSet f : tl.complex.facets()) {
      std::vector<Element> set;
      f.for_each([&](std::size_t i) { set.push_back(tl.atoms[i]); });
      oracle_check(oracle_transversal_chain(lattice, set, ctx.limits), "chain for " + tl.complex.format(f));
    }
  }
  ctx.out << print(tl.complex);
  return kTrue;
}

int do_matrix(const Context& ctx, const std::string& path) {
  const auto lattice = load<FiniteLattice>(ctx, path);
  const auto m = boolean_matrix(lattice);
  ctx.out << (ctx.json ? emit_json_matrix(m, lattice) : emit_matrix(m, lattice));
  return kTrue;
}

int do_superclique(const Context& ctx, const std::string& path, bool naive, bool dot) {
  Document doc = parse(read_input(path, ctx.in));
  SimpleGraph graph;
  if (auto* g = std::get_if<SimpleGraph>(&doc.body)) {
    graph = std::move(*g);
  } else if (auto* l = std::get_if<FiniteLattice>(&doc.body)) {
    graph = gamma_graph(*l);
  } else {
    throw Error(ErrorCode::kValidationError, "expected a graph or lattice document, got a complex");
  }
  auto found = naive ? naive_supercliques(graph, ctx.limits) : find_supercliques(graph);
  if (ctx.oracle) {
    auto other = naive ? find_supercliques(graph) : naive_supercliques(graph, ctx.limits);
    std::sort(found.begin(), found.end());
    std::sort(other.begin(), other.end());
    oracle_check(found == other, "edge-closure and exhaustive superclique search");
  }
  if (dot) {
    ctx.out << emit_dot_graph(graph, found);
  } else if (ctx.json) {
    ctx.out << emit_json_supercliques(graph, found);
  } else {
    ctx.out << "supercliques: " << found.size() << "\n";
    for (IndexSet s : found) ctx.out << graph.format(s) << "\n";
  }
  return found.empty() ? kTrue : kFalse;
}

int do_hasse(const Context& ctx, const std::string& path) {
  ctx.out << emit_dot_hasse(load<FiniteLattice>(ctx, path));
  return kTrue;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLimitExceeded: return kLimitExceeded;
    case ErrorCode::kConstructionMismatch: return kOracleDisagreement;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Limits& limits) {
  CLI::App app{"Flats, boolean representability and lattice realizability"};
  app.name("flatlat");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool oracle = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle", oracle, "Cross-check fast paths against brute-force oracles (exit 4 on disagreement)");

  std::string path;
  std::string set_text;
  std::string method = "auto";
  bool dot = false, verbose = false, force_general = false, verify = false, naive = false;

  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", path, what)->required(); };

  auto* classify_cmd = app.add_subcommand("classify", "Atoms, height and lattice properties");
  input(classify_cmd, "Lattice file, or - for stdin");

  auto* flats_cmd = app.add_subcommand("flats", "List the flats of a complex and their lattice");
  input(flats_cmd, "Complex file, or - for stdin");
  flats_cmd->add_flag("--dot", dot, "Emit the flats lattice as a DOT Hasse diagram");

  auto* closure_cmd = app.add_subcommand("closure", "Smallest flat containing a vertex set");
  input(closure_cmd, "Complex file, or - for stdin");
  closure_cmd->add_option("--set", set_text, "Vertex labels, comma or space separated")->required();

  auto* brsc_cmd = app.add_subcommand("brsc", "Decide boolean representability (exit 0 iff representable)");
  input(brsc_cmd, "Complex file, or - for stdin");
  brsc_cmd->add_flag("--verbose", verbose, "Print a chain-of-flats witness for every facet");

  auto* realizable_cmd = app.add_subcommand("realizable", "Decide whether a lattice is a lattice of flats");
  input(realizable_cmd, "Lattice file, or - for stdin");
  realizable_cmd->add_option("--method", method, "auto, height2, boolean, height3 or general")
      ->check(CLI::IsMember({"auto", "height2", "boolean", "height3", "general"}));
  realizable_cmd->add_flag("--force-general", force_general, "Skip every shortcut (same as --method general)");

  auto* construct_cmd = app.add_subcommand("construct", "Complex whose flats lattice is the input lattice");
  input(construct_cmd, "Lattice file, or - for stdin");
  construct_cmd->add_flag("--verify", verify, "Compute the flats and check the predicted isomorphism");

  auto* tl_cmd = app.add_subcommand("tl", "Canonical transversal complex of an atomistic lattice");
  input(tl_cmd, "Lattice file, or - for stdin");

  auto* matrix_cmd = app.add_subcommand("matrix", "Boolean matrix of an atomistic lattice");
  input(matrix_cmd, "Lattice file, or - for stdin");

  auto* superclique_cmd = app.add_subcommand("superclique", "Find supercliques (exit 0 iff there are none)");
  input(superclique_cmd, "Graph or lattice file, or - for stdin");
  superclique_cmd->add_flag("--naive", naive, "Use the exhaustive subset scan");
  superclique_cmd->add_flag("--dot", dot, "Emit the graph as DOT with superclique vertices filled");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of a lattice in DOT");
  input(hasse_cmd, "Lattice file, or - for stdin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  Context ctx{in, out, limits, format == "json", oracle};
  if (force_general) {
    if (method != "auto" && method != "general") {
      err << "flatlat: --force-general conflicts with --method " << method << "\n";
      return kInputError;
    }
    method = "general";
  }

  try {
    if (*classify_cmd) return do_classify(ctx, path);
    if (*flats_cmd) return do_flats(ctx, path, dot);
    if (*closure_cmd) return do_closure(ctx, path, set_text);
    if (*brsc_cmd) return do_brsc(ctx, path, verbose);
    if (*realizable_cmd) return do_realizable(ctx, path, *parse_method_choice(method));
    if (*construct_cmd) return do_construct(ctx, path, verify);
    if (*tl_cmd) return do_tl(ctx, path);
    if (*matrix_cmd) return do_matrix(ctx, path);
    if (*superclique_cmd) return do_superclique(ctx, path, naive, dot);
    if (*hasse_cmd) return do_hasse(ctx, path);
  } catch (const OracleFailure& e) {
    err << "flatlat: " << e.what() << "\n";
    return kOracleDisagreement;
  } catch (const Error& e) {
    err << "flatlat: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace flatlat::cli
