#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flatlat/complex.hpp"
#include "flatlat/flats.hpp"
#include "flatlat/graphcheck.hpp"
#include "flatlat/lattice.hpp"
#include "flatlat/realize.hpp"

// Text formats
// ------------
// Line oriented; '#' starts a comment; tokens are separated by whitespace.
// An optional `format 1` line may precede the kind line.
//
//   lattice                 complex                 graph
//   elements B 1 2 m T      vertices 1 2 3 4        vertices a b c
//   cover B 1               facet 1 2 3             edge a b
//   cover 1 m               facet 3 4               edge b c
//   ...                     ...                     ...
//
// Lattices are given by their covering pairs (lower upper); the order is the
// reflexive transitive closure. A `facet` line may list any face; the
// complex is the downward closure of everything listed. A bare `facet` line
// is the empty face. Unknown directives are errors.

namespace flatlat {

enum class DocumentKind { kLattice, kComplex, kGraph };

const char* to_string(DocumentKind kind);

struct Document {
  std::variant<FiniteLattice, SimplicialComplex, SimpleGraph> body;

  DocumentKind kind() const { return static_cast<DocumentKind>(body.index()); }
};

/// Throws SyntaxError (with line and column) for malformed text, and
/// forwards validation errors from the owning module.
Document parse(std::string_view text);

std::string print(const FiniteLattice& lattice);
std::string print(const SimplicialComplex& complex);
std::string print(const SimpleGraph& graph);
std::string print(const Document& document);

/// Hasse diagram: one node per element, one edge per covering pair, drawn
/// bottom-up with the bottom element on the lowest rank.
std::string emit_dot_hasse(const FiniteLattice& lattice);

/// Undirected DOT rendering; vertices in `highlight` sets are filled.
std::string emit_dot_graph(const SimpleGraph& graph, const std::vector<IndexSet>& highlight = {});

/// Row-major 0/1 text with '#' header lines naming rows and columns.
std::string emit_matrix(const BooleanMatrix& matrix, const FiniteLattice& lattice);

// JSON reports. Field order is fixed; sets are emitted as sorted label lists.

std::string emit_json(const Classification& classification, const FiniteLattice& lattice);
std::string emit_json(const RealizabilityReport& report, const FiniteLattice& lattice);
std::string emit_json(const FlatFamily& flats);

struct RepresentabilityReport {
  std::optional<IndexSet> non_representable_face;
  /// Per-facet witnesses, filled only when requested.
  std::vector<std::pair<IndexSet, TransversalWitness>> witnesses;
};

std::string emit_json(const RepresentabilityReport& report, const SimplicialComplex& complex);
std::string emit_json_supercliques(const SimpleGraph& graph, const std::vector<IndexSet>& supercliques);
std::string emit_json_closure(const SimplicialComplex& complex, IndexSet set, IndexSet closed);
std::string emit_json_matrix(const BooleanMatrix& matrix, const FiniteLattice& lattice);

/// Labels of a set, sorted as strings.
std::vector<std::string> sorted_labels(const std::vector<std::string>& labels, IndexSet set);

}  // namespace flatlat
