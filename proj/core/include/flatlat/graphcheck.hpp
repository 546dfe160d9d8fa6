#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatlat/error.hpp"
#include "flatlat/index_set.hpp"
#include "flatlat/lattice.hpp"

namespace flatlat {

/// Undirected simple graph on at most 64 labelled vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws kValidationError on bad or duplicate labels.
  explicit SimpleGraph(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> find(const std::string& label) const;
  IndexSet vertices() const { return IndexSet::range(size()); }

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
  IndexSet neighbors(std::size_t v) const { return adjacency_[v]; }

  /// Throws kValidationError on self-loops.
  void add_edge(std::size_t u, std::size_t v);

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  std::string format(IndexSet w) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<IndexSet> adjacency_;
};

/// Graph on the atoms of L with a -- b whenever a v b is the top. Vertex i
/// is atoms(L)[i] and carries its label.
SimpleGraph gamma_graph(const FiniteLattice& lattice);

bool is_clique(const SimpleGraph& graph, IndexSet w);

/// A clique of size at least 2 such that every vertex outside it misses at
/// least one end of every pair inside it.
bool is_superclique(const SimpleGraph& graph, IndexSet w);

/// Grows {a, b} by repeatedly adding a vertex adjacent to at least two
/// current members. The result does not depend on the growth order; this
/// overload adds the smallest eligible index each step.
IndexSet edge_closure(const SimpleGraph& graph, std::size_t a, std::size_t b);

/// Same, adding the eligible vertex that comes first in `priority` (a
/// permutation of the vertices).
IndexSet edge_closure(const SimpleGraph& graph, std::size_t a, std::size_t b,
                      std::span<const std::size_t> priority);

/// All supercliques: for each edge the closure above, kept when it is a
/// clique. Every superclique arises this way from any edge inside it.
/// Sorted, no duplicates.
std::vector<IndexSet> find_supercliques(const SimpleGraph& graph);

/// Checks every vertex subset. Throws kLimitExceeded above 16 vertices.
std::vector<IndexSet> naive_supercliques(const SimpleGraph& graph, const Limits& limits = {});

struct Height3Decision {
  bool atomistic = false;
  bool realizable = false;
  /// Supercliques of gamma_graph(L), as vertex sets of that graph.
  std::vector<IndexSet> supercliques;
};

/// A height-3 lattice is realizable iff it is atomistic and its atom graph
/// has no superclique. Throws kWrongHeight for other heights.
Height3Decision realizable_height3(const FiniteLattice& lattice);

}  // namespace flatlat
