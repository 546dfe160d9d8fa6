#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatlat/index_set.hpp"

namespace flatlat {

using Vertex = std::size_t;

/// A finite abstract simplicial complex (hereditary collection) stored by
/// its facets. Vertices are indexed 0..n-1 in the order given at
/// construction; n is at most 64.
///
/// The empty set is always a face. Vertices need not be faces: a vertex v
/// with {v} not a face is a loop.
class SimplicialComplex {
 public:
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find(const std::string& label) const;
  IndexSet ground() const { return IndexSet::range(vertex_count()); }

  /// Maximal faces, pairwise incomparable, in size-then-colex order.
  const std::vector<IndexSet>& facets() const { return facets_; }

  bool is_face(IndexSet x) const;

  /// Every face, in size-then-colex order.
  std::vector<IndexSet> faces() const;

  /// Renders a vertex set as "{a,b,c}".
  std::string format(IndexSet x) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex from_faces(std::vector<std::string>, std::span<const IndexSet>);

  std::vector<std::string> labels_;
  std::vector<IndexSet> facets_;
};

/// Vertex bijection certifying X is a face iff map(X) is a face.
struct ComplexIso {
  std::vector<Vertex> map;
};

/// Builds the smallest complex containing the given faces (and the empty
/// set). Throws kUnknownVertex if a face uses an index outside the ground
/// set, kValidationError for bad labels.
SimplicialComplex from_faces(std::vector<std::string> vertices, std::span<const IndexSet> faces);

/// Label-based variant of from_faces.
SimplicialComplex from_faces(std::vector<std::string> vertices,
                             const std::vector<std::vector<std::string>>& faces);

/// (W, H restricted to subsets of W). Vertices of the result are the members
/// of W in ascending index order; use compress/expand to move sets between
/// the two index spaces. Throws kEmptyRestriction on empty W.
SimplicialComplex restriction(const SimplicialComplex& complex, IndexSet w);

struct ProperPart {
  SimplicialComplex complex;
  /// Loop vertices of the input, in the input's index space.
  IndexSet removed;
};

/// Restriction to the vertices that are faces. Throws kAllLoops when there
/// are none (the complex is (V, {empty})).
ProperPart proper_part(const SimplicialComplex& complex);

/// Faces I, J with |I| = |J| + 1 such that J + i is not a face for any i in I - J.
struct ExchangeViolation {
  IndexSet larger;
  IndexSet smaller;
};

std::optional<ExchangeViolation> exchange_violation(const SimplicialComplex& complex);
bool is_matroid(const SimplicialComplex& complex);

/// Largest face size minus one; -1 when the only face is empty.
int dimension(const SimplicialComplex& complex);

/// True iff every 2-subset of the vertex set is a face.
bool is_simple(const SimplicialComplex& complex);

std::optional<ComplexIso> complex_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// (V, all subsets of V of size at most k).
SimplicialComplex uniform_complex(std::vector<std::string> vertices, std::size_t k);

}  // namespace flatlat
