#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flatlat/complex.hpp"
#include "flatlat/error.hpp"
#include "flatlat/index_set.hpp"
#include "flatlat/lattice.hpp"

namespace flatlat {

/// X is a flat when every face inside X stays a face after adding any single
/// vertex outside X.
bool is_flat(const SimplicialComplex& complex, IndexSet x);

/// The flats of a complex together with their lattice (ordered by inclusion).
/// Element i of lattice() is flats()[i].
class FlatFamily {
 public:
  const SimplicialComplex& complex() const { return complex_; }
  /// Flats in size-then-colex order; the first is closure of the empty set,
  /// the last is the full vertex set.
  const std::vector<IndexSet>& flats() const { return flats_; }
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return flats_.size(); }

  std::optional<Element> index_of(IndexSet flat) const;
  bool contains(IndexSet x) const { return index_of(x).has_value(); }

  /// Intersection of all flats containing x.
  IndexSet closure(IndexSet x) const;

 private:
  friend FlatFamily all_flats(const SimplicialComplex&, const Limits&);

  SimplicialComplex complex_;
  std::vector<IndexSet> flats_;
  FiniteLattice lattice_;
};

/// Exhaustive scan of all 2^|V| subsets. Throws kLimitExceeded above 24
/// vertices unless limits are lifted.
FlatFamily all_flats(const SimplicialComplex& complex, const Limits& limits = {});

IndexSet closure(const SimplicialComplex& complex, IndexSet x, const Limits& limits = {});

/// Lattice of flats as a standalone lattice; labels are the flats as "{a,b}".
FiniteLattice flats_lattice(const SimplicialComplex& complex, const Limits& limits = {});

/// Evidence that X is a transversal of the successive differences of a chain
/// of flats: ordering[i] lies in chain[i+1] but not in chain[i].
struct TransversalWitness {
  std::vector<Vertex> ordering;
  std::vector<IndexSet> chain;
};

/// Looks for an enumeration x_1..x_k of X with each x_i outside the closure
/// of its predecessors. Such an enumeration exists iff X is a transversal of
/// the successive differences of some chain of flats; the witness chain is
/// closure(empty) followed by the closures of the prefixes. The search tries
/// vertices in ascending index order, so witnesses are deterministic.
std::optional<TransversalWitness> is_transversal(const FlatFamily& flats, IndexSet x);
std::optional<TransversalWitness> is_transversal(const SimplicialComplex& complex, IndexSet x,
                                                 const Limits& limits = {});

/// Checks a witness against the literal definition.
bool check_transversal_witness(const FlatFamily& flats, IndexSet x, const TransversalWitness& witness);

/// Brute force over every ordering of X and every chain of flats. Used to
/// cross-check is_transversal; throws kLimitExceeded for |X| > 8.
bool oracle_is_transversal(const FlatFamily& flats, IndexSet x, const Limits& limits = {});

/// Literal flat predicate over every face inside X. Cross-check for is_flat.
bool oracle_is_flat(const SimplicialComplex& complex, IndexSet x);

/// A face that is not a transversal of any chain of flats, or nothing if the
/// complex is boolean representable. Transversals are closed under subsets,
/// so only facets are tested; the witness is the first failing facet.
std::optional<IndexSet> non_representable_face(const FlatFamily& flats);
std::optional<IndexSet> non_representable_face(const SimplicialComplex& complex, const Limits& limits = {});
bool is_boolean_representable(const SimplicialComplex& complex, const Limits& limits = {});

struct Simplification {
  /// Quotient complex; vertex i is classes[i], labelled by joining member
  /// labels with '+'.
  SimplicialComplex complex;
  std::vector<IndexSet> classes;
};

/// Identifies vertices with equal singleton closures. Throws kLoopsPresent
/// if some vertex is not a face; run proper_part first.
Simplification simplification(const SimplicialComplex& complex, const Limits& limits = {});

}  // namespace flatlat
