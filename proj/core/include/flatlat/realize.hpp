#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatlat/complex.hpp"
#include "flatlat/error.hpp"
#include "flatlat/index_set.hpp"
#include "flatlat/lattice.hpp"

namespace flatlat {

/// The complex T_L of an atomistic lattice: vertices are the atoms, faces
/// are the atom sets that are transversals of some chain of L.
struct CanonicalComplex {
  FiniteLattice lattice;
  /// atoms[i] is the lattice element behind vertex i of `complex`.
  std::vector<Element> atoms;
  SimplicialComplex complex;
};

/// Faces are the atom sets A admitting an enumeration a_1..a_m with each a_i
/// not below a_1 v ... v a_{i-1}. Taking x_i = a_1 v ... v a_i turns such an
/// enumeration into a chain x_0 < ... < x_m with a_i in xi(x_i) - xi(x_{i-1}),
/// and any such chain gives one back. Throws kNotAtomistic, kValidationError
/// on the one-element lattice, or kLimitExceeded above 24 atoms.
CanonicalComplex transversal_complex(const FiniteLattice& lattice, const Limits& limits = {});

/// Chain certificate for a face of T_L: ordering[i] is in xi(chain[i+1])
/// and not in xi(chain[i]).
struct ChainWitness {
  std::vector<Element> ordering;
  std::vector<Element> chain;
};

/// Witness for a set of atoms (lattice element indices) via prefix joins.
std::optional<ChainWitness> chain_witness(const FiniteLattice& lattice, const std::vector<Element>& atom_set);

/// Brute force over all orderings of the atom set and all chains of L.
/// Throws kLimitExceeded for more than 8 atoms.
bool oracle_transversal_chain(const FiniteLattice& lattice, const std::vector<Element>& atom_set,
                              const Limits& limits = {});

enum class RealizeMethod {
  kNotAtomistic,
  kHeightAtMostTwo,
  kBooleanShortcut,
  kHeightThreeGraph,
  kCanonical,
};

/// Which decision path is_realizable may take. kAuto picks the cheapest
/// applicable one; the others force a path and throw kMethodNotApplicable
/// when its precondition fails.
enum class MethodChoice {
  kAuto,
  kHeightAtMostTwo,
  kBoolean,
  kHeightThree,
  kGeneral,
};

const char* to_string(RealizeMethod method);
const char* to_string(MethodChoice choice);
std::optional<MethodChoice> parse_method_choice(const std::string& text);

struct RealizabilityReport {
  bool atomistic = false;
  RealizeMethod method = RealizeMethod::kNotAtomistic;
  bool realizable = false;
  std::size_t lattice_size = 0;
  std::size_t height = 0;
  std::size_t atom_count = 0;
  /// |Fl T_L|, set on the canonical path.
  std::optional<std::size_t> flats_count;
  /// First element that is not a join of atoms.
  std::optional<Element> non_atomistic_element;
  /// Supercliques of the atom graph (lattice element indices), set on the
  /// height-three path.
  std::vector<std::vector<Element>> supercliques;
};

/// Decides whether L is isomorphic to the lattice of flats of a boolean
/// representable complex. Non-atomistic lattices are rejected up front.
/// Under kAuto: height <= 2 accepts; height 3 runs the superclique test;
/// height == |atoms| tests for a boolean lattice; otherwise |Fl T_L| is
/// compared with |L|.
RealizabilityReport is_realizable(const FiniteLattice& lattice, MethodChoice choice = MethodChoice::kAuto,
                                  const Limits& limits = {});

/// Rows are lattice elements, columns atoms; entry is 0 when the row element
/// is above the atom and 1 otherwise.
struct BooleanMatrix {
  std::vector<Element> rows;
  std::vector<Element> columns;
  std::vector<std::vector<std::uint8_t>> entries;
};

/// Throws kNotAtomistic; rows are checked to be pairwise distinct.
BooleanMatrix boolean_matrix(const FiniteLattice& lattice);

/// A complex whose lattice of flats is isomorphic to an arbitrary lattice L.
///
/// Vertices are three copies a^1, a^2, a^3 of every non-bottom element a.
/// Faces are the sets X hitting each element at most once, plus X + {a^1, a^2}
/// whenever no p in X's elements is below a and no two distinct p, q among
/// them have p v a = q. The flat predicted for a is every copy of every
/// non-bottom element below a.
struct LatticeComplex {
  SimplicialComplex complex;
  /// predicted_flats[x] is the flat that x should map to.
  std::vector<IndexSet> predicted_flats;
};

/// The trivial lattice maps to a single vertex with only the empty face.
/// Throws kLimitExceeded past ten non-bottom elements (soft) or 64 vertices.
LatticeComplex lattice_complex(const FiniteLattice& lattice, const Limits& limits = {});

/// Builds lattice_complex(L), computes its flats and checks that x maps onto
/// predicted_flats[x] as an order isomorphism. Returns the map into the
/// flats lattice (element indices of flats_lattice). Throws
/// kConstructionMismatch if anything disagrees.
LatticeIso verify_lattice_complex(const FiniteLattice& lattice, const Limits& limits = {});

}  // namespace flatlat
