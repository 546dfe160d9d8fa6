#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatlat/error.hpp"

namespace flatlat {

using Element = std::size_t;

/// Row-major square boolean relation; `rel[i][j]` means i <= j.
using OrderRelation = std::vector<std::vector<bool>>;

/// A finite lattice with precomputed order, meet and join tables.
///
/// Instances only come out of validate_lattice (or helpers built on it), so
/// every FiniteLattice satisfies the partial order and lattice axioms.
class FiniteLattice {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  std::optional<Element> find(const std::string& label) const;

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Join of a set of elements; the empty join is bottom.
  Element join_all(std::span<const Element> xs) const;
  /// Meet of a set of elements; the empty meet is top.
  Element meet_all(std::span<const Element> xs) const;

  /// Same labels in the same order and the same order relation.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  friend FiniteLattice validate_lattice(const OrderRelation&, std::vector<std::string>);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Certificate that two lattices are isomorphic: `map[x]` is the image of x.
struct LatticeIso {
  std::vector<Element> map;
};

/// Checks the relation is a partial order in which every pair has a meet and
/// a join, then fills the tables. Labels must be unique non-empty tokens
/// without whitespace; an empty label list assigns "0", "1", ...
///
/// Throws kNotAPartialOrder or kNotALattice (naming the offending pair);
/// the input is never repaired.
FiniteLattice validate_lattice(const OrderRelation& order, std::vector<std::string> labels);

/// Builds a lattice from its Hasse diagram: the order is the reflexive
/// transitive closure of `covers` (pairs lower, upper). Every listed pair must
/// be a covering pair of the resulting order.
FiniteLattice lattice_from_covers(std::vector<std::string> labels,
                                  std::span<const std::pair<Element, Element>> covers);

/// The chain 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(std::size_t n);

/// The lattice of all subsets of `atom_labels`, labelled like "{a,b}".
FiniteLattice boolean_lattice(const std::vector<std::string>& atom_labels);

// ---------------------------------------------------------------------------
// Order-theoretic predicates

std::vector<Element> atoms(const FiniteLattice& lattice);

/// True iff x < y with nothing strictly in between.
bool covers(const FiniteLattice& lattice, Element x, Element y);

/// All covering pairs (lower, upper), sorted.
std::vector<std::pair<Element, Element>> cover_pairs(const FiniteLattice& lattice);

/// Length of the longest chain.
std::size_t height(const FiniteLattice& lattice);

/// The atoms below x, ascending.
std::vector<Element> xi(const FiniteLattice& lattice, Element x);

/// First element (by index) that is not the join of the atoms below it.
std::optional<Element> non_atomistic_element(const FiniteLattice& lattice);
bool is_atomistic(const FiniteLattice& lattice);

/// A forbidden configuration for semimodularity: e < c < b < a and e < d < a,
/// with d covering e, b ^ d = c ^ d = e and b v d = c v d = a.
struct SemimodularViolation {
  Element a, b, c, d, e;
  friend bool operator==(const SemimodularViolation&, const SemimodularViolation&) = default;
};

/// Exhaustive search for the forbidden five-element sublattice. Elements are
/// scanned from the highest index down, so the first hit prefers elements
/// listed late.
std::optional<SemimodularViolation> semimodular_violation(const FiniteLattice& lattice);
std::vector<SemimodularViolation> all_semimodular_violations(const FiniteLattice& lattice);
bool is_semimodular(const FiniteLattice& lattice);

/// Textbook upper semimodularity: whenever x ^ y is covered by x, y is
/// covered by x v y. Kept as a cross-check for the forbidden-sublattice form.
bool is_cover_semimodular(const FiniteLattice& lattice);

bool is_geometric(const FiniteLattice& lattice);

/// True iff the lattice is isomorphic to the power set of its atoms.
bool is_boolean_lattice(const FiniteLattice& lattice);

std::optional<LatticeIso> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

/// Checks that `iso` is a bijection with x <= y iff map(x) <= map(y).
bool is_lattice_iso(const FiniteLattice& a, const FiniteLattice& b, const LatticeIso& iso);

/// Everything the `classify` command reports about a lattice.
struct Classification {
  std::size_t size = 0;
  std::vector<Element> atoms;
  std::size_t height = 0;
  bool atomistic = false;
  std::optional<SemimodularViolation> semimodular_violation;
  bool cover_semimodular = false;
  bool geometric = false;
  bool boolean = false;
};

Classification classify(const FiniteLattice& lattice);

/// Every lattice with at most `max_size` elements, one per isomorphism class,
/// ordered by size. Sizes above 7 need `limits.lift_soft_limits`.
std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size, const Limits& limits = {});

}  // namespace flatlat
