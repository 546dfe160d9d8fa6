#include "flatlat/flats.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace flatlat {
namespace {

// Vertices p with I + p a face: the union of the facets containing I.
IndexSet link_vertices(const SimplicialComplex& complex, IndexSet face) {
  IndexSet out;
  for (IndexSet f : complex.facets())
    if (face.subset_of(f)) out = out | f;
  return out;
}

// Every face inside X lies in facet & X for some facet, and facet & X is a
// face, so it is enough to test those traces.
bool is_flat_cached(const SimplicialComplex& complex, IndexSet x,
                    std::unordered_map<std::uint64_t, IndexSet>& links) {
  const IndexSet outside = complex.ground() - x;
  if (outside.empty()) return true;
  for (IndexSet f : complex.facets()) {
    const IndexSet trace = f & x;
    auto it = links.find(trace.bits());
    if (it == links.end()) it = links.emplace(trace.bits(), link_vertices(complex, trace)).first;
    if (!outside.subset_of(it->second)) return false;
  }
  return true;
}

bool search_ordering(const FlatFamily& flats, IndexSet target, IndexSet chosen, std::vector<Vertex>& ordering,
                     std::unordered_set<std::uint64_t>& dead) {
  if (chosen == target) return true;
  if (dead.count(chosen.bits())) return false;
  const IndexSet closed = flats.closure(chosen);
  for (std::size_t v : (target - chosen).elements()) {
    if (closed.contains(v)) continue;
    ordering.push_back(v);
    if (search_ordering(flats, target, chosen.with(v), ordering, dead)) return true;
    ordering.pop_back();
  }
  dead.insert(chosen.bits());
  return false;
}

bool chain_exists(const std::vector<IndexSet>& flats, const std::vector<std::size_t>& order, std::size_t i,
                  IndexSet previous) {
  if (i == order.size()) return true;
  const std::size_t x = order[i];
  if (previous.contains(x)) return false;
  for (IndexSet f : flats) {
    if (!previous.proper_subset_of(f) || !f.contains(x)) continue;
    if (chain_exists(flats, order, i + 1, f)) return true;
  }
  return false;
}

}  // namespace

bool is_flat(const SimplicialComplex& complex, IndexSet x) {
  std::unordered_map<std::uint64_t, IndexSet> links;
  return is_flat_cached(complex, x & complex.ground(), links);
}

bool oracle_is_flat(const SimplicialComplex& complex, IndexSet x) {
  for (IndexSet face : complex.faces()) {
    if (!face.subset_of(x)) continue;
    for (std::size_t p : (complex.ground() - x).elements()) {
      if (!complex.is_face(face.with(p))) return false;
    }
  }
  return true;
}

std::optional<Element> FlatFamily::index_of(IndexSet flat) const {
  auto it = std::lower_bound(flats_.begin(), flats_.end(), flat, BySizeThenBits{});
  if (it == flats_.end() || *it != flat) return std::nullopt;
  return static_cast<Element>(it - flats_.begin());
}

IndexSet FlatFamily::closure(IndexSet x) const {
  // Flats are sorted by size and the closure is the unique smallest flat
  // containing x, so the first hit is it. The full vertex set always hits.
  for (IndexSet f : flats_)
    if (x.subset_of(f)) return f;
  return complex_.ground();
}

FlatFamily all_flats(const SimplicialComplex& complex, const Limits& limits) {
  const std::size_t n = complex.vertex_count();
  limits.check(n, Limits::kMaxFlatScanVertices, "vertex count for the flat scan");
  if (n >= kMaxIndexSetSize) throw Error(ErrorCode::kLimitExceeded, "flat scan needs fewer than 64 vertices");

  FlatFamily family;
  family.complex_ = complex;
  std::unordered_map<std::uint64_t, IndexSet> links;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    if (is_flat_cached(complex, IndexSet{bits}, links)) family.flats_.emplace_back(bits);
  }
  std::sort(family.flats_.begin(), family.flats_.end(), BySizeThenBits{});

  const std::size_t m = family.flats_.size();
  OrderRelation order(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(complex.format(family.flats_[i]));
    for (std::size_t j = 0; j < m; ++j) order[i][j] = family.flats_[i].subset_of(family.flats_[j]);
  }
  family.lattice_ = validate_lattice(order, std::move(labels));
  return family;
}

IndexSet closure(const SimplicialComplex& complex, IndexSet x, const Limits& limits) {
  return all_flats(complex, limits).closure(x);
}

FiniteLattice flats_lattice(const SimplicialComplex& complex, const Limits& limits) {
  return all_flats(complex, limits).lattice();
}

std::optional<TransversalWitness> is_transversal(const FlatFamily& flats, IndexSet x) {
  // If x_1..x_k works, F_i = closure{x_1..x_i} gives a strictly increasing
  // chain with x_i in F_i - F_{i-1}. Conversely any chain F_0 < ... < F_k with
  // x_i in F_i - F_{i-1} has closure{x_1..x_{i-1}} inside F_{i-1}, so x_i
  // avoids it. The condition only depends on the prefix set, so dead
  // prefixes are memoized.
  std::vector<Vertex> ordering;
  std::unordered_set<std::uint64_t> dead;
  if (!search_ordering(flats, x, IndexSet{}, ordering, dead)) return std::nullopt;

  TransversalWitness w;
  IndexSet prefix;
  w.chain.push_back(flats.closure(prefix));
  for (Vertex v : ordering) {
    prefix = prefix.with(v);
    w.chain.push_back(flats.closure(prefix));
  }
  w.ordering = std::move(ordering);
  return w;
}

std::optional<TransversalWitness> is_transversal(const SimplicialComplex& complex, IndexSet x,
                                                 const Limits& limits) {
  return is_transversal(all_flats(complex, limits), x);
}

bool check_transversal_witness(const FlatFamily& flats, IndexSet x, const TransversalWitness& witness) {
  if (witness.ordering.size() != x.size() || witness.chain.size() != x.size() + 1) return false;
  if (IndexSet::of(witness.ordering) != x) return false;
  for (IndexSet f : witness.chain)
    if (!flats.contains(f)) return false;
  for (std::size_t i = 0; i < witness.ordering.size(); ++i) {
    const IndexSet lower = witness.chain[i];
    const IndexSet upper = witness.chain[i + 1];
    if (!lower.proper_subset_of(upper)) return false;
    if (!upper.contains(witness.ordering[i]) || lower.contains(witness.ordering[i])) return false;
  }
  return true;
}

bool oracle_is_transversal(const FlatFamily& flats, IndexSet x, const Limits& limits) {
  limits.check(x.size(), Limits::kMaxOracleSetSize, "set size for the transversal oracle");
  std::vector<std::size_t> order = x.elements();
  do {
    for (IndexSet start : flats.flats()) {
      if (chain_exists(flats.flats(), order, 0, start)) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::optional<IndexSet> non_representable_face(const FlatFamily& flats) {
  for (IndexSet f : flats.complex().facets()) {
    if (!is_transversal(flats, f)) return f;
  }
  return std::nullopt;
}

std::optional<IndexSet> non_representable_face(const SimplicialComplex& complex, const Limits& limits) {
  return non_representable_face(all_flats(complex, limits));
}

bool is_boolean_representable(const SimplicialComplex& complex, const Limits& limits) {
  return !non_representable_face(complex, limits).has_value();
}

Simplification simplification(const SimplicialComplex& complex, const Limits& limits) {
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    if (!complex.is_face(IndexSet::singleton(v))) {
      throw Error(ErrorCode::kLoopsPresent, "vertex " + complex.label(v) + " is a loop");
    }
  }
  const FlatFamily flats = all_flats(complex, limits);
  std::map<std::uint64_t, std::size_t> class_of_closure;
  std::vector<IndexSet> classes;
  std::vector<std::size_t> class_of(complex.vertex_count());
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    const IndexSet c = flats.closure(IndexSet::singleton(v));
    auto [it, inserted] = class_of_closure.emplace(c.bits(), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second] = classes[it->second].with(v);
    class_of[v] = it->second;
  }
  std::vector<std::string> labels;
  for (IndexSet c : classes) {
    std::string label;
    c.for_each([&](std::size_t v) { label += (label.empty() ? "" : "+") + complex.label(v); });
    labels.push_back(label);
  }
  std::vector<IndexSet> images;
  for (IndexSet f : complex.facets()) {
    IndexSet image;
    f.for_each([&](std::size_t v) { image = image.with(class_of[v]); });
    images.push_back(image);
  }
  return Simplification{from_faces(std::move(labels), images), std::move(classes)};
}

}  // namespace flatlat
