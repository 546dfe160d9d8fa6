#include "flatlat/realize.hpp"

#include <algorithm>
#include <set>

#include "flatlat/flats.hpp"
#include "flatlat/graphcheck.hpp"

namespace flatlat {
namespace {

bool extend_ordering(const FiniteLattice& lattice, const std::vector<Element>& atom_set, std::vector<bool>& used,
                     Element current, std::vector<Element>& ordering) {
  if (ordering.size() == atom_set.size()) return true;
  for (std::size_t i = 0; i < atom_set.size(); ++i) {
    if (used[i] || lattice.leq(atom_set[i], current)) continue;
    used[i] = true;
    ordering.push_back(atom_set[i]);
    if (extend_ordering(lattice, atom_set, used, lattice.join(current, atom_set[i]), ordering)) return true;
    ordering.pop_back();
    used[i] = false;
  }
  return false;
}

// Literal chain search: a_i <= x_i, a_i not <= x_{i-1}, x_{i-1} < x_i.
bool chain_through(const FiniteLattice& lattice, const std::vector<Element>& order, std::size_t i,
                   Element previous) {
  if (i == order.size()) return true;
  const Element a = order[i];
  if (lattice.leq(a, previous)) return false;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (!lattice.less(previous, x) || !lattice.leq(a, x)) continue;
    if (chain_through(lattice, order, i + 1, x)) return true;
  }
  return false;
}

}  // namespace

CanonicalComplex transversal_complex(const FiniteLattice& lattice, const Limits& limits) {
  if (auto bad = non_atomistic_element(lattice)) {
    throw Error(ErrorCode::kNotAtomistic, lattice.label(*bad) + " is not a join of atoms");
  }
  if (lattice.size() == 1) throw Error(ErrorCode::kValidationError, "the one-element lattice has no atoms to use as vertices");
  CanonicalComplex out{lattice, atoms(lattice), {}};
  const std::size_t n = out.atoms.size();
  limits.check(n, Limits::kMaxCanonicalAtoms, "atom count for the canonical complex");
  if (n >= kMaxIndexSetSize) throw Error(ErrorCode::kLimitExceeded, "canonical complex needs fewer than 64 atoms");

  // reachable[S]: S has a valid enumeration; join_of[S] is its join.
  const std::uint64_t end = std::uint64_t{1} << n;
  std::vector<std::uint8_t> reachable(end, 0);
  std::vector<Element> join_of(end, lattice.bottom());
  reachable[0] = 1;
  for (std::uint64_t s = 0; s < end; ++s) {
    if (!reachable[s]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((s & bit) || lattice.leq(out.atoms[i], join_of[s])) continue;
      reachable[s | bit] = 1;
      join_of[s | bit] = lattice.join(join_of[s], out.atoms[i]);
    }
  }
  std::vector<IndexSet> facets;
  for (std::uint64_t s = 0; s < end; ++s) {
    if (!reachable[s]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(s & bit) && reachable[s | bit]) maximal = false;
    }
    if (maximal) facets.emplace_back(s);
  }
  std::vector<std::string> labels;
  for (Element a : out.atoms) labels.push_back(lattice.label(a));
  out.complex = from_faces(std::move(labels), facets);
  return out;
}

std::optional<ChainWitness> chain_witness(const FiniteLattice& lattice, const std::vector<Element>& atom_set) {
  std::vector<bool> used(atom_set.size(), false);
  std::vector<Element> ordering;
  if (!extend_ordering(lattice, atom_set, used, lattice.bottom(), ordering)) return std::nullopt;
  ChainWitness w;
  w.chain.push_back(lattice.bottom());
  for (Element a : ordering) w.chain.push_back(lattice.join(w.chain.back(), a));
  w.ordering = std::move(ordering);
  return w;
}

bool oracle_transversal_chain(const FiniteLattice& lattice, const std::vector<Element>& atom_set,
                              const Limits& limits) {
  limits.check(atom_set.size(), Limits::kMaxOracleSetSize, "atom set size for the chain oracle");
  std::vector<Element> order = atom_set;
  std::sort(order.begin(), order.end());
  do {
    for (Element start = 0; start < lattice.size(); ++start) {
      if (chain_through(lattice, order, 0, start)) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

const char* to_string(RealizeMethod method) {
  switch (method) {
    case RealizeMethod::kNotAtomistic: return "not-atomistic";
    case RealizeMethod::kHeightAtMostTwo: return "height2";
    case RealizeMethod::kBooleanShortcut: return "boolean";
    case RealizeMethod::kHeightThreeGraph: return "height3";
    case RealizeMethod::kCanonical: return "general";
  }
  return "unknown";
}

const char* to_string(MethodChoice choice) {
  switch (choice) {
    case MethodChoice::kAuto: return "auto";
    case MethodChoice::kHeightAtMostTwo: return "height2";
    case MethodChoice::kBoolean: return "boolean";
    case MethodChoice::kHeightThree: return "height3";
    case MethodChoice::kGeneral: return "general";
  }
  return "unknown";
}

std::optional<MethodChoice> parse_method_choice(const std::string& text) {
  for (auto c : {MethodChoice::kAuto, MethodChoice::kHeightAtMostTwo, MethodChoice::kBoolean,
                 MethodChoice::kHeightThree, MethodChoice::kGeneral}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

RealizabilityReport is_realizable(const FiniteLattice& lattice, MethodChoice choice, const Limits& limits) {
  RealizabilityReport r;
  r.lattice_size = lattice.size();
  r.height = height(lattice);
  const auto at = atoms(lattice);
  r.atom_count = at.size();
  r.non_atomistic_element = non_atomistic_element(lattice);
  r.atomistic = !r.non_atomistic_element;

  auto require = [&](bool ok, const char* why) {
    if (!ok) {
      throw Error(ErrorCode::kMethodNotApplicable, std::string("method ") + to_string(choice) + " needs " + why);
    }
  };
  switch (choice) {
    case MethodChoice::kHeightAtMostTwo: require(r.height <= 2, "height at most 2"); break;
    case MethodChoice::kBoolean: require(r.height == r.atom_count, "height equal to the number of atoms"); break;
    case MethodChoice::kHeightThree: require(r.height == 3, "height 3"); break;
    case MethodChoice::kAuto:
    case MethodChoice::kGeneral: break;
  }
  if (!r.atomistic) {
    r.method = RealizeMethod::kNotAtomistic;
    return r;
  }

  if (choice == MethodChoice::kAuto) {
    if (r.height <= 2) {
      choice = MethodChoice::kHeightAtMostTwo;
    } else if (r.height == 3) {
      choice = MethodChoice::kHeightThree;
    } else if (r.height == r.atom_count) {
      choice = MethodChoice::kBoolean;
    } else {
      choice = MethodChoice::kGeneral;
    }
  }

  switch (choice) {
    case MethodChoice::kHeightAtMostTwo:
      // Atomistic of height <= 2: T_L is all sets of at most two atoms, whose
      // flats are the empty set, the singletons and everything.
      r.method = RealizeMethod::kHeightAtMostTwo;
      r.realizable = true;
      break;
    case MethodChoice::kBoolean:
      r.method = RealizeMethod::kBooleanShortcut;
      r.realizable = is_boolean_lattice(lattice);
      break;
    case MethodChoice::kHeightThree: {
      r.method = RealizeMethod::kHeightThreeGraph;
      const auto d = realizable_height3(lattice);
      r.realizable = d.realizable;
      for (IndexSet s : d.supercliques) {
        std::vector<Element> elems;
        s.for_each([&](std::size_t i) { elems.push_back(at[i]); });
        r.supercliques.push_back(std::move(elems));
      }
      break;
    }
    case MethodChoice::kAuto:
    case MethodChoice::kGeneral: {
      // xi embeds L into Fl T_L, so equal sizes mean xi is onto.
      r.method = RealizeMethod::kCanonical;
      if (lattice.size() == 1) {
        // A single loop has V as its only flat.
        r.flats_count = 1;
        r.realizable = true;
        break;
      }
      const auto t = transversal_complex(lattice, limits);
      r.flats_count = all_flats(t.complex, limits).size();
      r.realizable = *r.flats_count == lattice.size();
      break;
    }
  }
  return r;
}

BooleanMatrix boolean_matrix(const FiniteLattice& lattice) {
  if (auto bad = non_atomistic_element(lattice)) {
    throw Error(ErrorCode::kNotAtomistic, lattice.label(*bad) + " is not a join of atoms");
  }
  BooleanMatrix m;
  m.columns = atoms(lattice);
  for (Element x = 0; x < lattice.size(); ++x) {
    m.rows.push_back(x);
    std::vector<std::uint8_t> row;
    for (Element a : m.columns) row.push_back(lattice.leq(a, x) ? 0 : 1);
    m.entries.push_back(std::move(row));
  }
  std::set<std::vector<std::uint8_t>> distinct(m.entries.begin(), m.entries.end());
  if (distinct.size() != m.entries.size()) {
    throw Error(ErrorCode::kConstructionMismatch, "boolean matrix has repeated rows");
  }
  return m;
}

LatticeComplex lattice_complex(const FiniteLattice& lattice, const Limits& limits) {
  LatticeComplex out;
  if (lattice.size() == 1) {
    out.complex = from_faces({"v"}, std::vector<IndexSet>{});
    out.predicted_flats.push_back(IndexSet::singleton(0));
    return out;
  }
  std::vector<Element> nonbottom;
  for (Element x = 0; x < lattice.size(); ++x)
    if (x != lattice.bottom()) nonbottom.push_back(x);
  const std::size_t m = nonbottom.size();
  limits.check(m, Limits::kMaxConstructedElements, "non-bottom element count for the construction");
  if (3 * m > kMaxIndexSetSize) {
    throw Error(ErrorCode::kLimitExceeded, "lattice too large: needs " + std::to_string(3 * m) + " vertices");
  }
  // Copy c (0, 1, 2 for superscripts 1, 2, 3) of nonbottom[j] is vertex 3j + c.
  auto vertex = [](std::size_t j, std::size_t c) { return 3 * j + c; };
  std::vector<std::string> labels;
  for (Element x : nonbottom)
    for (int c = 1; c <= 3; ++c) labels.push_back(lattice.label(x) + "^" + std::to_string(c));

  // Elements a with p not below a for all p in P and a v p != q for distinct p, q in P.
  auto alpha = [&](IndexSet p_set) {
    std::vector<std::size_t> out_idx;
    const auto members = p_set.elements();
    for (std::size_t ai = 0; ai < m; ++ai) {
      const Element a = nonbottom[ai];
      bool ok = true;
      for (std::size_t pi : members) {
        const Element p = nonbottom[pi];
        if (lattice.leq(p, a)) ok = false;
        for (std::size_t qi : members)
          if (qi != pi && lattice.join(a, p) == nonbottom[qi]) ok = false;
        if (!ok) break;
      }
      if (ok) out_idx.push_back(ai);
    }
    return out_idx;
  };

  // Every injective choice of copies over the elements of P.
  auto for_each_copy_choice = [&](IndexSet p_set, auto&& f) {
    const auto members = p_set.elements();
    std::vector<std::size_t> copy(members.size(), 0);
    while (true) {
      IndexSet x;
      for (std::size_t i = 0; i < members.size(); ++i) x = x.with(vertex(members[i], copy[i]));
      f(x);
      std::size_t i = 0;
      while (i < copy.size() && ++copy[i] == 3) copy[i++] = 0;
      if (i == copy.size()) return;
    }
  };

  std::vector<IndexSet> faces;
  // Maximal injective sets hit every element once; they are never all of V.
  for_each_copy_choice(IndexSet::range(m), [&](IndexSet x) { faces.push_back(x); });
  for_each_subset(IndexSet::range(m), [&](IndexSet p_set) {
    const auto extra = alpha(p_set);
    if (extra.empty()) return;
    for_each_copy_choice(p_set, [&](IndexSet x) {
      for (std::size_t ai : extra) faces.push_back(x.with(vertex(ai, 0)).with(vertex(ai, 1)));
    });
  });
  out.complex = from_faces(std::move(labels), faces);

  for (Element x = 0; x < lattice.size(); ++x) {
    IndexSet flat;
    for (std::size_t j = 0; j < m; ++j)
      if (lattice.leq(nonbottom[j], x)) flat = flat.with(vertex(j, 0)).with(vertex(j, 1)).with(vertex(j, 2));
    out.predicted_flats.push_back(flat);
  }
  return out;
}

LatticeIso verify_lattice_complex(const FiniteLattice& lattice, const Limits& limits) {
  const auto built = lattice_complex(lattice, limits);
  const auto flats = all_flats(built.complex, limits);
  if (flats.size() != lattice.size()) {
    throw Error(ErrorCode::kConstructionMismatch, "complex has " + std::to_string(flats.size()) +
                                                      " flats, lattice has " + std::to_string(lattice.size()));
  }
  LatticeIso iso;
  for (Element x = 0; x < lattice.size(); ++x) {
    auto idx = flats.index_of(built.predicted_flats[x]);
    if (!idx) {
      throw Error(ErrorCode::kConstructionMismatch,
                  "predicted set for " + lattice.label(x) + " is not a flat: " +
                      built.complex.format(built.predicted_flats[x]));
    }
    iso.map.push_back(*idx);
  }
  if (!is_lattice_iso(lattice, flats.lattice(), iso)) {
    throw Error(ErrorCode::kConstructionMismatch, "predicted map is not an order isomorphism");
  }
  if (!lattice_isomorphic(lattice, flats.lattice())) {
    throw Error(ErrorCode::kConstructionMismatch, "isomorphism search disagrees with the predicted map");
  }
  return iso;
}

}  // namespace flatlat
