// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flatlat/io.hpp"
#include "oracles.hpp"
#include "support/test_support.hpp"

using namespace flatlat;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 means no time limit
  std::function<void(Check&)> body;
};

std::vector<SimplicialComplex> fixture_complexes() {
  std::vector<SimplicialComplex> out;
  for (const auto& name : testing_support::fixtures_with_extension(".cx"))
    out.push_back(testing_support::load<SimplicialComplex>(name));
  return out;
}

std::vector<FiniteLattice> fixture_lattices() {
  std::vector<FiniteLattice> out;
  for (const auto& name : testing_support::fixtures_with_extension(".lat"))
    out.push_back(testing_support::load<FiniteLattice>(name));
  return out;
}

IndexSet atom_mask(const CanonicalComplex& tl, const std::vector<Element>& elems) {
  IndexSet s;
  for (Element a : elems) s = s.with(std::find(tl.atoms.begin(), tl.atoms.end(), a) - tl.atoms.begin());
  return s;
}

void example_four_point_complex(Check& check) {
  const auto h = testing_support::fourpoint();
  const auto family = all_flats(h);
  const std::vector<std::vector<std::string>> expected = {{}, {"1"}, {"2"}, {"3"}, {"4"}, {"1", "2"}, {"1", "2", "3", "4"}};
  std::vector<IndexSet> want;
  for (const auto& e : expected) want.push_back(testing_support::set_of(h, e));
  check.expect(family.flats() == want, "flats differ from {0,1,2,3,4,12,V}");
  check.expect(is_boolean_representable(h), "complex not boolean representable");
  const auto& l = family.lattice();
  const auto v = semimodular_violation(l);
  check.expect(v.has_value(), "no semimodularity witness");
  if (v) {
    const std::vector<std::string> got = {l.label(v->a), l.label(v->b), l.label(v->c), l.label(v->d), l.label(v->e)};
    const std::vector<std::string> want_labels = {"{1,2,3,4}", "{1,2}", "{2}", "{4}", "{}"};
    check.expect(got == want_labels, "witness is not (V,12,2,4,0)");
  }
  check.expect(exchange_violation(h).has_value(), "exchange property holds");
}

void smallest_non_realizable(Check& check) {
  std::size_t non_realizable = 0;
  for (const auto& l : enumerate_lattices(3)) {
    const bool ok = is_realizable(l).realizable;
    if (l.size() <= 2) check.expect(ok, "lattice of size " + std::to_string(l.size()) + " not realizable");
    if (l.size() == 3) {
      check.expect(!ok, "3-chain reported realizable");
      check.expect(oracle::lattices_isomorphic(l, chain_lattice(3)), "size-3 lattice is not the chain");
      non_realizable += !ok;
    }
  }
  check.expect(non_realizable == 1, "expected exactly one non-realizable lattice of size 3");
}

void smallest_atomistic_non_realizable(Check& check) {
  const auto target = testing_support::pinched6();
  std::vector<FiniteLattice> failing;
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_atomistic(l)) continue;
    const auto general = is_realizable(l, MethodChoice::kGeneral);
    check.expect(general.realizable == is_realizable(l).realizable, "shortcut disagrees on a lattice");
    if (!general.realizable) failing.push_back(l);
  }
  check.expect(failing.size() == 1, std::to_string(failing.size()) + " non-realizable atomistic classes");
  if (failing.size() == 1) check.expect(lattice_isomorphic(failing[0], target).has_value(), "not the B/1,2,3/m/T lattice");
  const auto tl = transversal_complex(target);
  check.expect(tl.complex.facets() == std::vector<IndexSet>{IndexSet::range(3)}, "T_L is not the full simplex on 123");
  const auto flats = all_flats(tl.complex);
  check.expect(flats.size() == 8, "|Fl T_L| = " + std::to_string(flats.size()));
  check.expect(flats.size() != target.size(), "|Fl T_L| equals |L|");
}

void construction_round_trip(Check& check) {
  for (const auto& l : enumerate_lattices(5)) {
    try {
      const auto iso = verify_lattice_complex(l);
      const auto built = lattice_complex(l);
      const auto family = all_flats(built.complex);
      for (Element x = 0; x < l.size(); ++x) {
        check.expect(family.flats()[iso.map[x]] == built.predicted_flats[x], "map differs from prediction");
      }
    } catch (const Error& e) {
      check.expect(false, e.what());
    }
  }
}

void canonical_complex_of_flats(Check& check) {
  const auto h = testing_support::fourpoint();
  check.expect(is_simple(h) && is_boolean_representable(h), "fixture is not simple and representable");
  const auto tl = transversal_complex(flats_lattice(h));
  check.expect(complex_isomorphic(tl.complex, h).has_value(), "T_{Fl H} not isomorphic to H");
  check.expect(oracle::complexes_isomorphic(tl.complex, h), "permutation oracle disagrees");
}

void height_three_cross_check(Check& check) {
  std::size_t seen = 0;
  for (const auto& l : enumerate_lattices(7)) {
    if (height(l) != 3 || !is_atomistic(l)) continue;
    ++seen;
    const bool graph = realizable_height3(l).realizable;
    const bool general = is_realizable(l, MethodChoice::kGeneral).realizable;
    check.expect(graph == general, "disagreement on " + print(l));
  }
  check.expect(seen > 0, "no atomistic height-3 lattices enumerated");
}

void oracle_equivalence(Check& check) {
  for (const auto& c : fixture_complexes()) {
    if (c.vertex_count() > 5) continue;
    const auto family = all_flats(c);
    for_each_subset(c.ground(), [&](IndexSet x) {
      check.expect(is_transversal(family, x).has_value() == oracle_is_transversal(family, x),
                   "transversal mismatch on " + c.format(x));
    });
  }
  for (const auto& l : enumerate_lattices(6)) {
    if (!is_atomistic(l) || l.size() == 1) continue;
    const auto tl = transversal_complex(l);
    for_each_subset(tl.complex.ground(), [&](IndexSet s) {
      std::vector<Element> set;
      s.for_each([&](std::size_t i) { set.push_back(tl.atoms[i]); });
      check.expect(tl.complex.is_face(s) == oracle_transversal_chain(l, set), "T_L membership mismatch");
    });
  }
  auto same = [](std::vector<IndexSet> a, std::vector<IndexSet> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  for (const auto& name : testing_support::fixtures_with_extension(".gr")) {
    const auto g = testing_support::load<SimpleGraph>(name);
    check.expect(same(find_supercliques(g), naive_supercliques(g)), "superclique mismatch on " + name);
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing_support::random_graph(rng, size(rng), density(rng));
    check.expect(same(find_supercliques(g), naive_supercliques(g)), "superclique mismatch on random graph " + std::to_string(i));
  }
}

void structural_invariants(Check& check) {
  for (const auto& h : fixture_complexes()) {
    const auto family = all_flats(h);
    const auto& l = family.lattice();
    const bool all_points = std::all_of(h.labels().begin(), h.labels().end(),
                                        [&](const std::string& p) { return h.is_face(IndexSet::singleton(*h.find(p))); });
    if (is_boolean_representable(h)) {
      check.expect(is_atomistic(l), "flats lattice not atomistic for a representable fixture");
      if (all_points) {
        IndexSet covered;
        for (Element a : atoms(l)) covered = covered | family.flats()[a];
        check.expect(covered == h.ground(), "atoms do not cover V");
      }
    }
    // Trace of a flat on any W is a flat of the restriction.
    for_each_subset(h.ground(), [&](IndexSet w) {
      if (w.empty()) return;
      const auto r = restriction(h, w);
      for (IndexSet f : family.flats()) check.expect(is_flat(r, compress(f & w, w)), "trace not a flat");
    });
    // Loops never change the flats lattice.
    if (h.facets() == std::vector<IndexSet>{IndexSet{}}) continue;
    auto labels = h.labels();
    labels.push_back("loop");
    const auto with_loop = from_faces(labels, h.facets());
    const auto proper = proper_part(with_loop);
    check.expect(lattice_isomorphic(all_flats(with_loop).lattice(), all_flats(proper.complex).lattice()).has_value(),
                 "loops changed the flats lattice");
  }
  std::vector<FiniteLattice> lattices = fixture_lattices();
  for (const auto& h : fixture_complexes()) lattices.push_back(flats_lattice(h));
  for (const auto& l : lattices) {
    if (!is_atomistic(l)) continue;
    const auto m = boolean_matrix(l);
    std::set<std::vector<std::uint8_t>> rows(m.entries.begin(), m.entries.end());
    check.expect(rows.size() == l.size(), "boolean matrix rows repeat");
    if (l.size() == 1) continue;
    const auto tl = transversal_complex(l);
    check.expect(is_simple(tl.complex), "T_L not simple");
    check.expect(is_boolean_representable(tl.complex), "T_L not representable");
    const auto family = all_flats(tl.complex);
    for (Element x = 0; x < l.size(); ++x) {
      const IndexSet sx = atom_mask(tl, xi(l, x));
      check.expect(family.contains(sx), "xi(x) is not a flat");
      for (Element y = 0; y < l.size(); ++y) {
        const IndexSet sy = atom_mask(tl, xi(l, y));
        check.expect(l.leq(x, y) == sx.subset_of(sy), "xi is not an order embedding");
        check.expect(atom_mask(tl, xi(l, l.meet(x, y))) == (sx & sy), "xi does not preserve meets");
      }
    }
  }
}

void boolean_shortcut(Check& check) {
  std::size_t seen = 0;
  for (const auto& l : enumerate_lattices(7)) {
    if (height(l) != atoms(l).size()) continue;
    ++seen;
    const bool realizable = is_atomistic(l) && is_realizable(l, MethodChoice::kGeneral).realizable;
    check.expect(realizable == is_boolean_lattice(l), "disagreement on " + print(l));
  }
  check.expect(seen > 0, "no lattices with height equal to atom count");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "four-point complex: flats, representability, semimodularity witness, exchange", 1.0,
       example_four_point_complex},
      {2, "3-chain is the smallest non-realizable lattice", 1.0, smallest_non_realizable},
      {3, "B/1,2,3/m/T is the only non-realizable atomistic lattice up to 6 elements", 10.0,
       smallest_atomistic_non_realizable},
      {4, "construction realizes every lattice up to 5 elements with the predicted map", 60.0,
       construction_round_trip},
      {5, "canonical complex of the flats lattice recovers the four-point complex", 0.0,
       canonical_complex_of_flats},
      {6, "superclique criterion agrees with the general method on atomistic height-3 lattices up to 7", 0.0,
       height_three_cross_check},
      {7, "fast paths agree with brute-force oracles", 0.0, oracle_equivalence},
      {8, "structural invariants across fixtures", 0.0, structural_invariants},
      {9, "height = atom count: realizable iff boolean, lattices up to 7", 0.0, boolean_shortcut},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      check.failures.push_back(msg.str());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s [%d] %s (%.3f s", ok ? "PASS" : "FAIL", c.id, c.title, seconds);
    if (c.limit_seconds > 0) std::printf(", limit %.0f s", c.limit_seconds);
    std::printf(")\n");
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) std::printf("    %s\n", check.failures[i].c_str());
    if (check.failures.size() > 5) std::printf("    ... %zu more\n", check.failures.size() - 5);
  }
  return failed;
}
