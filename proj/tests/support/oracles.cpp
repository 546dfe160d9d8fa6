#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace oracle {
namespace {

using Relation = std::vector<std::vector<bool>>;

bool is_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!r[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r[i][j] && r[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
    }
  }
  return true;
}

// Every pair needs a least upper bound and a greatest lower bound.
bool is_lattice(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int lubs = 0, glbs = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (r[x][z] && r[y][z]) {
          bool least = true;
          for (std::size_t w = 0; w < n; ++w)
            if (r[x][w] && r[y][w] && !r[z][w]) least = false;
          lubs += least;
        }
        if (r[z][x] && r[z][y]) {
          bool greatest = true;
          for (std::size_t w = 0; w < n; ++w)
            if (r[w][x] && r[w][y] && !r[w][z]) greatest = false;
          glbs += greatest;
        }
      }
      if (lubs != 1 || glbs != 1) return false;
    }
  }
  return true;
}

std::vector<bool> canonical_code(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code[i * n + j] = r[perm[i]][perm[j]];
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool chain_search(const std::vector<Mask>& flats, const std::vector<Mask>& order, std::size_t i, Mask previous) {
  if (i == order.size()) return true;
  for (Mask f : flats) {
    if ((f & previous) != previous || f == previous) continue;
    if ((f >> order[i] & 1) && !(previous >> order[i] & 1)) {
      if (chain_search(flats, order, i + 1, f)) return true;
    }
  }
  return false;
}

}  // namespace

std::size_t count_lattices(std::size_t n) {
  if (n == 0 || n > 6) throw std::invalid_argument("count_lattices supports 1..6");
  if (n == 1) return 1;
  // Pairs (i, j) with i != j; each is either related or not.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  // Fix element 0 as bottom and n-1 as top; every lattice has them, and the
  // canonical code makes the labelling irrelevant.
  std::vector<std::size_t> free_pairs;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    if (i == 0 || j == 0 || i == n - 1 || j == n - 1) continue;
    free_pairs.push_back(p);
  }
  for (Mask bits = 0; bits < (Mask{1} << free_pairs.size()); ++bits) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      r[i][i] = true;
      r[0][i] = true;
      r[i][n - 1] = true;
    }
    for (std::size_t k = 0; k < free_pairs.size(); ++k) {
      auto [i, j] = pairs[free_pairs[k]];
      if (bits >> k & 1) r[i][j] = true;
    }
    if (!is_partial_order(r) || !is_lattice(r)) continue;
    classes.insert(canonical_code(r));
  }
  return classes.size();
}

std::set<Mask> faces(const flatlat::SimplicialComplex& complex) {
  std::set<Mask> out;
  for (auto facet : complex.facets()) {
    const Mask f = facet.bits();
    for (Mask s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return out;
}

bool is_flat(const std::set<Mask>& faces, Mask ground, Mask x) {
  for (Mask i : faces) {
    if ((i & ~x) != 0) continue;
    for (std::size_t p = 0; p < 64; ++p) {
      if (!(ground >> p & 1) || (x >> p & 1)) continue;
      if (!faces.count(i | Mask{1} << p)) return false;
    }
  }
  return true;
}

std::vector<Mask> flats(const std::set<Mask>& faces, Mask ground) {
  std::vector<Mask> out;
  for (Mask x = ground;; x = (x - 1) & ground) {
    if (is_flat(faces, ground, x)) out.push_back(x);
    if (x == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask closure(const std::vector<Mask>& flats, Mask ground, Mask x) {
  Mask out = ground;
  for (Mask f : flats)
    if ((x & ~f) == 0) out &= f;
  return out;
}

bool is_transversal(const std::vector<Mask>& flats, Mask x) {
  std::vector<Mask> order;
  for (std::size_t v = 0; v < 64; ++v)
    if (x >> v & 1) order.push_back(v);
  do {
    for (Mask start : flats) {
      if (chain_search(flats, order, 0, start)) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool is_chain_transversal(const flatlat::FiniteLattice& lattice, const std::vector<flatlat::Element>& atom_set) {
  std::vector<flatlat::Element> order = atom_set;
  std::sort(order.begin(), order.end());
  // Step i picks x_i above x_{i-1} with order[i] below x_i but not below x_{i-1}.
  auto extend = [&](auto&& self, std::size_t i, flatlat::Element previous) -> bool {
    if (i == order.size()) return true;
    for (flatlat::Element x = 0; x < lattice.size(); ++x) {
      if (!lattice.less(previous, x)) continue;
      if (lattice.leq(order[i], x) && !lattice.leq(order[i], previous) && self(self, i + 1, x)) return true;
    }
    return false;
  };
  do {
    for (flatlat::Element start = 0; start < lattice.size(); ++start)
      if (extend(extend, 0, start)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool is_superclique(const flatlat::SimpleGraph& graph, Mask w) {
  if (std::popcount(w) < 2) return false;
  for (std::size_t a = 0; a < graph.size(); ++a) {
    if (!(w >> a & 1)) continue;
    for (std::size_t b = a + 1; b < graph.size(); ++b) {
      if (!(w >> b & 1)) continue;
      if (!graph.adjacent(a, b)) return false;
      for (std::size_t c = 0; c < graph.size(); ++c) {
        if (w >> c & 1) continue;
        if (graph.adjacent(c, a) && graph.adjacent(c, b)) return false;
      }
    }
  }
  return true;
}

std::vector<Mask> supercliques(const flatlat::SimpleGraph& graph) {
  std::vector<Mask> out;
  const Mask all = graph.size() == 64 ? ~Mask{0} : (Mask{1} << graph.size()) - 1;
  for (Mask w = 0; w <= all; ++w) {
    if (is_superclique(graph, w)) out.push_back(w);
    if (w == all) break;
  }
  return out;
}

bool is_cover_semimodular(const flatlat::FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  auto covered = [&](std::size_t x, std::size_t y) {
    if (!lattice.less(x, y)) return false;
    for (std::size_t z = 0; z < n; ++z)
      if (lattice.less(x, z) && lattice.less(z, y)) return false;
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t m = 0, j = 0;
      for (std::size_t z = 0; z < n; ++z) {
        bool is_meet = lattice.leq(z, a) && lattice.leq(z, b);
        for (std::size_t w = 0; w < n && is_meet; ++w)
          if (lattice.leq(w, a) && lattice.leq(w, b) && !lattice.leq(w, z)) is_meet = false;
        if (is_meet) m = z;
        bool is_join = lattice.leq(a, z) && lattice.leq(b, z);
        for (std::size_t w = 0; w < n && is_join; ++w)
          if (lattice.leq(a, w) && lattice.leq(b, w) && !lattice.leq(z, w)) is_join = false;
        if (is_join) j = z;
      }
      if (covered(m, a) && !covered(b, j)) return false;
    }
  return true;
}

bool lattices_isomorphic(const flatlat::FiniteLattice& a, const flatlat::FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n > 9) throw std::invalid_argument("lattices_isomorphic supports at most 9 elements");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool complexes_isomorphic(const flatlat::SimplicialComplex& a, const flatlat::SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const std::size_t n = a.vertex_count();
  if (n > 8) throw std::invalid_argument("complexes_isomorphic supports at most 8 vertices");
  const auto fa = faces(a);
  const auto fb = faces(b);
  if (fa.size() != fb.size()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Mask f : fa) {
      Mask image = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (f >> v & 1) image |= Mask{1} << perm[v];
      if (!fb.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool satisfies_exchange(const std::set<Mask>& faces) {
  for (Mask i : faces)
    for (Mask j : faces) {
      if (std::popcount(i) != std::popcount(j) + 1) continue;
      bool found = false;
      for (std::size_t v = 0; v < 64 && !found; ++v)
        if ((i >> v & 1) && !(j >> v & 1) && faces.count(j | Mask{1} << v)) found = true;
      if (!found) return false;
    }
  return true;
}

}  // namespace oracle
