#include "flatlat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_set>

namespace flatlat {
namespace {

std::string pair_text(const std::vector<std::string>& labels, Element x, Element y) {
  return "(" + labels[x] + ", " + labels[y] + ")";
}

bool is_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; });
}

void check_labels(std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return;
  }
  if (labels.size() != n) {
    throw Error(ErrorCode::kValidationError, "expected " + std::to_string(n) + " labels, got " +
                                                 std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!is_token(l)) throw Error(ErrorCode::kValidationError, "invalid label '" + l + "'");
    if (!seen.insert(l).second) throw Error(ErrorCode::kValidationError, "duplicate label '" + l + "'");
  }
}

// Longest chain ending at each element, from bottom.
std::vector<std::size_t> ranks(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::size_t> down(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (lattice.leq(y, x)) ++down[x];
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return down[a] < down[b]; });
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Element y = order[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Element x = order[j];
      if (lattice.less(x, y)) rank[y] = std::max(rank[y], rank[x] + 1);
    }
  }
  return rank;
}

std::vector<std::uint8_t> cover_table(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::uint8_t> table(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) table[x * n + y] = covers(lattice, x, y) ? 1 : 0;
  return table;
}

}  // namespace

std::optional<Element> FiniteLattice::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element FiniteLattice::join_all(std::span<const Element> xs) const {
  Element acc = bottom_;
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element FiniteLattice::meet_all(std::span<const Element> xs) const {
  Element acc = top_;
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

FiniteLattice validate_lattice(const OrderRelation& order, std::vector<std::string> labels) {
  const std::size_t n = order.size();
  if (n == 0) throw Error(ErrorCode::kNotAPartialOrder, "empty element set");
  for (const auto& row : order) {
    if (row.size() != n) throw Error(ErrorCode::kNotAPartialOrder, "relation is not square");
  }
  check_labels(labels, n);

  for (Element x = 0; x < n; ++x) {
    if (!order[x][x]) throw Error(ErrorCode::kNotAPartialOrder, "not reflexive at " + labels[x]);
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (order[x][y] && order[y][x]) {
        throw Error(ErrorCode::kNotAPartialOrder, "not antisymmetric on " + pair_text(labels, x, y));
      }
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!order[x][y]) continue;
      for (Element z = 0; z < n; ++z) {
        if (order[y][z] && !order[x][z]) {
          throw Error(ErrorCode::kNotAPartialOrder,
                      "not transitive: " + labels[x] + " <= " + labels[y] + " <= " + labels[z]);
        }
      }
    }

  FiniteLattice lattice;
  lattice.labels_ = std::move(labels);
  lattice.leq_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) lattice.leq_[x * n + y] = order[x][y] ? 1 : 0;

  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (order[x][y]) {
        ++up[x];
        ++down[y];
      }

  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      // Greatest lower bound: the lower bound with the largest down-set, if
      // every other lower bound sits below it.
      std::optional<Element> glb, lub;
      for (Element z = 0; z < n; ++z) {
        if (order[z][x] && order[z][y] && (!glb || down[z] > down[*glb])) glb = z;
        if (order[x][z] && order[y][z] && (!lub || up[z] > up[*lub])) lub = z;
      }
      for (Element z = 0; z < n && glb; ++z) {
        if (order[z][x] && order[z][y] && !order[z][*glb]) glb.reset();
      }
      for (Element z = 0; z < n && lub; ++z) {
        if (order[x][z] && order[y][z] && !order[*lub][z]) lub.reset();
      }
      if (!glb) {
        throw Error(ErrorCode::kNotALattice, "no meet for " + pair_text(lattice.labels_, x, y));
      }
      if (!lub) {
        throw Error(ErrorCode::kNotALattice, "no join for " + pair_text(lattice.labels_, x, y));
      }
      lattice.meet_[x * n + y] = lattice.meet_[y * n + x] = *glb;
      lattice.join_[x * n + y] = lattice.join_[y * n + x] = *lub;
    }
  }
  lattice.bottom_ = 0;
  lattice.top_ = 0;
  for (Element x = 1; x < n; ++x) {
    lattice.bottom_ = lattice.meet(lattice.bottom_, x);
    lattice.top_ = lattice.join(lattice.top_, x);
  }
  return lattice;
}

FiniteLattice lattice_from_covers(std::vector<std::string> labels,
                                  std::span<const std::pair<Element, Element>> cover_list) {
  const std::size_t n = labels.size();
  OrderRelation order(n, std::vector<bool>(n, false));
  for (Element x = 0; x < n; ++x) order[x][x] = true;
  for (auto [lo, hi] : cover_list) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::kValidationError, "cover refers to unknown element");
    if (lo == hi) throw Error(ErrorCode::kNotAPartialOrder, "element covers itself: " + labels[lo]);
    order[lo][hi] = true;
  }
  // Warshall
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (order[i][k])
        for (Element j = 0; j < n; ++j)
          if (order[k][j]) order[i][j] = true;

  FiniteLattice lattice = validate_lattice(order, std::move(labels));
  for (auto [lo, hi] : cover_list) {
    if (!covers(lattice, lo, hi)) {
      throw Error(ErrorCode::kValidationError, lattice.label(hi) + " does not cover " + lattice.label(lo));
    }
  }
  return lattice;
}

FiniteLattice chain_lattice(std::size_t n) {
  OrderRelation order(n, std::vector<bool>(n, false));
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) order[x][y] = true;
  return validate_lattice(order, {});
}

FiniteLattice boolean_lattice(const std::vector<std::string>& atom_labels) {
  const std::size_t k = atom_labels.size();
  if (k >= 16) throw Error(ErrorCode::kLimitExceeded, "boolean lattice on more than 15 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!((s >> i) & 1U)) continue;
      if (!first) label += ",";
      label += atom_labels[i];
      first = false;
    }
    labels.push_back(label + "}");
  }
  OrderRelation order(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) order[s][t] = (s & ~t) == 0;
  return validate_lattice(order, std::move(labels));
}

std::vector<Element> atoms(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (covers(lattice, lattice.bottom(), x)) out.push_back(x);
  }
  return out;
}

bool covers(const FiniteLattice& lattice, Element x, Element y) {
  if (!lattice.less(x, y)) return false;
  for (Element z = 0; z < lattice.size(); ++z) {
    if (lattice.less(x, z) && lattice.less(z, y)) return false;
  }
  return true;
}

std::vector<std::pair<Element, Element>> cover_pairs(const FiniteLattice& lattice) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < lattice.size(); ++x)
    for (Element y = 0; y < lattice.size(); ++y)
      if (covers(lattice, x, y)) out.emplace_back(x, y);
  return out;
}

std::size_t height(const FiniteLattice& lattice) { return ranks(lattice)[lattice.top()]; }

std::vector<Element> xi(const FiniteLattice& lattice, Element x) {
  std::vector<Element> out;
  for (Element a : atoms(lattice)) {
    if (lattice.leq(a, x)) out.push_back(a);
  }
  return out;
}

std::optional<Element> non_atomistic_element(const FiniteLattice& lattice) {
  const auto at = atoms(lattice);
  for (Element x = 0; x < lattice.size(); ++x) {
    std::vector<Element> below;
    for (Element a : at)
      if (lattice.leq(a, x)) below.push_back(a);
    if (lattice.join_all(below) != x) return x;
  }
  return std::nullopt;
}

bool is_atomistic(const FiniteLattice& lattice) { return !non_atomistic_element(lattice).has_value(); }

namespace {

template <class Visit>
void scan_semimodular(const FiniteLattice& lattice, Visit&& visit) {
  const std::size_t n = lattice.size();
  if (n < 5) return;
  const auto cov = cover_table(lattice);
  for (Element a = n; a-- > 0;) {
    for (Element b = n; b-- > 0;) {
      if (!lattice.less(b, a)) continue;
      for (Element c = n; c-- > 0;) {
        if (!lattice.less(c, b)) continue;
        for (Element d = n; d-- > 0;) {
          if (!lattice.less(d, a)) continue;
          const Element e = lattice.meet(b, d);
          if (!lattice.less(e, c) || !cov[e * n + d]) continue;
          if (lattice.meet(c, d) != e || lattice.join(b, d) != a || lattice.join(c, d) != a) continue;
          if (!visit(SemimodularViolation{a, b, c, d, e})) return;
        }
      }
    }
  }
}

}  // namespace

std::optional<SemimodularViolation> semimodular_violation(const FiniteLattice& lattice) {
  std::optional<SemimodularViolation> found;
  scan_semimodular(lattice, [&](const SemimodularViolation& v) {
    found = v;
    return false;
  });
  return found;
}

std::vector<SemimodularViolation> all_semimodular_violations(const FiniteLattice& lattice) {
  std::vector<SemimodularViolation> out;
  scan_semimodular(lattice, [&](const SemimodularViolation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool is_semimodular(const FiniteLattice& lattice) { return !semimodular_violation(lattice).has_value(); }

bool is_cover_semimodular(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  const auto cov = cover_table(lattice);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element m = lattice.meet(x, y);
      if (cov[m * n + x] && !cov[y * n + lattice.join(x, y)]) return false;
    }
  return true;
}

bool is_geometric(const FiniteLattice& lattice) { return is_atomistic(lattice) && is_semimodular(lattice); }

bool is_boolean_lattice(const FiniteLattice& lattice) {
  if (!is_atomistic(lattice)) return false;
  const auto at = atoms(lattice);
  if (at.size() >= 63 || lattice.size() != (std::size_t{1} << at.size())) return false;
  std::set<std::vector<Element>> images;
  for (Element x = 0; x < lattice.size(); ++x) images.insert(xi(lattice, x));
  return images.size() == lattice.size();
}

namespace {

struct ElementProfile {
  std::size_t down = 0, up = 0, rank = 0, corank = 0, lower_covers = 0, upper_covers = 0;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<ElementProfile> out(n);
  const auto rank = ranks(lattice);
  const auto cov = cover_table(lattice);
  for (Element x = 0; x < n; ++x) {
    out[x].rank = rank[x];
    for (Element y = 0; y < n; ++y) {
      if (lattice.leq(y, x)) ++out[x].down;
      if (lattice.leq(x, y)) ++out[x].up;
      if (cov[y * n + x]) ++out[x].lower_covers;
      if (cov[x * n + y]) ++out[x].upper_covers;
    }
  }
  // Corank: longest chain from x up to top.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return out[a].up < out[b].up; });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lattice.less(order[i], order[j]))
        out[order[i]].corank = std::max(out[order[i]].corank, out[order[j]].corank + 1);
  return out;
}

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b, const std::vector<ElementProfile>& pa,
                const std::vector<ElementProfile>& pb, std::vector<Element>& order, std::size_t pos,
                std::vector<Element>& map, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  const Element x = order[pos];
  for (Element y = 0; y < b.size(); ++y) {
    if (used[y] || pa[x] != pb[y]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pos && ok; ++i) {
      const Element u = order[i];
      ok = a.leq(u, x) == b.leq(map[u], y) && a.leq(x, u) == b.leq(y, map[u]);
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend_iso(a, b, pa, pb, order, pos + 1, map, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<LatticeIso> lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto pa = profiles(a);
  const auto pb = profiles(b);
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  // Assign rarer profiles first; ties broken bottom-up by rank.
  std::vector<Element> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  auto multiplicity = [&](Element x) { return std::count(sa.begin(), sa.end(), pa[x]); };
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
    const auto mx = multiplicity(x), my = multiplicity(y);
    if (mx != my) return mx < my;
    return pa[x].rank < pa[y].rank;
  });
  std::vector<Element> map(a.size(), 0);
  std::vector<bool> used(b.size(), false);
  if (!extend_iso(a, b, pa, pb, order, 0, map, used)) return std::nullopt;
  return LatticeIso{std::move(map)};
}

bool is_lattice_iso(const FiniteLattice& a, const FiniteLattice& b, const LatticeIso& iso) {
  if (a.size() != b.size() || iso.map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Element y : iso.map) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(iso.map[x], iso.map[y])) return false;
  return true;
}

Classification classify(const FiniteLattice& lattice) {
  Classification c;
  c.size = lattice.size();
  c.atoms = atoms(lattice);
  c.height = height(lattice);
  c.atomistic = is_atomistic(lattice);
  c.semimodular_violation = semimodular_violation(lattice);
  c.cover_semimodular = is_cover_semimodular(lattice);
  c.geometric = c.atomistic && !c.semimodular_violation;
  c.boolean = is_boolean_lattice(lattice);
  return c;
}

namespace {

// Strict order among the inner elements, relabelled by `perm`, packed into a
// k*k bit code. The minimum over all permutations is a canonical form.
std::uint64_t inner_code(const std::vector<std::vector<bool>>& strict, const std::vector<std::size_t>& perm) {
  const std::size_t k = perm.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      code <<= 1;
      if (strict[perm[i]][perm[j]]) code |= 1U;
    }
  return code;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(std::size_t max_size, const Limits& limits) {
  limits.check(max_size, Limits::kMaxEnumeratedLatticeSize, "lattice enumeration size");
  if (max_size > 10) throw Error(ErrorCode::kLimitExceeded, "lattice enumeration is capped at 10 elements");

  std::vector<FiniteLattice> out;
  if (max_size >= 1) out.push_back(chain_lattice(1));
  if (max_size >= 2) out.push_back(chain_lattice(2));

  for (std::size_t n = 3; n <= max_size; ++n) {
    // Inner elements 0..k-1 sit strictly between bottom and top. Generating
    // only relations where i < j for related pairs i < j walks posets through
    // the linear extension 0, 1, ..., k-1; every poset has one.
    const std::size_t k = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);

    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, FiniteLattice>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::vector<bool>> strict(k, std::vector<bool>(k, false));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) strict[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < k && transitive; ++i)
        for (std::size_t j = 0; j < k && transitive; ++j)
          if (strict[i][j])
            for (std::size_t l = 0; l < k; ++l)
              if (strict[j][l] && !strict[i][l]) {
                transitive = false;
                break;
              }
      if (!transitive) continue;

      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t canon = ~std::uint64_t{0};
      do {
        canon = std::min(canon, inner_code(strict, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.count(canon)) continue;

      OrderRelation order(n, std::vector<bool>(n, false));
      for (std::size_t x = 0; x < n; ++x) {
        order[x][x] = true;
        order[0][x] = true;
        order[x][n - 1] = true;
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (strict[i][j]) order[i + 1][j + 1] = true;

      std::vector<std::string> labels{"0"};
      for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
      labels.push_back("1");
      try {
        found.emplace_back(canon, validate_lattice(order, std::move(labels)));
        seen.insert(canon);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotALattice) throw;
        seen.insert(canon);
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [code, lattice] : found) out.push_back(std::move(lattice));
  }
  return out;
}

}  // namespace flatlat
