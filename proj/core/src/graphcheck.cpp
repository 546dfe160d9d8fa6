#include "flatlat/graphcheck.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace flatlat {

SimpleGraph::SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxIndexSetSize) throw Error(ErrorCode::kLimitExceeded, "graphs are limited to 64 vertices");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    const bool bad = l.empty() || std::any_of(l.begin(), l.end(), [](unsigned char c) {
                       return std::isspace(c) || c == '#';
                     });
    if (bad) throw Error(ErrorCode::kValidationError, "invalid vertex label '" + l + "'");
    if (!seen.insert(l).second) throw Error(ErrorCode::kValidationError, "duplicate vertex '" + l + "'");
  }
  adjacency_.assign(labels_.size(), IndexSet{});
}

std::optional<std::size_t> SimpleGraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw Error(ErrorCode::kValidationError, "edge refers to unknown vertex");
  if (u == v) throw Error(ErrorCode::kValidationError, "self-loop at " + labels_[u]);
  adjacency_[u] = adjacency_[u].with(v);
  adjacency_[v] = adjacency_[v].with(u);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::string SimpleGraph::format(IndexSet w) const {
  std::string out = "{";
  bool first = true;
  w.for_each([&](std::size_t v) {
    if (!first) out += ",";
    out += labels_[v];
    first = false;
  });
  return out + "}";
}

SimpleGraph gamma_graph(const FiniteLattice& lattice) {
  const auto at = atoms(lattice);
  if (at.size() > kMaxIndexSetSize) throw Error(ErrorCode::kLimitExceeded, "more than 64 atoms");
  std::vector<std::string> labels;
  for (Element a : at) labels.push_back(lattice.label(a));
  SimpleGraph g(std::move(labels));
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = i + 1; j < at.size(); ++j)
      if (lattice.join(at[i], at[j]) == lattice.top()) g.add_edge(i, j);
  return g;
}

bool is_clique(const SimpleGraph& graph, IndexSet w) {
  bool ok = true;
  w.for_each([&](std::size_t v) {
    if (!(w.without(v)).subset_of(graph.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_superclique(const SimpleGraph& graph, IndexSet w) {
  if (w.size() < 2 || !w.subset_of(graph.vertices()) || !is_clique(graph, w)) return false;
  // An outside vertex adjacent to two members would see both ends of that pair.
  for (std::size_t c : (graph.vertices() - w).elements()) {
    if ((graph.neighbors(c) & w).size() >= 2) return false;
  }
  return true;
}

IndexSet edge_closure(const SimpleGraph& graph, std::size_t a, std::size_t b) {
  std::vector<std::size_t> order(graph.size());
  std::iota(order.begin(), order.end(), 0);
  return edge_closure(graph, a, b, order);
}

IndexSet edge_closure(const SimpleGraph& graph, std::size_t a, std::size_t b,
                      std::span<const std::size_t> priority) {
  IndexSet w = IndexSet::singleton(a).with(b);
  while (true) {
    bool grew = false;
    for (std::size_t v : priority) {
      if (w.contains(v) || (graph.neighbors(v) & w).size() < 2) continue;
      w = w.with(v);
      grew = true;
      break;
    }
    if (!grew) return w;
  }
}

std::vector<IndexSet> find_supercliques(const SimpleGraph& graph) {
  std::vector<IndexSet> out;
  for (auto [a, b] : graph.edges()) {
    // Any edge inside a superclique already found closes to that superclique.
    const IndexSet e = IndexSet::singleton(a).with(b);
    if (std::any_of(out.begin(), out.end(), [&](IndexSet s) { return e.subset_of(s); })) continue;
    const IndexSet c = edge_closure(graph, a, b);
    if (is_clique(graph, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> naive_supercliques(const SimpleGraph& graph, const Limits& limits) {
  limits.check(graph.size(), Limits::kMaxNaiveCliqueVertices, "vertex count for the naive superclique scan");
  std::vector<IndexSet> out;
  for_each_subset(graph.vertices(), [&](IndexSet w) {
    if (is_superclique(graph, w)) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Height3Decision realizable_height3(const FiniteLattice& lattice) {
  const std::size_t h = height(lattice);
  if (h != 3) throw Error(ErrorCode::kWrongHeight, "expected height 3, got " + std::to_string(h));
  Height3Decision d;
  d.atomistic = is_atomistic(lattice);
  if (!d.atomistic) return d;
  d.supercliques = find_supercliques(gamma_graph(lattice));
  d.realizable = d.supercliques.empty();
  return d;
}

}  // namespace flatlat
