#include "flatlat/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

#include "flatlat/error.hpp"

namespace flatlat {
namespace {

void check_vertex_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorCode::kValidationError, "a complex needs at least one vertex");
  if (labels.size() > kMaxIndexSetSize) {
    throw Error(ErrorCode::kLimitExceeded, "complexes are limited to 64 vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    const bool bad = l.empty() || std::any_of(l.begin(), l.end(), [](unsigned char c) {
                       return std::isspace(c) || c == '#';
                     });
    if (bad) throw Error(ErrorCode::kValidationError, "invalid vertex label '" + l + "'");
    if (!seen.insert(l).second) throw Error(ErrorCode::kValidationError, "duplicate vertex '" + l + "'");
  }
}

// Vertex invariant for isomorphism pruning: loop flag plus the sorted sizes
// of the facets through the vertex.
std::vector<std::size_t> vertex_profile(const SimplicialComplex& c, Vertex v) {
  std::vector<std::size_t> p{c.is_face(IndexSet::singleton(v)) ? 1U : 0U};
  for (IndexSet f : c.facets())
    if (f.contains(v)) p.push_back(f.size());
  std::sort(p.begin() + 1, p.end());
  return p;
}

bool extend_complex_iso(const SimplicialComplex& a, const SimplicialComplex& b,
                        const std::vector<std::vector<std::size_t>>& pa,
                        const std::vector<std::vector<std::size_t>>& pb, const std::set<IndexSet>& facets_b,
                        Vertex v, std::vector<Vertex>& map, std::vector<bool>& used) {
  if (v == a.vertex_count()) {
    for (IndexSet f : a.facets()) {
      IndexSet image;
      f.for_each([&](std::size_t u) { image = image.with(map[u]); });
      if (!facets_b.count(image)) return false;
    }
    return true;
  }
  for (Vertex w = 0; w < b.vertex_count(); ++w) {
    if (used[w] || pa[v] != pb[w]) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) {
      ok = a.is_face(IndexSet::singleton(u).with(v)) == b.is_face(IndexSet::singleton(map[u]).with(w));
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_complex_iso(a, b, pa, pb, facets_b, v + 1, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<Vertex> SimplicialComplex::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool SimplicialComplex::is_face(IndexSet x) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](IndexSet f) { return x.subset_of(f); });
}

std::vector<IndexSet> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  std::vector<IndexSet> out;
  for (IndexSet f : facets_) {
    for_each_subset(f, [&](IndexSet s) {
      if (seen.insert(s.bits()).second) out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

std::string SimplicialComplex::format(IndexSet x) const {
  std::string out = "{";
  bool first = true;
  x.for_each([&](std::size_t v) {
    if (!first) out += ",";
    out += labels_[v];
    first = false;
  });
  return out + "}";
}

SimplicialComplex from_faces(std::vector<std::string> vertices, std::span<const IndexSet> faces) {
  check_vertex_labels(vertices);
  const IndexSet ground = IndexSet::range(vertices.size());
  std::vector<IndexSet> sorted(faces.begin(), faces.end());
  for (IndexSet f : sorted) {
    if (!f.subset_of(ground)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "face uses vertex index " + std::to_string((f - ground).first()) + " outside the ground set");
    }
  }
  sorted.push_back(IndexSet{});
  // Largest first, so a face is maximal iff no kept face contains it.
  std::sort(sorted.begin(), sorted.end(), [](IndexSet a, IndexSet b) { return BySizeThenBits{}(b, a); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<IndexSet> facets;
  for (IndexSet f : sorted) {
    if (std::none_of(facets.begin(), facets.end(), [&](IndexSet g) { return f.subset_of(g); })) {
      facets.push_back(f);
    }
  }
  std::sort(facets.begin(), facets.end(), BySizeThenBits{});

  SimplicialComplex c;
  c.labels_ = std::move(vertices);
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex from_faces(std::vector<std::string> vertices,
                             const std::vector<std::vector<std::string>>& faces) {
  check_vertex_labels(vertices);
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < vertices.size(); ++v) index[vertices[v]] = v;
  std::vector<IndexSet> sets;
  for (const auto& face : faces) {
    IndexSet s;
    for (const auto& l : face) {
      auto it = index.find(l);
      if (it == index.end()) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + l + "'");
      s = s.with(it->second);
    }
    sets.push_back(s);
  }
  return from_faces(std::move(vertices), sets);
}

SimplicialComplex restriction(const SimplicialComplex& complex, IndexSet w) {
  w = w & complex.ground();
  if (w.empty()) throw Error(ErrorCode::kEmptyRestriction, "restriction to the empty set");
  std::vector<std::string> labels;
  w.for_each([&](std::size_t v) { labels.push_back(complex.label(v)); });
  std::vector<IndexSet> faces;
  for (IndexSet f : complex.facets()) faces.push_back(compress(f & w, w));
  return from_faces(std::move(labels), faces);
}

ProperPart proper_part(const SimplicialComplex& complex) {
  IndexSet keep;
  for (Vertex v = 0; v < complex.vertex_count(); ++v)
    if (complex.is_face(IndexSet::singleton(v))) keep = keep.with(v);
  if (keep.empty()) throw Error(ErrorCode::kAllLoops, "every vertex is a loop");
  return ProperPart{restriction(complex, keep), complex.ground() - keep};
}

std::optional<ExchangeViolation> exchange_violation(const SimplicialComplex& complex) {
  const auto faces = complex.faces();
  for (IndexSet larger : faces) {
    if (larger.empty()) continue;
    for (IndexSet smaller : faces) {
      if (smaller.size() + 1 != larger.size()) continue;
      bool augmentable = false;
      (larger - smaller).for_each([&](std::size_t i) {
        if (!augmentable && complex.is_face(smaller.with(i))) augmentable = true;
      });
      if (!augmentable) return ExchangeViolation{larger, smaller};
    }
  }
  return std::nullopt;
}

bool is_matroid(const SimplicialComplex& complex) { return !exchange_violation(complex).has_value(); }

int dimension(const SimplicialComplex& complex) {
  std::size_t largest = 0;
  for (IndexSet f : complex.facets()) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool is_simple(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  if (n == 1) return complex.is_face(IndexSet::singleton(0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!complex.is_face(IndexSet::singleton(u).with(v))) return false;
  return true;
}

std::optional<ComplexIso> complex_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size()) return std::nullopt;
  std::vector<std::size_t> sizes_a, sizes_b;
  for (IndexSet f : a.facets()) sizes_a.push_back(f.size());
  for (IndexSet f : b.facets()) sizes_b.push_back(f.size());
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  std::vector<std::vector<std::size_t>> pa, pb;
  for (Vertex v = 0; v < a.vertex_count(); ++v) pa.push_back(vertex_profile(a, v));
  for (Vertex v = 0; v < b.vertex_count(); ++v) pb.push_back(vertex_profile(b, v));
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  const std::set<IndexSet> facets_b(b.facets().begin(), b.facets().end());
  std::vector<Vertex> map(a.vertex_count(), 0);
  std::vector<bool> used(b.vertex_count(), false);
  if (!extend_complex_iso(a, b, pa, pb, facets_b, 0, map, used)) return std::nullopt;
  return ComplexIso{std::move(map)};
}

SimplicialComplex uniform_complex(std::vector<std::string> vertices, std::size_t k) {
  const std::size_t n = vertices.size();
  if (n > kMaxIndexSetSize) throw Error(ErrorCode::kLimitExceeded, "complexes are limited to 64 vertices");
  std::vector<IndexSet> faces;
  if (k >= n) {
    faces.push_back(IndexSet::range(n));
  } else if (k > 0) {
    // Walk all k-subsets via Gosper's hack.
    const std::uint64_t ground = IndexSet::range(n).bits();
    std::uint64_t s = IndexSet::range(k).bits();
    while (true) {
      faces.emplace_back(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
      if (s & ~ground) break;
    }
  }
  return from_faces(std::move(vertices), faces);
}

}  // namespace flatlat
