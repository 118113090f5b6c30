#include "qcrystal/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "qcrystal/errors.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/quasi_array.hpp"

namespace qcrystal {

namespace {

constexpr std::size_t unmapped = std::numeric_limits<std::size_t>::max();

std::vector<std::pair<int, std::size_t>> labelled_out(const LabeledDigraph& g, std::size_t v) {
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t e : g.out_edges(v)) out.emplace_back(g.edges()[e].label, g.edges()[e].dst);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, std::size_t>> labelled_in(const LabeledDigraph& g, std::size_t v) {
  std::vector<std::pair<int, std::size_t>> in;
  for (std::size_t e : g.in_edges(v)) in.emplace_back(g.edges()[e].label, g.edges()[e].src);
  std::sort(in.begin(), in.end());
  return in;
}

bool has_repeated_label(const std::vector<std::pair<int, std::size_t>>& adj) {
  for (std::size_t k = 1; k < adj.size(); ++k) {
    if (adj[k].first == adj[k - 1].first) return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> rooted_labelled_map(const LabeledDigraph& g1,
                                                            const LabeledDigraph& g2,
                                                            std::size_t r1, std::size_t r2) {
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size()) return std::nullopt;
  std::vector<std::size_t> fwd(g1.size(), unmapped), back(g2.size(), unmapped);
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  auto bind = [&](std::size_t a, std::size_t b) {
    if (fwd[a] == unmapped && back[b] == unmapped) {
      fwd[a] = b;
      back[b] = a;
      queue.emplace_back(a, b);
      return true;
    }
    return fwd[a] == b;
  };
  bind(r1, r2);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (int dir = 0; dir < 2; ++dir) {
      auto adj_a = dir == 0 ? labelled_out(g1, a) : labelled_in(g1, a);
      auto adj_b = dir == 0 ? labelled_out(g2, b) : labelled_in(g2, b);
      if (has_repeated_label(adj_a) || has_repeated_label(adj_b)) {
        throw StructureError("labelled isomorphism needs at most one edge per label and direction");
      }
      if (adj_a.size() != adj_b.size()) return std::nullopt;
      for (std::size_t k = 0; k < adj_a.size(); ++k) {
        if (adj_a[k].first != adj_b[k].first) return std::nullopt;
        if (!bind(adj_a[k].second, adj_b[k].second)) return std::nullopt;
      }
    }
  }
  if (std::find(fwd.begin(), fwd.end(), unmapped) != fwd.end()) return std::nullopt;
  return fwd;
}

QuasiArray quasi_array_of(const LabeledDigraph& g, std::size_t v) {
  switch (g.kind()) {
    case GraphKind::quasi_array:
      return std::get<QuasiArray>(g.vertex(v));
    case GraphKind::hypo:
      return genqa(vertex_quasi_ribbon(g, v));
    case GraphKind::plac:
      break;
  }
  throw ParameterError("transport maps need hypo or quasi_array graphs");
}

std::map<QuasiRibbonTableau, std::size_t> index_by_quasi_ribbon(const LabeledDigraph& g) {
  std::map<QuasiRibbonTableau, std::size_t> index;
  for (std::size_t v = 0; v < g.size(); ++v) index.emplace(vertex_quasi_ribbon(g, v), v);
  return index;
}

std::vector<std::size_t> sorted_degrees(const LabeledDigraph& g, bool out) {
  std::vector<std::size_t> deg(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    deg[v] = out ? g.out_edges(v).size() : g.in_edges(v).size();
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace

IsoMode parse_iso_mode(const std::string& text) {
  if (text == "labelled_weighted" || text == "labelled-weighted") return IsoMode::labelled_weighted;
  if (text == "labelled") return IsoMode::labelled;
  if (text == "unlabelled") return IsoMode::unlabelled;
  throw ParameterError("unknown isomorphism mode '" + text + "'");
}

bool is_isomorphism(const LabeledDigraph& g1, const LabeledDigraph& g2,
                    const std::vector<std::size_t>& map, bool labelled, bool weighted) {
  if (map.size() != g1.size() || g1.size() != g2.size()) return false;
  if (g1.edges().size() != g2.edges().size()) return false;
  std::vector<bool> hit(g2.size(), false);
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] >= g2.size() || hit[map[v]]) return false;
    hit[map[v]] = true;
    if (weighted && vertex_evaluation(g1.vertex(v)) != vertex_evaluation(g2.vertex(map[v]))) {
      return false;
    }
  }
  // Edges compared as multisets so parallel edges with different labels
  // count correctly in the unlabelled case.
  std::map<Edge, int> balance;
  for (const Edge& e : g1.edges()) {
    ++balance[{map[e.src], map[e.dst], labelled ? e.label : 0}];
  }
  for (const Edge& e : g2.edges()) {
    if (--balance[{e.src, e.dst, labelled ? e.label : 0}] < 0) return false;
  }
  return true;
}

std::optional<IsoWitness> isomorphic(const LabeledDigraph& g1, const LabeledDigraph& g2,
                                     IsoMode mode,
                                     std::optional<std::pair<std::size_t, std::size_t>> roots) {
  if (g1.empty() || g2.empty()) {
    if (g1.empty() && g2.empty()) return IsoWitness{{}, mode != IsoMode::unlabelled,
                                                    mode == IsoMode::labelled_weighted};
    return std::nullopt;
  }
  if (mode == IsoMode::unlabelled) {
    if (g1.kind() == GraphKind::plac || g2.kind() == GraphKind::plac) {
      // No transport map exists for crystal components; fall back to the
      // labelled decision, which certifies an unlabelled isomorphism too.
      auto w = isomorphic(g1, g2, IsoMode::labelled, roots);
      if (w) {
        w->labelled = false;
        return w;
      }
      return std::nullopt;
    }
    auto map = transport_map(g1, g2);
    if (!map) return std::nullopt;
    return verify_candidate(g1, g2, *map);
  }
  auto [r1, r2] = roots ? *roots : std::pair{highest_weight(g1), highest_weight(g2)};
  bool weighted = mode == IsoMode::labelled_weighted;
  if (weighted && vertex_evaluation(g1.vertex(r1)) != vertex_evaluation(g2.vertex(r2))) {
    return std::nullopt;
  }
  auto map = rooted_labelled_map(g1, g2, r1, r2);
  if (!map || !is_isomorphism(g1, g2, *map, true, weighted)) return std::nullopt;
  return IsoWitness{std::move(*map), true, weighted};
}

std::optional<IsoWitness> verify_candidate(const LabeledDigraph& g1, const LabeledDigraph& g2,
                                           const std::vector<std::size_t>& map) {
  if (!is_isomorphism(g1, g2, map, false, false)) return std::nullopt;
  return IsoWitness{map, false, false};
}

std::optional<std::vector<std::size_t>> transport_map(const LabeledDigraph& from,
                                                      const LabeledDigraph& to) {
  if (from.empty() || to.empty()) {
    if (from.empty() && to.empty()) return std::vector<std::size_t>{};
    return std::nullopt;
  }
  std::vector<std::size_t> map(from.size());
  if (to.kind() == GraphKind::quasi_array) {
    for (std::size_t v = 0; v < from.size(); ++v) {
      auto hit = to.find(Vertex(quasi_array_of(from, v)));
      if (!hit) return std::nullopt;
      map[v] = *hit;
    }
    return map;
  }
  if (to.kind() != GraphKind::hypo) {
    throw ParameterError("transport maps need hypo or quasi_array graphs");
  }
  auto index = index_by_quasi_ribbon(to);
  Composition tau = vertex_quasi_ribbon(to, 0).shape();
  for (std::size_t v = 0; v < from.size(); ++v) {
    QuasiArray q = quasi_array_of(from, v);
    if (q.size() != tau.weight()) return std::nullopt;
    auto hit = index.find(pickqrt(q, tau));
    if (hit == index.end()) return std::nullopt;
    map[v] = hit->second;
  }
  return map;
}

std::optional<std::string> non_isomorphism_certificate(const LabeledDigraph& g1,
                                                       const LabeledDigraph& g2) {
  if (g1.size() != g2.size()) {
    return "vertex counts differ: " + std::to_string(g1.size()) + " vs " +
           std::to_string(g2.size());
  }
  if (g1.edges().size() != g2.edges().size()) {
    return "edge counts differ: " + std::to_string(g1.edges().size()) + " vs " +
           std::to_string(g2.edges().size());
  }
  if (max_outdegree(g1) != max_outdegree(g2)) {
    return "max outdegrees differ: " + std::to_string(max_outdegree(g1)) + " vs " +
           std::to_string(max_outdegree(g2));
  }
  if (sorted_degrees(g1, true) != sorted_degrees(g2, true)) return "outdegree sequences differ";
  if (sorted_degrees(g1, false) != sorted_degrees(g2, false)) return "indegree sequences differ";
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> schutzenberger_symmetry(const LabeledDigraph& g) {
  if (g.kind() != GraphKind::hypo) throw ParameterError("Schutzenberger symmetry needs a hypo graph");
  if (g.empty()) return std::vector<std::size_t>{};
  auto index = index_by_quasi_ribbon(g);
  Composition sigma = vertex_quasi_ribbon(g, 0).shape();
  std::vector<std::size_t> map(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    Word flipped = schutzenberger(std::get<Word>(g.vertex(v)), g.rank());
    auto hit = index.find(direct_transport(hypoplactic_insert(flipped), sigma));
    if (hit == index.end()) return std::nullopt;
    map[v] = hit->second;
  }
  // Reversing every edge of g must give g back under the map.
  LabeledDigraph reversed(g.kind(), g.rank());
  for (const Vertex& v : g.vertices()) reversed.add_vertex(v);
  for (const Edge& e : g.edges()) reversed.add_edge(e.dst, e.src, e.label);
  if (!is_isomorphism(reversed, g, map, false, false)) return std::nullopt;
  if (map[highest_weight(g)] != lowest_weight(g)) return std::nullopt;
  return map;
}

}  // namespace qcrystal
