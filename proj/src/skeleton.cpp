#include "qcrystal/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/insertion.hpp"

namespace qcrystal {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::set<std::size_t>> undirected_adjacency(const SkeletonGraph& skel) {
  std::vector<std::set<std::size_t>> adj(skel.vertices.size());
  for (const Edge& e : skel.edges) {
    if (e.src == e.dst) continue;
    adj[e.src].insert(e.dst);
    adj[e.dst].insert(e.src);
  }
  return adj;
}

int max_parts(const SkeletonGraph& skel) {
  int best = 0;
  for (const auto& s : skel.vertices) {
    best = std::max(best, static_cast<int>(descent_composition(s).length()));
  }
  return best;
}

}  // namespace

std::optional<std::size_t> SkeletonGraph::index_of(const StandardYoungTableau& s) const {
  auto it = std::find(vertices.begin(), vertices.end(), s);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

int min_skeleton_rank(const Partition& lambda) {
  int best = 0;
  for (const auto& s : enumerate_syt(lambda)) {
    best = std::max(best, static_cast<int>(descent_composition(s).length()));
  }
  return best;
}

SkeletonGraph skeleton(const Partition& lambda, std::optional<int> n, BuildOptions opts) {
  if (lambda.length() == 0) throw ParameterError("skeleton needs a nonempty shape");
  int rank = n.value_or(lambda.weight());
  int needed = min_skeleton_rank(lambda);
  if (rank < needed) {
    throw ParameterError("skeleton of " + lambda.str() + " needs rank at least " +
                         std::to_string(needed) + ", got " + std::to_string(rank));
  }

  SkeletonGraph skel;
  skel.lambda = lambda;
  skel.rank_used = rank;
  skel.vertices = enumerate_syt(lambda);
  std::map<StandardYoungTableau, std::size_t> syt_index;
  for (std::size_t k = 0; k < skel.vertices.size(); ++k) syt_index.emplace(skel.vertices[k], k);

  LabeledDigraph g = build_shape_component(lambda, rank, opts);
  std::vector<bool> strict(g.edges().size());
  UnionFind uf(g.size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    strict[k] = is_strict_action(std::get<Word>(g.vertex(e.src)), e.label);
    if (!strict[k]) uf.unite(e.src, e.dst);
  }

  // Each quasi-crystal component is named by the standardization of the
  // Young tableau of its highest-weight word.
  std::map<std::size_t, std::size_t> component_syt;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool source = std::none_of(g.in_edges(v).begin(), g.in_edges(v).end(),
                               [&](std::size_t e) { return !strict[e]; });
    if (!source) continue;
    std::size_t root = uf.find(v);
    if (component_syt.count(root)) {
      throw StructureError("quasi-crystal component with two highest-weight words");
    }
    auto s = standardize(schensted_insert(std::get<Word>(g.vertex(v))));
    component_syt.emplace(root, syt_index.at(s));
  }
  std::vector<std::size_t> owner(skel.vertices.size(), g.size());
  for (const auto& [root, s] : component_syt) {
    if (owner[s] != g.size()) {
      throw StructureError("two quasi-crystal components share the tableau " +
                           vertex_name(skel.vertices[s]));
    }
    owner[s] = root;
  }
  for (std::size_t s = 0; s < owner.size(); ++s) {
    if (owner[s] == g.size()) {
      throw StructureError("no quasi-crystal component for " + vertex_name(skel.vertices[s]));
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto s = standardize(schensted_insert(std::get<Word>(g.vertex(v))));
    if (syt_index.at(s) != component_syt.at(uf.find(v))) {
      throw StructureError("standardization varies inside a quasi-crystal component");
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, int> best;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (!strict[k]) continue;
    const Edge& e = g.edges()[k];
    std::size_t a = component_syt.at(uf.find(e.src));
    std::size_t b = component_syt.at(uf.find(e.dst));
    if (a == b) continue;
    auto [it, fresh] = best.try_emplace({a, b}, e.label);
    if (!fresh) it->second = std::min(it->second, e.label);
  }
  for (const auto& [pair, label] : best) skel.edges.push_back({pair.first, pair.second, label});
  return skel;
}

SkeletonGraph h_subgraph(const SkeletonGraph& skel, int s) {
  SkeletonGraph h;
  h.lambda = skel.lambda;
  h.rank_used = skel.rank_used;
  std::vector<std::size_t> remap(skel.vertices.size(), skel.vertices.size());
  for (std::size_t v = 0; v < skel.vertices.size(); ++v) {
    if (static_cast<int>(descent_composition(skel.vertices[v]).length()) != s) continue;
    remap[v] = h.vertices.size();
    h.vertices.push_back(skel.vertices[v]);
  }
  for (const Edge& e : skel.edges) {
    if (remap[e.src] == skel.vertices.size() || remap[e.dst] == skel.vertices.size()) continue;
    h.edges.push_back({remap[e.src], remap[e.dst], e.label});
  }
  return h;
}

int parity(const Composition& dc) {
  int sum = 0;
  for (std::size_t k = 1; k < dc.length(); k += 2) sum += dc[k];
  return sum % 2;
}

int parity(const StandardYoungTableau& s) { return parity(descent_composition(s)); }

bool check_even_cycles(const SkeletonGraph& skel, int s) {
  SkeletonGraph h = h_subgraph(skel, s);
  std::vector<int> colour(h.vertices.size());
  for (std::size_t v = 0; v < h.vertices.size(); ++v) colour[v] = parity(h.vertices[v]);
  return std::all_of(h.edges.begin(), h.edges.end(), [&](const Edge& e) {
    return e.src == e.dst || colour[e.src] != colour[e.dst];
  });
}

std::string to_string(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::singleton:
      return "singleton";
    case ComponentShape::chain:
      return "chain";
    case ComponentShape::tree:
      return "tree";
    case ComponentShape::cycle_bearing:
      return "cycle-bearing";
  }
  return "?";
}

std::vector<ComponentSummary> undirected_components(const SkeletonGraph& skel) {
  auto adj = undirected_adjacency(skel);
  std::vector<bool> seen(adj.size(), false);
  std::vector<ComponentSummary> out;
  for (std::size_t start = 0; start < adj.size(); ++start) {
    if (seen[start]) continue;
    ComponentSummary c;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t degree_sum = 0;
    bool low_degree = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      degree_sum += adj[v].size();
      low_degree = low_degree && adj[v].size() <= 2;
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.undirected_edges = degree_sum / 2;
    if (c.vertices.size() == 1) {
      c.shape = ComponentShape::singleton;
    } else if (c.undirected_edges + 1 == c.vertices.size()) {
      c.shape = low_degree ? ComponentShape::chain : ComponentShape::tree;
    } else {
      c.shape = ComponentShape::cycle_bearing;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_union_of_chains(const SkeletonGraph& skel) {
  auto comps = undirected_components(skel);
  return std::all_of(comps.begin(), comps.end(), [](const ComponentSummary& c) {
    return c.shape == ComponentShape::singleton || c.shape == ComponentShape::chain;
  });
}

std::string vertex_name(const StandardYoungTableau& s) { return column_reading(s.tableau()).str(); }

std::string skeleton_report(const SkeletonGraph& skel) {
  std::ostringstream os;
  os << "skeleton " << skel.lambda.str() << " rank " << skel.rank_used << ": "
     << skel.vertices.size() << " vertices, " << skel.edges.size() << " edges\n";
  for (int s = 1; s <= max_parts(skel); ++s) {
    SkeletonGraph h = h_subgraph(skel, s);
    os << "H_" << s << ": " << h.vertices.size() << " vertices";
    if (!h.vertices.empty()) {
      os << "; components:";
      for (const auto& c : undirected_components(h)) {
        os << ' ' << to_string(c.shape) << '(' << c.vertices.size() << ')';
      }
      os << "; parity bipartite: " << (check_even_cycles(skel, s) ? "yes" : "no");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcrystal
