#include "qcrystal/graph.hpp"

#include <algorithm>
#include <thread>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/insertion.hpp"

namespace qcrystal {

namespace {

struct Step {
  int label;
  bool forward;
  Vertex target;
};

using Expander = std::vector<Step> (*)(const Vertex&, int rank);

std::vector<Step> expand_plac(const Vertex& v, int n) {
  const Word& w = std::get<Word>(v);
  std::vector<Step> steps;
  for (int i = 1; i < n; ++i) {
    if (auto f = kashiwara_f(w, i)) steps.push_back({i, true, *f});
  }
  for (int i = 1; i < n; ++i) {
    if (auto e = kashiwara_e(w, i)) steps.push_back({i, false, *e});
  }
  return steps;
}

std::vector<Step> expand_hypo(const Vertex& v, int n) {
  const Word& w = std::get<Word>(v);
  std::vector<Step> steps;
  for (int i = 1; i < n; ++i) {
    if (auto f = quasi_kashiwara_f(w, i)) steps.push_back({i, true, *f});
  }
  for (int i = 1; i < n; ++i) {
    if (auto e = quasi_kashiwara_e(w, i)) steps.push_back({i, false, *e});
  }
  return steps;
}

std::vector<Step> expand_delta(const Vertex& v, int n) {
  const QuasiArray& q = std::get<QuasiArray>(v);
  std::vector<Step> steps;
  for (int k = 1; k <= q.size(); ++k) {
    auto d = td(q, k);
    if (d && d->in_rank(n)) steps.push_back({k, true, *d});
  }
  for (int k = 1; k <= q.size(); ++k) {
    if (auto c = tc(q, k)) steps.push_back({k, false, *c});
  }
  return steps;
}

void close_under(LabeledDigraph& g, Vertex seed, Expander expand, unsigned threads) {
  g.add_vertex(std::move(seed));
  std::size_t begin = 0;
  while (begin < g.size()) {
    std::size_t end = g.size();
    std::vector<std::vector<Step>> steps(end - begin);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t v = lo; v < hi; ++v) steps[v - begin] = expand(g.vertex(v), g.rank());
    };
    std::size_t count = end - begin;
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count / 64)));
    if (workers <= 1) {
      work(begin, end);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (count + workers - 1) / workers;
      for (unsigned t = 0; t < workers; ++t) {
        std::size_t lo = begin + t * chunk;
        std::size_t hi = std::min(end, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t v = begin; v < end; ++v) {
      for (Step& step : steps[v - begin]) {
        auto [target, fresh] = g.add_vertex(std::move(step.target));
        if (step.forward) g.add_edge(v, target, step.label);
      }
    }
    begin = end;
  }
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::plac:
      return "plac";
    case GraphKind::hypo:
      return "hypo";
    case GraphKind::quasi_array:
      return "quasi_array";
  }
  return "?";
}

GraphKind parse_graph_kind(const std::string& text) {
  if (text == "plac") return GraphKind::plac;
  if (text == "hypo") return GraphKind::hypo;
  if (text == "quasi_array") return GraphKind::quasi_array;
  throw ParameterError("unknown graph kind '" + text + "'");
}

std::string vertex_key(const Vertex& v) {
  if (const Word* w = std::get_if<Word>(&v)) return w->str();
  const QuasiArray& q = std::get<QuasiArray>(v);
  return "qa" + Composition(q.first_row()).str();
}

Evaluation vertex_evaluation(const Vertex& v) {
  if (const Word* w = std::get_if<Word>(&v)) return evaluation(*w);
  return std::get<QuasiArray>(v).evaluation();
}

std::optional<std::size_t> LabeledDigraph::find(const Vertex& v) const {
  return find_key(vertex_key(v));
}

std::optional<std::size_t> LabeledDigraph::find_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, bool> LabeledDigraph::add_vertex(Vertex v) {
  auto [it, fresh] = index_.try_emplace(vertex_key(v), vertices_.size());
  if (fresh) {
    vertices_.push_back(std::move(v));
    out_.emplace_back();
    in_.emplace_back();
  }
  return {it->second, fresh};
}

bool LabeledDigraph::add_edge(std::size_t src, std::size_t dst, int label) {
  for (std::size_t e : out_.at(src)) {
    if (edges_[e].dst == dst && edges_[e].label == label) return false;
  }
  in_.at(dst).push_back(edges_.size());
  out_[src].push_back(edges_.size());
  edges_.push_back({src, dst, label});
  return true;
}

LabeledDigraph build_component(const Word& seed, GraphKind kind, int n, BuildOptions opts) {
  if (kind == GraphKind::quasi_array) {
    throw ParameterError("word components are plac or hypo; use build_delta for quasi-arrays");
  }
  if (n < 1) throw ParameterError("rank must be positive");
  check_rank(seed, n);
  LabeledDigraph g(kind, n);
  close_under(g, Word(std::vector<Letter>(seed.letters().begin(), seed.letters().end())),
              kind == GraphKind::plac ? expand_plac : expand_hypo, opts.threads);
  return g;
}

LabeledDigraph build_shape_component(const Composition& sigma, int n, BuildOptions opts) {
  if (static_cast<int>(sigma.length()) > n) return LabeledDigraph(GraphKind::hypo, n);
  return build_component(column_reading(highest_weight_quasi_ribbon(sigma)), GraphKind::hypo, n,
                         opts);
}

LabeledDigraph build_shape_component(const Partition& lambda, int n, BuildOptions opts) {
  if (static_cast<int>(lambda.length()) > n) return LabeledDigraph(GraphKind::plac, n);
  return build_component(column_reading(highest_weight_tableau(lambda)), GraphKind::plac, n, opts);
}

LabeledDigraph build_delta(int n, int m, BuildOptions opts) {
  if (n < 1 || m < 1) throw ParameterError("rank and size must be positive");
  LabeledDigraph g(GraphKind::quasi_array, n);
  close_under(g, QuasiArray(std::vector<Letter>(static_cast<std::size_t>(m), 1)), expand_delta,
              opts.threads);
  return g;
}

std::size_t highest_weight(const LabeledDigraph& g) {
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.in_edges(v).empty()) continue;
    if (found) throw StructureError("component has more than one highest-weight vertex");
    found = v;
  }
  if (!found) throw StructureError("component has no highest-weight vertex");
  return *found;
}

std::size_t lowest_weight(const LabeledDigraph& g) {
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.out_edges(v).empty()) continue;
    if (found) throw StructureError("component has more than one lowest-weight vertex");
    found = v;
  }
  if (!found) throw StructureError("component has no lowest-weight vertex");
  return *found;
}

std::size_t max_outdegree(const LabeledDigraph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) best = std::max(best, g.out_edges(v).size());
  return best;
}

QuasiRibbonTableau vertex_quasi_ribbon(const LabeledDigraph& g, std::size_t v) {
  return hypoplactic_insert(std::get<Word>(g.vertex(v)));
}

std::vector<std::vector<int>> polytope_coordinates(const LabeledDigraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.size());
  for (const Vertex& v : g.vertices()) {
    if (const QuasiArray* q = std::get_if<QuasiArray>(&v)) {
      out.push_back(q->first_row());
    } else if (g.kind() == GraphKind::hypo) {
      out.push_back(hypoplactic_insert(std::get<Word>(v)).entries());
    } else {
      std::vector<int> point;
      for (const auto& row : schensted_insert(std::get<Word>(v)).rows()) {
        point.insert(point.end(), row.begin(), row.end());
      }
      out.push_back(std::move(point));
    }
  }
  return out;
}

}  // namespace qcrystal
