// Acceptance run: one PASS/FAIL line per criterion, each with its own time
// limit. Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/isomorphism.hpp"
#include "qcrystal/qsym.hpp"
#include "qcrystal/quasi_array.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/skeleton.hpp"

using namespace qcrystal;

namespace {

// Collects the first few failures of one criterion.
struct Tally {
  long long checked = 0;
  long long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

std::vector<Word> words_of_length(int n, int lo, int hi) {
  std::vector<Word> out;
  for (int len = lo; len <= hi; ++len)
    for (const Word& w : all_words(n, static_cast<std::size_t>(len))) out.push_back(w);
  return out;
}

bool has_edge(const LabeledDigraph& g, const std::string& a, const std::string& b, int label) {
  auto s = g.find_key(a), d = g.find_key(b);
  if (!s || !d) return false;
  for (std::size_t e : g.out_edges(*s))
    if (g.edges()[e].dst == *d && g.edges()[e].label == label) return true;
  return false;
}

void figure_components(Tally& t) {
  auto h211 = build_component(Word::parse("211"), GraphKind::hypo, 3);
  auto h212 = build_component(Word::parse("212"), GraphKind::hypo, 3);
  auto p211 = build_component(Word::parse("211"), GraphKind::plac, 3);
  t.expect(dump(to_json(h211)) ==
               R"({"kind":"hypo","rank":3,"vertices":["211","311","312","322"],"edges":[{"src":0,"dst":1,"label":2},{"src":1,"dst":2,"label":1},{"src":2,"dst":3,"label":1}]})"
               "\n",
           "Gamma(hypo_3,211) JSON");
  t.expect(dump(to_json(h212)) ==
               R"({"kind":"hypo","rank":3,"vertices":["212","213","313","323"],"edges":[{"src":0,"dst":1,"label":2},{"src":1,"dst":2,"label":2},{"src":2,"dst":3,"label":1}]})"
               "\n",
           "Gamma(hypo_3,212) JSON");
  t.expect(dump(to_json(p211)) ==
               R"({"kind":"plac","rank":3,"vertices":["211","212","311","213","312","313","322","323"],"edges":[{"src":0,"dst":1,"label":1},{"src":0,"dst":2,"label":2},{"src":1,"dst":3,"label":2},{"src":2,"dst":4,"label":1},{"src":3,"dst":5,"label":2},{"src":4,"dst":6,"label":1},{"src":5,"dst":7,"label":1},{"src":6,"dst":7,"label":2}]})"
               "\n",
           "Gamma(plac_3,211) JSON");

  std::set<std::string> joined, plac;
  for (const auto* g : {&h211, &h212})
    for (const Vertex& v : g->vertices()) joined.insert(vertex_key(v));
  for (const Vertex& v : p211.vertices()) plac.insert(vertex_key(v));
  t.expect(joined == plac, "plac vertex set is the union of the two hypo components");
  for (const auto* g : {&h211, &h212})
    for (const Edge& e : g->edges())
      t.expect(has_edge(p211, vertex_key(g->vertex(e.src)), vertex_key(g->vertex(e.dst)), e.label),
               "hypo edge missing from plac");
  t.expect(has_edge(p211, "211", "212", 1), "edge 211 -1-> 212");
  t.expect(has_edge(p211, "322", "323", 2), "edge 322 -2-> 323");
  t.expect(p211.edges().size() == h211.edges().size() + h212.edges().size() + 2, "plac edge count");
}

void worked_examples(Tally& t) {
  auto P = [](const char* w) { return schensted_insert(Word::parse(w)); };
  auto H = [](const char* w) { return hypoplactic_insert(Word::parse(w)); };
  t.expect(P("2113").rows() == Rows{{1, 1, 3}, {2}}, "P_plac(2113)");
  t.expect(P("1213").rows() == Rows{{1, 1, 3}, {2}}, "P_plac(1213)");
  t.expect(H("2131").rows() == Rows{{1, 1}, {2, 3}}, "P_hypo(2131)");
  t.expect(H("1213").rows() == Rows{{1, 1}, {2, 3}}, "P_hypo(1213)");
  t.expect(P("2131").rows() == Rows{{1, 1}, {2, 3}}, "P_plac(2131)");

  Word u = Word::parse("12211");
  t.expect(quasi_kashiwara_f(u, 2) == Word::parse("12311"), "f_2(12211)");
  t.expect(!quasi_kashiwara_e(u, 1), "e_1(12211) undefined");
  t.expect(!quasi_kashiwara_f(u, 1), "f_1(12211) undefined");
  t.expect(!quasi_kashiwara_e(u, 2), "e_2(12211) undefined");

  QuasiArray q({2, 3, 3, 5, 8});
  t.expect(pickqrt(q, Composition{4, 1}).rows() == Rows{{2, 3, 3, 5}, {9}}, "pickqrt (4,1)");
  t.expect(pickqrt(q, Composition{1, 2, 2}).rows() == Rows{{2}, {4, 4}, {7, 10}}, "pickqrt (1,2,2)");
  t.expect(genqa(QuasiRibbonTableau({{2, 3, 3, 5}, {9}})) == q, "genqa");
  t.expect(tc(q, 2) == QuasiArray({2, 2, 3, 5, 8}), "tc_2");
  t.expect(td(q, 3) == QuasiArray({2, 3, 4, 5, 8}), "td_3");
  t.expect(!td(q, 2), "td_2 undefined");
  t.expect(!tc(q, 3), "tc_3 undefined");

  QuasiRibbonTableau from({{2}, {4, 4, 6, 9}});
  t.expect(direct_transport(from, Composition{2, 1, 1, 1}).rows() == Rows{{2, 3}, {4}, {7}, {11}},
           "transport (2)/(4,4,6,9)");
  t.expect(pickqrt(genqa(from), Composition{2, 1, 1, 1}).rows() == Rows{{2, 3}, {4}, {7}, {11}},
           "transport through genqa");

  YoungTableau y({{1, 1, 3, 3, 6}, {2, 3, 4}, {4, 4}, {5, 6}});
  auto s = standardize(y);
  t.expect(s.rows() == Rows{{1, 2, 5, 6, 12}, {3, 4, 9}, {7, 8}, {10, 11}}, "standardization");
  t.expect(minimal_parsing(y).type == Composition{2, 4, 3, 3}, "minimal parsing type");
  t.expect(descent_set(s) == std::vector<int>{2, 6, 9}, "descent set");
  t.expect(descent_composition(s) == Composition{2, 4, 3, 3}, "descent composition");

  QuasiRibbonTableau slide({{1, 1}, {2, 2, 2}, {3}, {4, 4, 4, 4}, {5}});
  t.expect(xi_map(slide).rows() == Rows{{1, 1, 2, 4}, {2, 2, 4}, {3, 4}, {4}, {5}}, "xi slide");
}

void isomorphism_suite(Tally& t) {
  for (int m = 1; m <= 5; ++m) {
    auto comps = compositions_of(m);
    for (int q = 1; q <= 4; ++q) {
      auto delta = build_delta(q, m);
      std::vector<LabeledDigraph> shifted;
      for (const Composition& sigma : comps) {
        int n = q + static_cast<int>(sigma.length()) - 1;
        shifted.push_back(build_shape_component(sigma, n));
        const auto& g = shifted.back();
        std::string tag = "sigma=" + sigma.str() + " q=" + std::to_string(q);
        auto phi = transport_map(g, delta);
        auto gen = transport_map(delta, g);
        t.expect(phi && gen, "Phi/genqa defined, " + tag);
        if (!phi || !gen) continue;
        t.expect(g.size() == delta.size(), "sizes, " + tag);
        bool inverse = true;
        for (std::size_t v = 0; v < g.size(); ++v) inverse = inverse && (*gen)[(*phi)[v]] == v;
        t.expect(inverse, "Phi and genqa inverse, " + tag);
        t.expect(is_isomorphism(g, delta, *phi, false, false), "Phi edge-preserving, " + tag);
        t.expect(is_isomorphism(delta, g, *gen, false, false), "genqa edge-preserving, " + tag);
      }
      for (std::size_t a = 0; a < comps.size(); ++a)
        for (std::size_t b = 0; b < comps.size(); ++b) {
          std::string tag = "Psi " + comps[a].str() + "->" + comps[b].str() + " q=" + std::to_string(q);
          auto psi = transport_map(shifted[a], shifted[b]);
          t.expect(psi && is_isomorphism(shifted[a], shifted[b], *psi, false, false), tag);
        }
    }
    for (int n = 1; n <= 4; ++n)
      for (const Composition& sigma : comps)
        for (const Composition& tau : comps) {
          if (sigma.length() != tau.length()) continue;
          auto g1 = build_shape_component(sigma, n);
          auto g2 = build_shape_component(tau, n);
          std::string tag = "Psi equal rank " + sigma.str() + "->" + tau.str() + " n=" + std::to_string(n);
          if (g1.empty() || g2.empty()) {
            t.expect(g1.empty() && g2.empty(), tag);
            continue;
          }
          auto psi = transport_map(g1, g2);
          t.expect(psi && is_isomorphism(g1, g2, *psi, false, false), tag);
        }
  }
}

void congruence_iff_iso(Tally& t, GraphKind kind) {
  auto ws = words_of_length(3, 1, 5);
  std::vector<LabeledDigraph> comps;
  std::vector<std::pair<std::size_t, std::size_t>> where(ws.size());
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    auto it = seen.find(ws[k].str());
    if (it == seen.end()) {
      comps.push_back(build_component(ws[k], kind, 3));
      const auto& g = comps.back();
      for (std::size_t v = 0; v < g.size(); ++v) seen[vertex_key(g.vertex(v))] = {comps.size() - 1, v};
      it = seen.find(ws[k].str());
    }
    where[k] = it->second;
  }
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = 0; b < ws.size(); ++b) {
      bool congruent = kind == GraphKind::hypo ? hypoplactic_equivalent(ws[a], ws[b])
                                                : plactic_equivalent(ws[a], ws[b]);
      auto [ca, va] = where[a];
      auto [cb, vb] = where[b];
      auto iso = isomorphic(comps[ca], comps[cb], IsoMode::labelled_weighted,
                            std::pair<std::size_t, std::size_t>{va, vb});
      t.expect(congruent == iso.has_value(), to_string(kind) + " " + ws[a].str() + " vs " + ws[b].str());
    }
}

void characters(Tally& t) {
  for (int m = 1; m <= 7; ++m)
    for (const Partition& lambda : partitions_of(m))
      for (int n = 1; n <= 5; ++n) {
        ExactPolynomial sum(n);
        for (const auto& s : enumerate_syt(lambda)) sum += fundamental_poly(descent_composition(s), n);
        t.expect(sum == schur_poly(lambda, n), "Gessel " + lambda.str() + " n=" + std::to_string(n));
      }
  for (int m = 1; m <= 6; ++m)
    for (const Composition& sigma : compositions_of(m))
      for (int n = 1; n <= 5; ++n)
        t.expect(character(build_shape_component(sigma, n)) == fundamental_poly(sigma, n),
                 "character " + sigma.str() + " n=" + std::to_string(n));
}

void schur_reorder(Tally& t) {
  for (int m = 1; m <= 8; ++m)
    for (const Composition& alpha : compositions_of(m)) {
      bool ok = false;
      try {
        auto s = verify_schur_reorder(alpha);
        ok = s.shape() == sort_to_partition(alpha) && descent_composition(s) == alpha;
      } catch (const TheoremViolation&) {
      }
      t.expect(ok, "witness for " + alpha.str());
    }
  for (int m = 1; m <= 6; ++m)
    for (const Composition& alpha : compositions_of(m)) {
      Word seed = column_reading(xi_map(highest_weight_quasi_ribbon(alpha)));
      auto h = build_component(seed, GraphKind::hypo, m);
      auto p = build_component(seed, GraphKind::plac, m);
      bool inside = true;
      for (const Vertex& v : h.vertices()) inside = inside && p.find(v).has_value();
      t.expect(inside, "hypo inside plac for " + alpha.str());
    }
}

void xi_intertwining(Tally& t) {
  for (int m = 1; m <= 5; ++m)
    for (const Composition& alpha : compositions_of(m))
      for (const auto& q : enumerate_quasi_ribbons(alpha, 5))
        for (int i = 1; i <= 4; ++i) {
          auto fq = quasi_kashiwara_f(q, i);
          if (!fq) continue;
          auto fx = kashiwara_f(xi_map(q), i);
          t.expect(fx && xi_map(*fq) == *fx, "xi at " + column_reading(q).str() + " i=" + std::to_string(i));
        }
}

std::string edge_text(const SkeletonGraph& s) {
  std::ostringstream os;
  for (const auto& v : s.vertices) os << vertex_name(v) << ' ';
  for (const Edge& e : s.edges) os << e.src << '-' << e.label << '-' << e.dst << ' ';
  return os.str();
}

void skeleton_counterexample(Tally& t) {
  Partition lambda{3, 2, 2};
  auto s = skeleton(lambda);
  t.expect(s.vertices.size() == 21, "21 vertices");
  auto h3 = h_subgraph(s, 3), h4 = h_subgraph(s, 4), h5 = h_subgraph(s, 5);
  auto c3 = undirected_components(h3);
  t.expect(h3.vertices.size() == 3 && c3.size() == 1 && c3[0].shape == ComponentShape::chain,
           "H_3 is a 3-vertex chain");
  auto c5 = undirected_components(h5);
  std::multiset<std::pair<std::size_t, ComponentShape>> got;
  for (const auto& c : c5) got.insert({c.vertices.size(), c.shape});
  t.expect(got == std::multiset<std::pair<std::size_t, ComponentShape>>{{1, ComponentShape::singleton},
                                                                          {5, ComponentShape::chain}},
           "H_5 is a 5-chain plus a singleton");
  t.expect(h4.vertices.size() == 12, "H_4 has 12 vertices");
  t.expect(check_even_cycles(s, 4), "H_4 bipartite under parity");
  t.expect(!is_union_of_chains(h4), "H_4 is not a union of chains");
  int n = min_skeleton_rank(lambda);
  t.expect(edge_text(skeleton(lambda, n)) == edge_text(skeleton(lambda, n + 1)),
           "same skeleton at ranks n and n+1");
}

void even_cycles(Tally& t) {
  for (int m = 1; m <= 6; ++m)
    for (const Partition& lambda : partitions_of(m)) {
      auto s = skeleton(lambda);
      for (int k = 1; k <= m; ++k)
        t.expect(check_even_cycles(s, k), "parity " + lambda.str() + " s=" + std::to_string(k));
    }
}

long long binomial(int a, int b) {
  long long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

void geometry(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m)
      t.expect(static_cast<long long>(build_shape_component(Composition{m}, n).size()) ==
                   binomial(n + m - 1, m),
               "row count n=" + std::to_string(n) + " m=" + std::to_string(m));

  // The drawn (2,1) lattice lives at rank 4 + l((2,1)) - 1 = 5.
  auto row = build_shape_component(Composition{3}, 4);
  auto hook = build_shape_component(Composition{2, 1}, 5);
  std::set<std::vector<int>> shifted, drawn;
  for (auto p : polytope_coordinates(row)) {
    p[2] += 1;
    shifted.insert(p);
  }
  for (const auto& p : polytope_coordinates(hook)) drawn.insert(p);
  t.expect(shifted == drawn, "(2,1) points = (3) points + (0,0,1)");
  std::vector<int> rows21 = diagonal_rows(Composition{2, 1}), rows3 = diagonal_rows(Composition{3});
  for (std::size_t v = 0; v < row.size(); ++v) {
    auto from = vertex_quasi_ribbon(row, v);
    auto a = from.entries(), b = direct_transport(from, Composition{2, 1}).entries();
    for (std::size_t d = 0; d < a.size(); ++d)
      t.expect(b[d] - a[d] == rows21[d] - rows3[d], "diagonal offset");
  }
}

void schutzenberger_symmetry_all(Tally& t) {
  std::unordered_set<std::string> seen;
  for (const Word& w : words_of_length(4, 1, 5)) {
    if (seen.count(w.str())) continue;
    auto g = build_component(w, GraphKind::hypo, 4);
    for (const Vertex& v : g.vertices()) seen.insert(vertex_key(v));
    auto s = schutzenberger_symmetry(g);
    t.expect(s && (*s)[highest_weight(g)] == lowest_weight(g), "component of " + w.str());
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "figure components, byte-exact JSON", 1, figure_components},
      {2, "worked examples", 1, worked_examples},
      {3, "Phi/genqa/Psi isomorphisms, m <= 5, q <= 4", 30, isomorphism_suite},
      {4, "congruence iff labelled weighted isomorphism, A_3, length <= 5", 60,
       [](Tally& t) {
         congruence_iff_iso(t, GraphKind::hypo);
         congruence_iff_iso(t, GraphKind::plac);
       }},
      {5, "Gessel and character identities", 60, characters},
      {6, "every composition occurs in s of its sorting", 60, schur_reorder},
      {7, "xi intertwines f, weight <= 5, entries <= 5", 30, xi_intertwining},
      {8, "skeleton of (3,2,2)", 120, skeleton_counterexample},
      {9, "H_s bipartite under parity, weight <= 6", 120, even_cycles},
      {10, "row counts and (2,1) geometry", 10, geometry},
      {11, "Schutzenberger symmetry, A_4, length <= 5", 60, schutzenberger_symmetry_all},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && t.failures == 0 && t.checked > 0 && secs < c.limit_seconds;
    if (!ok) ++failed;
    std::printf("%s %2d %s: %lld checks, %lld failed, %.3fs (limit %.0fs)", ok ? "PASS" : "FAIL", c.id,
                c.name, t.checked, t.failures, secs, c.limit_seconds);
    if (!error.empty()) std::printf("; exception: %s", error.c_str());
    if (t.failures) std::printf("; first: %s", t.first.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
