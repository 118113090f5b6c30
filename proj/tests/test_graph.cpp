#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/isomorphism.hpp"
#include "qcrystal/serialize.hpp"

using namespace qcrystal;

namespace {

std::string golden(const std::string& name) {
  return read_file(std::filesystem::path(QCRYSTAL_GOLDEN_DIR) / name);
}

std::set<std::string> keys(const LabeledDigraph& g) {
  std::set<std::string> out;
  for (const Vertex& v : g.vertices()) out.insert(vertex_key(v));
  return out;
}

std::set<std::vector<int>> point_set(const LabeledDigraph& g) {
  auto pts = polytope_coordinates(g);
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("figure components, byte for byte") {
  auto h211 = build_component(Word::parse("211"), GraphKind::hypo, 3);
  auto h212 = build_component(Word::parse("212"), GraphKind::hypo, 3);
  auto p211 = build_component(Word::parse("211"), GraphKind::plac, 3);
  CHECK(dump(to_json(h211)) == golden("hypo3_211.json"));
  CHECK(dump(to_json(h212)) == golden("hypo3_212.json"));
  CHECK(dump(to_json(p211)) == golden("plac3_211.json"));
  CHECK(to_dot(h211) == golden("hypo3_211.dot"));

  auto both = keys(h211);
  both.merge(keys(h212));
  CHECK(keys(p211) == both);
}

TEST_CASE("thread count does not change the output") {
  for (unsigned threads : {2u, 4u, 8u}) {
    BuildOptions opts{threads};
    CHECK(dump(to_json(build_component(Word::parse("211"), GraphKind::plac, 3, opts))) ==
          golden("plac3_211.json"));
    CHECK(dump(to_json(build_shape_component(Partition{3, 2}, 5, opts))) ==
          dump(to_json(build_shape_component(Partition{3, 2}, 5))));
    CHECK(dump(to_json(build_delta(5, 4, opts))) == dump(to_json(build_delta(5, 4))));
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(build_component(Word::parse("14"), GraphKind::hypo, 3), RankError);
  CHECK_THROWS_AS(build_component(Word::parse("1"), GraphKind::quasi_array, 3), ParameterError);
  CHECK_THROWS_AS(build_component(Word::parse("1"), GraphKind::plac, 0), ParameterError);
  CHECK_THROWS_AS(build_delta(0, 2), ParameterError);
  CHECK_THROWS_AS(parse_graph_kind("hyp"), ParameterError);
  CHECK(build_shape_component(Composition{1, 1, 1}, 2).empty());
  CHECK(build_shape_component(Partition{1, 1, 1}, 2).empty());
}

TEST_CASE("shape components consist of the column readings of their tableaux") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      for (const Composition& sigma : compositions_of(m)) {
        auto g = build_shape_component(sigma, n);
        std::set<std::string> expected;
        for (const auto& t : oracle::quasi_ribbons(sigma.parts(), n)) {
          expected.insert(column_reading(QuasiRibbonTableau(t)).str());
        }
        CHECK(keys(g) == expected);
        if (!g.empty()) {
          CHECK(hypoplactic_insert(std::get<Word>(g.vertex(highest_weight(g)))) ==
                highest_weight_quasi_ribbon(sigma));
          CHECK_NOTHROW(lowest_weight(g));
        }
      }
      for (const Partition& lambda : partitions_of(m)) {
        auto g = build_shape_component(lambda, n);
        CHECK(g.size() == oracle::young_tableaux(lambda.parts(), n).size());
        for (const Edge& e : g.edges())
          CHECK(kashiwara_f(std::get<Word>(g.vertex(e.src)), e.label) ==
                std::get<Word>(g.vertex(e.dst)));
      }
    }
}

TEST_CASE("quasi-crystal components have no inversions on their edges") {
  auto g = build_shape_component(Composition{2, 1, 2}, 4);
  for (const Edge& e : g.edges()) {
    const Word& w = std::get<Word>(g.vertex(e.src));
    CHECK_FALSE(contains_inversion(w, e.label));
    CHECK(quasi_kashiwara_f(w, e.label) == std::get<Word>(g.vertex(e.dst)));
  }
}

TEST_CASE("highest weight needs a unique source") {
  LabeledDigraph g(GraphKind::hypo, 2);
  g.add_vertex(Word::parse("1"));
  g.add_vertex(Word::parse("2"));
  CHECK_THROWS_AS(highest_weight(g), StructureError);
  CHECK(g.add_edge(0, 1, 1));
  CHECK_FALSE(g.add_edge(0, 1, 1));
  CHECK(highest_weight(g) == 0);
  CHECK(lowest_weight(g) == 1);
}

TEST_CASE("Delta(QA_3, 4)") {
  auto d = build_delta(3, 4);
  CHECK(d.size() == 15);
  CHECK(d.edges().size() == 20);
  CHECK(std::get<QuasiArray>(d.vertex(0)) == QuasiArray({1, 1, 1, 1}));
  for (const Edge& e : d.edges())
    CHECK(td(std::get<QuasiArray>(d.vertex(e.src)), e.label) == std::get<QuasiArray>(d.vertex(e.dst)));

  // Brute force: count defined td_k that stay inside QA_3.
  std::size_t best = 0;
  for (const auto& row : oracle::quasi_array_rows(3, 4)) {
    std::size_t out = 0;
    for (int k = 1; k <= 4; ++k) {
      auto r = row;
      if (k < 4 && r[k - 1] >= r[k]) continue;
      ++r[k - 1];
      if (r.back() <= 3) ++out;
    }
    best = std::max(best, out);
  }
  CHECK(best == 2);
  CHECK(max_outdegree(d) == best);
}

TEST_CASE("hypo components of a row shape count multisets") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m)
      CHECK(static_cast<long long>(build_shape_component(Composition{m}, n).size()) ==
            oracle::binomial(n + m - 1, m));
}

TEST_CASE("(2,1) points are the (3) points shifted by (0,0,1)") {
  auto row = build_shape_component(Composition{3}, 4);
  std::set<std::vector<int>> shifted;
  for (auto p : polytope_coordinates(row)) {
    p[2] += 1;
    shifted.insert(p);
  }
  CHECK(point_set(build_shape_component(Composition{2, 1}, 5)) == shifted);

  std::set<std::vector<int>> truncated;
  for (const auto& p : shifted)
    if (p[2] <= 4) truncated.insert(p);
  auto literal = build_shape_component(Composition{2, 1}, 4);
  CHECK(literal.size() == 10);
  CHECK(point_set(literal) == truncated);

  for (std::size_t v = 0; v < row.size(); ++v) {
    auto t = vertex_quasi_ribbon(row, v);
    auto moved = direct_transport(t, Composition{2, 1});
    auto a = t.entries(), b = moved.entries();
    CHECK(b[0] - a[0] == 0);
    CHECK(b[1] - a[1] == 0);
    CHECK(b[2] - a[2] == 1);
  }
}

TEST_CASE("labelled isomorphisms") {
  auto g1 = build_component(Word::parse("211"), GraphKind::hypo, 3);
  auto g2 = build_component(Word::parse("1"), GraphKind::hypo, 3);
  auto g3 = build_component(Word::parse("21"), GraphKind::hypo, 3);
  auto g4 = build_component(Word::parse("31"), GraphKind::hypo, 3);
  CHECK_FALSE(isomorphic(g1, g2, IsoMode::labelled_weighted));
  auto w = isomorphic(g3, g4, IsoMode::labelled_weighted);
  REQUIRE(w);
  CHECK(w->labelled);
  CHECK(w->weighted);
  CHECK(is_isomorphism(g3, g4, w->vertex_map, true, true));

  auto a = build_component(Word::parse("2131"), GraphKind::hypo, 3);
  auto b = build_component(Word::parse("1213"), GraphKind::hypo, 3);
  auto iso = isomorphic(a, b, IsoMode::labelled_weighted, std::pair<std::size_t, std::size_t>{0, 0});
  REQUIRE(iso);
  CHECK(iso->vertex_map[0] == 0);
}

TEST_CASE("unlabelled isomorphisms through quasi-arrays") {
  auto h1321 = build_shape_component(Composition{1, 3, 2, 1}, 5);
  auto h3211 = build_shape_component(Composition{3, 2, 1, 1}, 5);
  auto w = isomorphic(h1321, h3211, IsoMode::unlabelled);
  REQUIRE(w);
  CHECK_FALSE(w->labelled);
  CHECK(is_isomorphism(h1321, h3211, w->vertex_map, false, false));
  CHECK_FALSE(isomorphic(h1321, h3211, IsoMode::labelled));

  auto delta = build_delta(2, 7);
  auto m = transport_map(delta, h1321);
  REQUIRE(m);
  CHECK(verify_candidate(delta, h1321, *m));

  auto small = build_shape_component(Composition{2}, 3);
  auto cert = non_isomorphism_certificate(small, h1321);
  REQUIRE(cert);
  CHECK(cert->find("vertex") != std::string::npos);
  CHECK_FALSE(non_isomorphism_certificate(h1321, h3211));

  std::vector<std::size_t> bad(h1321.size(), 0);
  CHECK_FALSE(verify_candidate(h1321, h3211, bad));
}

TEST_CASE("Schutzenberger symmetry of hypo components") {
  for (const Composition& sigma : compositions_of(4)) {
    auto g = build_shape_component(sigma, 4);
    auto s = schutzenberger_symmetry(g);
    REQUIRE(s);
    CHECK((*s)[highest_weight(g)] == lowest_weight(g));
  }
  CHECK_THROWS_AS(schutzenberger_symmetry(build_shape_component(Partition{2}, 2)), ParameterError);
}

TEST_CASE("JSON round trip and malformed input") {
  for (const auto& g : {build_component(Word::parse("2131"), GraphKind::plac, 3), build_delta(3, 3)}) {
    auto back = graph_from_json(Json::parse(dump(to_json(g))));
    CHECK(dump(to_json(back)) == dump(to_json(g)));
  }
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"kind":"hypo"})")), IoError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"kind":"x","rank":2,"vertices":[],"edges":[]})")),
                  IoError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"kind":"hypo","rank":2,"vertices":["1"],"edges":[{"src":0,"dst":3,"label":1}]})")),
      IoError);
  CHECK_THROWS_AS(read_file("/nonexistent/graph.json"), IoError);
}
