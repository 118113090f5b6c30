#pragma once

// Crystal, quasi-crystal and quasi-array graphs built by breadth-first
// closure from a seed.
//
// Vertex indices follow discovery order: vertices are expanded in index
// order, and each vertex contributes its f-neighbours (labels ascending)
// and then its e-neighbours (labels ascending). The frontier may be
// expanded by several threads; results are merged in that same order, so
// the graph does not depend on the thread count.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qcrystal/quasi_array.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

enum class GraphKind { plac, hypo, quasi_array };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& text);

using Vertex = std::variant<Word, QuasiArray>;

/// Canonical text of a vertex payload; distinct payloads give distinct keys.
std::string vertex_key(const Vertex& v);
Evaluation vertex_evaluation(const Vertex& v);

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  int label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledDigraph {
 public:
  LabeledDigraph(GraphKind kind, int rank) : kind_(kind), rank_(rank) {}

  GraphKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Indices into edges().
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  std::optional<std::size_t> find(const Vertex& v) const;
  std::optional<std::size_t> find_key(const std::string& key) const;

  /// Index of v, inserting it if new; the flag is true on insertion.
  std::pair<std::size_t, bool> add_vertex(Vertex v);
  /// Returns false (and adds nothing) for a duplicate edge.
  bool add_edge(std::size_t src, std::size_t dst, int label);

 private:
  GraphKind kind_;
  int rank_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct BuildOptions {
  unsigned threads = 1;
};

/// Connected component of seed in the crystal graph (plac) or
/// quasi-crystal graph (hypo) of rank n.
LabeledDigraph build_component(const Word& seed, GraphKind kind, int n, BuildOptions opts = {});

/// Quasi-crystal component of the column readings of quasi-ribbon tableaux
/// of shape sigma over {1..n}; empty when sigma has more than n parts.
LabeledDigraph build_shape_component(const Composition& sigma, int n, BuildOptions opts = {});

/// Crystal component of the column readings of Young tableaux of shape
/// lambda over {1..n}; empty when lambda has more than n parts.
LabeledDigraph build_shape_component(const Partition& lambda, int n, BuildOptions opts = {});

/// Quasi-arrays of size m in QA_n with edges Q -> td_k(Q) labelled k.
LabeledDigraph build_delta(int n, int m, BuildOptions opts = {});

/// The unique vertex without incoming (resp. outgoing) edges. Throws
/// StructureError when there is not exactly one.
std::size_t highest_weight(const LabeledDigraph& g);
std::size_t lowest_weight(const LabeledDigraph& g);

std::size_t max_outdegree(const LabeledDigraph& g);

/// Lattice point of each vertex: entries of its tableau read row by row
/// (quasi-ribbon for hypo, Young tableau for plac), or the first row of a
/// quasi-array.
std::vector<std::vector<int>> polytope_coordinates(const LabeledDigraph& g);

/// Tableau identified with a word vertex of a hypo graph.
QuasiRibbonTableau vertex_quasi_ribbon(const LabeledDigraph& g, std::size_t v);

}  // namespace qcrystal
