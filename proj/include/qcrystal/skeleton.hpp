#pragma once

// Skeletons of crystal components: each quasi-crystal component inside
// Gamma(plac_n, lambda) is contracted to its standard tableau, keeping one
// minimal-label edge per ordered pair of adjacent components.

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/graph.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

struct SkeletonGraph {
  Partition lambda;
  int rank_used = 0;
  /// Ordered as enumerate_syt(lambda), or a subsequence of it for H_s.
  std::vector<StandardYoungTableau> vertices;
  /// Sorted by (src, dst); at most one edge per ordered pair.
  std::vector<Edge> edges;

  std::optional<std::size_t> index_of(const StandardYoungTableau& s) const;
};

/// Smallest rank for which every SYT of shape lambda shows up: the largest
/// descent-composition length.
int min_skeleton_rank(const Partition& lambda);

/// n defaults to the weight of lambda. Throws ParameterError when n is
/// below min_skeleton_rank(lambda), and StructureError when two quasi-crystal
/// components map to the same standard tableau.
SkeletonGraph skeleton(const Partition& lambda, std::optional<int> n = std::nullopt,
                       BuildOptions opts = {});

/// Induced subgraph on tableaux whose descent composition has s parts.
SkeletonGraph h_subgraph(const SkeletonGraph& skel, int s);

/// Parity of the sum of the even-indexed parts of a descent composition.
int parity(const Composition& dc);
int parity(const StandardYoungTableau& s);

/// Every undirected edge of H_s joins tableaux of opposite parity.
bool check_even_cycles(const SkeletonGraph& skel, int s);

enum class ComponentShape { singleton, chain, tree, cycle_bearing };
std::string to_string(ComponentShape shape);

struct ComponentSummary {
  std::vector<std::size_t> vertices;
  std::size_t undirected_edges = 0;
  ComponentShape shape = ComponentShape::singleton;
};

/// Connected components of the underlying undirected simple graph, ordered
/// by smallest vertex index.
std::vector<ComponentSummary> undirected_components(const SkeletonGraph& skel);

/// True when every undirected component is a singleton or a chain.
bool is_union_of_chains(const SkeletonGraph& skel);

/// Column reading of the tableau; used as the vertex name in exports.
std::string vertex_name(const StandardYoungTableau& s);

/// Per-s vertex counts, component shapes and parity verdicts.
std::string skeleton_report(const SkeletonGraph& skel);

}  // namespace qcrystal
