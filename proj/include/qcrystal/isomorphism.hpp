#pragma once

// Isomorphisms between crystal-type components.
//
// Labelled modes rely on every vertex having at most one outgoing and one
// incoming edge per label, so a rooted simultaneous BFS decides them. The
// unlabelled mode only verifies candidate maps: either a supplied one or
// the transport map through quasi-arrays (Phi, genqa and Psi).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcrystal/graph.hpp"

namespace qcrystal {

enum class IsoMode { labelled_weighted, labelled, unlabelled };

IsoMode parse_iso_mode(const std::string& text);

struct IsoWitness {
  std::vector<std::size_t> vertex_map;
  bool labelled = false;
  bool weighted = false;
};

/// Checks that map is a bijection carrying the edges of g1 onto the edges
/// of g2, matching labels and evaluations when asked to.
bool is_isomorphism(const LabeledDigraph& g1, const LabeledDigraph& g2,
                    const std::vector<std::size_t>& map, bool labelled, bool weighted);

/// Roots default to the highest-weight vertices. In unlabelled mode the
/// roots are ignored and the transport map is tried.
std::optional<IsoWitness> isomorphic(const LabeledDigraph& g1, const LabeledDigraph& g2,
                                     IsoMode mode,
                                     std::optional<std::pair<std::size_t, std::size_t>> roots = {});

/// Verifies a supplied unlabelled candidate.
std::optional<IsoWitness> verify_candidate(const LabeledDigraph& g1, const LabeledDigraph& g2,
                                           const std::vector<std::size_t>& map);

/// Sends each vertex of `from` to its quasi-array (genqa of its tableau,
/// or the vertex itself in a Delta graph) and then to the vertex of `to`
/// with that quasi-array (pickqrt onto the shape of `to`). Absent when some
/// image is missing from `to`. Both graphs must be hypo or quasi_array.
std::optional<std::vector<std::size_t>> transport_map(const LabeledDigraph& from,
                                                      const LabeledDigraph& to);

/// A reason the two graphs cannot be isomorphic as unlabelled digraphs:
/// differing vertex or edge counts, degree sequences, or max outdegree.
std::optional<std::string> non_isomorphism_certificate(const LabeledDigraph& g1,
                                                       const LabeledDigraph& g2);

/// For a hypo component g over A_n: w -> Psi(P_hypo(w^natural)) mapped back
/// into g. Returned when it is a bijection that reverses every edge (so an
/// automorphism of the underlying undirected graph) and swaps the highest
/// and lowest weights.
std::optional<std::vector<std::size_t>> schutzenberger_symmetry(const LabeledDigraph& g);

}  // namespace qcrystal
