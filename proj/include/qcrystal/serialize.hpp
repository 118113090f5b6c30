#pragma once

// JSON, DOT and plain-text forms of tableaux, quasi-arrays, graphs and
// skeletons. Object keys keep insertion order so output is byte-stable.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcrystal/graph.hpp"
#include "qcrystal/quasi_array.hpp"
#include "qcrystal/skeleton.hpp"
#include "qcrystal/tableaux.hpp"

namespace qcrystal {

using Json = nlohmann::ordered_json;

Json to_json(const YoungTableau& t);
Json to_json(const QuasiRibbonTableau& t);
Json to_json(const QuasiArray& q);
Json to_json(const LabeledDigraph& g);
Json to_json(const SkeletonGraph& s);

/// Inverse of to_json(LabeledDigraph). Throws IoError on malformed input.
LabeledDigraph graph_from_json(const Json& j);

std::string to_dot(const LabeledDigraph& g);
std::string to_dot(const SkeletonGraph& s);

/// One vertex per line followed by one "src -label-> dst" line per edge.
std::string to_text(const LabeledDigraph& g);
std::string to_text(const SkeletonGraph& s);

/// Compact one-line JSON with a trailing newline.
std::string dump(const Json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qcrystal
