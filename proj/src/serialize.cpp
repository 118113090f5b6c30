#include "qcrystal/serialize.hpp"

#include <fstream>
#include <sstream>

#include "qcrystal/errors.hpp"

namespace qcrystal {

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string vertex_text(const Vertex& v) {
  if (const Word* w = std::get_if<Word>(&v)) return w->str();
  std::string text = render(std::get<QuasiArray>(v));
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

Json vertex_json(const Vertex& v) {
  if (const Word* w = std::get_if<Word>(&v)) return w->str();
  return to_json(std::get<QuasiArray>(v));
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  return out;
}

}  // namespace

Json to_json(const YoungTableau& t) {
  return {{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

Json to_json(const QuasiRibbonTableau& t) {
  return {{"shape", t.shape().parts()}, {"rows", t.rows()}, {"offsets", t.column_offsets()}};
}

Json to_json(const QuasiArray& q) { return {{"size", q.size()}, {"first_row", q.first_row()}}; }

Json to_json(const LabeledDigraph& g) {
  Json vertices = Json::array();
  for (const Vertex& v : g.vertices()) vertices.push_back(vertex_json(v));
  return {{"kind", to_string(g.kind())},
          {"rank", g.rank()},
          {"vertices", std::move(vertices)},
          {"edges", edges_json(g.edges())}};
}

Json to_json(const SkeletonGraph& s) {
  Json vertices = Json::array();
  for (const auto& t : s.vertices) {
    vertices.push_back({{"name", vertex_name(t)},
                        {"rows", t.rows()},
                        {"descent_composition", descent_composition(t).parts()}});
  }
  return {{"shape", s.lambda.parts()},
          {"rank", s.rank_used},
          {"vertices", std::move(vertices)},
          {"edges", edges_json(s.edges)}};
}

LabeledDigraph graph_from_json(const Json& j) {
  try {
    LabeledDigraph g(parse_graph_kind(j.at("kind").get<std::string>()), j.at("rank").get<int>());
    for (const auto& v : j.at("vertices")) {
      if (v.is_string()) {
        g.add_vertex(Word::parse(v.get<std::string>()));
      } else {
        g.add_vertex(QuasiArray(v.at("first_row").get<std::vector<int>>()));
      }
    }
    for (const auto& e : j.at("edges")) {
      auto src = e.at("src").get<std::size_t>();
      auto dst = e.at("dst").get<std::size_t>();
      if (src >= g.size() || dst >= g.size()) throw IoError("edge endpoint out of range");
      g.add_edge(src, dst, e.at("label").get<int>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("malformed graph JSON: ") + ex.what());
  } catch (const IoError&) {
    throw;
  } catch (const Error& ex) {
    throw IoError(std::string("invalid graph JSON: ") + ex.what());
  }
}

std::string to_dot(const LabeledDigraph& g) {
  std::ostringstream os;
  os << "digraph " << to_string(g.kind()) << '_' << g.rank() << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << dot_escape(vertex_text(g.vertex(v))) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const SkeletonGraph& s) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    const auto& t = s.vertices[v];
    os << "  v" << v << " [label=\""
       << dot_escape(row_reading(t.tableau()).str() + "\n" + descent_composition(t).str())
       << "\"];\n";
  }
  for (const Edge& e : s.edges) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_text(const LabeledDigraph& g) {
  std::ostringstream os;
  os << to_string(g.kind()) << " rank " << g.rank() << ": " << g.size() << " vertices, "
     << g.edges().size() << " edges\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << v << ": " << dot_escape(vertex_text(g.vertex(v))) << '\n';
  }
  for (const Edge& e : g.edges()) os << e.src << " -" << e.label << "-> " << e.dst << '\n';
  return os.str();
}

std::string to_text(const SkeletonGraph& s) {
  std::ostringstream os;
  os << "skeleton " << s.lambda.str() << " rank " << s.rank_used << ": " << s.vertices.size()
     << " vertices, " << s.edges.size() << " edges\n";
  for (const auto& t : s.vertices) {
    os << vertex_name(t) << ' ' << descent_composition(t).str() << '\n';
  }
  for (const Edge& e : s.edges) {
    os << vertex_name(s.vertices[e.src]) << " -" << e.label << "-> "
       << vertex_name(s.vertices[e.dst]) << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qcrystal
