// qcrystal: command-line front end.
//
// Exit codes: 0 success, 1 negative answer (e.g. no isomorphism found),
// 2 bad parameters, 3 a theorem check failed, 4 I/O failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/graph.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/isomorphism.hpp"
#include "qcrystal/qsym.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/skeleton.hpp"
#include "qcrystal/verify.hpp"

namespace fs = std::filesystem;
using namespace qcrystal;

namespace {

constexpr int exit_negative = 1;
constexpr int exit_parameter = 2;
constexpr int exit_theorem = 3;
constexpr int exit_io = 4;

void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string format_graph(const LabeledDigraph& g, const std::string& out) {
  if (out == "dot") return to_dot(g);
  if (out == "text") return to_text(g);
  return dump(to_json(g));
}

std::string format_skeleton(const SkeletonGraph& s, const std::string& out) {
  if (out == "dot") return to_dot(s);
  if (out == "text") return to_text(s);
  return dump(to_json(s));
}

Json coordinates_json(const LabeledDigraph& g) {
  Json points = Json::array();
  for (const auto& p : polytope_coordinates(g)) points.push_back(p);
  return {{"kind", to_string(g.kind())}, {"rank", g.rank()}, {"points", std::move(points)}};
}

void seed_figures(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  auto graph = [&](const std::string& name, const LabeledDigraph& g) {
    write_file(dir / (name + ".dot"), to_dot(g));
    write_file(dir / (name + ".json"), dump(to_json(g)));
  };
  graph("crystal_quasicrystal-plac3-211", build_component(Word::parse("211"), GraphKind::plac, 3));
  graph("crystal_quasicrystal-hypo3-211", build_component(Word::parse("211"), GraphKind::hypo, 3));
  graph("crystal_quasicrystal-hypo3-212", build_component(Word::parse("212"), GraphKind::hypo, 3));
  graph("quasicrystal_infinite-plac4-211", build_component(Word::parse("211"), GraphKind::plac, 4));
  graph("quasicrystal_infinite-hypo4-211", build_component(Word::parse("211"), GraphKind::hypo, 4));
  graph("quasicrystal_infinite-hypo4-212", build_component(Word::parse("212"), GraphKind::hypo, 4));
  graph("delta-t3-4", build_delta(3, 4));
  graph("isom-hypo5-1321", build_component(Word::parse("1321"), GraphKind::hypo, 5));
  graph("isom-hypo4-1121", build_component(Word::parse("1121"), GraphKind::hypo, 4));
  auto lattice = [&](const std::string& name, const LabeledDigraph& g) {
    graph(name, g);
    write_file(dir / (name + "-coordinates.json"), dump(coordinates_json(g)));
  };
  lattice("gamma-hypo-4-3", build_shape_component(Composition{3}, 4));
  lattice("gamma-hypo-4-21", build_shape_component(Composition{2, 1}, 4));
  // The drawn lattice for shape (2,1) has third coordinates up to 5.
  lattice("gamma-hypo-4-21-drawn", build_shape_component(Composition{2, 1}, 5));
  SkeletonGraph skel = skeleton(Partition{3, 2, 2});
  write_file(dir / "skel-322.dot", to_dot(skel));
  write_file(dir / "skel-322.json", dump(to_json(skel)));
  std::cout << "wrote figures to " << dir.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal and quasi-crystal graphs, quasi-arrays and skeletons"};
  app.require_subcommand(1);
  int result = 0;

  // insert
  std::string insert_kind, insert_word;
  auto* insert = app.add_subcommand("insert", "Insertion tableau of a word");
  insert->add_option("kind", insert_kind, "plac or hypo")->required()->check(CLI::IsMember({"plac", "hypo"}));
  insert->add_option("word", insert_word, "Word, e.g. 2113 or 10,2,11")->required();
  insert->callback([&] {
    Word w = Word::parse(insert_word);
    if (insert_kind == "plac") {
      auto t = schensted_insert(w);
      std::cout << render(t) << dump(to_json(t));
    } else {
      auto t = hypoplactic_insert(w);
      std::cout << render(t) << dump(to_json(t));
    }
  });

  // op
  std::string op_dir, op_kind, op_word;
  int op_index = 0;
  auto* op = app.add_subcommand("op", "Apply a (quasi-)Kashiwara operator to a word");
  op->add_option("dir", op_dir, "e or f")->required()->check(CLI::IsMember({"e", "f"}));
  op->add_option("kind", op_kind, "plac or hypo")->required()->check(CLI::IsMember({"plac", "hypo"}));
  op->add_option("i", op_index, "Operator index")->required();
  op->add_option("word", op_word, "Word")->required();
  op->callback([&] {
    Word w = Word::parse(op_word);
    std::optional<Word> r;
    if (op_kind == "plac") {
      r = op_dir == "f" ? kashiwara_f(w, op_index) : kashiwara_e(w, op_index);
    } else {
      r = op_dir == "f" ? quasi_kashiwara_f(w, op_index) : quasi_kashiwara_e(w, op_index);
    }
    std::cout << (r ? r->str() : "undefined") << '\n';
  });

  // component
  std::string comp_kind = "hypo", comp_seed, comp_shape, comp_out = "json", comp_path;
  int comp_rank = 0;
  unsigned comp_threads = 1;
  auto* component = app.add_subcommand("component", "Connected component of a word or shape");
  component->add_option("--kind", comp_kind, "plac or hypo")->check(CLI::IsMember({"plac", "hypo"}));
  component->add_option("--rank", comp_rank, "Alphabet size n")->required();
  auto* seed_opt = component->add_option("--seed", comp_seed, "Seed word");
  component->add_option("--shape", comp_shape, "Shape (composition for hypo, partition for plac)")
      ->excludes(seed_opt);
  component->add_option("--out", comp_out, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
  component->add_option("--path", comp_path, "Write to this file instead of stdout");
  component->add_option("--threads", comp_threads, "Worker threads for the frontier expansion");
  component->callback([&] {
    BuildOptions opts{comp_threads};
    GraphKind kind = parse_graph_kind(comp_kind);
    std::optional<LabeledDigraph> g;
    if (!comp_shape.empty()) {
      g = kind == GraphKind::hypo ? build_shape_component(Composition::parse(comp_shape), comp_rank, opts)
                                  : build_shape_component(Partition::parse(comp_shape), comp_rank, opts);
    } else if (!comp_seed.empty()) {
      g = build_component(Word::parse(comp_seed), kind, comp_rank, opts);
    } else {
      throw ParameterError("component needs --seed or --shape");
    }
    emit(format_graph(*g, comp_out), comp_path);
  });

  // delta
  int delta_rank = 0, delta_size = 0;
  std::string delta_out = "json", delta_path;
  unsigned delta_threads = 1;
  auto* delta = app.add_subcommand("delta", "Quasi-array graph Delta(QA_n, m)");
  delta->add_option("--rank", delta_rank, "n")->required();
  delta->add_option("--size", delta_size, "m")->required();
  delta->add_option("--out", delta_out, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
  delta->add_option("--path", delta_path, "Write to this file instead of stdout");
  delta->add_option("--threads", delta_threads, "Worker threads");
  delta->callback([&] {
    emit(format_graph(build_delta(delta_rank, delta_size, {delta_threads}), delta_out), delta_path);
  });

  // iso
  std::string iso_mode = "labelled_weighted", iso_a, iso_b, iso_map;
  auto* iso = app.add_subcommand("iso", "Decide or verify an isomorphism between two graph JSON files");
  iso->add_option("--mode", iso_mode, "labelled_weighted, labelled or unlabelled");
  iso->add_option("--map", iso_map, "JSON array with a candidate vertex map (unlabelled)");
  iso->add_option("a", iso_a, "First graph (JSON)")->required();
  iso->add_option("b", iso_b, "Second graph (JSON)")->required();
  iso->callback([&] {
    IsoMode mode = parse_iso_mode(iso_mode);
    auto parse = [](const std::string& path) {
      try {
        return Json::parse(read_file(path));
      } catch (const nlohmann::json::exception& ex) {
        throw IoError(path + ": " + ex.what());
      }
    };
    LabeledDigraph a = graph_from_json(parse(iso_a));
    LabeledDigraph b = graph_from_json(parse(iso_b));
    std::optional<IsoWitness> w;
    if (!iso_map.empty()) {
      if (mode != IsoMode::unlabelled) throw ParameterError("--map is only used in unlabelled mode");
      w = verify_candidate(a, b, parse(iso_map).get<std::vector<std::size_t>>());
    } else {
      w = isomorphic(a, b, mode);
    }
    Json out;
    if (w) {
      out = {{"isomorphic", true}, {"labelled", w->labelled}, {"weighted", w->weighted},
             {"vertex_map", w->vertex_map}};
    } else {
      std::string reason;
      if (auto cert = non_isomorphism_certificate(a, b)) {
        reason = "not isomorphic: " + *cert;
      } else if (mode == IsoMode::unlabelled) {
        reason = iso_map.empty() ? "no witness found by Psi-family maps"
                                 : "supplied map is not an isomorphism";
      } else {
        reason = "no isomorphism of the requested strength between the highest weights";
      }
      out = {{"isomorphic", false}, {"reason", reason}};
      result = exit_negative;
    }
    std::cout << dump(out);
  });

  // skeleton
  std::string skel_shape, skel_out = "json", skel_path;
  std::optional<int> skel_rank;
  bool skel_report = false;
  unsigned skel_threads = 1;
  auto* skel = app.add_subcommand("skeleton", "Skeleton of the crystal component of a shape");
  skel->add_option("--shape", skel_shape, "Partition, e.g. 3,2,2")->required();
  skel->add_option("--rank", skel_rank, "Alphabet size (default: weight of the shape)");
  skel->add_option("--out", skel_out, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
  skel->add_option("--path", skel_path, "Write to this file instead of stdout");
  skel->add_flag("--report", skel_report, "Print H_s summaries instead of the graph");
  skel->add_option("--threads", skel_threads, "Worker threads");
  skel->callback([&] {
    SkeletonGraph s = skeleton(Partition::parse(skel_shape), skel_rank, {skel_threads});
    emit(skel_report ? skeleton_report(s) : format_skeleton(s, skel_out), skel_path);
  });

  // expand
  std::string expand_what, expand_shape;
  auto* expand = app.add_subcommand("expand", "Expansion of a Schur function in the fundamental basis");
  expand->add_option("what", expand_what, "schur-to-F")->required()->check(CLI::IsMember({"schur-to-F"}));
  expand->add_option("--shape", expand_shape, "Partition")->required();
  expand->callback([&] { std::cout << schur_to_fundamental(Partition::parse(expand_shape)).str(); });

  // poly
  std::string poly_basis, poly_comp, poly_shape;
  int poly_vars = 0;
  auto* poly = app.add_subcommand("poly", "Polynomial F_alpha, M_alpha or s_lambda in n variables");
  poly->add_option("basis", poly_basis, "F, M or s")->required()->check(CLI::IsMember({"F", "M", "s"}));
  poly->add_option("--comp", poly_comp, "Composition (F, M)");
  poly->add_option("--shape", poly_shape, "Partition (s)");
  poly->add_option("--vars", poly_vars, "Number of variables")->required();
  poly->callback([&] {
    if (poly_vars < 1) throw ParameterError("--vars must be positive");
    ExactPolynomial p;
    if (poly_basis == "s") {
      if (poly_shape.empty()) throw ParameterError("poly s needs --shape");
      p = schur_poly(Partition::parse(poly_shape), poly_vars);
    } else {
      if (poly_comp.empty()) throw ParameterError("poly " + poly_basis + " needs --comp");
      Composition alpha = Composition::parse(poly_comp);
      p = poly_basis == "F" ? fundamental_poly(alpha, poly_vars) : monomial_qsym(alpha, poly_vars);
    }
    std::cout << p.str() << '\n';
  });

  // verify
  int verify_weight = 5, verify_rank = 4;
  unsigned verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "Run every structural check within the given bounds");
  verify->add_option("--max-weight", verify_weight, "Largest word length / weight (<= 8)");
  verify->add_option("--max-rank", verify_rank, "Largest alphabet size (<= 6)");
  verify->add_option("--threads", verify_threads, "Run checks on this many threads");
  verify->callback([&] {
    VerificationReport report = run_verify(verify_weight, verify_rank, OperatorTable::standard(), verify_threads);
    std::cout << report.str();
    if (!report.passed()) result = exit_theorem;
  });

  // export
  bool export_figures = false;
  std::string export_dir = "figures";
  auto* exp = app.add_subcommand("export", "Write the figure data sets as DOT and JSON");
  exp->add_flag("--seed-figures", export_figures, "Emit every figure")->required();
  exp->add_option("--dir", export_dir, "Output directory");
  exp->callback([&] { seed_figures(export_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_parameter;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return exit_theorem;
  } catch (const StructureError& e) {
    std::cerr << "structure error: " << e.what() << '\n';
    return exit_theorem;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parameter;
  }
  return result;
}
