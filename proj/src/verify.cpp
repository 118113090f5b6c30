#include "qcrystal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "qcrystal/crystal_ops.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/isomorphism.hpp"
#include "qcrystal/qsym.hpp"
#include "qcrystal/quasi_array.hpp"
#include "qcrystal/skeleton.hpp"

namespace qcrystal {

OperatorTable OperatorTable::standard() {
  OperatorTable ops;
  ops.kashiwara_f = [](const Word& w, int i) { return qcrystal::kashiwara_f(w, i); };
  ops.kashiwara_e = [](const Word& w, int i) { return qcrystal::kashiwara_e(w, i); };
  ops.quasi_f = [](const Word& w, int i) { return qcrystal::quasi_kashiwara_f(w, i); };
  ops.quasi_e = [](const Word& w, int i) { return qcrystal::quasi_kashiwara_e(w, i); };
  ops.plac_insert = [](const Word& w) { return qcrystal::schensted_insert(w); };
  ops.hypo_insert = [](const Word& w) { return qcrystal::hypoplactic_insert(w); };
  return ops;
}

std::vector<Word> words_up_to(int n, int max_length) {
  std::vector<Word> out{Word()};
  if (n < 1) return out;
  for (int len = 1; len <= max_length; ++len) {
    auto layer = all_words(n, static_cast<std::size_t>(len));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::string op_text(const char* op, int i, const Word& w) {
  return std::string(op) + "_" + std::to_string(i) + "(" + w.str() + ")";
}

std::string show(const std::optional<Word>& w) { return w ? w->str() : "undefined"; }

/// Index of the cell in row-major order, which is also its diagonal minus one.
int row_major_index(const QuasiRibbonTableau& t, Cell c) {
  auto offsets = t.column_offsets();
  int index = 0;
  for (int r = 0; r < c.row; ++r) index += static_cast<int>(t.rows()[r].size());
  return index + c.col - offsets[c.row];
}

/// Diagonal (1-based) of the single letter where a and b differ.
int altered_diagonal(const QuasiRibbonTableau& t, const Word& a, const Word& b) {
  auto cells = column_reading_cells(t);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] != b[p]) return row_major_index(t, cells[p]) + 1;
  }
  return 0;
}

std::vector<int> padded_counts(const Evaluation& ev, int n) {
  std::vector<int> c = ev.counts();
  c.resize(static_cast<std::size_t>(std::max<int>(n, static_cast<int>(c.size()))), 0);
  return c;
}

long long hook_count(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  long long num = 1;
  for (int k = 2; k <= lambda.weight(); ++k) num *= k;
  long long den = 1;
  for (std::size_t r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      den *= (lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
    }
  }
  return num / den;
}

std::vector<Composition> compositions_up_to(int max_weight) {
  std::vector<Composition> out;
  for (int m = 1; m <= max_weight; ++m) {
    auto layer = compositions_of(m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int m = 1; m <= max_weight; ++m) {
    auto layer = partitions_of(m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

namespace checks {

Counterexample evaluation_additive(int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    if (evaluation(w).total() != static_cast<int>(w.size())) return "ev(" + w.str() + ") total";
    for (std::size_t k = 0; k <= w.size(); ++k) {
      Word u(std::vector<Letter>(w.letters().begin(), w.letters().begin() + k));
      Word v(std::vector<Letter>(w.letters().begin() + k, w.letters().end()));
      if (evaluation(u) + evaluation(v) != evaluation(w)) {
        return "ev(" + u.str() + ") + ev(" + v.str() + ") != ev(" + w.str() + ")";
      }
    }
  }
  return std::nullopt;
}

Counterexample schutzenberger_involution(int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    if (schutzenberger(schutzenberger(w, n), n) != w) return "word " + w.str();
  }
  return std::nullopt;
}

Counterexample conjugate_reorder(int max_weight) {
  for (const Composition& alpha : compositions_up_to(max_weight)) {
    Partition target = conjugate(alpha);
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end());
    do {
      if (conjugate(Composition(parts)) != target) {
        return "conjugate of " + Composition(parts).str() + " vs " + alpha.str();
      }
    } while (std::next_permutation(parts.begin(), parts.end()));
  }
  return std::nullopt;
}

Counterexample refinement_count(int max_weight) {
  for (const Composition& alpha : compositions_up_to(max_weight)) {
    std::size_t expected = 1;
    for (int p : alpha.parts()) expected <<= (p - 1);
    auto refs = refinements(alpha);
    std::set<Composition> distinct(refs.begin(), refs.end());
    if (refs.size() != expected || distinct.size() != expected) {
      return "refinements of " + alpha.str() + ": " + std::to_string(refs.size());
    }
  }
  return std::nullopt;
}

Counterexample syt_hook_length(int max_weight) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    auto syt = enumerate_syt(lambda);
    if (static_cast<long long>(syt.size()) != hook_count(lambda)) {
      return "SYT count of " + lambda.str() + " is " + std::to_string(syt.size());
    }
  }
  return std::nullopt;
}

Counterexample parsing_type(int max_entry, int max_weight) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    for (const auto& t : enumerate_young_tableaux(lambda, max_entry)) {
      auto p = minimal_parsing(t);
      if (p.type != descent_composition(standardize(t)) || !is_valid_parsing(t, p)) {
        return "minimal parsing of tableau read " + column_reading(t).str();
      }
    }
  }
  return std::nullopt;
}

Counterexample plac_reading_roundtrip(const OperatorTable& ops, int max_entry, int max_weight) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    for (const auto& t : enumerate_young_tableaux(lambda, max_entry)) {
      if (ops.plac_insert(column_reading(t)) != t) {
        return "P_plac of column reading " + column_reading(t).str();
      }
    }
  }
  return std::nullopt;
}

Counterexample hypo_reading_roundtrip(const OperatorTable& ops, int max_entry, int max_weight) {
  for (const Composition& sigma : compositions_up_to(max_weight)) {
    for (const auto& t : enumerate_quasi_ribbons(sigma, max_entry)) {
      if (ops.hypo_insert(column_reading(t)) != t) {
        return "P_hypo of column reading " + column_reading(t).str();
      }
    }
  }
  return std::nullopt;
}

Counterexample congruence_evaluation(const OperatorTable& ops, int n, int max_length) {
  std::map<YoungTableau, Evaluation> plac;
  std::map<QuasiRibbonTableau, Evaluation> hypo;
  for (const Word& w : words_up_to(n, max_length)) {
    Evaluation ev = evaluation(w);
    auto [p, p_new] = plac.try_emplace(ops.plac_insert(w), ev);
    if (!p_new && p->second != ev) return "plactic class of " + w.str();
    auto [h, h_new] = hypo.try_emplace(ops.hypo_insert(w), ev);
    if (!h_new && h->second != ev) return "hypoplactic class of " + w.str();
  }
  return std::nullopt;
}

Counterexample quasi_inside_kashiwara(const OperatorTable& ops, int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    for (int i = 1; i < n; ++i) {
      if (auto q = ops.quasi_f(w, i); q && ops.kashiwara_f(w, i) != q) {
        return op_text("f", i, w) + " = " + q->str() + " but Kashiwara gives " +
               show(ops.kashiwara_f(w, i));
      }
      if (auto q = ops.quasi_e(w, i); q && ops.kashiwara_e(w, i) != q) {
        return op_text("e", i, w) + " = " + q->str() + " but Kashiwara gives " +
               show(ops.kashiwara_e(w, i));
      }
    }
  }
  return std::nullopt;
}

Counterexample operators_inverse(const OperatorTable& ops, int n, int max_length) {
  using Op = std::function<std::optional<Word>(const Word&, int)>;
  auto pair_check = [&](const Op& f, const Op& e, const char* family) -> Counterexample {
    for (const Word& w : words_up_to(n, max_length)) {
      for (int i = 1; i < n; ++i) {
        if (auto v = f(w, i); v && e(*v, i) != w) {
          return std::string(family) + " e_" + std::to_string(i) + " does not undo " +
                 op_text("f", i, w);
        }
        if (auto v = e(w, i); v && f(*v, i) != w) {
          return std::string(family) + " f_" + std::to_string(i) + " does not undo " +
                 op_text("e", i, w);
        }
      }
    }
    return std::nullopt;
  };
  if (auto bad = pair_check(ops.kashiwara_f, ops.kashiwara_e, "Kashiwara")) return bad;
  return pair_check(ops.quasi_f, ops.quasi_e, "quasi-Kashiwara");
}

Counterexample f_shifts_evaluation(const OperatorTable& ops, int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    for (int i = 1; i < n; ++i) {
      auto v = ops.kashiwara_f(w, i);
      if (!v) continue;
      auto before = padded_counts(evaluation(w), n);
      auto after = padded_counts(evaluation(*v), n);
      --before[i - 1];
      ++before[i];
      if (before != after) return "evaluation of " + op_text("f", i, w);
    }
  }
  return std::nullopt;
}

Counterexample quasi_actions_keep_parsing(const OperatorTable& ops, int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    auto before = minimal_parsing(ops.plac_insert(w));
    for (int i = 1; i < n; ++i) {
      if (auto q = ops.quasi_f(w, i)) {
        if (minimal_parsing(ops.plac_insert(*q)) != before) {
          return "quasi-Kashiwara " + op_text("f", i, w) + " changes the minimal parsing";
        }
      } else if (auto k = ops.kashiwara_f(w, i)) {
        if (minimal_parsing(ops.plac_insert(*k)) == before) {
          return "strict " + op_text("f", i, w) + " keeps the minimal parsing";
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample schutzenberger_conjugation(const OperatorTable& ops, int n, int max_length) {
  for (const Word& u : words_up_to(n, max_length)) {
    for (int i = 1; i < n; ++i) {
      auto v = ops.quasi_f(u, i);
      if (!v) continue;
      auto back = ops.quasi_f(schutzenberger(*v, n), n - i);
      if (back != schutzenberger(u, n)) {
        return op_text("f", i, u) + " = " + v->str() + " but f_" + std::to_string(n - i) +
               " of its conjugate is " + show(back);
      }
    }
  }
  return std::nullopt;
}

Counterexample diagonal_inverse(int max_size, int max_entry) {
  for (int m = 1; m <= max_size; ++m) {
    for (const auto& q : enumerate_quasi_arrays(max_entry, m)) {
      for (int k = 1; k <= m + 1; ++k) {
        auto d = td(q, k);
        auto c = tc(q, k);
        std::string where = "k=" + std::to_string(k) + " on " + Composition(q.first_row()).str();
        if (k > m && (d || c)) return "operator defined beyond the size: " + where;
        if (d && tc(*d, k) != q) return "tc does not undo td: " + where;
        if (c && td(*c, k) != q) return "td does not undo tc: " + where;
      }
    }
  }
  return std::nullopt;
}

Counterexample diagonal_matches_quasi_kashiwara(const OperatorTable& ops, int max_size,
                                                int max_entry) {
  for (int m = 1; m <= max_size; ++m) {
    for (const auto& q : enumerate_quasi_arrays(max_entry, m)) {
      for (const Composition& sigma : compositions_of(m)) {
        QuasiRibbonTableau t = pickqrt(q, sigma);
        Word w = column_reading(t);
        for (int k = 1; k <= m; ++k) {
          int l = t.entries()[k - 1];
          std::string where = "k=" + std::to_string(k) + ", sigma=" + sigma.str() + ", Q=" +
                              Composition(q.first_row()).str();
          std::optional<Word> e = l >= 2 ? ops.quasi_e(w, l - 1) : std::nullopt;
          bool e_here = e && altered_diagonal(t, w, *e) == k;
          auto c = tc(q, k);
          if (c.has_value() != e_here) return "tc definedness mismatch at " + where;
          if (c && pickqrt(*c, sigma) != ops.hypo_insert(*e)) return "tc image mismatch at " + where;

          std::optional<Word> f = ops.quasi_f(w, l);
          bool f_here = f && altered_diagonal(t, w, *f) == k;
          auto d = td(q, k);
          if (d.has_value() != f_here) return "td definedness mismatch at " + where;
          if (d && pickqrt(*d, sigma) != ops.hypo_insert(*f)) return "td image mismatch at " + where;
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample direct_transport_agrees(int max_weight, int max_entry) {
  for (const Composition& sigma : compositions_up_to(max_weight)) {
    auto targets = compositions_of(sigma.weight());
    for (const auto& t : enumerate_quasi_ribbons(sigma, max_entry)) {
      QuasiArray q = genqa(t);
      for (const Composition& tau : targets) {
        if (direct_transport(t, tau) != pickqrt(q, tau)) {
          return "transport of " + column_reading(t).str() + " to " + tau.str();
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample phi_genqa_isomorphism(int max_size, int max_rank) {
  for (int m = 1; m <= max_size; ++m) {
    for (int q = 1; q <= max_rank; ++q) {
      LabeledDigraph delta = build_delta(q, m);
      for (const Composition& sigma : compositions_of(m)) {
        int rank = q + static_cast<int>(sigma.length()) - 1;
        LabeledDigraph gamma = build_shape_component(sigma, rank);
        std::string where = "sigma=" + sigma.str() + ", q=" + std::to_string(q);
        auto phi = transport_map(delta, gamma);
        auto gen = transport_map(gamma, delta);
        if (!phi || !gen) return "Phi or genqa leaves the target graph at " + where;
        if (!is_isomorphism(delta, gamma, *phi, false, false)) {
          return "Phi is not an isomorphism at " + where;
        }
        for (std::size_t v = 0; v < delta.size(); ++v) {
          if ((*gen)[(*phi)[v]] != v) return "genqa does not invert Phi at " + where;
        }
        for (const Edge& e : delta.edges()) {
          int expected = pickqrt(std::get<QuasiArray>(delta.vertex(e.src)), sigma).entries()[e.label - 1];
          bool found = false;
          for (std::size_t k : gamma.out_edges((*phi)[e.src])) {
            const Edge& h = gamma.edges()[k];
            found = found || (h.dst == (*phi)[e.dst] && h.label == expected);
          }
          if (!found) return "label rule fails on a td_" + std::to_string(e.label) + " edge at " + where;
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample psi_isomorphism(int max_size, int max_rank) {
  std::map<std::pair<Composition, int>, LabeledDigraph> cache;
  auto graph = [&](const Composition& sigma, int rank) -> const LabeledDigraph& {
    auto it = cache.find({sigma, rank});
    if (it == cache.end()) it = cache.emplace(std::pair{sigma, rank}, build_shape_component(sigma, rank)).first;
    return it->second;
  };
  auto check = [&](const Composition& s, int rs, const Composition& t, int rt) -> Counterexample {
    const LabeledDigraph& a = graph(s, rs);
    const LabeledDigraph& b = graph(t, rt);
    auto map = transport_map(a, b);
    if (!map || !verify_candidate(a, b, *map)) {
      return "Psi from " + s.str() + " at rank " + std::to_string(rs) + " to " + t.str() +
             " at rank " + std::to_string(rt);
    }
    return std::nullopt;
  };
  for (int m = 1; m <= max_size; ++m) {
    auto comps = compositions_of(m);
    for (const Composition& sigma : comps) {
      for (const Composition& tau : comps) {
        int ls = static_cast<int>(sigma.length()), lt = static_cast<int>(tau.length());
        for (int q = 1; q <= max_rank; ++q) {
          if (auto bad = check(sigma, q + ls - 1, tau, q + lt - 1)) return bad;
        }
        if (ls != lt) continue;
        for (int n = ls; n <= max_rank; ++n) {
          if (auto bad = check(sigma, n, tau, n)) return bad;
        }
      }
    }
  }
  return std::nullopt;
}

Counterexample hypo_inside_plac(int n, int max_length) {
  std::set<Word> covered;
  for (const Word& seed : words_up_to(n, max_length)) {
    if (covered.count(seed)) continue;
    LabeledDigraph plac = build_component(seed, GraphKind::plac, n);
    for (const Vertex& v : plac.vertices()) covered.insert(std::get<Word>(v));
    std::set<Word> seen;
    for (const Vertex& v : plac.vertices()) {
      const Word& w = std::get<Word>(v);
      if (seen.count(w)) continue;
      LabeledDigraph hypo = build_component(w, GraphKind::hypo, n);
      for (const Vertex& h : hypo.vertices()) {
        seen.insert(std::get<Word>(h));
        if (!plac.find(h)) return "hypo component of " + w.str() + " leaves the crystal component";
      }
      for (const Edge& e : hypo.edges()) {
        std::size_t a = *plac.find(hypo.vertex(e.src));
        std::size_t b = *plac.find(hypo.vertex(e.dst));
        bool found = false;
        for (std::size_t k : plac.out_edges(a)) {
          found = found || (plac.edges()[k].dst == b && plac.edges()[k].label == e.label);
        }
        if (!found) return "hypo edge missing from the crystal component of " + seed.str();
      }
    }
  }
  return std::nullopt;
}

Counterexample isolated_vertices(int n, int max_length) {
  for (const Word& w : words_up_to(n, max_length)) {
    if (static_cast<int>(hypoplactic_insert(w).rows().size()) != n) continue;
    LabeledDigraph g = build_component(w, GraphKind::hypo, n);
    if (g.size() != 1 || !g.edges().empty()) return "word " + w.str() + " is not isolated";
  }
  return std::nullopt;
}

Counterexample schutzenberger_symmetry(int n, int max_length) {
  std::set<Word> covered;
  for (const Word& w : words_up_to(n, max_length)) {
    if (covered.count(w)) continue;
    LabeledDigraph g = build_component(w, GraphKind::hypo, n);
    for (const Vertex& v : g.vertices()) covered.insert(std::get<Word>(v));
    if (!qcrystal::schutzenberger_symmetry(g)) return "component of " + w.str();
  }
  return std::nullopt;
}

Counterexample hypo_shape_counts(int max_rank, int max_size) {
  for (int n = 1; n <= max_rank; ++n) {
    for (int m = 1; m <= max_size; ++m) {
      long long expected = 1;
      for (int k = 1; k <= m; ++k) expected = expected * (n + k - 1) / k;
      auto size = build_shape_component(Composition{m}, n).size();
      if (static_cast<long long>(size) != expected) {
        return "Gamma(hypo_" + std::to_string(n) + ", (" + std::to_string(m) + ")) has " +
               std::to_string(size) + " vertices";
      }
    }
  }
  return std::nullopt;
}

Counterexample congruence_iff_isomorphism(GraphKind kind, int n, int max_length) {
  auto words = words_up_to(n, max_length);
  std::vector<LabeledDigraph> components;
  std::map<Word, std::pair<std::size_t, std::size_t>> where;
  for (const Word& w : words) {
    if (where.count(w)) continue;
    components.push_back(build_component(w, kind, n));
    const LabeledDigraph& g = components.back();
    for (std::size_t v = 0; v < g.size(); ++v) {
      where.emplace(std::get<Word>(g.vertex(v)), std::pair{components.size() - 1, v});
    }
  }
  for (const Word& u : words) {
    auto [cu, iu] = where.at(u);
    for (const Word& v : words) {
      auto [cv, iv] = where.at(v);
      bool congruent =
          kind == GraphKind::hypo ? hypoplactic_equivalent(u, v) : plactic_equivalent(u, v);
      bool iso = isomorphic(components[cu], components[cv], IsoMode::labelled_weighted,
                            std::pair{iu, iv})
                     .has_value();
      if (congruent != iso) {
        return u.str() + " and " + v.str() + (congruent ? " congruent without" : " not congruent but with") +
               " an isomorphism";
      }
    }
  }
  return std::nullopt;
}

Counterexample gessel_identity(int max_weight, int max_vars) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    auto expansion = schur_to_fundamental(lambda);
    for (int n = 1; n <= max_vars; ++n) {
      if (schur_poly(lambda, n) != expansion.evaluate(n)) {
        return "s_" + lambda.str() + " on " + std::to_string(n) + " variables";
      }
    }
  }
  return std::nullopt;
}

Counterexample character_identity(int max_weight, int max_vars) {
  for (const Composition& sigma : compositions_up_to(max_weight)) {
    for (int n = 1; n <= max_vars; ++n) {
      if (character(build_shape_component(sigma, n)) != fundamental_poly(sigma, n)) {
        return "character of Gamma(hypo_" + std::to_string(n) + ", " + sigma.str() + ")";
      }
    }
  }
  return std::nullopt;
}

Counterexample fundamental_routes(int max_weight, int max_vars) {
  for (const Composition& alpha : compositions_up_to(max_weight)) {
    for (int n = 1; n <= max_vars; ++n) {
      if (fundamental_poly(alpha, n) != fundamental_poly_via_ribbons(alpha, n)) {
        return "F_" + alpha.str() + " on " + std::to_string(n) + " variables";
      }
    }
  }
  return std::nullopt;
}

Counterexample schur_reorder(int max_weight) {
  for (const Composition& alpha : compositions_up_to(max_weight)) {
    verify_schur_reorder(alpha);
    if (schur_to_fundamental(sort_to_partition(alpha)).multiplicity(alpha) < 1) {
      return "F_" + alpha.str() + " missing from s_" + sort_to_partition(alpha).str();
    }
  }
  return std::nullopt;
}

Counterexample xi_component_inside_plac(int max_weight) {
  for (const Composition& alpha : compositions_up_to(max_weight)) {
    int n = alpha.weight();
    QuasiRibbonTableau q = highest_weight_quasi_ribbon(alpha);
    Word seed = column_reading(xi_map(q));
    if (hypoplactic_insert(seed) != q) return "P_hypo of the xi reading for " + alpha.str();
    LabeledDigraph hypo = build_component(seed, GraphKind::hypo, n);
    LabeledDigraph plac = build_component(seed, GraphKind::plac, n);
    for (const Vertex& v : hypo.vertices()) {
      if (!plac.find(v)) return "vertex " + vertex_key(v) + " for " + alpha.str();
    }
  }
  return std::nullopt;
}

Counterexample xi_preserves_evaluation(int max_weight, int max_entry) {
  for (const Composition& sigma : compositions_up_to(max_weight)) {
    for (const auto& t : enumerate_quasi_ribbons(sigma, max_entry)) {
      if (xi_map(t).evaluation() != t.evaluation()) return "xi of " + column_reading(t).str();
    }
  }
  return std::nullopt;
}

Counterexample xi_intertwining(int max_weight, int max_entry) {
  for (const Composition& sigma : compositions_up_to(max_weight)) {
    for (const auto& t : enumerate_quasi_ribbons(sigma, max_entry)) {
      for (int i = 1; i < max_entry; ++i) {
        if (!quasi_kashiwara_f(t, i)) continue;
        if (!xi_intertwines(t, i)) return "f_" + std::to_string(i) + " on " + column_reading(t).str();
      }
    }
  }
  return std::nullopt;
}

Counterexample even_cycles(int max_weight) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    SkeletonGraph skel = skeleton(lambda);
    for (int s = 1; s <= lambda.weight(); ++s) {
      if (!check_even_cycles(skel, s)) return "H_" + std::to_string(s) + " of " + lambda.str();
    }
  }
  return std::nullopt;
}

Counterexample skeleton_rank_independent(int max_weight) {
  for (const Partition& lambda : partitions_up_to(max_weight)) {
    int n = min_skeleton_rank(lambda);
    if (skeleton(lambda, n).edges != skeleton(lambda, n + 1).edges) {
      return "skeleton of " + lambda.str() + " at ranks " + std::to_string(n) + " and " +
             std::to_string(n + 1);
    }
  }
  return std::nullopt;
}

}  // namespace checks

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  for (const CheckResult& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.bounds << "] " << c.seconds << "s";
    if (!c.passed) os << "  counterexample: " << c.counterexample;
    os << '\n';
  }
  os << (passed() ? "all checks passed" : "verification FAILED") << '\n';
  return os.str();
}

VerificationReport run_verify(int max_weight, int max_rank, const OperatorTable& ops,
                              unsigned threads) {
  if (max_weight < 1 || max_weight > 8) throw ParameterError("max weight must be in 1..8");
  if (max_rank < 1 || max_rank > 6) throw ParameterError("max rank must be in 1..6");
  const int w = max_weight, r = max_rank;
  auto cap = [](int bound, int limit) { return std::min(bound, limit); };
  auto bounds = [](std::initializer_list<std::pair<const char*, int>> items) {
    std::string out;
    for (const auto& [key, value] : items) {
      if (!out.empty()) out += ", ";
      out += std::string(key) + "<=" + std::to_string(value);
    }
    return out;
  };

  struct Job {
    std::string name;
    std::string bounds;
    std::function<Counterexample()> run;
  };
  std::vector<Job> jobs;
  auto add = [&](std::string name, std::string b, std::function<Counterexample()> run) {
    jobs.push_back({std::move(name), std::move(b), std::move(run)});
  };

  int n4 = cap(r, 4), n3 = cap(r, 3), n5 = cap(r, 5);
  add("evaluation-additive", bounds({{"length", cap(w, 8)}, {"rank", n4}}),
      [=] { return checks::evaluation_additive(n4, cap(w, 8)); });
  add("schutzenberger-involution", bounds({{"length", cap(w, 6)}, {"rank", n4}}),
      [=] { return checks::schutzenberger_involution(n4, cap(w, 6)); });
  add("conjugate-reorder", bounds({{"weight", cap(w, 7)}}),
      [=] { return checks::conjugate_reorder(cap(w, 7)); });
  add("refinement-count", bounds({{"weight", cap(w, 7)}}),
      [=] { return checks::refinement_count(cap(w, 7)); });
  add("syt-hook-length", bounds({{"weight", cap(w, 8)}}),
      [=] { return checks::syt_hook_length(cap(w, 8)); });
  add("parsing-type", bounds({{"weight", cap(w, 6)}, {"entries", n4}}),
      [=] { return checks::parsing_type(n4, cap(w, 6)); });
  add("plac-reading-roundtrip", bounds({{"weight", cap(w, 6)}, {"entries", n4}}),
      [=, &ops] { return checks::plac_reading_roundtrip(ops, n4, cap(w, 6)); });
  add("hypo-reading-roundtrip", bounds({{"weight", cap(w, 6)}, {"entries", n5}}),
      [=, &ops] { return checks::hypo_reading_roundtrip(ops, n5, cap(w, 6)); });
  add("congruence-evaluation", bounds({{"length", cap(w, 6)}, {"rank", n4}}),
      [=, &ops] { return checks::congruence_evaluation(ops, n4, cap(w, 6)); });
  add("quasi-inside-kashiwara", bounds({{"length", cap(w, 6)}, {"rank", n4}}),
      [=, &ops] { return checks::quasi_inside_kashiwara(ops, n4, cap(w, 6)); });
  add("operators-inverse", bounds({{"length", cap(w, 6)}, {"rank", n4}}),
      [=, &ops] { return checks::operators_inverse(ops, n4, cap(w, 6)); });
  add("f-shifts-evaluation", bounds({{"length", cap(w, 6)}, {"rank", n4}}),
      [=, &ops] { return checks::f_shifts_evaluation(ops, n4, cap(w, 6)); });
  add("quasi-actions-keep-parsing", bounds({{"length", cap(w, 5)}, {"rank", n4}}),
      [=, &ops] { return checks::quasi_actions_keep_parsing(ops, n4, cap(w, 5)); });
  add("schutzenberger-conjugation", bounds({{"length", cap(w, 5)}, {"rank", n4}}),
      [=, &ops] { return checks::schutzenberger_conjugation(ops, n4, cap(w, 5)); });
  add("diagonal-inverse", bounds({{"size", cap(w, 4)}, {"entries", n4}}),
      [=] { return checks::diagonal_inverse(cap(w, 4), n4); });
  add("diagonal-quasi-kashiwara", bounds({{"size", cap(w, 4)}, {"entries", n4}}),
      [=, &ops] { return checks::diagonal_matches_quasi_kashiwara(ops, cap(w, 4), n4); });
  add("direct-transport", bounds({{"weight", cap(w, 5)}, {"entries", n5}}),
      [=] { return checks::direct_transport_agrees(cap(w, 5), n5); });
  add("phi-genqa-isomorphism", bounds({{"size", cap(w, 5)}, {"rank", n4}}),
      [=] { return checks::phi_genqa_isomorphism(cap(w, 5), n4); });
  add("psi-isomorphism", bounds({{"weight", cap(w, 5)}, {"rank", n4}}),
      [=] { return checks::psi_isomorphism(cap(w, 5), n4); });
  add("hypo-inside-plac", bounds({{"length", cap(w, 5)}, {"rank", n3}}),
      [=] { return checks::hypo_inside_plac(n3, cap(w, 5)); });
  add("isolated-vertices", bounds({{"length", cap(w, 5)}, {"rank", n3}}),
      [=] { return checks::isolated_vertices(n3, cap(w, 5)); });
  add("schutzenberger-symmetry", bounds({{"length", cap(w, 5)}, {"rank", n4}}),
      [=] { return checks::schutzenberger_symmetry(n4, cap(w, 5)); });
  add("hypo-shape-counts", bounds({{"size", cap(w, 6)}, {"rank", cap(r, 6)}}),
      [=] { return checks::hypo_shape_counts(cap(r, 6), cap(w, 6)); });
  add("hypo-congruence-isomorphism", bounds({{"length", cap(w, 5)}, {"rank", n3}}),
      [=] { return checks::congruence_iff_isomorphism(GraphKind::hypo, n3, cap(w, 5)); });
  add("plac-congruence-isomorphism", bounds({{"length", cap(w, 5)}, {"rank", n3}}),
      [=] { return checks::congruence_iff_isomorphism(GraphKind::plac, n3, cap(w, 5)); });
  add("gessel-identity", bounds({{"weight", cap(w, 7)}, {"vars", n5}}),
      [=] { return checks::gessel_identity(cap(w, 7), n5); });
  add("character-identity", bounds({{"weight", cap(w, 6)}, {"vars", n5}}),
      [=] { return checks::character_identity(cap(w, 6), n5); });
  add("fundamental-routes", bounds({{"weight", cap(w, 7)}, {"vars", n5}}),
      [=] { return checks::fundamental_routes(cap(w, 7), n5); });
  add("schur-reorder", bounds({{"weight", cap(w, 8)}}),
      [=] { return checks::schur_reorder(cap(w, 8)); });
  add("xi-component-inside-plac", bounds({{"weight", cap(w, 6)}}),
      [=] { return checks::xi_component_inside_plac(cap(w, 6)); });
  add("xi-preserves-evaluation", bounds({{"weight", cap(w, 5)}, {"entries", n5}}),
      [=] { return checks::xi_preserves_evaluation(cap(w, 5), n5); });
  add("xi-intertwining", bounds({{"weight", cap(w, 5)}, {"entries", n5}}),
      [=] { return checks::xi_intertwining(cap(w, 5), n5); });
  add("even-cycles", bounds({{"weight", cap(w, 7)}}),
      [=] { return checks::even_cycles(cap(w, 7)); });
  add("skeleton-rank-independent", bounds({{"weight", cap(w, 6)}}),
      [=] { return checks::skeleton_rank_independent(cap(w, 6)); });

  VerificationReport report;
  report.checks.resize(jobs.size());
  auto execute = [&](std::size_t k) {
    CheckResult& out = report.checks[k];
    out.name = jobs[k].name;
    out.bounds = jobs[k].bounds;
    auto start = std::chrono::steady_clock::now();
    try {
      Counterexample bad = jobs[k].run();
      out.passed = !bad;
      out.counterexample = bad.value_or("");
    } catch (const std::exception& ex) {
      out.passed = false;
      out.counterexample = std::string("exception: ") + ex.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) execute(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) execute(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace qcrystal
