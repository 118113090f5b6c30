#pragma once

// Mechanical checks of the structural theorems at desk scale.
//
// Every check returns std::nullopt on success or a description of the
// first counterexample found. run_verify() runs all of them with bounds
// capped by its arguments and collects a report.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcrystal/graph.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

using Counterexample = std::optional<std::string>;

/// The word-level operators the checks exercise. Replacing an entry lets a
/// test confirm that a broken operator is caught.
struct OperatorTable {
  std::function<std::optional<Word>(const Word&, int)> kashiwara_f;
  std::function<std::optional<Word>(const Word&, int)> kashiwara_e;
  std::function<std::optional<Word>(const Word&, int)> quasi_f;
  std::function<std::optional<Word>(const Word&, int)> quasi_e;
  std::function<YoungTableau(const Word&)> plac_insert;
  std::function<QuasiRibbonTableau(const Word&)> hypo_insert;

  static OperatorTable standard();
};

/// All words of length 0..max_length over {1..n}, shortest first.
std::vector<Word> words_up_to(int n, int max_length);

namespace checks {

Counterexample evaluation_additive(int n, int max_length);
Counterexample schutzenberger_involution(int n, int max_length);
Counterexample conjugate_reorder(int max_weight);
Counterexample refinement_count(int max_weight);
Counterexample syt_hook_length(int max_weight);
Counterexample parsing_type(int max_entry, int max_weight);

Counterexample plac_reading_roundtrip(const OperatorTable& ops, int max_entry, int max_weight);
Counterexample hypo_reading_roundtrip(const OperatorTable& ops, int max_entry, int max_weight);
Counterexample congruence_evaluation(const OperatorTable& ops, int n, int max_length);

Counterexample quasi_inside_kashiwara(const OperatorTable& ops, int n, int max_length);
Counterexample operators_inverse(const OperatorTable& ops, int n, int max_length);
Counterexample f_shifts_evaluation(const OperatorTable& ops, int n, int max_length);
Counterexample quasi_actions_keep_parsing(const OperatorTable& ops, int n, int max_length);
Counterexample schutzenberger_conjugation(const OperatorTable& ops, int n, int max_length);

Counterexample diagonal_inverse(int max_size, int max_entry);
Counterexample diagonal_matches_quasi_kashiwara(const OperatorTable& ops, int max_size,
                                                int max_entry);
Counterexample direct_transport_agrees(int max_weight, int max_entry);

/// Phi_sigma and genqa between Delta(QA_q, m) and Gamma(hypo_{q+l(sigma)-1}, sigma),
/// including the label rule, for m <= max_size and q <= max_rank.
Counterexample phi_genqa_isomorphism(int max_size, int max_rank);
/// Psi_{sigma,tau} from rank q+l(sigma)-1 to rank q+l(tau)-1, and at a common
/// rank when l(sigma) = l(tau).
Counterexample psi_isomorphism(int max_size, int max_rank);

Counterexample hypo_inside_plac(int n, int max_length);
Counterexample isolated_vertices(int n, int max_length);
Counterexample schutzenberger_symmetry(int n, int max_length);
Counterexample hypo_shape_counts(int max_rank, int max_size);
/// u and v congruent iff a labelled weighted isomorphism of their
/// components sends u to v, for all pairs of words.
Counterexample congruence_iff_isomorphism(GraphKind kind, int n, int max_length);

Counterexample gessel_identity(int max_weight, int max_vars);
Counterexample character_identity(int max_weight, int max_vars);
Counterexample fundamental_routes(int max_weight, int max_vars);
Counterexample schur_reorder(int max_weight);
/// Gamma(hypo_n, column reading of xi(Q_alpha)) sits inside the crystal
/// component of the same seed, n = weight.
Counterexample xi_component_inside_plac(int max_weight);
Counterexample xi_preserves_evaluation(int max_weight, int max_entry);
Counterexample xi_intertwining(int max_weight, int max_entry);

Counterexample even_cycles(int max_weight);
Counterexample skeleton_rank_independent(int max_weight);

}  // namespace checks

struct CheckResult {
  std::string name;
  std::string bounds;
  bool passed = false;
  std::string counterexample;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string str() const;
};

/// max_weight <= 8 and max_rank <= 6, both positive; otherwise
/// ParameterError. Checks may run on several threads; the report order is
/// fixed.
VerificationReport run_verify(int max_weight, int max_rank,
                              const OperatorTable& ops = OperatorTable::standard(),
                              unsigned threads = 1);

}  // namespace qcrystal
