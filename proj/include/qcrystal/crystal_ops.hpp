#pragma once

// Kashiwara operators (bracketing rule) and quasi-Kashiwara operators on
// words, plus their transport to tableaux through column readings.
//
// Undefined actions return std::nullopt. Indices i < 1 are never defined.

#include <cstddef>
#include <optional>
#include <vector>

#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

/// Survivors of the +/- bracketing for index i: letters i become +,
/// letters i+1 become -, and factors "-+" are cancelled until none remain.
/// What is left reads +^phi -^epsilon.
struct BracketSignature {
  std::vector<std::size_t> plus_positions;
  std::vector<std::size_t> minus_positions;

  std::size_t plus_count() const { return plus_positions.size(); }
  std::size_t minus_count() const { return minus_positions.size(); }
};

BracketSignature rho(const Word& w, int i);

std::optional<Word> kashiwara_f(const Word& w, int i);
std::optional<Word> kashiwara_e(const Word& w, int i);

std::optional<Word> quasi_kashiwara_f(const Word& w, int i);
std::optional<Word> quasi_kashiwara_e(const Word& w, int i);

/// Position of the letter the operator would change, if defined.
std::optional<std::size_t> quasi_kashiwara_f_position(const Word& w, int i);
std::optional<std::size_t> quasi_kashiwara_e_position(const Word& w, int i);

/// True iff the Kashiwara operator f_i acts on w but the quasi-Kashiwara
/// operator does not.
bool is_strict_action(const Word& w, int i);

std::optional<YoungTableau> kashiwara_f(const YoungTableau& t, int i);
std::optional<YoungTableau> kashiwara_e(const YoungTableau& t, int i);
std::optional<QuasiRibbonTableau> quasi_kashiwara_f(const QuasiRibbonTableau& t, int i);
std::optional<QuasiRibbonTableau> quasi_kashiwara_e(const QuasiRibbonTableau& t, int i);

}  // namespace qcrystal
