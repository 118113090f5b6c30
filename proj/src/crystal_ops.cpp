#include "qcrystal/crystal_ops.hpp"

#include "qcrystal/insertion.hpp"

namespace qcrystal {

BracketSignature rho(const Word& w, int i) {
  BracketSignature sig;
  if (i < 1) return sig;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == i + 1) {
      sig.minus_positions.push_back(pos);
    } else if (w[pos] == i) {
      // A + cancels the nearest unmatched - to its left. Any unmatched +
      // is left of every unmatched -, so the two lists stay in order.
      if (!sig.minus_positions.empty()) {
        sig.minus_positions.pop_back();
      } else {
        sig.plus_positions.push_back(pos);
      }
    }
  }
  return sig;
}

std::optional<Word> kashiwara_f(const Word& w, int i) {
  BracketSignature sig = rho(w, i);
  if (sig.plus_positions.empty()) return std::nullopt;
  return w.with_letter(sig.plus_positions.back(), i + 1);
}

std::optional<Word> kashiwara_e(const Word& w, int i) {
  BracketSignature sig = rho(w, i);
  if (sig.minus_positions.empty()) return std::nullopt;
  return w.with_letter(sig.minus_positions.front(), i);
}

std::optional<std::size_t> quasi_kashiwara_f_position(const Word& w, int i) {
  if (i < 1 || contains_inversion(w, i)) return std::nullopt;
  for (std::size_t pos = w.size(); pos-- > 0;) {
    if (w[pos] == i) return pos;
  }
  return std::nullopt;
}

std::optional<std::size_t> quasi_kashiwara_e_position(const Word& w, int i) {
  if (i < 1 || contains_inversion(w, i)) return std::nullopt;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == i + 1) return pos;
  }
  return std::nullopt;
}

std::optional<Word> quasi_kashiwara_f(const Word& w, int i) {
  auto pos = quasi_kashiwara_f_position(w, i);
  if (!pos) return std::nullopt;
  return w.with_letter(*pos, i + 1);
}

std::optional<Word> quasi_kashiwara_e(const Word& w, int i) {
  auto pos = quasi_kashiwara_e_position(w, i);
  if (!pos) return std::nullopt;
  return w.with_letter(*pos, i);
}

bool is_strict_action(const Word& w, int i) {
  return kashiwara_f(w, i).has_value() && !quasi_kashiwara_f(w, i).has_value();
}

std::optional<YoungTableau> kashiwara_f(const YoungTableau& t, int i) {
  auto w = kashiwara_f(column_reading(t), i);
  if (!w) return std::nullopt;
  return schensted_insert(*w);
}

std::optional<YoungTableau> kashiwara_e(const YoungTableau& t, int i) {
  auto w = kashiwara_e(column_reading(t), i);
  if (!w) return std::nullopt;
  return schensted_insert(*w);
}

std::optional<QuasiRibbonTableau> quasi_kashiwara_f(const QuasiRibbonTableau& t, int i) {
  auto w = quasi_kashiwara_f(column_reading(t), i);
  if (!w) return std::nullopt;
  return hypoplactic_insert(*w);
}

std::optional<QuasiRibbonTableau> quasi_kashiwara_e(const QuasiRibbonTableau& t, int i) {
  auto w = quasi_kashiwara_e(column_reading(t), i);
  if (!w) return std::nullopt;
  return hypoplactic_insert(*w);
}

}  // namespace qcrystal
