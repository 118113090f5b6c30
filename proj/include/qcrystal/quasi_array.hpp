#pragma once

// Quasi-arrays: size-m staircase arrays whose diagonals are runs of
// consecutive letters. A quasi-array is determined by its first row, so
// only that row is stored.

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/tableaux.hpp"
#include "qcrystal/words.hpp"

namespace qcrystal {

class QuasiArray {
 public:
  QuasiArray() = default;
  /// first_row must be weakly increasing with positive entries.
  explicit QuasiArray(std::vector<Letter> first_row);

  int size() const { return static_cast<int>(first_row_.size()); }
  const std::vector<Letter>& first_row() const { return first_row_; }

  /// Entry in 1-based row i, column j (j <= size - i + 1).
  Letter entry(int i, int j) const { return first_row_[i + j - 2] + i - 1; }

  /// Membership in QA_n: the last first-row entry is at most n.
  bool in_rank(int n) const { return first_row_.empty() || first_row_.back() <= n; }

  Evaluation evaluation() const;

  friend bool operator==(const QuasiArray&, const QuasiArray&) = default;
  friend auto operator<=>(const QuasiArray&, const QuasiArray&) = default;

 private:
  std::vector<Letter> first_row_;
};

/// The quasi-ribbon of shape sigma inside q that starts at the top-left cell.
QuasiRibbonTableau pickqrt(const QuasiArray& q, const Composition& sigma);

/// The unique quasi-array q with pickqrt(q, shape(t)) == t.
QuasiArray genqa(const QuasiRibbonTableau& t);

/// Add 1 along the k-th diagonal, when the result is still a quasi-array.
std::optional<QuasiArray> td(const QuasiArray& q, int k);
/// Subtract 1 along the k-th diagonal, when the result is still a quasi-array.
std::optional<QuasiArray> tc(const QuasiArray& q, int k);

/// pickqrt(genqa(t), tau), computed by shifting each diagonal's entry by
/// the difference between its row in tau and its row in shape(t).
QuasiRibbonTableau direct_transport(const QuasiRibbonTableau& t, const Composition& tau);

/// 1-based row of each diagonal (1..m) in a quasi-ribbon of shape sigma.
std::vector<int> diagonal_rows(const Composition& sigma);

/// All quasi-arrays of size m in QA_n.
std::vector<QuasiArray> enumerate_quasi_arrays(int n, int m);

std::string render(const QuasiArray& q);

}  // namespace qcrystal
