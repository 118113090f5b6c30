#pragma once

// Young tableaux, standard Young tableaux and quasi-ribbon tableaux.

#include <compare>
#include <string>
#include <vector>

#include "qcrystal/words.hpp"

namespace qcrystal {

using Rows = std::vector<std::vector<Letter>>;

/// Zero-based (row, column) position of a cell.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Left-justified rows; rows weakly increase, columns strictly increase.
class YoungTableau {
 public:
  YoungTableau() = default;
  explicit YoungTableau(Rows rows);

  static bool is_valid(const Rows& rows);

  const Rows& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  Letter at(int row, int col) const { return rows_[row][col]; }
  Evaluation evaluation() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

 private:
  Rows rows_;
};

/// A Young tableau holding each of 1, ..., size exactly once.
class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  explicit StandardYoungTableau(YoungTableau tableau);
  explicit StandardYoungTableau(Rows rows) : StandardYoungTableau(YoungTableau(std::move(rows))) {}

  const YoungTableau& tableau() const { return tableau_; }
  const Rows& rows() const { return tableau_.rows(); }
  Partition shape() const { return tableau_.shape(); }
  int size() const { return tableau_.size(); }

  /// Row index holding each entry; index 0 is unused.
  std::vector<int> row_of_entry() const;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
  friend auto operator<=>(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  YoungTableau tableau_;
};

/// Rows of a quasi-ribbon diagram: each row starts in the column where the
/// previous row ends. Only the row contents are stored; offsets follow
/// from the shape.
class QuasiRibbonTableau {
 public:
  QuasiRibbonTableau() = default;
  explicit QuasiRibbonTableau(Rows rows);

  static bool is_valid(const Rows& rows);

  const Rows& rows() const { return rows_; }
  Composition shape() const;
  std::vector<int> column_offsets() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  Evaluation evaluation() const;

  /// Entries in row-major order; the t-th entry lies on diagonal t+1.
  std::vector<Letter> entries() const;

  friend bool operator==(const QuasiRibbonTableau&, const QuasiRibbonTableau&) = default;
  friend auto operator<=>(const QuasiRibbonTableau&, const QuasiRibbonTableau&) = default;

 private:
  Rows rows_;
};

struct MinimalParsing {
  std::vector<std::vector<Cell>> bands;
  Composition type;
  friend bool operator==(const MinimalParsing&, const MinimalParsing&) = default;
};

Word column_reading(const YoungTableau& t);
Word column_reading(const QuasiRibbonTableau& t);

/// Cells of the quasi-ribbon in column-reading order (position k of the
/// reading holds the entry of cell k).
std::vector<Cell> column_reading_cells(const QuasiRibbonTableau& t);

/// Bottom-to-top row reading.
Word row_reading(const YoungTableau& t);

StandardYoungTableau standardize(const YoungTableau& t);

Composition descent_composition(const StandardYoungTableau& s);
std::vector<int> descent_set(const StandardYoungTableau& s);

MinimalParsing minimal_parsing(const YoungTableau& t);

/// Checks the two band axioms and that the bands partition the cells.
bool is_valid_parsing(const YoungTableau& t, const MinimalParsing& p);

/// All standard Young tableaux of shape lambda, ordered lexicographically
/// by bottom-to-top row reading.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda);

/// All Young tableaux of shape lambda with entries in {1, ..., n}.
std::vector<YoungTableau> enumerate_young_tableaux(const Partition& lambda, int n);

/// All quasi-ribbon tableaux of shape sigma with entries in {1, ..., n}.
std::vector<QuasiRibbonTableau> enumerate_quasi_ribbons(const Composition& sigma, int n);

/// Row r (1-based) filled with r.
YoungTableau highest_weight_tableau(const Partition& lambda);
QuasiRibbonTableau highest_weight_quasi_ribbon(const Composition& sigma);

std::string render(const YoungTableau& t);
std::string render(const QuasiRibbonTableau& t);

}  // namespace qcrystal
