#include "qcrystal/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qcrystal/errors.hpp"

namespace qcrystal {

namespace {

std::string rows_str(const Rows& rows) {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    os << '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ',';
      os << rows[r][c];
    }
    os << ']';
  }
  return os.str();
}

Evaluation rows_evaluation(const Rows& rows) {
  std::vector<int> counts;
  for (const auto& row : rows) {
    for (Letter a : row) {
      if (static_cast<std::size_t>(a) > counts.size()) counts.resize(a, 0);
      ++counts[a - 1];
    }
  }
  return Evaluation(std::move(counts));
}

int entry_width(const Rows& rows) {
  int width = 1;
  for (const auto& row : rows) {
    for (Letter a : row) width = std::max<int>(width, static_cast<int>(std::to_string(a).size()));
  }
  return width;
}

std::string pad(Letter a, int width) {
  std::string s = std::to_string(a);
  return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
}

}  // namespace

// ---------------------------------------------------------------- Young

YoungTableau::YoungTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_valid(rows_)) throw InvalidTableau("not a Young tableau: " + rows_str(rows_));
}

bool YoungTableau::is_valid(const Rows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

Partition YoungTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int YoungTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Evaluation YoungTableau::evaluation() const { return rows_evaluation(rows_); }

StandardYoungTableau::StandardYoungTableau(YoungTableau tableau) : tableau_(std::move(tableau)) {
  int n = tableau_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : tableau_.rows()) {
    for (Letter a : row) {
      if (a > n || seen[a]) {
        throw InvalidTableau("not a standard tableau: " + rows_str(tableau_.rows()));
      }
      seen[a] = true;
    }
  }
}

std::vector<int> StandardYoungTableau::row_of_entry() const {
  std::vector<int> where(static_cast<std::size_t>(size()) + 1, -1);
  const Rows& rows = tableau_.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Letter a : rows[r]) where[a] = static_cast<int>(r);
  }
  return where;
}

// ---------------------------------------------------------- quasi-ribbon

QuasiRibbonTableau::QuasiRibbonTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_valid(rows_)) throw InvalidTableau("not a quasi-ribbon tableau: " + rows_str(rows_));
}

bool QuasiRibbonTableau::is_valid(const Rows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
    }
    // The only shared column is the last cell of row r-1 above the first of row r.
    if (r > 0 && rows[r].front() <= rows[r - 1].back()) return false;
  }
  return true;
}

Composition QuasiRibbonTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Composition(std::move(parts));
}

std::vector<int> QuasiRibbonTableau::column_offsets() const {
  std::vector<int> offsets;
  int col = 0;
  for (const auto& row : rows_) {
    offsets.push_back(col);
    col += static_cast<int>(row.size()) - 1;
  }
  return offsets;
}

int QuasiRibbonTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Evaluation QuasiRibbonTableau::evaluation() const { return rows_evaluation(rows_); }

std::vector<Letter> QuasiRibbonTableau::entries() const {
  std::vector<Letter> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

// ------------------------------------------------------------- readings

Word column_reading(const YoungTableau& t) {
  std::vector<Letter> out;
  const Rows& rows = t.rows();
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = rows.size(); r-- > 0;) {
      if (c < rows[r].size()) out.push_back(rows[r][c]);
    }
  }
  return Word(std::move(out));
}

std::vector<Cell> column_reading_cells(const QuasiRibbonTableau& t) {
  std::vector<Cell> cells;
  std::vector<int> offsets = t.column_offsets();
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      cells.push_back({static_cast<int>(r), offsets[r] + static_cast<int>(c)});
    }
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  });
  return cells;
}

Word column_reading(const QuasiRibbonTableau& t) {
  std::vector<int> offsets = t.column_offsets();
  std::vector<Letter> out;
  for (const Cell& cell : column_reading_cells(t)) {
    out.push_back(t.rows()[cell.row][cell.col - offsets[cell.row]]);
  }
  return Word(std::move(out));
}

Word row_reading(const YoungTableau& t) {
  std::vector<Letter> out;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word(std::move(out));
}

// ------------------------------------------------------ standardization

StandardYoungTableau standardize(const YoungTableau& t) {
  // Copies of one letter form a horizontal strip, so "left to right" is
  // column order.
  struct Slot {
    Letter value;
    int col;
    int row;
  };
  std::vector<Slot> slots;
  const Rows& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      slots.push_back({rows[r][c], static_cast<int>(c), static_cast<int>(r)});
    }
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return a.value != b.value ? a.value < b.value : a.col < b.col;
  });
  Rows out = rows;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    out[slots[k].row][slots[k].col] = static_cast<Letter>(k + 1);
  }
  return StandardYoungTableau(YoungTableau(std::move(out)));
}

std::vector<int> descent_set(const StandardYoungTableau& s) {
  std::vector<int> where = s.row_of_entry();
  std::vector<int> out;
  for (int i = 1; i < s.size(); ++i) {
    if (where[i + 1] > where[i]) out.push_back(i);
  }
  return out;
}

Composition descent_composition(const StandardYoungTableau& s) {
  if (s.size() == 0) return Composition();
  std::vector<int> parts;
  int previous = 0;
  for (int d : descent_set(s)) {
    parts.push_back(d - previous);
    previous = d;
  }
  parts.push_back(s.size() - previous);
  return Composition(std::move(parts));
}

MinimalParsing minimal_parsing(const YoungTableau& t) {
  StandardYoungTableau s = standardize(t);
  Composition type = descent_composition(s);
  std::vector<Cell> cell_of(static_cast<std::size_t>(s.size()) + 1);
  for (std::size_t r = 0; r < s.rows().size(); ++r) {
    for (std::size_t c = 0; c < s.rows()[r].size(); ++c) {
      cell_of[s.rows()[r][c]] = {static_cast<int>(r), static_cast<int>(c)};
    }
  }
  MinimalParsing out{{}, type};
  int next = 1;
  for (int part : type.parts()) {
    std::vector<Cell> band;
    for (int k = 0; k < part; ++k) band.push_back(cell_of[next++]);
    out.bands.push_back(std::move(band));
  }
  return out;
}

bool is_valid_parsing(const YoungTableau& t, const MinimalParsing& p) {
  const Rows& rows = t.rows();
  std::set<Cell> covered;
  if (p.bands.size() != p.type.length()) return false;
  for (std::size_t b = 0; b < p.bands.size(); ++b) {
    const auto& band = p.bands[b];
    if (static_cast<int>(band.size()) != p.type[b]) return false;
    std::set<int> columns;
    std::set<Letter> values;
    for (const Cell& cell : band) {
      if (cell.row < 0 || cell.row >= static_cast<int>(rows.size()) || cell.col < 0 ||
          cell.col >= static_cast<int>(rows[cell.row].size())) {
        return false;
      }
      if (!columns.insert(cell.col).second) return false;
      if (!covered.insert(cell).second) return false;
      values.insert(rows[cell.row][cell.col]);
    }
    for (const Cell& x : band) {
      for (const Cell& y : band) {
        if (x.col < y.col &&
            (x.row < y.row || rows[x.row][x.col] > rows[y.row][y.col])) {
          return false;
        }
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        Cell cell{static_cast<int>(r), static_cast<int>(c)};
        if (values.count(rows[r][c]) &&
            std::find(band.begin(), band.end(), cell) == band.end()) {
          return false;
        }
      }
    }
  }
  return static_cast<int>(covered.size()) == t.size();
}

// ---------------------------------------------------------- enumeration

std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda) {
  std::vector<StandardYoungTableau> out;
  int n = lambda.weight();
  Rows rows(lambda.length());
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.emplace_back(YoungTableau(rows));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool fits = static_cast<int>(rows[r].size()) < lambda[r] &&
                  (r == 0 || rows[r].size() < rows[r - 1].size());
      if (!fits) continue;
      rows[r].push_back(next);
      place(next + 1);
      rows[r].pop_back();
    }
  };
  if (n > 0) place(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return row_reading(a.tableau()) < row_reading(b.tableau());
  });
  return out;
}

std::vector<YoungTableau> enumerate_young_tableaux(const Partition& lambda, int n) {
  std::vector<YoungTableau> out;
  Rows rows(lambda.length());
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == rows.size()) {
      out.emplace_back(rows);
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    int low = 1;
    if (c > 0) low = std::max(low, rows[r][c - 1]);
    if (r > 0) low = std::max(low, rows[r - 1][c] + 1);
    for (int a = low; a <= n; ++a) {
      rows[r].push_back(a);
      fill(r, c + 1);
      rows[r].pop_back();
    }
  };
  fill(0, 0);
  return out;
}

std::vector<QuasiRibbonTableau> enumerate_quasi_ribbons(const Composition& sigma, int n) {
  std::vector<QuasiRibbonTableau> out;
  Rows rows(sigma.length());
  std::function<void(std::size_t, int, int)> fill = [&](std::size_t r, int c, int previous) {
    if (r == rows.size()) {
      out.emplace_back(rows);
      return;
    }
    if (c == sigma[r]) {
      fill(r + 1, 0, previous);
      return;
    }
    int low = (c == 0 && r > 0) ? previous + 1 : std::max(previous, 1);
    for (int a = low; a <= n; ++a) {
      rows[r].push_back(a);
      fill(r, c + 1, a);
      rows[r].pop_back();
    }
  };
  fill(0, 0, 1);
  return out;
}

YoungTableau highest_weight_tableau(const Partition& lambda) {
  Rows rows;
  for (std::size_t r = 0; r < lambda.length(); ++r) {
    rows.emplace_back(static_cast<std::size_t>(lambda[r]), static_cast<Letter>(r + 1));
  }
  return YoungTableau(std::move(rows));
}

QuasiRibbonTableau highest_weight_quasi_ribbon(const Composition& sigma) {
  Rows rows;
  for (std::size_t r = 0; r < sigma.length(); ++r) {
    rows.emplace_back(static_cast<std::size_t>(sigma[r]), static_cast<Letter>(r + 1));
  }
  return QuasiRibbonTableau(std::move(rows));
}

// ------------------------------------------------------------ rendering

std::string render(const YoungTableau& t) {
  int width = entry_width(t.rows());
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << pad(row[c], width);
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const QuasiRibbonTableau& t) {
  int width = entry_width(t.rows());
  std::vector<int> offsets = t.column_offsets();
  std::ostringstream os;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    os << std::string(static_cast<std::size_t>(offsets[r] * (width + 1)), ' ');
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) os << ' ';
      os << pad(t.rows()[r][c], width);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcrystal
