#include "qcrystal/quasi_array.hpp"

#include <algorithm>
#include <sstream>

#include "qcrystal/errors.hpp"

namespace qcrystal {

QuasiArray::QuasiArray(std::vector<Letter> first_row) : first_row_(std::move(first_row)) {
  for (std::size_t j = 0; j < first_row_.size(); ++j) {
    if (first_row_[j] < 1 || (j > 0 && first_row_[j] < first_row_[j - 1])) {
      throw ShapeError("quasi-array first row must be positive and weakly increasing");
    }
  }
}

Evaluation QuasiArray::evaluation() const {
  std::vector<int> counts;
  int m = size();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m - i + 1; ++j) {
      Letter a = entry(i, j);
      if (static_cast<std::size_t>(a) > counts.size()) counts.resize(a, 0);
      ++counts[a - 1];
    }
  }
  return Evaluation(std::move(counts));
}

std::vector<int> diagonal_rows(const Composition& sigma) {
  std::vector<int> rows;
  for (std::size_t r = 0; r < sigma.length(); ++r) {
    rows.insert(rows.end(), static_cast<std::size_t>(sigma[r]), static_cast<int>(r + 1));
  }
  return rows;
}

QuasiRibbonTableau pickqrt(const QuasiArray& q, const Composition& sigma) {
  if (sigma.weight() != q.size()) {
    throw ShapeError("composition " + sigma.str() + " does not have weight " +
                     std::to_string(q.size()));
  }
  Rows rows(sigma.length());
  int diagonal = 1;
  for (std::size_t r = 0; r < sigma.length(); ++r) {
    for (int c = 0; c < sigma[r]; ++c, ++diagonal) {
      rows[r].push_back(q.first_row()[diagonal - 1] + static_cast<int>(r));
    }
  }
  return QuasiRibbonTableau(std::move(rows));
}

QuasiArray genqa(const QuasiRibbonTableau& t) {
  std::vector<Letter> first_row;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (Letter a : t.rows()[r]) first_row.push_back(a - static_cast<int>(r));
  }
  return QuasiArray(std::move(first_row));
}

std::optional<QuasiArray> td(const QuasiArray& q, int k) {
  int m = q.size();
  if (k < 1 || k > m) return std::nullopt;
  const auto& row = q.first_row();
  if (k < m && !(row[k - 1] < row[k])) return std::nullopt;
  std::vector<Letter> out = row;
  ++out[k - 1];
  return QuasiArray(std::move(out));
}

std::optional<QuasiArray> tc(const QuasiArray& q, int k) {
  int m = q.size();
  if (k < 1 || k > m) return std::nullopt;
  const auto& row = q.first_row();
  if (k == 1 ? !(row[0] > 1) : !(row[k - 1] > row[k - 2])) return std::nullopt;
  std::vector<Letter> out = row;
  --out[k - 1];
  return QuasiArray(std::move(out));
}

QuasiRibbonTableau direct_transport(const QuasiRibbonTableau& t, const Composition& tau) {
  Composition sigma = t.shape();
  if (sigma.weight() != tau.weight()) {
    throw ShapeError("cannot transport shape " + sigma.str() + " to " + tau.str());
  }
  std::vector<int> from = diagonal_rows(sigma);
  std::vector<int> to = diagonal_rows(tau);
  std::vector<Letter> entries = t.entries();
  Rows rows(tau.length());
  for (std::size_t d = 0; d < entries.size(); ++d) {
    rows[to[d] - 1].push_back(entries[d] + to[d] - from[d]);
  }
  return QuasiRibbonTableau(std::move(rows));
}

std::vector<QuasiArray> enumerate_quasi_arrays(int n, int m) {
  std::vector<QuasiArray> out;
  if (m < 1 || n < 1) return out;
  std::vector<Letter> row(static_cast<std::size_t>(m), 1);
  while (true) {
    out.emplace_back(row);
    int k = m - 1;
    while (k >= 0 && row[k] == n) --k;
    if (k < 0) break;
    ++row[k];
    for (int j = k + 1; j < m; ++j) row[j] = row[k];
  }
  return out;
}

std::string render(const QuasiArray& q) {
  int m = q.size();
  int width = 1;
  if (m > 0) width = static_cast<int>(std::to_string(q.entry(m, 1)).size());
  for (int j = 1; j <= m; ++j) {
    width = std::max<int>(width, static_cast<int>(std::to_string(q.entry(1, j)).size()));
  }
  std::ostringstream os;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m - i + 1; ++j) {
      std::string s = std::to_string(q.entry(i, j));
      if (j > 1) os << ' ';
      os << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcrystal
