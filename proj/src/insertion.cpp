#include "qcrystal/insertion.hpp"

#include <algorithm>
#include <map>

namespace qcrystal {

YoungTableau schensted_insert(const Word& w) {
  Rows rows;
  for (Letter a : w.letters()) {
    Letter carry = a;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
      if (it == rows[r].end()) {
        rows[r].push_back(carry);
        break;
      }
      std::swap(carry, *it);
    }
  }
  return YoungTableau(std::move(rows));
}

QuasiRibbonTableau hypoplactic_insert(const Word& w) {
  struct Span {
    std::size_t first;
    std::size_t last;
    int count;
  };
  std::map<Letter, Span> spans;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto [it, fresh] = spans.try_emplace(w[pos], Span{pos, pos, 0});
    it->second.last = pos;
    ++it->second.count;
  }
  Rows rows;
  const Span* previous = nullptr;
  for (const auto& [letter, span] : spans) {
    // b a is a subsequence iff the first b precedes the last a.
    if (rows.empty() || span.first < previous->last) rows.emplace_back();
    rows.back().insert(rows.back().end(), static_cast<std::size_t>(span.count), letter);
    previous = &span;
  }
  return QuasiRibbonTableau(std::move(rows));
}

bool plactic_equivalent(const Word& u, const Word& v) {
  return schensted_insert(u) == schensted_insert(v);
}

bool hypoplactic_equivalent(const Word& u, const Word& v) {
  return hypoplactic_insert(u) == hypoplactic_insert(v);
}

}  // namespace qcrystal
