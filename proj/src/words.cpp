#include "qcrystal/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qcrystal/errors.hpp"

namespace qcrystal {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParameterError("malformed integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

Word::Word(std::vector<Letter> letters, std::optional<int> rank_hint)
    : letters_(std::move(letters)), rank_hint_(rank_hint) {
  for (Letter a : letters_) {
    if (a < 1) throw ParameterError("letters must be positive, got " + std::to_string(a));
  }
  if (rank_hint_) check_rank(*this, *rank_hint_);
}

Word Word::parse(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return Word(parse_int_list(text));
  std::vector<Letter> letters;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw ParameterError("malformed word: '" + std::string(text) + "'");
    }
    letters.push_back(c - '0');
  }
  return Word(std::move(letters));
}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::with_letter(std::size_t pos, Letter a) const {
  Word out = *this;
  out.letters_.at(pos) = a;
  out.rank_hint_.reset();
  return out;
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(letters));
}

std::string Word::str() const {
  bool small = std::all_of(letters_.begin(), letters_.end(), [](Letter a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (small) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter a : w.letters()) {
    h ^= static_cast<std::size_t>(a);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Evaluation::Evaluation(std::vector<int> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

int Evaluation::count(Letter a) const {
  if (a < 1 || static_cast<std::size_t>(a) > counts_.size()) return 0;
  return counts_[a - 1];
}

int Evaluation::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

Evaluation Evaluation::operator+(const Evaluation& other) const {
  std::vector<int> sum(std::max(counts_.size(), other.counts_.size()), 0);
  for (std::size_t i = 0; i < counts_.size(); ++i) sum[i] += counts_[i];
  for (std::size_t i = 0; i < other.counts_.size(); ++i) sum[i] += other.counts_[i];
  return Evaluation(std::move(sum));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw ShapeError("composition parts must be positive: " + join_parts(parts_));
  }
}

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::str() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw ShapeError("not a partition: " + join_parts(parts_));
    }
  }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const { return join_parts(parts_); }

Evaluation evaluation(const Word& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.max_letter()), 0);
  for (Letter a : w.letters()) ++counts[a - 1];
  return Evaluation(std::move(counts));
}

bool contains_inversion(const Word& w, int i) {
  bool seen_upper = false;
  for (Letter a : w.letters()) {
    if (a == i + 1) seen_upper = true;
    if (a == i && seen_upper) return true;
  }
  return false;
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition conjugate(const Composition& beta) {
  int top = beta.length() ? *std::max_element(beta.parts().begin(), beta.parts().end()) : 0;
  std::vector<int> out(static_cast<std::size_t>(top), 0);
  for (int j = 1; j <= top; ++j) {
    out[j - 1] = static_cast<int>(
        std::count_if(beta.parts().begin(), beta.parts().end(), [j](int p) { return p >= j; }));
  }
  return Partition(std::move(out));
}

Partition conjugate(const Partition& lambda) { return conjugate(lambda.as_composition()); }

std::vector<Composition> refinements(const Composition& alpha) {
  // Each part p splits independently; a split is a subset of its p-1 gaps.
  std::vector<std::vector<int>> partial{{}};
  for (int p : alpha.parts()) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : partial) {
      for (unsigned mask = 0; mask < (1u << (p - 1)); ++mask) {
        std::vector<int> parts = prefix;
        int run = 1;
        for (int gap = 0; gap < p - 1; ++gap) {
          if (mask & (1u << gap)) {
            parts.push_back(run);
            run = 1;
          } else {
            ++run;
          }
        }
        parts.push_back(run);
        next.push_back(std::move(parts));
      }
    }
    partial = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(partial.size());
  for (auto& parts : partial) out.emplace_back(std::move(parts));
  std::sort(out.begin(), out.end());
  return out;
}

Word schutzenberger(const Word& w, int n) {
  check_rank(w, n);
  std::vector<Letter> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = n - w[w.size() - 1 - k] + 1;
  return Word(std::move(out));
}

void check_rank(const Word& w, int n) {
  for (Letter a : w.letters()) {
    if (a > n) {
      throw RankError("letter " + std::to_string(a) + " of word '" + w.str() +
                      "' exceeds rank " + std::to_string(n));
    }
  }
}

std::vector<Composition> compositions_of(int m) {
  std::vector<Composition> out;
  if (m <= 0) return out;
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < m - 1; ++gap) {
      if (mask & (1u << gap)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (m > 0) rec(m, m);
  return out;
}

std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> letters(length, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t k = length;
    while (k > 0 && letters[k - 1] == n) letters[--k] = 1;
    if (k == 0) break;
    ++letters[k - 1];
  }
  return out;
}

}  // namespace qcrystal
