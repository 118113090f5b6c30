#pragma once

// Letters, words, evaluations, compositions and partitions.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcrystal {

using Letter = int;

/// A finite word over the positive integers. An optional rank hint asserts
/// that every letter lies in {1, ..., n}; it takes no part in comparisons.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters,
                std::optional<int> rank_hint = std::nullopt);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// Parses "12311" (one digit per letter) or "10,2,11". The empty string
  /// is the empty word.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t pos) const { return letters_[pos]; }
  std::optional<int> rank_hint() const { return rank_hint_; }

  /// Largest letter, or 0 for the empty word.
  Letter max_letter() const;

  Word with_letter(std::size_t pos, Letter a) const;
  Word concat(const Word& other) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::optional<int> rank_hint_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// ev(w): count of each letter, trailing zeros trimmed.
class Evaluation {
 public:
  Evaluation() = default;
  explicit Evaluation(std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  int count(Letter a) const;
  int total() const;

  Evaluation operator+(const Evaluation& other) const;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
  friend auto operator<=>(const Evaluation&, const Evaluation&) = default;

 private:
  std::vector<int> counts_;
};

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  /// Accepts "2,4,3,3" and "(2,4,3,3)".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  Composition as_composition() const { return Composition(parts_); }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Evaluation evaluation(const Word& w);

/// True iff some letter i+1 occurs strictly before some letter i.
bool contains_inversion(const Word& w, int i);

Partition sort_to_partition(const Composition& alpha);

/// Entry j counts the parts of beta that are >= j.
Partition conjugate(const Composition& beta);
Partition conjugate(const Partition& lambda);

std::vector<Composition> refinements(const Composition& alpha);

/// Reverse the word and send each letter a to n - a + 1.
Word schutzenberger(const Word& w, int n);

void check_rank(const Word& w, int n);

std::vector<Composition> compositions_of(int m);
std::vector<Partition> partitions_of(int m);

/// Every word of the given length over {1, ..., n}, in lexicographic order.
std::vector<Word> all_words(int n, std::size_t length);

}  // namespace qcrystal

template <>
struct std::hash<qcrystal::Word> : qcrystal::WordHash {};
