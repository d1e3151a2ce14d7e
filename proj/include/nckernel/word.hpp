#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nckernel {

// Element of the free semigroup on N generators. Letters are 1-based
// generator indices; the empty word is the unit.
class Word {
 public:
  using Letter = std::uint16_t;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Letter max_letter() const noexcept;

  // Graded-lexicographic: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;
  friend bool operator==(const Word& a, const Word& b) noexcept = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);
Word transpose(const Word& w);

// Drops the first k letters.
Word suffix(const Word& w, std::size_t k);

// "g1g2g1", or "∅" for the empty word.
std::string to_string(const Word& w);

// Letter counts (t_1, ..., t_N) of a word.
struct MultiDegree {
  std::vector<int> counts;

  int total() const noexcept;
  std::size_t arity() const noexcept { return counts.size(); }

  // Graded, then reverse-lexicographic on counts so that the degree of g1
  // precedes the degree of g2, mirroring the word order.
  friend std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) noexcept;
  friend bool operator==(const MultiDegree& a, const MultiDegree& b) noexcept = default;
};

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);

// Throws UnknownIndex when a letter exceeds the arity.
MultiDegree abelianize(const Word& w, std::size_t arity);

// Number of words of length <= max_length: sum_{j=0}^{m} N^j.
std::size_t word_count(std::size_t arity, std::size_t max_length);

// All words of length <= max_length in graded-lex order. This order is the
// canonical row/column index of every Gram and shift matrix.
std::vector<Word> enumerate_words(std::size_t arity, std::size_t max_length);

// Position of w within enumerate_words(arity, *) (independent of the window).
std::size_t word_position(const Word& w, std::size_t arity);

// All multidegrees with total <= max_total, graded order.
std::vector<MultiDegree> enumerate_multidegrees(std::size_t arity, std::size_t max_total);

void check_letters(const Word& w, std::size_t arity);

}  // namespace nckernel
