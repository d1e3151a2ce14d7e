#include "nckernel/word.hpp"

#include <algorithm>
#include <limits>

#include "nckernel/error.hpp"

namespace nckernel {

Word::Letter Word::max_letter() const noexcept {
  Letter best = 0;
  for (Letter l : letters_) best = std::max(best, l);
  return best;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word concat(const Word& a, const Word& b) {
  std::vector<Word::Letter> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word transpose(const Word& w) {
  std::vector<Word::Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out));
}

Word suffix(const Word& w, std::size_t k) {
  auto l = w.letters();
  if (k >= l.size()) return Word{};
  return Word(std::vector<Word::Letter>(l.begin() + static_cast<std::ptrdiff_t>(k), l.end()));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "∅";
  std::string s;
  for (auto l : w.letters()) s += "g" + std::to_string(l);
  return s;
}

int MultiDegree::total() const noexcept {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) noexcept {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  // Larger count in an earlier slot comes first.
  return std::lexicographical_compare_three_way(b.counts.begin(), b.counts.end(),
                                                a.counts.begin(), a.counts.end());
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "multidegree arity");
  MultiDegree out = a;
  for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] += b.counts[k];
  return out;
}

void check_letters(const Word& w, std::size_t arity) {
  for (auto l : w.letters()) {
    if (l < 1 || l > arity) {
      throw Error(ErrorKind::UnknownIndex, "letter g" + std::to_string(l) +
                                               " outside 1.." + std::to_string(arity));
    }
  }
}

MultiDegree abelianize(const Word& w, std::size_t arity) {
  check_letters(w, arity);
  MultiDegree t{std::vector<int>(arity, 0)};
  for (auto l : w.letters()) ++t.counts[l - 1];
  return t;
}

std::size_t word_count(std::size_t arity, std::size_t max_length) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t j = 0; j <= max_length; ++j) {
    total += level;
    if (j < max_length) {
      if (arity != 0 && level > std::numeric_limits<std::size_t>::max() / arity) {
        throw Error(ErrorKind::SizeCap, "word count overflow");
      }
      level *= arity;
    }
  }
  return total;
}

std::vector<Word> enumerate_words(std::size_t arity, std::size_t max_length) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  std::vector<Word> out;
  out.reserve(word_count(arity, max_length));
  out.emplace_back();
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    // Extending each shorter word by every letter keeps lexicographic order.
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 1; g <= arity; ++g) {
        std::vector<Word::Letter> letters(out[i].letters().begin(), out[i].letters().end());
        letters.push_back(static_cast<Word::Letter>(g));
        out.emplace_back(std::move(letters));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::size_t word_position(const Word& w, std::size_t arity) {
  check_letters(w, arity);
  const std::size_t len = w.length();
  std::size_t offset = len == 0 ? 0 : word_count(arity, len - 1);
  std::size_t value = 0;
  for (auto l : w.letters()) value = value * arity + (l - 1);
  return offset + value;
}

namespace {

void fill_compositions(std::size_t slot, int remaining, std::vector<int>& counts,
                       std::vector<MultiDegree>& out) {
  if (slot + 1 == counts.size()) {
    counts[slot] = remaining;
    out.push_back(MultiDegree{counts});
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    counts[slot] = c;
    fill_compositions(slot + 1, remaining - c, counts, out);
  }
}

}  // namespace

std::vector<MultiDegree> enumerate_multidegrees(std::size_t arity, std::size_t max_total) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  std::vector<MultiDegree> out;
  std::vector<int> counts(arity, 0);
  for (std::size_t total = 0; total <= max_total; ++total) {
    fill_compositions(0, static_cast<int>(total), counts, out);
  }
  return out;
}

}  // namespace nckernel
