#include <gtest/gtest.h>

#include <set>

#include "nckernel/error.hpp"
#include "nckernel/word.hpp"

using namespace nckernel;

TEST(Words, ConcatJuxtaposes) {
  EXPECT_EQ(concat(Word{1}, Word{2, 3}), (Word{1, 2, 3}));
  EXPECT_EQ(concat(Word{}, Word{2, 1}), (Word{2, 1}));
  EXPECT_EQ(concat(Word{2, 1}, Word{}), (Word{2, 1}));
}

TEST(Words, TransposeReverses) {
  EXPECT_EQ(transpose(Word{1, 2, 3}), (Word{3, 2, 1}));
  EXPECT_EQ(transpose(Word{}), Word{});
  EXPECT_EQ(transpose(Word{1}), Word{1});
}

TEST(Words, Abelianize) {
  EXPECT_EQ(abelianize(Word{1, 2, 1}, 2).counts, (std::vector<int>{2, 1}));
  EXPECT_EQ(abelianize(Word{}, 3).counts, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(abelianize(Word{2, 2, 2}, 2).counts, (std::vector<int>{0, 3}));
  try {
    abelianize(Word{3}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownIndex);
  }
}

TEST(Words, EnumerationOrder) {
  EXPECT_EQ(enumerate_words(2, 1), (std::vector<Word>{Word{}, Word{1}, Word{2}}));
  EXPECT_EQ(enumerate_words(1, 3), (std::vector<Word>{Word{}, Word{1}, Word{1, 1}, Word{1, 1, 1}}));
  EXPECT_EQ(enumerate_words(3, 2).size(), 13u);
  EXPECT_EQ(word_count(3, 2), 13u);
}

TEST(Words, EnumerationIsSortedAndPositioned) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto words = enumerate_words(n, m);
      std::size_t expected = 0;
      std::size_t level = 1;
      for (std::size_t j = 0; j <= m; ++j, level *= n) expected += level;
      ASSERT_EQ(words.size(), expected);
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
      std::set<Word> unique(words.begin(), words.end());
      EXPECT_EQ(unique.size(), words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        EXPECT_EQ(word_position(words[i], n), i);
        EXPECT_TRUE(unique.contains(transpose(words[i])));
      }
    }
  }
}

// Every pair (w, v) with |w|, |v| <= 6: about 1.2 million pairs for N = 3.
TEST(Words, TransposeAntiHomomorphismExhaustive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto words = enumerate_words(n, 6);
    std::size_t failures = 0;
    for (const auto& w : words) {
      const Word tw = transpose(w);
      const MultiDegree tw_deg = abelianize(w, n);
      for (const auto& v : words) {
        const Word wv = concat(w, v);
        bool ok = transpose(wv) == concat(transpose(v), tw);
        ok = ok && transpose(transpose(wv)) == wv;
        const MultiDegree d = abelianize(wv, n);
        ok = ok && d == tw_deg + abelianize(v, n);
        ok = ok && d.total() == static_cast<int>(wv.length());
        ok = ok && concat(wv, w) == concat(w, concat(v, w));
        if (!ok && ++failures <= 5) ADD_FAILURE() << to_string(w) << " / " << to_string(v);
      }
    }
    EXPECT_EQ(failures, 0u) << "N = " << n;
  }
}

TEST(Words, MultidegreeEnumeration) {
  const auto t = enumerate_multidegrees(2, 2);
  ASSERT_EQ(t.size(), 6u);  // (m+N)!/(m!N!)
  EXPECT_EQ(t[0].counts, (std::vector<int>{0, 0}));
  EXPECT_EQ(t[1].counts, (std::vector<int>{1, 0}));
  EXPECT_EQ(t[2].counts, (std::vector<int>{0, 1}));
  EXPECT_EQ(t[3].counts, (std::vector<int>{2, 0}));
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  EXPECT_EQ(enumerate_multidegrees(3, 3).size(), 20u);
}

TEST(Words, ToString) {
  EXPECT_EQ(to_string(Word{1, 2}), "g1g2");
  EXPECT_EQ(to_string(Word{}), "∅");
}
