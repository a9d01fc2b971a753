#include "rmc/word.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rmc;

namespace {

// Random bit strings with occasional long zero blocks so that ZeroRun
// segments show up.
std::string random_text(std::mt19937& rng) {
  std::string s;
  int parts = 1 + rng() % 5;
  for (int i = 0; i < parts; ++i) {
    if (rng() % 3 == 0) {
      s.append(60 + rng() % 80, '0');
    } else {
      int n = rng() % 12;
      for (int j = 0; j < n; ++j) s += static_cast<char>('0' + (rng() & 1));
    }
  }
  return s;
}

bool shortlex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::size_t naive_common_suffix(const std::string& a, const std::string& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return n;
}

}  // namespace

TEST(Word, MatchesStringModel) {
  std::mt19937 rng(11);
  for (int it = 0; it < 400; ++it) {
    std::string a = random_text(rng), b = random_text(rng);
    Word wa = Word::from_bits(a), wb = Word::from_bits(b);
    ASSERT_EQ(wa.bits(), a);
    ASSERT_EQ(wa.length(), Nat(a.size()));
    ASSERT_EQ((wa + wb).bits(), a + b);
    std::size_t cut = a.empty() ? 0 : rng() % (a.size() + 1);
    ASSERT_EQ(wa.prefix(cut).bits(), a.substr(0, cut));
    ASSERT_EQ(wa.drop(cut).bits(), a.substr(cut));
    ASSERT_EQ(wa.suffix(cut).bits(), a.substr(a.size() - cut));
    ASSERT_TRUE(wa.starts_with(wa.prefix(cut)));
    ASSERT_TRUE(wa.ends_with(wa.suffix(cut)));
    ASSERT_EQ(wa.starts_with(wb), a.compare(0, b.size(), b) == 0 && b.size() <= a.size());
    std::size_t lz = a.find('1') == std::string::npos ? a.size() : a.find('1');
    ASSERT_EQ(wa.leading_zeros(), Nat(lz));
    ASSERT_EQ(wa == wb, a == b);
    ASSERT_EQ(wa < wb, shortlex_less(a, b));
    ASSERT_EQ(common_suffix_length(wa, wb), Nat(naive_common_suffix(a, b)));
    for (std::size_t i = 0; i < a.size(); i += 7) ASSERT_EQ(wa.bit_at(i), a[i] - '0');
    ASSERT_EQ(Word::parse(wa.to_text()), wa);
  }
}

TEST(Word, NormalFormIsCanonical) {
  Word a = Word::from_bits(std::string(70, '0') + "1");
  Word b = WordBuilder().zeros(30).zeros(40).bit(1).finish();
  Word c = Word::zeros(35) + Word::zeros(35) + Word::from_bits("1");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.segments().size(), 2u);
  EXPECT_TRUE(a.segments()[0].is_run);
}

TEST(Word, HugeZeroRunsStayCompressed) {
  Nat n = Nat(1) << 200;
  Word w = Word::from_bits("1") + Word::zeros(n) + Word::from_bits("01");
  EXPECT_EQ(w.length(), n + 3);
  EXPECT_EQ(w.drop(1).leading_zeros(), n + 1);
  EXPECT_EQ(w.suffix(2).bits(), "01");
  EXPECT_EQ(w.to_text(), "1 0*" + to_string(n + 1) + " 1");
  EXPECT_EQ(Word::parse(w.to_text()), w);
  EXPECT_FALSE(w.try_bits(1000).has_value());
  EXPECT_THROW(w.bits(1000), std::length_error);
}

TEST(Word, TextFormUsesRunsOnlyPastThreshold) {
  EXPECT_EQ(Word::zeros(256).to_text(), std::string(256, '0'));
  EXPECT_EQ(Word::zeros(257).to_text(), "0*257");
  EXPECT_EQ(Word().to_text(), "");
}

TEST(Word, RejectsBadInput) {
  EXPECT_THROW(Word::from_bits("012"), std::invalid_argument);
  EXPECT_THROW(Word::parse("0*x"), std::invalid_argument);
  EXPECT_THROW(Word::from_bits("01").bit_at(2), std::out_of_range);
}

TEST(Word, CursorWalksRunsAndLiterals) {
  Word w = Word::from_bits("10") + Word::zeros(100) + Word::from_bits("11");
  WordCursor c(w);
  EXPECT_EQ(c.peek(), 1);
  c.advance();
  EXPECT_EQ(c.zeros_ahead(), Nat(101));
  c.advance();
  EXPECT_EQ(c.run_remaining(), Nat(100));
  c.skip_zeros(60);
  EXPECT_EQ(c.position(), Nat(62));
  EXPECT_EQ(c.rest(), Word::zeros(40) + Word::from_bits("11"));
}

TEST(Word, ShortlexOrder) {
  std::vector<std::string> xs{"", "0", "1", "00", "01", "10", "11", "000"};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) EXPECT_LT(Word::from_bits(xs[i]), Word::from_bits(xs[i + 1]));
}
