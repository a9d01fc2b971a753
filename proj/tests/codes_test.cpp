#include "rmc/codes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rmc;

namespace {

std::string naive_code(const std::string& s) {
  std::string r;
  for (char c : s) r += c == '0' ? "00" : c == '1' ? "01" : "11";
  return r;
}

// Pairwise scan for the first 11 block.
std::optional<std::pair<std::string, std::string>> naive_parse(const std::string& x) {
  std::string u;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    std::string pair = x.substr(i, 2);
    if (pair == "11") return std::make_pair(u, x.substr(i + 2));
    if (pair == "10") return std::nullopt;
    u += pair[1];
  }
  return std::nullopt;
}

}  // namespace

TEST(Codes, EncodeLetters) {
  EXPECT_EQ(encode("01#").bits(), "000111");
  EXPECT_EQ(encode("").bits(), "");
  EXPECT_THROW(encode("2"), std::invalid_argument);
  EXPECT_EQ(encode(Word::from_bits("0110")).bits(), naive_code("0110"));
  EXPECT_EQ(encode(Word::zeros(1000)), Word::zeros(2000));
}

TEST(Codes, TupleEncoding) {
  Word t = encode_tuple({Word::from_bits("1"), Word::from_bits("0"), Word::from_bits("101")});
  EXPECT_EQ(t.bits(), "0111" "0011" "101");
  EXPECT_EQ(encode_tuple({Word::from_bits("10")}).bits(), "10");
  EXPECT_THROW(encode_tuple({}), std::invalid_argument);
}

TEST(Codes, ParseMatchesPairScan) {
  std::mt19937 rng(3);
  for (int it = 0; it < 2000; ++it) {
    std::string x;
    int n = rng() % 20;
    for (int i = 0; i < n; ++i) x += static_cast<char>('0' + (rng() % 4 != 0));
    if (rng() % 2) x = naive_code(x.substr(0, x.size() / 2)) + "11" + x;
    auto got = parse_coded_prefix(Word::from_bits(x));
    auto want = naive_parse(x);
    ASSERT_EQ(got.has_value(), want.has_value()) << x;
    if (got) {
      ASSERT_EQ(got->first.bits(), want->first);
      ASSERT_EQ(got->second.bits(), want->second);
    }
  }
}

TEST(Codes, ParseAcrossZeroRuns) {
  Word x = encode(Word::zeros(500) + Word::from_bits("1")) + Word::from_bits("11") + Word::zeros(99);
  auto p = parse_coded_prefix(x);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first, Word::zeros(500) + Word::from_bits("1"));
  EXPECT_EQ(p->second, Word::zeros(99));
  // odd-aligned run
  EXPECT_FALSE(parse_coded_prefix(Word::from_bits("1") + Word::zeros(301)));
}

TEST(Codes, PrefixCodeCheck) {
  auto w = [](std::initializer_list<const char*> xs) {
    std::vector<Word> v;
    for (auto x : xs) v.push_back(Word::from_bits(x));
    return v;
  };
  EXPECT_TRUE(is_prefix_code(w({"00", "01", "1"})));
  EXPECT_FALSE(is_prefix_code(w({"0", "01"})));
  EXPECT_FALSE(is_prefix_code(w({"1", "1"})));
  EXPECT_TRUE(is_prefix_code({}));
}

TEST(Codes, RightIdealCodeOfPrefixClosedSet) {
  // ideal generated by {01, 1}
  auto member = [](const Word& x) { return x.starts_with(Word::from_bits("01")) || x.starts_with(Word::from_bits("1")); };
  auto c = right_ideal_code(member, 6);
  ASSERT_TRUE(c.ok());
  ASSERT_EQ(c.code.size(), 2u);
  EXPECT_EQ(c.code[0].bits(), "1");
  EXPECT_EQ(c.code[1].bits(), "01");

  // not a right ideal: only words of length exactly 2
  auto bad = right_ideal_code([](const Word& x) { return x.length() == 2; }, 4);
  EXPECT_FALSE(bad.ok());
}

TEST(Codes, WordEnumeration) {
  EXPECT_EQ(words_of_length(3).size(), 8u);
  auto all = words_up_to(3);
  EXPECT_EQ(all.size(), 15u);
  EXPECT_TRUE(all.front().empty());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}
