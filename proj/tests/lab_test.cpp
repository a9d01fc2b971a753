#include "rmc/codes.hpp"
#include "rmc/lab.hpp"

#include <gtest/gtest.h>

using namespace rmc;

namespace {

Word W(const std::string& s) { return Word::from_bits(s); }

Nat suffix_oracle(const std::string& a, const std::string& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return n;
}

}  // namespace

TEST(Lab, WitnessProperties) {
  auto r = check_witness_properties({"1", "0010"}, {witness_program("0")}, {10, 30});
  EXPECT_TRUE(r.no_11.pass);
  EXPECT_TRUE(r.distinct.pass);
  EXPECT_TRUE(r.extendable.pass);
  EXPECT_EQ(r.extendable.checked, 100u);
  EXPECT_EQ(r.no_11.checked, 13u);  // (01)^n 0010 for n = 1..13 fit in 30 bits
}

TEST(Lab, WitnessNegativeControls) {
  auto tail = check_witness_properties({"1", "0011"}, {witness_program("0")});
  EXPECT_FALSE(tail.no_11.pass);
  EXPECT_NE(tail.no_11.first_failure.find("11"), std::string::npos);
  WitnessSpec self{"1", "0010"};
  auto same = check_witness_properties(self, {witness_program(self)});
  EXPECT_FALSE(same.distinct.pass);
  EXPECT_TRUE(same.no_11.pass);
}

TEST(Lab, WitnessDomainOracle) {
  for (std::string a : {"1", "0", "11", "101"}) {
    auto d = check_witness_domain({a, "0010"}, 30, 100);
    EXPECT_TRUE(d.pass()) << a << ": " << (d.mismatches.empty() ? "" : d.mismatches.front());
    EXPECT_EQ(d.exhaustive, 8191u);
  }
}

TEST(Lab, SShape) {
  auto s = s_shape(W("01" "11" "0000" "11" "101"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->w1.bits(), "1");
  EXPECT_EQ(s->u1.bits(), "00");
  EXPECT_EQ(s->u2.bits(), "101");
  EXPECT_FALSE(s_shape(W("0111" "10")));
}

TEST(Lab, TraceOfLeftLetters) {
  Program p = witness_program("1");
  Word h = program_header(p);
  Word u = W("0101010101010101010101010101010010");
  GeneratorWord X{{rho(W("1")), pi(W("1")), rho(W("0")), pi(W("0"))}};
  SuffixTrace t = suffix_trace(X, p, h + u);
  ASSERT_FALSE(t.undefined_early);
  ASSERT_EQ(t.stages.size(), 5u);
  EXPECT_EQ(t.stages.back().value, h + u);
  for (const auto& s : t.stages) {
    Word tail = s.shape ? s.shape->u2 : s.value;
    EXPECT_EQ(s.common_suffix, suffix_oracle(tail.bits(), u.bits()));
    EXPECT_GE(s.common_suffix, u.length() - 4);
  }
  EXPECT_EQ(t.stages[1].letter, "pi(0)");
}

TEST(Lab, TraceMarksEarlyUndefined) {
  Program p = witness_program("1");
  Word h = program_header(p);
  GeneratorWord X{{pi(W("1")), expand_m(), rho(W("1"))}};
  SuffixTrace t = suffix_trace(X, p, h + W("010010"));
  EXPECT_TRUE(t.undefined_early);
  EXPECT_EQ(t.undefined_at, 1u);
  EXPECT_EQ(t.undefined_letter, "rho(1)");
  EXPECT_THROW(suffix_trace(X, p, W("010010")), std::invalid_argument);
}

TEST(Lab, ChainTraceConsumesTheSuffix) {
  Program p = witness_program("1", {1, 1});
  Word h = program_header(p);
  std::string u = "0101010101010101010101010101010010";
  GeneratorWord X = chain_letters(p);
  SuffixTrace t = suffix_trace(X, p, h + W(u));
  ASSERT_FALSE(t.undefined_early);
  const TraceStage* last = t.last_shaped();
  ASSERT_NE(last, nullptr);
  EXPECT_TRUE(last->shape->u2.empty());
  EXPECT_EQ(last->common_suffix, Nat(0));
  EXPECT_EQ(t.stages.back().value, W(u));
  // gamma adds code(u) 11 minus u
  EXPECT_EQ(t.stages[1].gamma_growth, Nat(u.size() + 2));
  EXPECT_EQ(X.composite()(h + W(u)), W(u));
}

TEST(Lab, SIterates) {
  EXPECT_EQ(s_iterate(2, 2), Nat(128));
  EXPECT_EQ(s_iterate(1, 3), Nat(18));
  EXPECT_EQ(s_iterate(0, 7), Nat(7));
  Morphism s = s_morphism();
  EXPECT_EQ(s(W("0011")), Word::zeros(8) + W("11"));
  EXPECT_EQ(s(W("000")), std::nullopt);
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      Nat t = n;
      for (unsigned i = 0; i < m; ++i) t = 2 * t * t;
      EXPECT_EQ(s_iterate(m, n), t);
    }
}

TEST(Lab, Certificates) {
  Program w = witness_program("1");
  EXPECT_TRUE(s2q_certificate(w, {12, 2}));
  EXPECT_FALSE(s2q_certificate(w, {1, 1}));
  EXPECT_FALSE(s2q_certificate(append_one_program(), {12, 2}));
  Program g = gamma_program(w);
  EXPECT_EQ(g.bound(), (PolyBound{2, 2}));
  std::vector<Sample> samples;
  Word h = program_header(w);
  for (const char* x : {"010010", "01010010", "0100", "1"})
    for (const char* z : {"", "1", "00"}) samples.emplace_back(h + W(x), W(z));
  EXPECT_TRUE(s2q_certificate(g, {2, 2}, samples));
}

TEST(Lab, DirectSimulation) {
  Program w = witness_program("1");
  Morphism d = direct_simulation(w);
  for (const auto& x : words_up_to(9)) {
    RunOutcome r = run(w, x);
    auto got = d(x);
    ASSERT_EQ(got.has_value(), r.ok());
    if (got) EXPECT_EQ(*got, r.output);
  }
  Program wide = witness_program("1", {2, 3});
  Morphism dw = direct_simulation(wide);
  EXPECT_EQ(dw(W("0100101")), std::nullopt);
}
