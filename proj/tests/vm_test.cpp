#include "rmc/codes.hpp"
#include "rmc/machines.hpp"
#include "rmc/padding.hpp"
#include "rmc/vm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <regex>

using namespace rmc;

namespace {

std::string random_bits(std::mt19937& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + (rng() & 1));
  return s;
}

std::string code_of(const std::string& a) {
  std::string r;
  for (char c : a) r += c == '0' ? "00" : "01";
  return r;
}

// Length of the domain-code prefix of x, by regular expression.
std::optional<std::size_t> witness_prefix(const WitnessSpec& spec, const std::string& x) {
  std::smatch m;
  std::regex re("^(?:" + code_of(spec.a) + ")+?" + spec.tail);
  if (!std::regex_search(x, m, re)) return std::nullopt;
  return m.length(0);
}

std::optional<std::string> witness_oracle(const WitnessSpec& spec, const std::string& x) {
  auto l = witness_prefix(spec, x);
  if (!l) return std::nullopt;
  if (!spec.constant_head) return x;
  std::size_t m = 4 * spec.a.size();
  std::string y = "1" + std::string((*l + m - 1) / m, '0') + x.substr(*l);
  // balance: |x| <= a |y|^k + a
  Nat q = spec.bound.a;
  for (unsigned i = 0; i < spec.bound.k; ++i) q *= y.size();
  if (Nat(x.size()) > q + spec.bound.a) return std::nullopt;
  return y;
}

std::optional<std::string> out(const Program& p, const std::string& x) {
  RunOutcome r = run(p, Word::from_bits(x));
  if (!r.ok()) return std::nullopt;
  return r.output.bits();
}

// Inputs biased toward the witness domain.
std::string witness_sample(std::mt19937& rng, const WitnessSpec& spec) {
  if (rng() % 4 == 0) return random_bits(rng, rng() % 30);
  std::string s;
  int m = 1 + rng() % 5;
  for (int i = 0; i < m; ++i) s += code_of(spec.a);
  s += spec.tail;
  if (rng() % 5 == 0) s.pop_back();
  return s + random_bits(rng, rng() % 6);
}

}  // namespace

TEST(Vm, WitnessExamples) {
  Program w = witness_program("1");
  EXPECT_EQ(out(w, "0100100"), "0100100");
  RunOutcome r = run(w, Word::from_bits("0100100"));
  ASSERT_TRUE(r.copy_start);
  EXPECT_EQ(*r.copy_start, Nat(6));
  RunOutcome bad = run(w, Word::from_bits("0100"));
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.reason, RunOutcome::Reason::halted_not_qout);
  for (const char* z : {"", "0", "1", "10", "1111"}) EXPECT_EQ(out(w, std::string("010010") + z), std::string("010010") + z);
}

TEST(Vm, WitnessFamilyAgainstRegex) {
  std::mt19937 rng(21);
  for (std::string a : {"1", "0", "10", "011"})
    for (bool constant : {false, true}) {
      WitnessSpec spec{a, "0010", constant, {2, 2}};
      Program p = witness_program(spec);
      for (int i = 0; i < 300; ++i) {
        std::string x = witness_sample(rng, spec);
        auto want = witness_oracle(spec, x);
        ASSERT_EQ(out(p, x), want) << "a=" << a << " x=" << x;
        if (want) {
          RunOutcome r = run(p, Word::from_bits(x));
          ASSERT_EQ(*r.copy_start, Nat(*witness_prefix(spec, x)));
          ASSERT_LE(r.steps, p.bound().eval(x.size()));
        }
      }
    }
}

TEST(Vm, SimpleMachines) {
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    std::string x = random_bits(rng, rng() % 20);
    std::string rev(x.rbegin(), x.rend());
    EXPECT_EQ(out(reverse_program(), x), rev);
    EXPECT_EQ(out(append_one_program(), x), x + "1");
    EXPECT_EQ(out(identity_program(), x), x);
    EXPECT_EQ(out(empty_program(), x), std::nullopt);
  }
}

TEST(Vm, SMachine) {
  for (unsigned n = 0; n <= 12; ++n)
    for (std::string x : {"", "0", "1", "0110"}) {
      std::string in = std::string(n, '0') + "1" + x;
      EXPECT_EQ(out(s_program(), in), std::string(2 * n * n, '0') + "1" + x) << in;
    }
  EXPECT_EQ(out(s_program(), "000"), std::nullopt);
  EXPECT_EQ(out(s_program(), ""), std::nullopt);
}

TEST(Vm, SMachineOnLongRun) {
  Word x = Word::zeros(150) + Word::from_bits("1");
  RunOutcome r = run(s_program(), x);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.output, Word::zeros(2 * 150 * 150) + Word::from_bits("1"));
  // 2 (n+1)^2 + 2 for 0^n 1, i.e. exactly the carried bound 2|x|^2 + 2
  EXPECT_EQ(r.steps, Nat(2 * 151 * 151 + 2));
  EXPECT_EQ(r.steps, s_program().bound().eval(x.length()));
}

TEST(Vm, BudgetAndBalance) {
  RunOutcome r = run(looping_program(), Word::from_bits("0101"));
  EXPECT_EQ(r.reason, RunOutcome::Reason::budget_exceeded);
  EXPECT_LE(r.steps, Nat(6));

  // the constant-head witness shrinks its domain prefix, so a linear bound
  // cannot balance long inputs
  Program tight = witness_program(WitnessSpec{"1", "0010", true, {1, 1}});
  std::string x = "0101010101010101010010";
  RunOutcome b = run(tight, Word::from_bits(x));
  EXPECT_EQ(b.reason, RunOutcome::Reason::balance_violated);
  EXPECT_EQ(out(witness_program(WitnessSpec{"1", "0010", true, {2, 2}}), x), witness_oracle({"1", "0010", true}, x));
}

TEST(Vm, ExWrapperActsBehindZeroPrefix) {
  Program w = witness_program("1");
  Program e = Program::ex(w);
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    unsigned h = rng() % 5;
    std::string u = witness_sample(rng, {"1", "0010"});
    std::string x = std::string(h, '0') + "1" + u;
    std::optional<std::string> want;
    if (h > 0)
      if (auto y = out(w, u)) want = std::string(h, '0') + "1" + *y;
    EXPECT_EQ(out(e, x), want) << x;
  }
  EXPECT_EQ(out(e, "000"), std::nullopt);
}

TEST(Vm, PrefixSearchWrapper) {
  Program p = prefix_closure(append_one_program());
  EXPECT_EQ(out(p, "0110"), "10110");
  EXPECT_EQ(out(p, ""), "1");
  Program q = prefix_closure(witness_program("1"));
  EXPECT_EQ(out(q, "01001011"), "01001011");
  EXPECT_EQ(out(q, "0100"), std::nullopt);
}

TEST(Vm, DisciplineChecks) {
  std::vector<Sample> samples;
  for (const auto& x : words_up_to(7))
    for (const char* z : {"", "0", "1", "01"}) samples.emplace_back(x, Word::from_bits(z));

  EXPECT_FALSE(check_sequential(reverse_program(), samples).pass());
  auto rm = check_rm(witness_program("1"), samples);
  EXPECT_TRUE(rm.pass());
  EXPECT_GT(rm.checked, 0u);
  // the trailing 1 is written only after B, so append_one is not sequential
  EXPECT_FALSE(check_sequential(append_one_program(), samples).pass());
  EXPECT_TRUE(check_sequential(witness_program("1"), samples).pass());
  EXPECT_FALSE(check_rm(append_one_program(), samples).pass());
  EXPECT_TRUE(check_rm(s_program(), samples).pass());
  EXPECT_TRUE(check_rm(identity_program(), samples).pass());
}

TEST(Vm, DomainCodeEnumeration) {
  auto d = enumerate_domain_code(witness_program("1"), 9);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].u.bits(), "010010");
  EXPECT_EQ(d[1].u.bits(), "01010010");
  auto d10 = enumerate_domain_code(witness_program("1"), 10);
  ASSERT_EQ(d10.size(), 3u);
  EXPECT_EQ(d10[2].u.bits(), "0101010010");
  EXPECT_TRUE(in_domain_code(witness_program("1"), Word::from_bits("010010")));
  EXPECT_FALSE(in_domain_code(witness_program("1"), Word::from_bits("0100101")));
  auto id = enumerate_domain_code(identity_program(), 5);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].u.empty());
}

TEST(Vm, GammaProgramMatchesSplit) {
  Program w = witness_program("1");
  Program g = gamma_program(w);
  Word h = program_header(w);
  std::mt19937 rng(9);
  for (int i = 0; i < 60; ++i) {
    std::string x = witness_sample(rng, {"1", "0010"});
    auto l = witness_prefix({"1", "0010"}, x);
    RunOutcome r = run(g, h + Word::from_bits(x));
    if (!l) {
      EXPECT_FALSE(r.ok()) << x;
      continue;
    }
    ASSERT_TRUE(r.ok()) << x << " " << reason_name(r.reason);
    Word want = h + encode(Word::from_bits(x.substr(0, *l))) + Word::from_bits("11" + x.substr(*l));
    EXPECT_EQ(r.output, want);
  }
  EXPECT_FALSE(run(g, program_header(identity_program()) + Word::from_bits("010010")).ok());
}
