#include "rmc/machines.hpp"
#include "rmc/program.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rmc;

#ifndef RMC_FIXTURE_DIR
#define RMC_FIXTURE_DIR "fixtures"
#endif

namespace {

std::vector<Program> samples() {
  return {identity_program(),
          witness_program("1"),
          witness_program("10", {3, 1}),
          witness_program(WitnessSpec{"0", "0010", true, {2, 2}}),
          s_program(),
          looping_program(),
          append_one_program(),
          reverse_program(),
          empty_program(),
          gamma_program(witness_program("1")),
          Program::ex(witness_program("1")),
          prefix_closure(append_one_program()),
          Program::ex(Program::ex(identity_program()))};
}

// Reads one 1^l 0 bin(n) field by hand; zero has l = 0.
std::optional<std::pair<std::uint64_t, std::size_t>> read_field(const std::string& s, std::size_t i) {
  std::size_t l = 0;
  while (i < s.size() && s[i] == '1') ++l, ++i;
  if (i >= s.size()) return std::nullopt;
  ++i;
  if (i + l > s.size()) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < l; ++j) v = 2 * v + (s[i + j] - '0');
  return std::make_pair(v, i + l);
}

}  // namespace

TEST(PolyBound, Eval) {
  PolyBound b{3, 2};
  EXPECT_EQ(b.eval(0), Nat(3));
  EXPECT_EQ(b.eval(10), Nat(303));
  EXPECT_TRUE((PolyBound{2, 2}).within({12, 2}));
  EXPECT_FALSE((PolyBound{2, 3}).within({12, 2}));
  EXPECT_EQ(b.str(), "(3,2)");
}

TEST(Serialize, RoundTrip) {
  for (const auto& p : samples()) {
    std::string bits = serialize(p);
    ASSERT_TRUE(std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; }));
    Program q = deserialize(bits);
    EXPECT_EQ(p, q);
    EXPECT_EQ(serialize(q), bits);
  }
}

TEST(Serialize, HeaderFieldsReadByHand) {
  Program p = witness_program("1");
  std::string s = serialize(p);
  auto version = read_field(s, 0);
  ASSERT_TRUE(version);
  EXPECT_EQ(version->first, 1u);
  auto kind = read_field(s, version->second);
  ASSERT_TRUE(kind);
  EXPECT_EQ(kind->first, 0u);
  auto states = read_field(s, kind->second);
  ASSERT_TRUE(states);
  EXPECT_EQ(states->first, p.states());
  auto tapes = read_field(s, states->second);
  ASSERT_TRUE(tapes);
  EXPECT_EQ(tapes->first, p.tapes());
}

TEST(Serialize, RejectsDamage) {
  std::string s = serialize(witness_program("1"));
  EXPECT_THROW(deserialize(s + "0"), FormatError);
  EXPECT_THROW(deserialize(s.substr(0, s.size() - 1)), FormatError);
  EXPECT_FALSE(try_deserialize(s + "1").has_value());
  EXPECT_FALSE(try_deserialize("").has_value());
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::string t = s;
    t[rng() % t.size()] ^= 1;
    if (auto q = try_deserialize(t)) EXPECT_EQ(serialize(*q), t);  // only canonical encodings come back
  }
}

TEST(ProgramText, RoundTrip) {
  for (const auto& p : samples()) {
    std::string t = program_text(p);
    EXPECT_EQ(parse_program_text(t), p) << t;
  }
}

TEST(ProgramText, ParsesHandWrittenTable) {
  const char* text =
      "; flips nothing, copies\n"
      "states=2 tapes=1 a=1 k=1 discipline=rm copy=0\n";
  Program p = parse_program_text(text);
  EXPECT_EQ(p, identity_program());
  EXPECT_THROW(parse_program_text("states=2 tapes=1 a=1 k=1 discipline=bogus\n"), std::exception);
  EXPECT_THROW(parse_program_text("states=2 tapes=1 a=1 k=1 discipline=rm\n(5,0,B) -> (0,B/S,R,-)\n"),
               std::exception);
}

TEST(ProgramText, FixtureFilesMatchConstructors) {
  std::string dir = RMC_FIXTURE_DIR;
  EXPECT_EQ(load_program_file(dir + "/identity.tm"), identity_program());
  EXPECT_EQ(load_program_file(dir + "/witness_a1.tm"), witness_program("1"));
  EXPECT_EQ(load_program_file(dir + "/const_a1.tm"), witness_program(WitnessSpec{"1", "0010", true, {2, 2}}));
  EXPECT_EQ(load_program_file(dir + "/s.tm"), s_program());
  EXPECT_EQ(load_program_file(dir + "/ex_witness_a1.tm"), Program::ex(witness_program("1")));
  EXPECT_EQ(load_program_file(dir + "/gamma_witness_a1.tm"), gamma_program(witness_program("1")));
  EXPECT_EQ(load_program_file(dir + "/pref_append_one.tm"), prefix_closure(append_one_program()));
  EXPECT_THROW(load_program_file(dir + "/missing.tm"), std::exception);
}

TEST(Program, ValidationRejectsBadTables) {
  TableSpec ts;
  ts.states = 2;
  ts.q_out = 1;
  ts.transitions.push_back({{0, Sym::Hash, {Sym::Blank}}, {7, {Sym::Blank}, {Move::S}, true, std::nullopt}});
  EXPECT_THROW(Program::table(ts), ProgramError);

  TableSpec dup;
  dup.states = 2;
  dup.q_out = 1;
  Transition t{0, {Sym::Blank}, {Move::S}, true, std::nullopt};
  dup.transitions.push_back({{0, Sym::Hash, {Sym::Blank}}, t});
  dup.transitions.push_back({{0, Sym::Hash, {Sym::Blank}}, t});
  EXPECT_THROW(Program::table(dup), ProgramError);

  EXPECT_THROW(Program::ex(append_one_program()), ProgramError);  // ex needs an rm program
}

TEST(Program, WrapperBounds) {
  EXPECT_EQ(ex_bound({2, 2}), (PolyBound{12, 1}));
  EXPECT_EQ(ex_bound({100, 2}), (PolyBound{26, 1}));
  EXPECT_EQ(ex_bound({1, 3}), (PolyBound{12, 2}));
  EXPECT_EQ(prefix_search_bound({1, 1}), (PolyBound{6, 2}));
  EXPECT_EQ(Program::ex(witness_program("1")).bound(), (PolyBound{12, 1}));
}

TEST(Program, KeyRoundTrip) {
  Program p = s_program();
  for (const auto& [key, tr] : p.transitions()) EXPECT_EQ(p.key(p.unkey(key).state, p.unkey(key).in, p.unkey(key).work), key);
}
