#include "rmc/codes.hpp"
#include "rmc/inversion.hpp"
#include "rmc/machines.hpp"
#include "rmc/vm.hpp"

#include <gtest/gtest.h>

using namespace rmc;

namespace {

Word W(const std::string& s) { return Word::from_bits(s); }
const Word k11 = Word::from_bits("11");

std::vector<Word> witness_inputs(const WitnessSpec& spec, int count) {
  std::vector<Word> xs;
  std::string ca = encode(W(spec.a)).bits();
  for (int i = 0; i < count; ++i) {
    std::string x;
    for (int j = 0; j <= i % 6; ++j) x += ca;
    x += spec.tail;
    static const char* tails[] = {"", "0", "1", "10", "011"};
    xs.push_back(W(x + tails[i % 5]));
  }
  return xs;
}

}  // namespace

TEST(Inversion, EqInverse) {
  EvalConfig cfg = q2_config();
  Program p = witness_program("1");
  Word h = program_header(p);
  std::vector<Word> coded;
  for (const auto& x : witness_inputs({"1", "0010"}, 20))
    if (auto c = gamma_q(cfg)(h + x)) coded.push_back(*c);
  ASSERT_EQ(coded.size(), 20u);
  auto rep = check_semigroup_inverse(e_q(cfg), invert_e_q(cfg), coded, true);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.checked, 20u);
  // a wrong block is not an image
  Word fake = h + encode(W("010010")) + k11 + encode(W("1")) + k11;
  EXPECT_EQ(invert_e_q(cfg)(fake), std::nullopt);
}

TEST(Inversion, DetectsWrongInverse) {
  Morphism f = pi(W("1"));
  Morphism g = pi(W("0"));  // not an inverse of f
  auto rep = check_semigroup_inverse(f, g, {W("0"), W("01")});
  EXPECT_FALSE(rep.pass());
  auto good = check_semigroup_inverse(f, rho(W("1")), {W("0"), W("01")}, true);
  EXPECT_TRUE(good.pass());
}

TEST(Inversion, RestrictBalanced) {
  // inverse of x -> 0^{2n^2} 1 style blow-up: map 1 0^k -> 0^(k*k) 1
  Morphism g = Morphism::named("g", [](const Word& y) -> std::optional<Word> {
    if (y.empty() || y.bit_at(0) != 1) return std::nullopt;
    Nat k = y.length() - 1;
    return Word::zeros(k * k) + W("1");
  });
  Morphism r = restrict_balanced(g, {1, 1});
  EXPECT_EQ(r(W("10")), W("01"));      // 1 <= 2+1
  EXPECT_EQ(r(W("1000")), std::nullopt);  // 10 > 4+1
  EXPECT_EQ(restrict_balanced(g, {1, 2})(W("1000")), Word::zeros(9) + W("1"));
}

TEST(Inversion, OracleConstruction) {
  EvalConfig cfg = q2_config();
  WitnessSpec spec{"1", "0010", true, {2, 2}};
  Program p = witness_program(spec);
  auto e = reference_e_prime(cfg, {p});
  Morphism inv = build_inverse(p, e, cfg);
  bool moved = false;
  for (const auto& x : witness_inputs(spec, 25)) {
    Word y = run(p, x).output;
    e->reset_counts();
    auto g = inv(y);
    ASSERT_TRUE(g) << y.to_text();
    EXPECT_EQ(run(p, *g).output, y);
    EXPECT_LE(Nat(e->call_count()), y.length() + 2);
    EXPECT_LE(Nat(e->domain_test_count()), y.length() + 1);
    moved = moved || !(*g == x);
  }
  EXPECT_TRUE(moved);  // the constant head forgets how long u was
  EXPECT_EQ(inv(W("0")), std::nullopt);
}

TEST(Inversion, RefusesProgramsOutsideTheBound) {
  Program wide = witness_program("1", {2, 5});
  auto e = reference_e_prime(q2_config(), {wide});
  EXPECT_THROW(build_inverse(wide, e, q2_config()), std::invalid_argument);
}

TEST(Inversion, ReferenceOraclePicksShortlexFirst) {
  EvalConfig cfg = q2_config();
  WitnessSpec spec{"1", "0010", true, {2, 2}};
  Program p = witness_program(spec);
  Program ex = Program::ex(p);
  auto e = reference_e_prime(cfg, {p});
  Word h = program_header(ex);
  // 0 1 u with f(u) = 100 has preimages 010010 and 01010010; the first wins
  Word y = h + encode(W("01100")) + k11 + W("1");
  auto got = e->call(y);
  ASSERT_TRUE(got);
  EXPECT_EQ(*got, h + encode(W("01010010")) + k11 + W("1"));
  EXPECT_TRUE(e->domain_test(y));
  EXPECT_FALSE(e->domain_test(h + encode(W("011")) + k11));
  EXPECT_EQ(e->call_count(), 1u);
  EXPECT_EQ(e->domain_test_count(), 2u);
}
