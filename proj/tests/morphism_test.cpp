#include "rmc/codes.hpp"
#include "rmc/machines.hpp"
#include "rmc/morphism.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rmc;

namespace {

Word W(const char* s) { return Word::from_bits(s); }

std::optional<std::string> bits(const std::optional<Word>& w) {
  if (!w) return std::nullopt;
  return w->bits();
}

}  // namespace

TEST(Morphism, PiAndRho) {
  EXPECT_EQ(bits(pi(W("10"))(W("011"))), "10011");
  EXPECT_EQ(bits(rho(W("10"))(W("10011"))), "011");
  EXPECT_EQ(rho(W("10"))(W("011")), std::nullopt);
  EXPECT_EQ(pi(W("1")).name(), "pi(1)");
  EXPECT_TRUE(rho(W("1")).right_ideal());
}

TEST(Morphism, DecodeMaps) {
  // code(10) 11 0 -> 10 0
  EXPECT_EQ(bits(decode_m()(W("0100" "11" "0"))), "100");
  EXPECT_EQ(decode_m()(W("0110")), std::nullopt);
  // code(1) 11 code(0) 11 1 -> code(1) 11 0 1
  EXPECT_EQ(bits(decode2_m()(W("01" "11" "00" "11" "1"))), "011101");
  EXPECT_EQ(decode2_m()(W("01" "11" "00")), std::nullopt);
}

TEST(Morphism, CompositionAppliesRightmostFirst) {
  Morphism f = compose({rho(W("0")), pi(W("01"))});
  EXPECT_EQ(bits(f(W("1"))), "11");
  Morphism g = compose({pi(W("01")), rho(W("0"))});
  EXPECT_EQ(bits(g(W("01"))), "011");
  EXPECT_EQ(g(W("1")), std::nullopt);
  Morphism nested = compose({f, g});
  EXPECT_EQ(nested.parts().size(), 4u);
  EXPECT_THROW(compose({}), std::invalid_argument);
}

TEST(Morphism, Power) {
  EXPECT_EQ(bits(power(pi(W("1")), 3)(W("0"))), "1110");
  EXPECT_EQ(bits(power(pi(W("1")), 0)(W("0"))), "0");
}

TEST(Morphism, CodedEmbedding) {
  Morphism f = c_embed(machine_morphism(s_program()));
  // code(01) 11 1 -> code(001) 11 1
  EXPECT_EQ(bits(f(W("0001" "11" "1"))), "000001" "11" "1");
  EXPECT_EQ(f(W("00" "11")), std::nullopt);
}

TEST(Morphism, MachineBacked) {
  Morphism f = machine_morphism(witness_program("1"), "w");
  EXPECT_EQ(f.kind(), Morphism::Kind::machine);
  EXPECT_TRUE(f.right_ideal());
  EXPECT_FALSE(machine_morphism(append_one_program()).right_ideal());
  EXPECT_EQ(bits(f(W("0100101"))), "0100101");
  EXPECT_EQ(f.program(), witness_program("1"));
}

TEST(Morphism, Restricted) {
  Morphism f = Morphism::restricted(
      pi(W("1")), [](const Word& x, const Word&) { return x.length() < 3; }, "short");
  EXPECT_EQ(bits(f(W("00"))), "100");
  EXPECT_EQ(f(W("000")), std::nullopt);
  EXPECT_FALSE(f.right_ideal());
}

TEST(Morphism, DomainCodeOfComposite) {
  Morphism f = compose({rho(W("01")), machine_morphism(witness_program("1"))});
  auto d = domain_code(f, 8);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].bits(), "010010");
  EXPECT_EQ(d[1].bits(), "01010010");
  EXPECT_TRUE(is_prefix_code(d));
}

TEST(Morphism, RightIdealLawOnRandomWords) {
  std::mt19937 rng(2);
  std::vector<Morphism> fs{pi(W("1")), rho(W("0")), decode_m(), decode2_m(), machine_morphism(s_program()),
                           c_embed(machine_morphism(witness_program("1")))};
  for (const auto& f : fs)
    for (int i = 0; i < 300; ++i) {
      std::string x;
      int n = rng() % 16;
      for (int j = 0; j < n; ++j) x += static_cast<char>('0' + (rng() % 3 != 0));
      auto fx = f(W(x.c_str()));
      if (!fx) continue;
      for (const auto& z : words_up_to(2)) ASSERT_EQ(f(W(x.c_str()) + z), *fx + z) << f.name() << " " << x;
    }
}
