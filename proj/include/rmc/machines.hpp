#pragma once

#include "rmc/program.hpp"
#include "rmc/word.hpp"

#include <string>

namespace rmc {

/// Parameters of a witness program: an rm machine whose domain code is
/// code(a)^+ tail.
struct WitnessSpec {
  std::string a = "1";
  std::string tail = "0010";
  /// false: identity on the ideal. true: u z -> 1 0^ceil(|u|/(4|a|)) z.
  bool constant_head = false;
  PolyBound bound{2, 2};
};

/// Finite-state rm program (one unused work tape) for the given WitnessSpec.
Program witness_program(const WitnessSpec& spec);
inline Program witness_program(const std::string& a, PolyBound b = {2, 2}) {
  return witness_program(WitnessSpec{a, "0010", false, b});
}

/// Value of a witness program on a domain-code word u.
Word witness_value(const WitnessSpec& spec, const Word& u);

/// rm program copying its input; domain code {empty word}.
Program identity_program(PolyBound b = {1, 1});
/// Plain program that never reaches its output state.
Program looping_program(PolyBound b = {1, 1});
/// Plain program x -> x1.
Program append_one_program();
/// Plain program reversing its input; writes only after reading all of it.
Program reverse_program();
/// rm program with empty domain.
Program empty_program();

/// rm program for 0^n 1 x -> 0^{2n^2} 1 x, one work tape with marker X.
Program s_program(PolyBound b = {2, 2});

/// Table program computing code(w) 11 u v -> code(w) 11 code(u) 11 v where
/// w = serialize(p) and u is the domain-code prefix of u v. p must be a
/// finite-state table program whose runs never exhaust its own budget.
Program gamma_program(const Program& p);

}  // namespace rmc
