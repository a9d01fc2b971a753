#pragma once

#include "rmc/morphism.hpp"
#include "rmc/program.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace rmc {

/// Simulated step counts recorded by the evaluators when attached.
struct StepLog {
  struct Entry {
    Nat input_length;
    Nat steps;
  };
  std::vector<Entry> entries() const;
  void add(Nat input_length, Nat steps);

 private:
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
};

struct EvalConfig {
  PolyBound q{12, 2};
  std::shared_ptr<StepLog> step_meter;  // null: no recording
};

inline EvalConfig q2_config() { return EvalConfig{}; }

/// code(serialize(p)) 11
Word program_header(const Program& p);

struct HeaderSplit {
  Program program;
  Word header;  // code(w) 11
  Word rest;
};
/// Splits code(w) 11 rest and deserializes w.
std::optional<HeaderSplit> split_program_header(const Word& x);

/// rm discipline and built-in bound coefficient-wise <= q.
bool admitted(const Program& p, const EvalConfig& cfg);

/// 4c^2 + 8c + 2
Nat padding_length(const Nat& c);
/// N_1 = padding_length(c), N_i = padding_length(N_{i-1}).
Nat n_sequence(const Nat& c, unsigned i);

Morphism expand_m();
/// expand without the domain-code test on the coded block.
Morphism expand_unchecked_m();
Morphism reexpand_m();
Morphism recontr_m();
Morphism contr_m();
/// Exponent used by recontr for a block (00)^k.
Nat recontr_exponent(const Nat& k);

Morphism gamma_w(const Program& p);
Morphism gamma_o_w(const Program& p);
Morphism gamma_q(const EvalConfig& cfg);

Morphism evr_cc(const EvalConfig& cfg);
/// decode2 . evr_cc . gamma_q
Morphism evr_c(const EvalConfig& cfg);
/// code(w) 11 x -> code(w) 11 f_w(x), evaluated in one run.
Morphism evr_c_direct(const EvalConfig& cfg);

Morphism e_q(const EvalConfig& cfg);
Morphism rho2_q(const EvalConfig& cfg);

/// ceil(log2(a + k)) for the bound of p.
unsigned chain_m(const Program& p);
/// rho(code(w)11) . decode2 . contr . recontr^2m . evr_cc(q2) . reexpand^m
///   . expand . gammao(w)
Morphism lemma_chain(const Program& p);

}  // namespace rmc
