#pragma once

#include "rmc/machines.hpp"
#include "rmc/morphism.hpp"
#include "rmc/padding.hpp"
#include "rmc/vm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmc {

// ---- witness family ---------------------------------------------------------

struct PropertyResult {
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;  // empty when pass
};

struct WitnessReport {
  PropertyResult no_11;         // (1)
  PropertyResult distinct;      // (2)
  PropertyResult extendable;    // (3)
  bool pass() const { return no_11.pass && distinct.pass && extendable.pass; }
};

struct WitnessCheckOptions {
  unsigned n_max = 10;
  /// Domain codes are enumerated up to this length for (1) and (2).
  unsigned length_bound = 30;
};

/// Checks the three witness properties for p built from spec against the
/// finite family F.
WitnessReport check_witness_properties(const WitnessSpec& spec, const std::vector<Program>& F,
                                       const WitnessCheckOptions& opt = {});

struct DomainOracleReport {
  std::size_t exhaustive = 0;  // words checked against the regex, all lengths <= 12
  std::size_t enumerated = 0;  // domain-code words up to length_bound
  std::size_t random = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Compares Dom(witness) with code(a)^+ tail A* via std::regex.
DomainOracleReport check_witness_domain(const WitnessSpec& spec, unsigned length_bound = 30,
                                        std::size_t random_samples = 400, unsigned seed = 7);

// ---- suffix tracer ----------------------------------------------------------

/// Letters listed outermost first, like compose(); applied right to left.
struct GeneratorWord {
  std::vector<Morphism> letters;
  Morphism composite() const;
};

/// code(w1) 11 code(u1) 11 u2, leftmost split.
struct SShape {
  Word w1, u1, u2;
};
std::optional<SShape> s_shape(const Word& x);

struct TraceStage {
  std::size_t index = 0;  // letters applied so far
  std::string letter;     // empty for the input stage
  Word value;
  std::optional<SShape> shape;
  /// Longest common suffix of u with u2 (S-shaped) or with the whole value.
  Nat common_suffix;
  /// |output| - |input| of a gamma letter, the coded block it adds.
  std::optional<Nat> gamma_growth;
};

struct SuffixTrace {
  std::vector<TraceStage> stages;
  bool undefined_early = false;
  std::size_t undefined_at = 0;  // index of the failing letter (1-based count)
  std::string undefined_letter;

  Nat min_common_suffix() const;
  const TraceStage* last_shaped() const;
};

/// input must be program_header(p) u; u is recovered from it.
SuffixTrace suffix_trace(const GeneratorWord& X, const Program& p, const Word& input);

/// The letters of lemma_chain(p), with rho(code(w)11) split into single-bit
/// rho letters and gamma(W) in place of gammao(W) since the header is
/// already present.
GeneratorWord chain_letters(const Program& p);

// ---- s and its iterates -----------------------------------------------------

Morphism s_morphism();
/// m-fold iterate of t -> 2 t^2 from t = n.
Nat s_iterate(unsigned m, const Nat& n);

// ---- S2(q) membership -------------------------------------------------------

/// Pairs (x, z) with x over all words of length <= max_x and a few short z.
std::vector<Sample> default_rm_samples(unsigned max_x = 8);

bool s2q_certificate(const Program& p, const PolyBound& q, const std::vector<Sample>& samples);
inline bool s2q_certificate(const Program& p, const PolyBound& q) {
  return s2q_certificate(p, q, default_rm_samples());
}

/// rho(code(w)11) . evr_c . pi(code(w)11)
Morphism direct_simulation(const Program& p, const EvalConfig& cfg = q2_config());

}  // namespace rmc
