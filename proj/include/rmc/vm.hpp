#pragma once

#include "rmc/program.hpp"
#include "rmc/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmc {

struct RunOptions {
  /// Record the output-tape content just before the first transition that
  /// reads input letter `watch` (0-based; |x| means the end marker B).
  std::optional<Nat> watch;
};

struct RunOutcome {
  enum class Status { output, undefined };
  enum class Reason { none, budget_exceeded, halted_not_qout, balance_violated };

  Status status = Status::undefined;
  Reason reason = Reason::none;
  Word output;
  /// Counted transitions. The first transition (reading the left end
  /// marker) is free.
  Nat steps;
  /// Letters consumed when the copy phase began.
  std::optional<Nat> copy_start;
  /// The input head reached the end marker at some point.
  bool saw_end = false;
  std::optional<Word> snapshot;

  bool ok() const { return status == Status::output; }
};

const char* reason_name(RunOutcome::Reason r);

/// Simulates p on # x B under its built-in bound.
RunOutcome run(const Program& p, const Word& x, const RunOptions& opts = {});

/// True iff u is a domain-code word of p: the run on u is defined and the
/// copy phase starts exactly after u.
bool in_domain_code(const Program& p, const Word& u);

struct DomainEntry {
  Word u;
  Word image;
};

/// Domain-code words of length <= max_len in shortlex order, found by
/// extending live prefixes only. A prefix is dead once the machine halts on
/// it without reaching the end marker.
std::vector<DomainEntry> enumerate_domain_code(const Program& p, unsigned max_len);

// ---- discipline checks ------------------------------------------------------

struct DisciplineViolation {
  Word x, z;
  std::string detail;
};

struct DisciplineReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // x outside the domain
  std::vector<DisciplineViolation> violations;
  bool pass() const { return violations.empty(); }
};

using Sample = std::pair<Word, Word>;

/// Output written before z is touched must equal f(x).
DisciplineReport check_sequential(const Program& p, const std::vector<Sample>& samples);
/// Sequential, plus f(xz) = f(x) z with q_out reached as z runs out.
DisciplineReport check_rm(const Program& p, const std::vector<Sample>& samples);

}  // namespace rmc
