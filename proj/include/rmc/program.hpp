#pragma once

#include "rmc/nat.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmc {

/// Tape alphabet. Input tapes only ever hold 0, 1, # and B; X is an extra
/// work-tape marker.
enum class Sym : std::uint8_t { Zero = 0, One = 1, Hash = 2, Blank = 3, X = 4 };
enum class Move : std::uint8_t { L = 0, S = 1, R = 2 };

inline constexpr unsigned kInputSymbols = 4;
inline constexpr unsigned kWorkSymbols = 5;

char sym_char(Sym s);
Sym sym_from_char(char c);  // throws ProgramError
char move_char(Move m);

/// q(n) = a n^k + a.
struct PolyBound {
  std::uint64_t a = 1;
  std::uint64_t k = 1;

  Nat eval(const Nat& n) const;
  /// Coefficient-wise comparison, which implies pointwise <= for this shape.
  bool within(const PolyBound& q) const { return a <= q.a && k <= q.k; }
  bool operator==(const PolyBound&) const = default;
  std::string str() const;
};

enum class Discipline { plain, sequential, rm };
const char* discipline_name(Discipline d);

struct ProgramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Transition {
  std::uint32_t next = 0;
  std::vector<Sym> writes;  // one per work tape
  std::vector<Move> moves;  // one per work tape
  bool advance_input = false;
  std::optional<int> out;   // bit appended to the output tape

  bool operator==(const Transition&) const = default;
};

struct TransitionKey {
  std::uint32_t state = 0;
  Sym in = Sym::Blank;
  std::vector<Sym> work;
};

/// Everything needed to build a table program.
struct TableSpec {
  std::uint32_t states = 1;
  std::uint32_t tapes = 1;
  std::uint32_t initial = 0;
  std::uint32_t q_out = 0;
  /// State that copies the remaining input and then enters q_out. Its
  /// transitions are implied and must not be listed.
  std::optional<std::uint32_t> copy_state;
  PolyBound bound;
  Discipline discipline = Discipline::plain;
  std::vector<std::pair<TransitionKey, Transition>> transitions;
};

/// Immutable description of a deterministic multi-tape transducer.
///
/// Three constructions exist. A table program is an explicit transition
/// table. `ex` wraps an rm program so that it acts on 0^h 1 u z as
/// 0^h 1 f(u) z. `prefix_search` runs the inner program on successive
/// prefixes of the input and, on the first accepted prefix u of x = u z,
/// outputs f(u) z.
class Program {
 public:
  enum class Kind { table, ex, prefix_search };

  /// Validates and builds; throws ProgramError.
  static Program table(TableSpec spec);
  static Program ex(const Program& inner);
  static Program prefix_search(const Program& inner);

  Kind kind() const;
  PolyBound bound() const;
  Discipline discipline() const;
  /// Only for wrappers.
  const Program& inner() const;

  // Table programs only.
  std::uint32_t states() const;
  std::uint32_t tapes() const;
  std::uint32_t initial() const;
  std::uint32_t q_out() const;
  std::optional<std::uint32_t> copy_state() const;
  /// Explicit transitions in canonical key order.
  const std::map<std::uint64_t, Transition>& transitions() const;
  /// Lookup including the implied copy-state transitions.
  const Transition* find(std::uint32_t state, Sym in, const std::uint8_t* work) const;

  std::uint64_t key(std::uint32_t state, Sym in, const std::vector<Sym>& work) const;
  TransitionKey unkey(std::uint64_t key) const;

  /// Same program with a different built-in bound.
  Program with_bound(PolyBound b) const;

  bool operator==(const Program& rhs) const;

 private:
  struct Impl;
  explicit Program(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Bound of ex(p) for an inner bound (a, k).
PolyBound ex_bound(PolyBound inner);
/// Bound of prefix_search(p) for an inner bound (a, k).
PolyBound prefix_search_bound(PolyBound inner);

inline Program ex_transform(const Program& p) { return Program::ex(p); }
inline Program prefix_closure(const Program& p) { return Program::prefix_search(p); }

// ---- text format ----------------------------------------------------------

Program parse_program_text(const std::string& text);
std::string program_text(const Program& p);
Program load_program_file(const std::string& path);

// ---- binary serialization -------------------------------------------------

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Self-delimiting binary form, returned as a '0'/'1' string.
std::string serialize(const Program& p);
/// Inverse of serialize; throws FormatError on anything not in its image.
Program deserialize(const std::string& bits);
/// Non-throwing variant backed by a cache.
std::optional<Program> try_deserialize(const std::string& bits);

}  // namespace rmc
