#pragma once

#include "rmc/nat.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rmc {

/// Zero runs at least this long are stored as a ZeroRun segment; shorter ones
/// stay inside literals.
inline constexpr std::size_t kZeroRunThreshold = 64;

/// Runs longer than this are printed in the compact `0*<n>` form.
inline constexpr std::size_t kPrintRunThreshold = 256;

/// A finite binary word stored as literal segments and run-length-compressed
/// zero blocks.
///
/// Words are always kept in normal form: every maximal run of at least
/// kZeroRunThreshold zeros is a ZeroRun, literals never contain such a run,
/// and no segment is empty. Two words are equal iff their expansions are.
class Word {
 public:
  struct Segment {
    bool is_run = false;
    std::string bits;  // literal bits ('0'/'1'), empty for runs
    Nat zeros;         // run length, zero for literals

    bool operator==(const Segment&) const = default;
  };

  Word() = default;

  /// Throws std::invalid_argument on characters other than '0'/'1'.
  static Word from_bits(std::string_view bits);
  static Word zeros(const Nat& n);
  static Word ones(std::size_t n);

  /// Parses whitespace-separated tokens: bit strings or `0*<n>`.
  static Word parse(std::string_view text);

  const Nat& length() const { return length_; }
  bool empty() const { return length_ == 0; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// 0 or 1; throws std::out_of_range past the end.
  int bit_at(const Nat& i) const;

  Word prefix(const Nat& n) const;
  Word drop(const Nat& n) const;
  Word suffix(const Nat& n) const;

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  /// Number of zeros before the first 1 (or the whole length).
  Nat leading_zeros() const;

  /// Expanded bit string; throws std::length_error beyond `limit` bits.
  std::string bits(std::size_t limit = std::size_t{1} << 24) const;
  /// Expanded form when the length is at most `limit`.
  std::optional<std::string> try_bits(std::size_t limit) const;

  /// Compact text form; long runs become `0*<n>` tokens.
  std::string to_text() const;

  Word operator+(const Word& rhs) const;

  bool operator==(const Word& rhs) const {
    return length_ == rhs.length_ && segments_ == rhs.segments_;
  }
  /// Shortlex order (length first, then lexicographic).
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  friend class WordBuilder;
  std::vector<Segment> segments_;
  Nat length_;
};

/// Incremental construction of a normalized Word.
class WordBuilder {
 public:
  WordBuilder& bit(int b);
  WordBuilder& bits(std::string_view s);
  WordBuilder& zeros(const Nat& n);
  WordBuilder& append(const Word& w);
  /// Current contents without consuming the builder.
  Word peek() const;
  Word finish();

 private:
  void flush_zeros();
  void push_one();

  std::vector<Word::Segment> segs_;
  Nat pending_zeros_;
  Nat length_;
};

/// Sequential reader over a Word, used by the VM input head and the parsers.
class WordCursor {
 public:
  explicit WordCursor(const Word& w) : w_(&w) { settle(); }

  bool at_end() const { return seg_ >= w_->segments().size(); }
  /// Current bit; undefined at end.
  int peek() const;
  /// Zeros available starting here inside the current ZeroRun (0 if literal).
  Nat run_remaining() const;
  /// Zeros available from here up to the next 1 or the end.
  Nat zeros_ahead() const;
  void advance();
  /// Skips `n` zeros; the caller guarantees they are present.
  void skip_zeros(Nat n);
  const Nat& position() const { return pos_; }
  /// Remainder of the word from the cursor on.
  Word rest() const;

 private:
  void settle();

  const Word* w_;
  std::size_t seg_ = 0;
  std::size_t lit_off_ = 0;
  Nat run_off_;
  Nat pos_;
};

/// Length of the longest common suffix of two words.
Nat common_suffix_length(const Word& a, const Word& b);

}  // namespace rmc
