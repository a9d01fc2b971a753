#pragma once

#include "rmc/word.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace rmc {

/// Letterwise 0 -> 00, 1 -> 01, # -> 11. Throws on other characters.
Word encode(std::string_view letters);
/// Letterwise encoding of a binary word; zero runs stay compressed.
Word encode(const Word& u);

/// code(u1) 11 code(u2) 11 ... 11 u_k. The last component is left raw.
/// Throws std::invalid_argument on an empty list.
Word encode_tuple(const std::vector<Word>& us);

/// Splits x = code(u) 11 rest.
std::optional<std::pair<Word, Word>> parse_coded_prefix(const Word& x);

/// True iff no element is a proper prefix of another (duplicates count as a
/// violation too).
bool is_prefix_code(const std::vector<Word>& p);

using Predicate = std::function<bool(const Word&)>;

struct RightIdealCode {
  std::vector<Word> code;        // prefix-minimal members, shortlex order
  std::vector<Word> violations;  // members x with x0 or x1 (within L) rejected
  bool ok() const { return violations.empty(); }
};

/// Prefix-minimal members of a right ideal restricted to length <= L.
RightIdealCode right_ideal_code(const Predicate& member, unsigned L);

/// All binary words of exactly length n, in lexicographic order.
std::vector<Word> words_of_length(unsigned n);
/// All binary words of length <= L, shortlex order.
std::vector<Word> words_up_to(unsigned L);

}  // namespace rmc
