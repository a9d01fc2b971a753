#include "rmc/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmc {

Word encode(std::string_view letters) {
  std::string out;
  out.reserve(letters.size() * 2);
  for (char c : letters) {
    switch (c) {
      case '0': out += "00"; break;
      case '1': out += "01"; break;
      case '#': out += "11"; break;
      default: throw std::invalid_argument(std::string("cannot encode '") + c + "'");
    }
  }
  return Word::from_bits(out);
}

Word encode(const Word& u) {
  WordBuilder b;
  for (const auto& s : u.segments()) {
    if (s.is_run) {
      b.zeros(s.zeros * 2);
      continue;
    }
    for (char c : s.bits) b.bits(c == '0' ? "00" : "01");
  }
  return b.finish();
}

Word encode_tuple(const std::vector<Word>& us) {
  if (us.empty()) throw std::invalid_argument("encode_tuple: empty list");
  WordBuilder b;
  for (std::size_t i = 0; i + 1 < us.size(); ++i) b.append(encode(us[i])).bits("11");
  b.append(us.back());
  return b.finish();
}

std::optional<std::pair<Word, Word>> parse_coded_prefix(const Word& x) {
  WordCursor c(x);
  WordBuilder u;
  for (;;) {
    Nat z = c.zeros_ahead();
    c.skip_zeros(z);
    if (z % 2 == 0) {
      // 00 pairs, then the 11 delimiter
      u.zeros(z / 2);
      if (c.at_end()) return std::nullopt;
      c.advance();
      if (c.at_end() || c.peek() != 1) return std::nullopt;
      c.advance();
      return std::make_pair(u.finish(), c.rest());
    }
    u.zeros(z / 2);
    if (c.at_end()) return std::nullopt;
    c.advance();
    u.bit(1);
  }
}

bool is_prefix_code(const std::vector<Word>& p) {
  std::vector<Word> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && s[j].starts_with(s[i])) return false;
  return true;
}

std::vector<Word> words_of_length(unsigned n) {
  if (n > 24) throw std::length_error("word enumeration too large");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  std::string buf(n, '0');
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (unsigned i = 0; i < n; ++i) buf[i] = ((v >> (n - 1 - i)) & 1) ? '1' : '0';
    out.push_back(Word::from_bits(buf));
  }
  return out;
}

std::vector<Word> words_up_to(unsigned L) {
  std::vector<Word> out;
  for (unsigned n = 0; n <= L; ++n) {
    auto w = words_of_length(n);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

RightIdealCode right_ideal_code(const Predicate& member, unsigned L) {
  RightIdealCode r;
  std::vector<std::string> members;
  for (unsigned n = 0; n <= L; ++n) {
    for (const auto& w : words_of_length(n)) {
      if (!member(w)) continue;
      std::string b = w.bits();
      members.push_back(b);
      if (n < L) {
        for (const char* d : {"0", "1"}) {
          Word ext = Word::from_bits(b + d);
          if (!member(ext)) r.violations.push_back(ext);
        }
      }
    }
  }
  // prefix-minimal: no proper prefix is a member
  std::vector<std::string> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& m : members) {
    bool minimal = true;
    for (std::size_t k = 0; k < m.size() && minimal; ++k)
      if (std::binary_search(sorted.begin(), sorted.end(), m.substr(0, k))) minimal = false;
    if (minimal) r.code.push_back(Word::from_bits(m));
  }
  return r;
}

}  // namespace rmc
