#include "rmc/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace rmc {

std::size_t to_size(const Nat& n) {
  if (n < 0 || n > Nat(std::numeric_limits<std::size_t>::max()))
    throw std::overflow_error("value does not fit in size_t: " + n.str());
  return static_cast<std::size_t>(n);
}

unsigned ceil_log2(std::uint64_t n) {
  unsigned r = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p <<= 1;
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- builder

void WordBuilder::push_one() {
  if (segs_.empty() || segs_.back().is_run) segs_.push_back({});
  segs_.back().bits.push_back('1');
}

void WordBuilder::flush_zeros() {
  if (pending_zeros_ == 0) return;
  if (pending_zeros_ >= kZeroRunThreshold) {
    segs_.push_back({true, {}, pending_zeros_});
  } else {
    if (segs_.empty() || segs_.back().is_run) segs_.push_back({});
    segs_.back().bits.append(static_cast<std::size_t>(pending_zeros_), '0');
  }
  pending_zeros_ = 0;
}

WordBuilder& WordBuilder::bit(int b) {
  if (b == 0) {
    pending_zeros_ += 1;
  } else {
    flush_zeros();
    push_one();
  }
  return *this;
}

WordBuilder& WordBuilder::bits(std::string_view s) {
  std::size_t z = 0;
  for (char c : s) {
    if (c == '0') {
      ++z;
    } else if (c == '1') {
      if (z) {
        pending_zeros_ += z;
        z = 0;
      }
      flush_zeros();
      push_one();
    } else {
      throw std::invalid_argument(std::string("not a bit: '") + c + "'");
    }
  }
  if (z) pending_zeros_ += z;
  return *this;
}

WordBuilder& WordBuilder::zeros(const Nat& n) {
  if (n < 0) throw std::invalid_argument("negative zero run");
  pending_zeros_ += n;
  return *this;
}

WordBuilder& WordBuilder::append(const Word& w) {
  for (const auto& s : w.segments()) {
    if (s.is_run)
      zeros(s.zeros);
    else
      bits(s.bits);
  }
  return *this;
}

Word WordBuilder::peek() const {
  WordBuilder copy = *this;
  return copy.finish();
}

Word WordBuilder::finish() {
  flush_zeros();
  Word w;
  w.segments_ = std::move(segs_);
  segs_.clear();
  Nat len = 0;
  for (const auto& s : w.segments_) len += s.is_run ? s.zeros : Nat(s.bits.size());
  w.length_ = len;
  return w;
}

// ---------------------------------------------------------------- word

Word Word::from_bits(std::string_view bits) { return WordBuilder().bits(bits).finish(); }

Word Word::zeros(const Nat& n) { return WordBuilder().zeros(n).finish(); }

Word Word::ones(std::size_t n) { return from_bits(std::string(n, '1')); }

Word Word::parse(std::string_view text) {
  WordBuilder b;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok.size() > 2 && tok.substr(0, 2) == "0*") {
      std::string digits(tok.substr(2));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw std::invalid_argument("bad zero-run token: " + std::string(tok));
      b.zeros(Nat(digits));
    } else {
      b.bits(tok);
    }
    i = j;
  }
  return b.finish();
}

int Word::bit_at(const Nat& i) const {
  if (i < 0 || i >= length_) throw std::out_of_range("bit index out of range");
  Nat off = i;
  for (const auto& s : segments_) {
    Nat len = s.is_run ? s.zeros : Nat(s.bits.size());
    if (off < len) return s.is_run ? 0 : s.bits[static_cast<std::size_t>(off)] - '0';
    off -= len;
  }
  throw std::out_of_range("bit index out of range");
}

Word Word::prefix(const Nat& n) const {
  if (n >= length_) return *this;
  WordBuilder b;
  Nat left = n;
  for (const auto& s : segments_) {
    if (left == 0) break;
    if (s.is_run) {
      Nat take = std::min(left, s.zeros);
      b.zeros(take);
      left -= take;
    } else {
      std::size_t take = left < Nat(s.bits.size()) ? static_cast<std::size_t>(left) : s.bits.size();
      b.bits(std::string_view(s.bits).substr(0, take));
      left -= take;
    }
  }
  return b.finish();
}

Word Word::drop(const Nat& n) const {
  if (n >= length_) return Word();
  WordBuilder b;
  Nat skip = n;
  for (const auto& s : segments_) {
    if (s.is_run) {
      if (skip >= s.zeros) {
        skip -= s.zeros;
      } else {
        b.zeros(s.zeros - skip);
        skip = 0;
      }
    } else {
      if (skip >= s.bits.size()) {
        skip -= s.bits.size();
      } else {
        b.bits(std::string_view(s.bits).substr(static_cast<std::size_t>(skip)));
        skip = 0;
      }
    }
  }
  return b.finish();
}

Word Word::suffix(const Nat& n) const {
  if (n >= length_) return *this;
  return drop(length_ - n);
}

bool Word::starts_with(const Word& p) const {
  if (p.length_ > length_) return false;
  return prefix(p.length_) == p;
}

bool Word::ends_with(const Word& s) const {
  if (s.length_ > length_) return false;
  return suffix(s.length_) == s;
}

Nat Word::leading_zeros() const {
  Nat z = 0;
  for (const auto& s : segments_) {
    if (s.is_run) {
      z += s.zeros;
      continue;
    }
    std::size_t p = s.bits.find('1');
    if (p == std::string::npos) {
      z += s.bits.size();
      continue;
    }
    z += p;
    break;
  }
  return z;
}

std::optional<std::string> Word::try_bits(std::size_t limit) const {
  if (length_ > limit) return std::nullopt;
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const auto& s : segments_) {
    if (s.is_run)
      out.append(static_cast<std::size_t>(s.zeros), '0');
    else
      out += s.bits;
  }
  return out;
}

std::string Word::bits(std::size_t limit) const {
  auto b = try_bits(limit);
  if (!b) throw std::length_error("word too long to expand: " + length_.str() + " bits");
  return *b;
}

std::string Word::to_text() const {
  std::string out;
  bool last_token = false;
  for (const auto& s : segments_) {
    if (s.is_run && s.zeros > kPrintRunThreshold) {
      if (!out.empty()) out.push_back(' ');
      out += "0*" + s.zeros.str();
      last_token = true;
      continue;
    }
    if (last_token) out.push_back(' ');
    last_token = false;
    if (s.is_run)
      out.append(static_cast<std::size_t>(s.zeros), '0');
    else
      out += s.bits;
  }
  return out;
}

Word Word::operator+(const Word& rhs) const {
  if (rhs.empty()) return *this;
  if (empty()) return rhs;
  return WordBuilder().append(*this).append(rhs).finish();
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  if (length_ != rhs.length_)
    return length_ < rhs.length_ ? std::strong_ordering::less : std::strong_ordering::greater;
  WordCursor a(*this), b(rhs);
  while (!a.at_end()) {
    Nat za = a.zeros_ahead(), zb = b.zeros_ahead();
    if (za != zb) return za > zb ? std::strong_ordering::less : std::strong_ordering::greater;
    a.skip_zeros(za);
    b.skip_zeros(zb);
    if (a.at_end()) break;
    a.advance();
    b.advance();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- cursor

void WordCursor::settle() {
  const auto& segs = w_->segments();
  while (seg_ < segs.size()) {
    const auto& s = segs[seg_];
    if (s.is_run ? run_off_ < s.zeros : lit_off_ < s.bits.size()) return;
    ++seg_;
    lit_off_ = 0;
    run_off_ = 0;
  }
}

int WordCursor::peek() const {
  const auto& s = w_->segments()[seg_];
  return s.is_run ? 0 : s.bits[lit_off_] - '0';
}

Nat WordCursor::run_remaining() const {
  if (at_end()) return 0;
  const auto& s = w_->segments()[seg_];
  return s.is_run ? Nat(s.zeros - run_off_) : Nat(0);
}

Nat WordCursor::zeros_ahead() const {
  Nat z = 0;
  const auto& segs = w_->segments();
  for (std::size_t i = seg_; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (s.is_run) {
      z += i == seg_ ? Nat(s.zeros - run_off_) : s.zeros;
      continue;
    }
    std::size_t from = i == seg_ ? lit_off_ : 0;
    std::size_t p = s.bits.find('1', from);
    if (p == std::string::npos) {
      z += s.bits.size() - from;
      continue;
    }
    z += p - from;
    break;
  }
  return z;
}

void WordCursor::advance() {
  const auto& s = w_->segments()[seg_];
  if (s.is_run)
    run_off_ += 1;
  else
    ++lit_off_;
  pos_ += 1;
  settle();
}

void WordCursor::skip_zeros(Nat n) {
  pos_ += n;
  const auto& segs = w_->segments();
  while (n > 0) {
    const auto& s = segs[seg_];
    if (s.is_run) {
      Nat take = std::min(n, Nat(s.zeros - run_off_));
      run_off_ += take;
      n -= take;
    } else {
      std::size_t avail = s.bits.size() - lit_off_;
      std::size_t take = n < Nat(avail) ? static_cast<std::size_t>(n) : avail;
      lit_off_ += take;
      n -= take;
    }
    settle();
  }
}

Word WordCursor::rest() const {
  WordBuilder b;
  const auto& segs = w_->segments();
  for (std::size_t i = seg_; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (s.is_run)
      b.zeros(i == seg_ ? Nat(s.zeros - run_off_) : s.zeros);
    else
      b.bits(std::string_view(s.bits).substr(i == seg_ ? lit_off_ : 0));
  }
  return b.finish();
}

// ---------------------------------------------------------------- suffixes

namespace {

// A word as 0^{z0} 1 0^{z1} 1 ... 1 0^{zm}.
std::vector<Nat> zero_counts(const Word& w) {
  std::vector<Nat> out(1, Nat(0));
  for (const auto& s : w.segments()) {
    if (s.is_run) {
      out.back() += s.zeros;
      continue;
    }
    std::size_t z = 0;
    for (char c : s.bits) {
      if (c == '0') {
        ++z;
      } else {
        out.back() += z;
        z = 0;
        out.emplace_back(0);
      }
    }
    out.back() += z;
  }
  return out;
}

}  // namespace

Nat common_suffix_length(const Word& a, const Word& b) {
  auto za = zero_counts(a), zb = zero_counts(b);
  Nat n = 0;
  std::size_t i = za.size(), j = zb.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (za[i] != zb[j]) return n + std::min(za[i], zb[j]);
    n += za[i];
    if (i == 0 || j == 0) return n;
    n += 1;
  }
  return n;
}

}  // namespace rmc
