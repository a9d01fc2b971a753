// Binary program layout. Every field is a natural number n written as
// 1^l 0 bin(n), where l is the bit length of n (so 0 is the single bit "0").
//
//   program   := field(version=1) body
//   body      := field(0) table | field(1) body | field(2) body
//   table     := states tapes initial qout copy+1 a k discipline count rule*
//   rule      := state in work^t next write^t move^t in_move out
//
// copy+1 is 0 when there is no copy state. Symbols use 0 1 # B X -> 0..4,
// moves L S R -> 0..2, in_move S R -> 0..1, out none/0/1 -> 0..2. Rules appear
// in increasing key order (state, in, work tapes); implied copy-state rules
// are never written. Wrapper kinds 1 and 2 are ex and prefix search.

#include "rmc/program.hpp"

#include <map>
#include <mutex>

namespace rmc {

namespace {

constexpr std::uint64_t kVersion = 1;

void put(std::string& out, std::uint64_t n) {
  std::string bin;
  for (std::uint64_t v = n; v; v >>= 1) bin.push_back(static_cast<char>('0' + (v & 1)));
  out.append(bin.size(), '1');
  out.push_back('0');
  out.append(bin.rbegin(), bin.rend());
}

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  std::uint64_t get() {
    std::size_t l = 0;
    while (pos_ < s_.size() && s_[pos_] == '1') ++l, ++pos_;
    if (pos_ >= s_.size()) throw FormatError("truncated field");
    if (s_[pos_] != '0') throw FormatError("bad bit");
    ++pos_;
    if (l > 63) throw FormatError("field too large");
    if (pos_ + l > s_.size()) throw FormatError("truncated field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < l; ++i) {
      char c = s_[pos_++];
      if (c != '0' && c != '1') throw FormatError("bad bit");
      v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    if (l > 0 && (v >> (l - 1)) != 1) throw FormatError("non-canonical field");
    return v;
  }

  std::uint64_t get_below(std::uint64_t limit, const char* what) {
    std::uint64_t v = get();
    if (v >= limit) throw FormatError(std::string("field out of range: ") + what);
    return v;
  }

  bool done() const { return pos_ == s_.size(); }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

void put_body(std::string& out, const Program& p) {
  switch (p.kind()) {
    case Program::Kind::ex:
      put(out, 1);
      put_body(out, p.inner());
      return;
    case Program::Kind::prefix_search:
      put(out, 2);
      put_body(out, p.inner());
      return;
    case Program::Kind::table:
      break;
  }
  put(out, 0);
  put(out, p.states());
  put(out, p.tapes());
  put(out, p.initial());
  put(out, p.q_out());
  put(out, p.copy_state() ? *p.copy_state() + 1 : 0);
  put(out, p.bound().a);
  put(out, p.bound().k);
  put(out, static_cast<std::uint64_t>(p.discipline()));
  put(out, p.transitions().size());
  for (const auto& [key, t] : p.transitions()) {
    TransitionKey k = p.unkey(key);
    put(out, k.state);
    put(out, static_cast<std::uint64_t>(k.in));
    for (Sym s : k.work) put(out, static_cast<std::uint64_t>(s));
    put(out, t.next);
    for (Sym s : t.writes) put(out, static_cast<std::uint64_t>(s));
    for (Move m : t.moves) put(out, static_cast<std::uint64_t>(m));
    put(out, t.advance_input ? 1 : 0);
    put(out, t.out ? static_cast<std::uint64_t>(*t.out) + 1 : 0);
  }
}

Program get_body(Reader& r, int depth) {
  if (depth > 64) throw FormatError("wrapper nesting too deep");
  std::uint64_t kind = r.get_below(3, "kind");
  if (kind == 1 || kind == 2) {
    Program inner = get_body(r, depth + 1);
    try {
      return kind == 1 ? Program::ex(inner) : Program::prefix_search(inner);
    } catch (const ProgramError& e) {
      throw FormatError(e.what());
    }
  }
  TableSpec spec;
  spec.states = static_cast<std::uint32_t>(r.get_below(1u << 24, "states"));
  spec.tapes = static_cast<std::uint32_t>(r.get_below(7, "tapes"));
  spec.initial = static_cast<std::uint32_t>(r.get_below(1u << 24, "initial"));
  spec.q_out = static_cast<std::uint32_t>(r.get_below(1u << 24, "qout"));
  if (std::uint64_t c = r.get_below(1u << 24, "copy"); c > 0)
    spec.copy_state = static_cast<std::uint32_t>(c - 1);
  spec.bound.a = r.get();
  spec.bound.k = r.get_below(64, "k");
  spec.discipline = static_cast<Discipline>(r.get_below(3, "discipline"));
  std::uint64_t count = r.get_below(1u << 24, "count");
  std::uint64_t last_key = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    TransitionKey k;
    Transition t;
    k.state = static_cast<std::uint32_t>(r.get_below(1u << 24, "state"));
    k.in = static_cast<Sym>(r.get_below(kInputSymbols, "in"));
    for (std::uint32_t j = 0; j < spec.tapes; ++j)
      k.work.push_back(static_cast<Sym>(r.get_below(kWorkSymbols, "work")));
    t.next = static_cast<std::uint32_t>(r.get_below(1u << 24, "next"));
    for (std::uint32_t j = 0; j < spec.tapes; ++j)
      t.writes.push_back(static_cast<Sym>(r.get_below(kWorkSymbols, "write")));
    for (std::uint32_t j = 0; j < spec.tapes; ++j)
      t.moves.push_back(static_cast<Move>(r.get_below(3, "move")));
    t.advance_input = r.get_below(2, "in_move") == 1;
    if (std::uint64_t o = r.get_below(3, "out"); o > 0) t.out = static_cast<int>(o - 1);
    // canonical order: strictly increasing (state, in, work)
    std::uint64_t key = (std::uint64_t{k.state} * kInputSymbols + static_cast<std::uint64_t>(k.in));
    for (Sym s : k.work) key = key * kWorkSymbols + static_cast<std::uint64_t>(s);
    if (i > 0 && key <= last_key) throw FormatError("rules out of canonical order");
    last_key = key;
    spec.transitions.emplace_back(std::move(k), std::move(t));
  }
  try {
    return Program::table(std::move(spec));
  } catch (const ProgramError& e) {
    throw FormatError(e.what());
  }
}

struct Cache {
  std::mutex mu;
  std::map<std::string, std::optional<Program>> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

std::string serialize(const Program& p) {
  std::string out;
  put(out, kVersion);
  put_body(out, p);
  return out;
}

Program deserialize(const std::string& bits) {
  Reader r(bits);
  if (r.get() != kVersion) throw FormatError("unknown format version");
  Program p = get_body(r, 0);
  if (!r.done()) throw FormatError("trailing bits after program");
  return p;
}

std::optional<Program> try_deserialize(const std::string& bits) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.entries.find(bits); it != c.entries.end()) return it->second;
  }
  std::optional<Program> p;
  try {
    p = deserialize(bits);
  } catch (const FormatError&) {
  }
  std::lock_guard lock(c.mu);
  if (c.entries.size() > 4096) c.entries.clear();
  c.entries.emplace(bits, p);
  return p;
}

}  // namespace rmc
