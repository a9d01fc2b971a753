#include "rmc/program.hpp"

#include <algorithm>
#include <sstream>

namespace rmc {

char sym_char(Sym s) {
  static constexpr char kChars[] = {'0', '1', '#', 'B', 'X'};
  return kChars[static_cast<int>(s)];
}

Sym sym_from_char(char c) {
  switch (c) {
    case '0': return Sym::Zero;
    case '1': return Sym::One;
    case '#': return Sym::Hash;
    case 'B': return Sym::Blank;
    case 'X': return Sym::X;
  }
  throw ProgramError(std::string("unknown tape symbol '") + c + "'");
}

char move_char(Move m) {
  static constexpr char kChars[] = {'L', 'S', 'R'};
  return kChars[static_cast<int>(m)];
}

Nat PolyBound::eval(const Nat& n) const {
  Nat p = 1;
  for (std::uint64_t i = 0; i < k; ++i) p *= n;
  return Nat(a) * p + Nat(a);
}

std::string PolyBound::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(k) + ")";
}

const char* discipline_name(Discipline d) {
  switch (d) {
    case Discipline::plain: return "plain";
    case Discipline::sequential: return "sequential";
    case Discipline::rm: return "rm";
  }
  return "?";
}

PolyBound ex_bound(PolyBound in) {
  std::uint64_t q = 1;
  if (in.k < 64) {
    std::uint64_t d = std::uint64_t{1} << in.k;
    q = (in.a + d - 1) / d;
  }
  return {std::max<std::uint64_t>(12, q + 1), (in.k + 1) / 2};
}

PolyBound prefix_search_bound(PolyBound in) { return {4 * in.a + 2, 2 * in.k}; }

struct Program::Impl {
  Kind kind = Kind::table;
  PolyBound bound;
  Discipline discipline = Discipline::plain;
  std::optional<Program> inner;

  std::uint32_t states = 0, tapes = 0, initial = 0, q_out = 0;
  std::optional<std::uint32_t> copy_state;
  std::uint64_t work_combos = 1;  // 5^tapes
  std::map<std::uint64_t, Transition> table;
  std::vector<const Transition*> dense;  // by key, when small enough
  std::vector<Transition> copy_rules;    // by in * work_combos + work index
};

namespace {

constexpr std::uint32_t kMaxTapes = 6;
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

std::uint64_t pow5(std::uint32_t t) {
  std::uint64_t p = 1;
  for (std::uint32_t i = 0; i < t; ++i) p *= kWorkSymbols;
  return p;
}

}  // namespace

Program Program::table(TableSpec spec) {
  auto impl = std::make_shared<Impl>();
  if (spec.states == 0) throw ProgramError("program needs at least one state");
  if (spec.tapes == 0 || spec.tapes > kMaxTapes)
    throw ProgramError("work tape count must be in 1.." + std::to_string(kMaxTapes));
  if (spec.initial >= spec.states || spec.q_out >= spec.states)
    throw ProgramError("initial/output state out of range");
  if (spec.copy_state) {
    if (*spec.copy_state >= spec.states) throw ProgramError("copy state out of range");
    if (*spec.copy_state == spec.q_out) throw ProgramError("copy state equals output state");
  }
  if (spec.bound.a < 1 || spec.bound.k < 1) throw ProgramError("bound needs a >= 1 and k >= 1");
  if (spec.discipline == Discipline::rm && !spec.copy_state)
    throw ProgramError("rm discipline needs a copy state");

  impl->kind = Kind::table;
  impl->bound = spec.bound;
  impl->discipline = spec.discipline;
  impl->states = spec.states;
  impl->tapes = spec.tapes;
  impl->initial = spec.initial;
  impl->q_out = spec.q_out;
  impl->copy_state = spec.copy_state;
  impl->work_combos = pow5(spec.tapes);

  Program p(impl);
  for (auto& [k, t] : spec.transitions) {
    if (k.state >= spec.states) throw ProgramError("transition from unknown state");
    if (k.state == spec.q_out) throw ProgramError("transition out of the output state");
    if (spec.copy_state && k.state == *spec.copy_state)
      throw ProgramError("copy state transitions are implied");
    if (static_cast<unsigned>(k.in) >= kInputSymbols) throw ProgramError("bad input symbol");
    if (k.work.size() != spec.tapes || t.writes.size() != spec.tapes || t.moves.size() != spec.tapes)
      throw ProgramError("work tape arity mismatch");
    if (t.next >= spec.states) throw ProgramError("transition to unknown state");
    if (k.in == Sym::Blank && t.advance_input) throw ProgramError("input head moves past the end");
    if (t.out && *t.out != 0 && *t.out != 1) throw ProgramError("output must be a bit");
    std::uint64_t key = p.key(k.state, k.in, k.work);
    if (!impl->table.emplace(key, t).second) throw ProgramError("duplicate transition key");
  }

  if (spec.copy_state) {
    const std::uint64_t P = impl->work_combos;
    impl->copy_rules.resize(kInputSymbols * P);
    for (unsigned in = 0; in < kInputSymbols; ++in) {
      for (std::uint64_t w = 0; w < P; ++w) {
        Transition& t = impl->copy_rules[in * P + w];
        t.writes.resize(spec.tapes);
        t.moves.assign(spec.tapes, Move::S);
        std::uint64_t rest = w;
        for (std::uint32_t i = spec.tapes; i-- > 0;) {
          t.writes[i] = static_cast<Sym>(rest % kWorkSymbols);
          rest /= kWorkSymbols;
        }
        Sym s = static_cast<Sym>(in);
        t.next = s == Sym::Blank ? spec.q_out : *spec.copy_state;
        t.advance_input = s != Sym::Blank;
        if (s == Sym::Zero || s == Sym::One) t.out = static_cast<int>(s);
      }
    }
  }

  std::uint64_t total = std::uint64_t{spec.states} * kInputSymbols * impl->work_combos;
  if (total <= kDenseLimit) {
    impl->dense.assign(total, nullptr);
    for (const auto& [k, t] : impl->table) impl->dense[k] = &t;
  }
  return p;
}

Program Program::ex(const Program& inner) {
  if (inner.discipline() != Discipline::rm) throw ProgramError("ex needs an rm program");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::ex;
  impl->bound = ex_bound(inner.bound());
  impl->discipline = Discipline::rm;
  impl->inner = inner;
  return Program(impl);
}

Program Program::prefix_search(const Program& inner) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::prefix_search;
  impl->bound = prefix_search_bound(inner.bound());
  impl->discipline = Discipline::rm;
  impl->inner = inner;
  return Program(impl);
}

Program::Kind Program::kind() const { return impl_->kind; }
PolyBound Program::bound() const { return impl_->bound; }
Discipline Program::discipline() const { return impl_->discipline; }

const Program& Program::inner() const {
  if (!impl_->inner) throw ProgramError("not a wrapper program");
  return *impl_->inner;
}

std::uint32_t Program::states() const { return impl_->states; }
std::uint32_t Program::tapes() const { return impl_->tapes; }
std::uint32_t Program::initial() const { return impl_->initial; }
std::uint32_t Program::q_out() const { return impl_->q_out; }
std::optional<std::uint32_t> Program::copy_state() const { return impl_->copy_state; }
const std::map<std::uint64_t, Transition>& Program::transitions() const { return impl_->table; }

std::uint64_t Program::key(std::uint32_t state, Sym in, const std::vector<Sym>& work) const {
  std::uint64_t w = 0;
  for (Sym s : work) w = w * kWorkSymbols + static_cast<std::uint64_t>(s);
  return (std::uint64_t{state} * kInputSymbols + static_cast<std::uint64_t>(in)) * impl_->work_combos + w;
}

TransitionKey Program::unkey(std::uint64_t key) const {
  TransitionKey k;
  std::uint64_t w = key % impl_->work_combos;
  std::uint64_t si = key / impl_->work_combos;
  k.in = static_cast<Sym>(si % kInputSymbols);
  k.state = static_cast<std::uint32_t>(si / kInputSymbols);
  k.work.resize(impl_->tapes);
  for (std::uint32_t i = impl_->tapes; i-- > 0;) {
    k.work[i] = static_cast<Sym>(w % kWorkSymbols);
    w /= kWorkSymbols;
  }
  return k;
}

const Transition* Program::find(std::uint32_t state, Sym in, const std::uint8_t* work) const {
  const Impl& m = *impl_;
  std::uint64_t w = 0;
  for (std::uint32_t i = 0; i < m.tapes; ++i) w = w * kWorkSymbols + work[i];
  if (m.copy_state && state == *m.copy_state)
    return &m.copy_rules[static_cast<std::uint64_t>(in) * m.work_combos + w];
  std::uint64_t key = (std::uint64_t{state} * kInputSymbols + static_cast<std::uint64_t>(in)) * m.work_combos + w;
  if (!m.dense.empty()) return key < m.dense.size() ? m.dense[key] : nullptr;
  auto it = m.table.find(key);
  return it == m.table.end() ? nullptr : &it->second;
}

Program Program::with_bound(PolyBound b) const {
  if (impl_->kind != Kind::table) throw ProgramError("wrapper bounds are derived");
  TableSpec spec;
  spec.states = impl_->states;
  spec.tapes = impl_->tapes;
  spec.initial = impl_->initial;
  spec.q_out = impl_->q_out;
  spec.copy_state = impl_->copy_state;
  spec.bound = b;
  spec.discipline = impl_->discipline;
  for (const auto& [k, t] : impl_->table) spec.transitions.emplace_back(unkey(k), t);
  return table(std::move(spec));
}

bool Program::operator==(const Program& rhs) const {
  if (impl_ == rhs.impl_) return true;
  const Impl& a = *impl_;
  const Impl& b = *rhs.impl_;
  if (a.kind != b.kind || !(a.bound == b.bound) || a.discipline != b.discipline) return false;
  if (a.kind != Kind::table) return *a.inner == *b.inner;
  return a.states == b.states && a.tapes == b.tapes && a.initial == b.initial &&
         a.q_out == b.q_out && a.copy_state == b.copy_state && a.table == b.table;
}

}  // namespace rmc
