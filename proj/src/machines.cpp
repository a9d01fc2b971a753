#include "rmc/machines.hpp"

#include "rmc/codes.hpp"

#include <map>
#include <set>

namespace rmc {

namespace {

const std::vector<Sym> kB{Sym::Blank};

Transition step_to(std::uint32_t next, bool advance, std::optional<int> out,
                   const std::vector<Sym>& writes = kB, std::vector<Move> moves = {Move::S}) {
  Transition t;
  t.next = next;
  t.writes = writes;
  t.moves = std::move(moves);
  t.advance_input = advance;
  t.out = out;
  return t;
}

Sym bit_sym(int b) { return b ? Sym::One : Sym::Zero; }

// Subset automaton for code(a)^+ tail. NFA nodes: 0..|c|-1 inside a block,
// |c| = at least one block done, |c|+j inside the tail, |c|+|tail| accept.
class WitnessNfa {
 public:
  WitnessNfa(std::string c, std::string tail) : c_(std::move(c)), t_(std::move(tail)) {}

  int done() const { return static_cast<int>(c_.size()); }
  int accept() const { return static_cast<int>(c_.size() + t_.size()); }

  std::set<int> step(const std::set<int>& s, char bit) const {
    std::set<int> out;
    const int C = done();
    const int T = static_cast<int>(t_.size());
    for (int q : s) {
      if (q < C) {
        if (c_[q] == bit) out.insert(q + 1 < C ? q + 1 : C);
      } else if (q == C) {
        if (c_[0] == bit) out.insert(C > 1 ? 1 : C);
        if (t_[0] == bit) out.insert(T > 1 ? C + 1 : accept());
      } else if (q < accept()) {
        int j = q - C;
        if (t_[j] == bit) out.insert(j + 1 < T ? q + 1 : accept());
      }
    }
    return out;
  }

 private:
  std::string c_, t_;
};

}  // namespace

Program witness_program(const WitnessSpec& spec) {
  if (spec.a.empty() || spec.tail.empty()) throw ProgramError("witness needs non-empty a and tail");
  WitnessNfa nfa(encode(spec.a).bits(), spec.tail);
  const int modulus = spec.constant_head ? static_cast<int>(4 * spec.a.size()) : 1;

  using Node = std::pair<std::set<int>, int>;
  std::map<Node, std::uint32_t> ids;
  std::vector<Node> order;
  auto id_of = [&](const Node& n) {
    auto [it, fresh] = ids.emplace(n, static_cast<std::uint32_t>(order.size()));
    if (fresh) order.push_back(n);
    return it->second;
  };
  id_of({{0}, 0});

  struct Edge {
    std::uint32_t from;
    int bit;
    std::optional<std::uint32_t> to;  // nullopt: accept
    std::optional<int> out;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Node cur = order[i];
    for (int b = 0; b < 2; ++b) {
      std::set<int> next = nfa.step(cur.first, static_cast<char>('0' + b));
      if (next.empty()) continue;
      std::optional<int> out;
      if (spec.constant_head) {
        if (cur.second == 0) out = 0;
      } else {
        out = b;
      }
      Edge e{static_cast<std::uint32_t>(i), b, std::nullopt, out};
      if (!next.count(nfa.accept())) e.to = id_of({next, (cur.second + 1) % modulus});
      edges.push_back(e);
    }
  }

  const auto n = static_cast<std::uint32_t>(order.size());
  TableSpec ts;
  ts.states = n + 2;
  ts.tapes = 1;
  ts.initial = 0;
  ts.copy_state = n;
  ts.q_out = n + 1;
  ts.bound = spec.bound;
  ts.discipline = Discipline::rm;
  ts.transitions.push_back({{0, Sym::Hash, kB}, step_to(0, true, spec.constant_head ? std::optional<int>(1) : std::nullopt)});
  for (const auto& e : edges)
    ts.transitions.push_back({{e.from, bit_sym(e.bit), kB}, step_to(e.to ? *e.to : n, true, e.out)});
  return Program::table(std::move(ts));
}

Word witness_value(const WitnessSpec& spec, const Word& u) {
  if (!spec.constant_head) return u;
  Nat m = 4 * spec.a.size();
  return WordBuilder().bit(1).zeros((u.length() + m - 1) / m).finish();
}

Program identity_program(PolyBound b) {
  TableSpec ts;
  ts.states = 2;
  ts.initial = 0;
  ts.copy_state = 0;
  ts.q_out = 1;
  ts.bound = b;
  ts.discipline = Discipline::rm;
  return Program::table(std::move(ts));
}

Program looping_program(PolyBound b) {
  TableSpec ts;
  ts.states = 2;
  ts.q_out = 1;
  ts.bound = b;
  ts.transitions.push_back({{0, Sym::Hash, kB}, step_to(0, true, std::nullopt)});
  for (Sym s : {Sym::Zero, Sym::One, Sym::Blank})
    ts.transitions.push_back({{0, s, kB}, step_to(0, false, std::nullopt)});
  return Program::table(std::move(ts));
}

Program append_one_program() {
  TableSpec ts;
  ts.states = 2;
  ts.q_out = 1;
  ts.bound = {1, 1};
  ts.transitions.push_back({{0, Sym::Hash, kB}, step_to(0, true, std::nullopt)});
  ts.transitions.push_back({{0, Sym::Zero, kB}, step_to(0, true, 0)});
  ts.transitions.push_back({{0, Sym::One, kB}, step_to(0, true, 1)});
  ts.transitions.push_back({{0, Sym::Blank, kB}, step_to(1, false, 1)});
  return Program::table(std::move(ts));
}

Program reverse_program() {
  // 0: '#'; 1: store letters; 2: emit right to left; 3: q_out.
  TableSpec ts;
  ts.states = 4;
  ts.q_out = 3;
  ts.bound = {2, 1};
  auto w = [](Sym s) { return std::vector<Sym>{s}; };
  ts.transitions.push_back({{0, Sym::Hash, kB}, step_to(1, true, std::nullopt)});
  ts.transitions.push_back({{1, Sym::Zero, kB}, step_to(1, true, std::nullopt, w(Sym::Zero), {Move::R})});
  ts.transitions.push_back({{1, Sym::One, kB}, step_to(1, true, std::nullopt, w(Sym::One), {Move::R})});
  ts.transitions.push_back({{1, Sym::Blank, kB}, step_to(2, false, std::nullopt, kB, {Move::L})});
  ts.transitions.push_back({{2, Sym::Blank, w(Sym::Zero)}, step_to(2, false, 0, w(Sym::Zero), {Move::L})});
  ts.transitions.push_back({{2, Sym::Blank, w(Sym::One)}, step_to(2, false, 1, w(Sym::One), {Move::L})});
  ts.transitions.push_back({{2, Sym::Blank, kB}, step_to(3, false, std::nullopt)});
  return Program::table(std::move(ts));
}

Program empty_program() {
  TableSpec ts;
  ts.states = 3;
  ts.copy_state = 1;
  ts.q_out = 2;
  ts.discipline = Discipline::rm;
  return Program::table(std::move(ts));
}

Program s_program(PolyBound b) {
  enum : std::uint32_t { q0, q1, G, T, E1, E2a, E2b, C, Q };
  auto w = [](Sym s) { return std::vector<Sym>{s}; };
  const Sym Z = Sym::Zero, X = Sym::X, B = Sym::Blank, I = Sym::One;
  TableSpec ts;
  ts.states = 9;
  ts.initial = q0;
  ts.copy_state = C;
  ts.q_out = Q;
  ts.bound = b;
  ts.discipline = Discipline::rm;
  auto add = [&](std::uint32_t s, Sym in, Sym rd, std::uint32_t nx, Sym wr, Move m, bool adv,
                 std::optional<int> out) {
    ts.transitions.push_back({{s, in, w(rd)}, step_to(nx, adv, out, w(wr), {m})});
  };
  add(q0, Sym::Hash, B, q1, B, Move::S, true, {});
  // count the leading zeros onto the work tape
  add(q1, Z, B, q1, Z, Move::R, true, {});
  add(q1, I, B, G, B, Move::L, false, {});
  // rewind
  add(G, I, Z, G, Z, Move::L, false, {});
  add(G, I, X, G, X, Move::L, false, {});
  add(G, I, B, T, B, Move::R, false, {});
  // one round per counted zero; each round writes 2n zeros and marks a cell
  add(T, I, Z, E1, Z, Move::R, false, 0);
  add(T, I, X, C, X, Move::S, true, 1);
  add(T, I, B, C, B, Move::S, true, 1);
  add(E1, I, Z, E1, Z, Move::R, false, 0);
  add(E1, I, X, E1, X, Move::R, false, 0);
  add(E1, I, B, E2a, B, Move::L, false, {});
  add(E2a, I, X, E2a, X, Move::L, false, 0);
  add(E2a, I, Z, E2b, X, Move::L, false, 0);
  add(E2a, I, B, T, B, Move::R, false, {});
  add(E2b, I, Z, E2b, Z, Move::L, false, 0);
  add(E2b, I, X, E2b, X, Move::L, false, 0);
  add(E2b, I, B, T, B, Move::R, false, {});
  return Program::table(std::move(ts));
}

Program gamma_program(const Program& p) {
  if (p.kind() != Program::Kind::table || !p.copy_state())
    throw ProgramError("gamma_program needs an rm table program");
  const std::string header = encode(Word::from_bits(serialize(p))).bits() + "11";
  const auto L = static_cast<std::uint32_t>(header.size());
  const std::uint32_t P = p.states();
  const std::uint32_t pc = *p.copy_state();
  const std::uint32_t t = p.tapes();

  // state layout
  const std::uint32_t start = 0;
  auto H = [&](std::uint32_t i) { return 1 + i; };
  auto A = [&](std::uint32_t s) { return 1 + L + s; };
  auto Bs = [&](std::uint32_t s) { return 1 + L + P + s; };
  const std::uint32_t mid_base = 1 + L + 2 * P;
  auto Mid = [&](int b, std::uint32_t target) { return mid_base + 2 * target + static_cast<std::uint32_t>(b); };
  // e1 e2: write 11 then step past the consumed symbol; f1 f2: write 11 in place
  const std::uint32_t e1 = mid_base + 2 * (P + 1), e2 = e1 + 1, f1 = e1 + 2, f2 = e1 + 3, copy = e1 + 4,
                      qout = e1 + 5;

  std::vector<std::vector<Sym>> combos{{}};
  for (std::uint32_t i = 0; i < t; ++i) {
    std::vector<std::vector<Sym>> next;
    for (const auto& c : combos)
      for (unsigned s = 0; s < kWorkSymbols; ++s) {
        auto d = c;
        d.push_back(static_cast<Sym>(s));
        next.push_back(d);
      }
    combos = next;
  }
  const std::vector<Sym> blanks(t, Sym::Blank);
  const std::vector<Move> still(t, Move::S);

  TableSpec ts;
  ts.states = qout + 1;
  ts.tapes = t;
  ts.initial = start;
  ts.copy_state = copy;
  ts.q_out = qout;
  ts.bound = {std::max<std::uint64_t>(p.bound().a, 2), std::max<std::uint64_t>(p.bound().k, 2)};
  ts.discipline = Discipline::rm;
  auto add = [&](std::uint32_t s, Sym in, const std::vector<Sym>& rd, std::uint32_t nx,
                 const std::vector<Sym>& wr, const std::vector<Move>& mv, bool adv, std::optional<int> out) {
    Transition tr;
    tr.next = nx;
    tr.writes = wr;
    tr.moves = mv;
    tr.advance_input = adv;
    tr.out = out;
    ts.transitions.push_back({{s, in, rd}, tr});
  };

  // header check; the final 1 stays under the head and plays the role of '#'
  add(start, Sym::Hash, blanks, H(0), blanks, still, true, {});
  for (std::uint32_t i = 0; i < L; ++i) {
    int b = header[i] - '0';
    bool last = i + 1 == L;
    std::uint32_t nx = !last ? H(i + 1) : (p.initial() == pc ? e1 : A(p.initial()));
    add(H(i), bit_sym(b), blanks, nx, blanks, still, !last, b);
  }

  for (const auto& [key, tr] : p.transitions()) {
    TransitionKey k = p.unkey(key);
    if (tr.next == p.q_out()) continue;
    if (k.in == Sym::Hash) {
      if (tr.next == pc) {
        add(A(k.state), Sym::One, k.work, e1, tr.writes, tr.moves, false, {});
        continue;
      }
      std::uint32_t nx = tr.advance_input ? Bs(tr.next) : A(tr.next);
      add(A(k.state), Sym::One, k.work, nx, tr.writes, tr.moves, tr.advance_input, {});
      continue;
    }
    std::uint32_t target = tr.next == pc ? P : tr.next;
    if (tr.advance_input) {
      add(Bs(k.state), k.in, k.work, Mid(static_cast<int>(k.in), target), tr.writes, tr.moves, false, 0);
    } else {
      add(Bs(k.state), k.in, k.work, target == P ? f1 : Bs(target), tr.writes, tr.moves, false, {});
    }
  }

  for (std::uint32_t target = 0; target <= P; ++target) {
    std::uint32_t nx = target == P ? e1 : Bs(target);
    for (int b = 0; b < 2; ++b)
      for (const auto& c : combos) add(Mid(b, target), bit_sym(b), c, nx, c, still, target != P, b);
  }
  for (Sym in : {Sym::Zero, Sym::One})
    for (const auto& c : combos) {
      add(e1, in, c, e2, c, still, false, 1);
      add(e2, in, c, copy, c, still, true, 1);
    }
  for (Sym in : {Sym::Zero, Sym::One, Sym::Blank})
    for (const auto& c : combos) {
      add(f1, in, c, f2, c, still, false, 1);
      add(f2, in, c, copy, c, still, false, 1);
    }
  return Program::table(std::move(ts));
}

}  // namespace rmc
