#include "rmc/vm.hpp"

#include <algorithm>
#include <array>

namespace rmc {

const char* reason_name(RunOutcome::Reason r) {
  switch (r) {
    case RunOutcome::Reason::none: return "none";
    case RunOutcome::Reason::budget_exceeded: return "budget_exceeded";
    case RunOutcome::Reason::halted_not_qout: return "halted_not_qout";
    case RunOutcome::Reason::balance_violated: return "balance_violated";
  }
  return "?";
}

namespace {

using Reason = RunOutcome::Reason;
using Status = RunOutcome::Status;

void fail(RunOutcome& r, Reason why) {
  r.status = Status::undefined;
  r.reason = why;
}

// Budget on steps and output length, balance on input length.
void finish_checks(RunOutcome& r, const PolyBound& b, const Nat& n) {
  if (r.steps > b.eval(n)) return fail(r, Reason::budget_exceeded);
  if (r.output.length() > b.eval(n) || n > b.eval(r.output.length()))
    return fail(r, Reason::balance_violated);
  r.status = Status::output;
  r.reason = Reason::none;
}

class WorkTape {
 public:
  WorkTape() : cells_(1, static_cast<std::uint8_t>(Sym::Blank)) {}
  std::uint8_t read() const { return cells_[head_]; }
  void write(Sym s) { cells_[head_] = static_cast<std::uint8_t>(s); }
  void move(Move m) {
    if (m == Move::R) {
      if (++head_ == cells_.size()) cells_.push_back(static_cast<std::uint8_t>(Sym::Blank));
    } else if (m == Move::L) {
      if (head_ == 0)
        cells_.insert(cells_.begin(), static_cast<std::uint8_t>(Sym::Blank));
      else
        --head_;
    }
  }

 private:
  std::vector<std::uint8_t> cells_;
  std::size_t head_ = 0;
};

RunOutcome run_table(const Program& p, const Word& x, const RunOptions& o) {
  RunOutcome r;
  const Nat n = x.length();
  const Nat limit = p.bound().eval(n);
  const std::uint32_t t = p.tapes();
  const auto copy = p.copy_state();

  WordCursor cur(x);
  Nat pos = 0;  // 0 on '#', i on letter i-1, n+1 on B
  std::vector<WorkTape> tapes(t);
  std::array<std::uint8_t, 8> w{};
  WordBuilder out;
  std::uint32_t state = p.initial();
  bool first = true;
  Nat steps = 0;

  auto take_snapshot = [&](const Nat& letter) {
    if (o.watch && !r.snapshot && letter >= *o.watch) r.snapshot = out.peek();
  };

  while (state != p.q_out()) {
    if (copy && state == *copy && !r.copy_start) r.copy_start = pos == 0 ? Nat(0) : Nat(pos - 1);

    if (copy && state == *copy && pos > 0) {
      // Bulk copy of the remaining letters, then B -> q_out.
      Nat li = pos - 1;
      Nat remaining = n - li;
      if (o.watch && !r.snapshot && *o.watch >= li)
        r.snapshot = out.peek() + cur.rest().prefix(*o.watch - li);
      if (steps + remaining + 1 > limit) {
        r.saw_end = steps + remaining <= limit;
        r.steps = limit;
        fail(r, Reason::budget_exceeded);
        return r;
      }
      out.append(cur.rest());
      steps += remaining + 1;
      pos = n + 1;
      r.saw_end = true;
      state = p.q_out();
      break;
    }

    Sym in;
    if (pos == 0) {
      in = Sym::Hash;
    } else if (cur.at_end()) {
      in = Sym::Blank;
    } else {
      in = static_cast<Sym>(cur.peek());
    }
    if (pos > 0) take_snapshot(pos - 1);
    for (std::uint32_t i = 0; i < t; ++i) w[i] = tapes[i].read();
    const Transition* tr = p.find(state, in, w.data());
    if (!tr) {
      fail(r, Reason::halted_not_qout);
      r.steps = steps;
      r.output = out.finish();
      return r;
    }

    if (in == Sym::Zero && tr->advance_input && tr->next == state && (!tr->out || *tr->out == 0)) {
      bool inert = true;
      for (std::uint32_t i = 0; i < t && inert; ++i)
        inert = tr->moves[i] == Move::S && static_cast<std::uint8_t>(tr->writes[i]) == w[i];
      Nat run = inert ? cur.run_remaining() : Nat(0);
      if (run > 1) {
        Nat li = pos - 1;
        if (o.watch && !r.snapshot && *o.watch > li) run = std::min(run, Nat(*o.watch - li));
        if (steps + run > limit) run = limit - steps;
        if (run > 0) {
          steps += run;
          pos += run;
          cur.skip_zeros(run);
          if (tr->out) out.zeros(run);
          continue;
        }
      }
    }

    if (!first) {
      if (steps >= limit) {
        r.steps = steps;
        fail(r, Reason::budget_exceeded);
        return r;
      }
      steps += 1;
    }
    first = false;
    for (std::uint32_t i = 0; i < t; ++i) {
      tapes[i].write(tr->writes[i]);
      tapes[i].move(tr->moves[i]);
    }
    if (tr->out) out.bit(*tr->out);
    if (tr->advance_input) {
      if (pos > 0) cur.advance();
      pos += 1;
      if (pos == n + 1) r.saw_end = true;
    }
    state = tr->next;
  }

  r.steps = steps;
  r.output = out.finish();
  finish_checks(r, p.bound(), n);
  return r;
}

RunOutcome run_ex(const Program& p, const Word& x, const RunOptions& o) {
  RunOutcome r;
  const Nat n = x.length();
  const Nat h = x.leading_zeros();
  if (o.watch && *o.watch <= h && *o.watch < n) r.snapshot = Word::zeros(*o.watch);
  if (h == 0 || h == n) {
    r.saw_end = h == n;
    r.steps = h;
    fail(r, Reason::halted_not_qout);
    return r;
  }
  RunOptions io;
  if (o.watch && *o.watch > h) io.watch = *o.watch - h - 1;
  Word head = WordBuilder().zeros(h).bit(1).finish();
  RunOutcome ri = run(p.inner(), x.drop(h + 1), io);
  r.saw_end = ri.saw_end;
  r.steps = h + 1 + ri.steps;
  if (ri.snapshot && !r.snapshot) r.snapshot = head + *ri.snapshot;
  if (!ri.ok()) {
    fail(r, ri.reason);
    return r;
  }
  r.output = head + ri.output;
  if (ri.copy_start) r.copy_start = h + 1 + *ri.copy_start;
  finish_checks(r, p.bound(), n);
  return r;
}

RunOutcome run_prefix_search(const Program& p, const Word& x, const RunOptions& o) {
  RunOutcome r;
  const Nat n = x.length();
  const Nat limit = p.bound().eval(n);
  Nat steps = 0;
  for (Nat l = 0; l <= n; l += 1) {
    RunOutcome ri = run(p.inner(), x.prefix(l));
    steps += ri.steps;
    if (ri.ok()) {
      Word rest = x.drop(l);
      if (o.watch && !r.snapshot && *o.watch >= l) r.snapshot = ri.output + rest.prefix(*o.watch - l);
      steps += ri.output.length() + rest.length() + 1;
      r.steps = steps;
      r.output = ri.output + rest;
      r.copy_start = l;
      r.saw_end = true;
      finish_checks(r, p.bound(), n);
      return r;
    }
    // reject: read letter l (or B)
    if (o.watch && !r.snapshot && *o.watch <= l) r.snapshot = Word();
    steps += 1;
    if (steps > limit) {
      r.steps = limit;
      fail(r, Reason::budget_exceeded);
      return r;
    }
  }
  r.saw_end = true;
  r.steps = steps;
  fail(r, Reason::halted_not_qout);
  return r;
}

}  // namespace

RunOutcome run(const Program& p, const Word& x, const RunOptions& opts) {
  switch (p.kind()) {
    case Program::Kind::table: return run_table(p, x, opts);
    case Program::Kind::ex: return run_ex(p, x, opts);
    case Program::Kind::prefix_search: return run_prefix_search(p, x, opts);
  }
  return {};
}

bool in_domain_code(const Program& p, const Word& u) {
  RunOutcome r = run(p, u);
  return r.ok() && r.copy_start && *r.copy_start == u.length();
}

std::vector<DomainEntry> enumerate_domain_code(const Program& p, unsigned max_len) {
  constexpr std::size_t kMaxLevel = std::size_t{1} << 16;
  std::vector<DomainEntry> out;
  std::vector<Word> level{Word()};
  const Word zero = Word::from_bits("0"), one = Word::from_bits("1");
  for (unsigned len = 0; len <= max_len && !level.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& s : level) {
      RunOutcome r = run(p, s);
      if (r.ok() && r.copy_start && *r.copy_start == s.length()) {
        out.push_back({s, std::move(r.output)});
        continue;
      }
      if (!r.ok() && r.reason == RunOutcome::Reason::halted_not_qout && !r.saw_end) continue;
      if (len < max_len && next.size() < kMaxLevel) {
        next.push_back(s + zero);
        next.push_back(s + one);
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

DisciplineReport check_discipline(const Program& p, const std::vector<Sample>& samples, bool rm) {
  DisciplineReport rep;
  for (const auto& [x, z] : samples) {
    RunOutcome rx = run(p, x);
    if (!rx.ok()) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    RunOptions o;
    o.watch = x.length();
    RunOutcome rxz = run(p, x + z, o);
    auto bad = [&](std::string why) { rep.violations.push_back({x, z, std::move(why)}); };
    if (!rxz.snapshot) {
      bad("input after x never read");
      continue;
    }
    if (!(*rxz.snapshot == rx.output)) {
      bad("output before reading z was '" + rxz.snapshot->to_text() + "', f(x) = '" +
          rx.output.to_text() + "'");
      continue;
    }
    if (!rm) continue;
    if (!rxz.ok()) {
      bad(std::string("f(xz) undefined: ") + reason_name(rxz.reason));
      continue;
    }
    if (!(rxz.output == rx.output + z)) {
      bad("f(xz) = '" + rxz.output.to_text() + "' but f(x) z = '" + (rx.output + z).to_text() + "'");
      continue;
    }
    if (!rxz.copy_start || *rxz.copy_start > x.length())
      bad("no copy phase covering z");
  }
  return rep;
}

}  // namespace

DisciplineReport check_sequential(const Program& p, const std::vector<Sample>& samples) {
  return check_discipline(p, samples, false);
}

DisciplineReport check_rm(const Program& p, const std::vector<Sample>& samples) {
  return check_discipline(p, samples, true);
}

}  // namespace rmc
