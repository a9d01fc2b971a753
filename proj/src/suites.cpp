#include "rmc/suites.hpp"

#include "rmc/codes.hpp"
#include "rmc/inversion.hpp"
#include "rmc/lab.hpp"
#include "rmc/padding.hpp"
#include "rmc/vm.hpp"

#include <boost/multiprecision/integer.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace rmc {

namespace {

using Opt = std::optional<Word>;

std::string show(const Opt& w) { return w ? "'" + w->to_text() + "'" : "undefined"; }

std::string random_bits(std::mt19937& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) c = static_cast<char>('0' + (rng() & 1));
  return s;
}

std::string repeat(const std::string& s, unsigned n) {
  std::string r;
  for (unsigned i = 0; i < n; ++i) r += s;
  return r;
}

Word witness_word(const WitnessSpec& spec, unsigned m) {
  return encode(Word::from_bits(repeat(spec.a, m))) + Word::from_bits(spec.tail);
}

Opt run_opt(const Program& p, const Word& x) {
  RunOutcome r = run(p, x);
  if (!r.ok()) return std::nullopt;
  return r.output;
}

// Runs fn(i) for i < n on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

// Collects report lines; failures are capped so a broken build stays readable.
class Report {
 public:
  void line(std::string s) { lines_.push_back(std::move(s)); }
  void fail(std::string s) {
    ok_ = false;
    if (failures_++ < 10) lines_.push_back("FAIL " + std::move(s));
  }
  void check(bool cond, std::string s) {
    if (!cond) fail(std::move(s));
  }
  bool ok() const { return ok_; }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  std::vector<std::string> lines_;
  bool ok_ = true;
  std::size_t failures_ = 0;
};

// Per-item sub-reports merged in order after a parallel loop.
struct Partial {
  Report rep;
};

void merge(Report& into, std::vector<Partial>& parts) {
  for (auto& p : parts) {
    bool ok = p.rep.ok();
    for (auto& l : p.rep.take()) into.line(std::move(l));
    if (!ok) into.fail("see above");
  }
}

// ---- star identity ----------------------------------------------------------

void star_identity(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  rep.check(fx.size() >= 5, "fewer than five fixtures");
  std::vector<Partial> parts(fx.size());
  parallel_for(fx.size(), o.parallel, [&](std::size_t i) {
    Report& r = parts[i].rep;
    const auto& f = fx[i];
    Morphism chain = lemma_chain(f.program);
    auto xs = fixture_inputs(f, o.samples, o.seed + static_cast<unsigned>(i));
    std::size_t defined = 0, bad = 0;
    for (const auto& x : xs) {
      Opt a = chain(x), b = run_opt(f.program, x);
      if (b) ++defined;
      if (a != b) {
        ++bad;
        r.fail(f.name + ": x=" + x.to_text() + " chain=" + show(a) + " run=" + show(b));
      }
    }
    r.check(defined > 0, f.name + ": no sampled input in the domain");
    r.line(f.name + ": m=" + std::to_string(chain_m(f.program)) + " inputs=" + std::to_string(xs.size()) +
           " defined=" + std::to_string(defined) + " mismatches=" + std::to_string(bad));
  });
  merge(rep, parts);
}

// ---- factorization ----------------------------------------------------------

void factorization(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  const EvalConfig cfg = q2_config();
  Morphism lhs = evr_c(cfg), direct = evr_c_direct(cfg);
  std::vector<Partial> parts(fx.size());
  parallel_for(fx.size(), o.parallel, [&](std::size_t i) {
    Report& r = parts[i].rep;
    const auto& f = fx[i];
    const Word h = program_header(f.program);
    std::size_t defined = 0, bad = 0;
    auto xs = fixture_inputs(f, o.samples, o.seed + static_cast<unsigned>(i));
    for (const auto& x : xs) {
      Opt a = lhs(h + x), b = direct(h + x);
      Opt y = run_opt(f.program, x);
      Opt c = y ? Opt(h + *y) : std::nullopt;
      if (c) ++defined;
      if (a != b || b != c) {
        ++bad;
        r.fail(f.name + ": x=" + x.to_text() + " factored=" + show(a) + " direct=" + show(b));
      }
    }
    r.check(defined > 0, f.name + ": nothing defined");
    r.line(f.name + ": inputs=" + std::to_string(xs.size()) + " defined=" + std::to_string(defined) +
           " mismatches=" + std::to_string(bad));
  });
  merge(rep, parts);
}

// ---- regular factorization --------------------------------------------------

void regular_factorization(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  const EvalConfig cfg = q2_config();
  Morphism g = gamma_q(cfg), eq = e_q(cfg), r2 = rho2_q(cfg), cc = evr_cc(cfg), ec = evr_c(cfg), d2 = decode2_m();
  Morphism regular = compose({r2, eq});
  Morphism via_regular = compose({d2, r2, eq, g});
  Morphism eq_inv = invert_e_q(cfg), r2_inv = invert_rho2_q(cfg);
  std::vector<Partial> parts(fx.size());
  parallel_for(fx.size(), o.parallel, [&](std::size_t i) {
    Report& r = parts[i].rep;
    const auto& f = fx[i];
    const Word h = program_header(f.program);
    std::vector<Word> coded, eq_out;
    std::size_t bad = 0;
    auto xs = fixture_inputs(f, o.samples, o.seed + static_cast<unsigned>(i));
    for (const auto& x : xs) {
      Opt a = ec(h + x), b = via_regular(h + x);
      if (a != b) {
        ++bad;
        r.fail(f.name + ": evRc vs decode2.rho2q.Eq.gammaq at " + x.to_text() + ": " + show(a) + " / " + show(b));
      }
      Opt c = g(h + x);
      if (!c) continue;
      coded.push_back(*c);
      Opt lhs = regular(*c), rhs = cc(*c);
      if (lhs != rhs) {
        ++bad;
        r.fail(f.name + ": rho2q.Eq vs evRcc at " + c->to_text());
      }
      if (Opt e = eq(*c)) eq_out.push_back(*e);
    }
    auto inv1 = check_semigroup_inverse(eq, eq_inv, coded, true);
    auto inv2 = check_semigroup_inverse(r2, r2_inv, eq_out, true);
    for (const auto& v : inv1.violations) r.fail(f.name + ": Eq inverse: " + v);
    for (const auto& v : inv2.violations) r.fail(f.name + ": rho2q inverse: " + v);
    r.check(inv1.checked > 0 && inv2.checked > 0, f.name + ": inverse laws checked on no point");
    r.line(f.name + ": coded=" + std::to_string(coded.size()) + " mismatches=" + std::to_string(bad) +
           " Eq-inverse checked=" + std::to_string(inv1.checked) + " rho2q-inverse checked=" +
           std::to_string(inv2.checked));
  });
  merge(rep, parts);
}

// ---- right-ideal law --------------------------------------------------------

struct Subject {
  Morphism m;
  bool big_ok;  // safe on words with huge padding blocks
  const std::vector<Word>* pool = nullptr;
};

void right_ideal(Report& rep, const SuiteOptions& o) {
  const EvalConfig cfg = q2_config();
  auto fx = chain_fixtures();
  const Fixture& w1 = fx[1];  // witness 1 (1,1)
  const Fixture& c10 = fx.back();  // constant head 10 (2,2)

  std::vector<Word> small, big;
  std::mt19937 rng(o.seed);
  for (unsigned n = 0; n < 40; ++n) small.push_back(Word::from_bits(random_bits(rng, rng() % 65)));
  for (unsigned n = 0; n < 6; ++n)
    small.push_back(WordBuilder().zeros(n).bit(1).bits(random_bits(rng, rng() % 6)).finish());
  for (unsigned n = 0; n < 10; ++n)
    small.push_back(encode(Word::from_bits(random_bits(rng, rng() % 8))) + Word::from_bits("11" + random_bits(rng, 3)));
  const EvalConfig q = q2_config();
  for (const Fixture* f : std::vector<const Fixture*>{&fx[0], &w1, &c10}) {
    const Word h = program_header(f->program);
    for (const auto& x : fixture_inputs(*f, 10, o.seed + 100)) {
      small.push_back(x);
      small.push_back(h + x);
      if (Opt y = run_opt(f->program, x)) small.push_back(*y);
      Opt c = gamma_q(q)(h + x);
      if (!c) continue;
      small.push_back(*c);
      if (Opt e = e_q(q)(*c)) small.push_back(*e);
      // intermediates of the chain, innermost first
      const Morphism chain = lemma_chain(f->program);
      const auto& ps = chain.parts();
      Word cur = x;
      for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        Opt next = (*it)(cur);
        if (!next) break;
        cur = *next;
        big.push_back(cur);
      }
    }
  }
  for (const auto& w : small) big.push_back(w);

  // The oracle inverse scans every prefix of a word outside its domain, so it
  // is sampled on images only.
  std::vector<Word> images;
  for (const auto& x : fixture_inputs(c10, 40, o.seed + 200))
    if (Opt y = run_opt(c10.program, x)) images.push_back(*y);
  for (int i = 0; i < 4; ++i) images.push_back(Word::from_bits(random_bits(rng, 8)));

  auto e_prime = reference_e_prime(cfg, {c10.program});
  std::vector<Subject> subjects{
      {pi(Word::from_bits("0")), true},
      {pi(Word::from_bits("1")), true},
      {rho(Word::from_bits("0")), true},
      {rho(Word::from_bits("1")), true},
      {pi(Word::from_bits("0110")), true},
      {rho(Word::from_bits("01")), true},
      {identity_m(), true},
      {decode_m(), true},
      {decode2_m(), true},
      {expand_m(), false},
      {expand_unchecked_m(), false},
      {reexpand_m(), true},
      {recontr_m(), true},
      {contr_m(), true},
      {evr_cc(cfg), true},
      {evr_c(cfg), false},
      {evr_c_direct(cfg), false},
      {e_q(cfg), true},
      {rho2_q(cfg), true},
      {invert_e_q(cfg), true},
      {invert_rho2_q(cfg), true},
      {gamma_q(cfg), false},
      {gamma_w(w1.program), false},
      {gamma_o_w(w1.program), false},
      {lemma_chain(w1.program), false},
      {lemma_chain(c10.program), false},
      {direct_simulation(w1.program, cfg), false},
      {s_morphism(), false},
      {c_embed(s_morphism()), false},
      {machine_morphism(w1.program, "phi(witness 1)"), false},
      {machine_morphism(c10.program, "phi(const 10)"), false},
      {machine_morphism(gamma_program(w1.program), "gamma-program(witness 1)"), false},
      {machine_morphism(Program::ex(w1.program), "phi(ex(witness 1))"), false},
      {machine_morphism(prefix_closure(append_one_program()), "pref(append one)"), false},
      {build_inverse(c10.program, e_prime, cfg), false, &images},
  };

  std::vector<Word> zs;
  for (unsigned l = 0; l <= 3; ++l)
    for (auto& z : words_of_length(l)) zs.push_back(z);

  std::size_t declared = 0;
  for (const auto& s : subjects) declared += s.m.right_ideal() ? 1 : 0;
  rep.check(declared >= 20, "fewer than 20 morphisms");

  std::vector<Partial> parts(subjects.size());
  parallel_for(subjects.size(), o.parallel, [&](std::size_t i) {
    Report& r = parts[i].rep;
    const Morphism& f = subjects[i].m;
    if (!f.right_ideal()) {
      r.fail(f.name() + " is not declared right-ideal");
      return;
    }
    std::size_t points = 0, pairs = 0;
    const auto& pool = subjects[i].pool ? *subjects[i].pool : subjects[i].big_ok ? big : small;
    for (const auto& x : pool) {
      if (points >= o.samples) break;
      Opt fx0 = f(x);
      if (!fx0) continue;
      ++points;
      for (const auto& z : zs) {
        ++pairs;
        Opt fxz = f(x + z);
        if (!fxz || !(*fxz == *fx0 + z)) {
          r.fail(f.name() + ": x=" + x.to_text() + " z=" + z.to_text() + " f(xz)=" + show(fxz));
          break;
        }
      }
    }
    r.check(points >= 5, f.name() + ": only " + std::to_string(points) + " domain samples");
    r.line(f.name() + ": points=" + std::to_string(points) + " pairs=" + std::to_string(pairs));
  });
  merge(rep, parts);
  rep.line("morphisms=" + std::to_string(subjects.size()));
}

// ---- balanced inverse -------------------------------------------------------

// First prefix of y that is an image of a domain-code word.
PartialFn table_inverse(const Program& p, unsigned max_len) {
  auto table = std::make_shared<std::map<Word, Word>>();
  for (auto& e : enumerate_domain_code(p, max_len)) table->emplace(std::move(e.image), std::move(e.u));
  return [table](const Word& y) -> Opt {
    for (Nat i = 0; i <= y.length(); i += 1) {
      auto it = table->find(y.prefix(i));
      if (it != table->end()) return it->second + y.drop(i);
    }
    return std::nullopt;
  };
}

// 0^{2n^2} 1 x -> 0^n 1 x
Opt s_inverse(const Word& y) {
  Nat N = y.leading_zeros();
  if (N == y.length() || N % 2 != 0) return std::nullopt;
  Nat n = boost::multiprecision::sqrt(Nat(N / 2));
  if (2 * n * n != N) return std::nullopt;
  return Word::zeros(n) + y.drop(N);
}

void balanced_inverse(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  struct Triple {
    std::string name;
    Morphism f;
    Morphism f_inv;
    PolyBound q;
    std::vector<Word> xs;
  };
  std::vector<Triple> triples;
  std::mt19937 rng(o.seed);
  {
    const auto& f = fx[1];
    triples.push_back({f.name, machine_morphism(f.program), Morphism::named("inv", table_inverse(f.program, 30)),
                       {1, 1}, fixture_inputs(f, o.samples, o.seed)});
  }
  {
    const auto& f = fx[4];
    triples.push_back({f.name, machine_morphism(f.program), Morphism::named("inv", table_inverse(f.program, 30)),
                       {2, 2}, fixture_inputs(f, o.samples, o.seed)});
  }
  {
    std::vector<Word> xs;
    for (std::size_t i = 0; i < o.samples; ++i)
      xs.push_back(WordBuilder().zeros(rng() % 7).bit(1).bits(random_bits(rng, rng() % 5)).finish());
    triples.push_back({"s", s_morphism(), Morphism::named("s^-1", s_inverse), {1, 2}, xs});
  }

  for (auto& t : triples) {
    Morphism g = restrict_balanced(t.f_inv, t.q);
    std::vector<Word> ys;
    for (const auto& x : t.xs)
      if (Opt y = t.f(x)) ys.push_back(*y);
    for (int i = 0; i < 10; ++i) ys.push_back(Word::from_bits(random_bits(rng, rng() % 12)));
    std::size_t defined = 0, dropped = 0;
    for (const auto& y : ys) {
      Opt gy = g(y);
      if (!gy) {
        if (t.f_inv(y)) ++dropped;
        continue;
      }
      ++defined;
      Opt fgy = t.f(*gy);
      rep.check(fgy && *fgy == y, t.name + ": f g f != f at " + y.to_text());
      Opt gfgy = fgy ? g(*fgy) : std::nullopt;
      rep.check(gfgy && *gfgy == *gy, t.name + ": g f g != g at " + y.to_text());
      rep.check(gy->length() <= t.q.eval(y.length()), t.name + ": |g(y)| > q(|y|) at " + y.to_text());
      rep.check(y.length() <= t.q.eval(gy->length()), t.name + ": |y| > q(|g(y)|) at " + y.to_text());
    }
    rep.check(defined >= 10, t.name + ": only " + std::to_string(defined) + " defined points");
    rep.line(t.name + " q=" + t.q.str() + ": defined=" + std::to_string(defined) +
             " dropped-by-balance=" + std::to_string(dropped));
  }
}

// ---- oracle inversion -------------------------------------------------------

void inversion(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  const EvalConfig cfg = q2_config();
  std::vector<Program> programs;
  for (const auto& f : fx) programs.push_back(f.program);
  auto e_prime = reference_e_prime(cfg, programs);
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto& f = fx[i];
    Morphism inv = build_inverse(f.program, e_prime, cfg);
    std::size_t checked = 0, max_calls = 0;
    bool moved = false;
    for (const auto& x : fixture_inputs(f, std::max<std::size_t>(o.samples, 25), o.seed + static_cast<unsigned>(i))) {
      Opt y = run_opt(f.program, x);
      if (!y) continue;
      ++checked;
      e_prime->reset_counts();
      Opt g = inv(*y);
      std::size_t calls = e_prime->call_count(), tests = e_prime->domain_test_count();
      max_calls = std::max(max_calls, calls);
      Nat prefixes = y->length() + 1;
      rep.check(Nat(calls) <= prefixes + 1 && Nat(tests) <= prefixes + 1,
                f.name + ": " + std::to_string(calls) + " calls, " + std::to_string(tests) + " tests on |y|=" +
                    to_string(y->length()));
      Opt back = g ? run_opt(f.program, *g) : std::nullopt;
      if (!back || !(*back == *y)) {
        rep.fail(f.name + ": phi phi' phi != phi at x=" + x.to_text() + " phi'(y)=" + show(g));
        continue;
      }
      if (!(*g == x)) moved = true;
    }
    rep.check(checked >= 20, f.name + ": only " + std::to_string(checked) + " samples in the domain");
    if (f.spec && f.spec->constant_head) rep.check(moved, f.name + ": phi'.phi acted as the identity everywhere");
    rep.line(f.name + ": checked=" + std::to_string(checked) + " max-oracle-calls=" + std::to_string(max_calls) +
             (moved ? " phi'.phi != id" : ""));
  }
}

// ---- witness family ---------------------------------------------------------

void witness_family(Report& rep, const SuiteOptions& o) {
  std::vector<std::string> as;
  for (unsigned l = 1; l <= 3; ++l)
    for (const auto& w : words_of_length(l)) as.push_back(w.bits());
  std::vector<Partial> parts(as.size());
  parallel_for(as.size(), o.parallel, [&](std::size_t i) {
    WitnessSpec spec{as[i], "0010", false, {2, 2}};
    auto d = check_witness_domain(spec, 30, 200, o.seed + static_cast<unsigned>(i));
    for (const auto& m : d.mismatches) parts[i].rep.fail("a=" + as[i] + ": " + m);
    parts[i].rep.line("a=" + as[i] + ": exhaustive=" + std::to_string(d.exhaustive) + " domC=" +
                      std::to_string(d.enumerated) + " random=" + std::to_string(d.random));
  });
  merge(rep, parts);

  WitnessCheckOptions opt;
  opt.n_max = 10;
  for (const std::string a : {"1", "0", "10"}) {
    WitnessSpec spec{a, "0010", false, {2, 2}};
    WitnessSpec other{a == "0" ? "1" : "0", "0010", false, {2, 2}};
    auto r = check_witness_properties(spec, {witness_program(other), identity_program()}, opt);
    rep.check(r.pass(), "a=" + a + ": " + r.no_11.first_failure + r.distinct.first_failure + r.extendable.first_failure);
    rep.line("a=" + a + ": (1) " + std::to_string(r.no_11.checked) + " words, (2) " +
             std::to_string(r.distinct.checked) + " programs, (3) " + std::to_string(r.extendable.checked) +
             " pairs: " + (r.pass() ? "pass" : "fail"));
  }

  WitnessSpec bad_tail{"1", "0011", false, {2, 2}};
  auto neg1 = check_witness_properties(bad_tail, {witness_program("0")}, opt);
  rep.check(!neg1.no_11.pass, "tail 0011 did not break property (1)");
  rep.line("negative tail 0011: (1) " + std::string(neg1.no_11.pass ? "pass" : "fail") + " " + neg1.no_11.first_failure);

  WitnessSpec self{"1", "0010", false, {2, 2}};
  auto neg2 = check_witness_properties(self, {witness_program(self)}, opt);
  rep.check(!neg2.distinct.pass, "F containing p did not break property (2)");
  rep.line("negative F with p: (2) " + std::string(neg2.distinct.pass ? "pass" : "fail") + " " +
           neg2.distinct.first_failure);
}

// ---- suffix tracer ----------------------------------------------------------

GeneratorWord random_left_word(std::mt19937& rng, const Word& input, std::size_t len) {
  std::vector<Morphism> applied;
  Word cur = input;
  for (std::size_t i = 0; i < len; ++i) {
    int b;
    bool use_rho = (rng() % 10) < 6 && !cur.empty();
    if (use_rho) b = cur.bit_at(0);
    else b = static_cast<int>(rng() & 1);
    Word bit = Word::from_bits(b ? "1" : "0");
    applied.push_back(use_rho ? rho(bit) : pi(bit));
    cur = use_rho ? cur.drop(1) : bit + cur;
  }
  return {{applied.rbegin(), applied.rend()}};
}

void suffix_tracer(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  std::mt19937 rng(o.seed);
  std::size_t traces = 0;
  for (std::size_t i = 1; i < fx.size(); ++i) {
    const auto& f = fx[i];
    const Word h = program_header(f.program);
    for (std::size_t j = 0; j < std::max<std::size_t>(o.samples / 4, 5); ++j) {
      unsigned m = 1;
      while (witness_word(*f.spec, m).length() < 30) ++m;
      m += rng() % 3;
      Word u = witness_word(*f.spec, m) + Word::from_bits(random_bits(rng, rng() % 6));
      std::size_t len = 1 + rng() % 10;
      GeneratorWord X = random_left_word(rng, h + u, len);
      SuffixTrace t = suffix_trace(X, f.program, h + u);
      ++traces;
      rep.check(!t.undefined_early, f.name + ": pi/rho word undefined");
      Nat need = u.length() - X.letters.size();
      rep.check(t.min_common_suffix() >= need, f.name + ": common suffix " + to_string(t.min_common_suffix()) +
                                                  " < |u|-|X| = " + to_string(need));
    }

    Word u = witness_word(*f.spec, 14);
    GeneratorWord chain = chain_letters(f.program);
    SuffixTrace t = suffix_trace(chain, f.program, h + u);
    rep.check(!t.undefined_early, f.name + ": chain undefined at letter " + t.undefined_letter);
    const TraceStage* last = t.last_shaped();
    rep.check(last && last->shape->u2.empty() && last->common_suffix == 0,
              f.name + ": last S-shaped stage keeps part of u");
    Opt y = run_opt(f.program, u);
    rep.check(y && !t.undefined_early && t.stages.back().value == *y, f.name + ": chain trace output differs from run");
    std::string growth;
    for (const auto& s : t.stages)
      if (s.gamma_growth) growth += " " + to_string(*s.gamma_growth);
    rep.line(f.name + ": chain letters=" + std::to_string(chain.letters.size()) + " |u|=" + to_string(u.length()) +
             " last shaped stage=" + (last ? std::to_string(last->index) : "none") + " gamma |y|:" + growth);
  }
  rep.line("pi/rho traces=" + std::to_string(traces));
}

// ---- s growth ---------------------------------------------------------------

void s_growth(Report& rep, const SuiteOptions&) {
  Morphism s = s_morphism();
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      Nat t = s_iterate(m, n);
      // closed form of t -> 2 t^2: 2^(2^m - 1) n^(2^m)
      Nat e = Nat(1) << m;
      Nat closed = (Nat(1) << static_cast<unsigned>(e - 1)) * boost::multiprecision::pow(Nat(n), static_cast<unsigned>(e));
      rep.check(t == closed, "s_iterate(" + std::to_string(m) + "," + std::to_string(n) + ") off the recurrence");
      Nat lower = (Nat(1) << m) * boost::multiprecision::pow(Nat(n), static_cast<unsigned>(e));
      rep.check(t >= lower, "s_iterate(" + std::to_string(m) + "," + std::to_string(n) + ") below 2^m n^(2^m)");
      if (s_iterate(m - 1, n) <= 200) {
        Opt w = WordBuilder().zeros(n).bit(1).bits("01").finish();
        for (unsigned i = 0; i < m && w; ++i) w = s(*w);
        Opt expect = WordBuilder().zeros(t).bit(1).bits("01").finish();
        rep.check(w == expect, "machine s^" + std::to_string(m) + " on 0^" + std::to_string(n) + "101 = " + show(w));
      }
    }
  rep.line("s_iterate(5,4) = " + to_string(s_iterate(5, 4)));
}

// ---- N sequence -------------------------------------------------------------

void n_sequence_suite(Report& rep, const SuiteOptions&) {
  const Program w = witness_program("1");
  const Word hdr = program_header(Program::ex(w));
  const Word tail = encode(Word::from_bits("010010")) + Word::from_bits("11");
  Morphism re = reexpand_m();
  for (unsigned c : {2u, 4u, 6u}) {
    Nat prev = c;
    for (unsigned i = 1; i <= 4; ++i) {
      Nat n = n_sequence(c, i);
      rep.check(n == 4 * prev * prev + 8 * prev + 2, "recurrence at c=" + std::to_string(c) + " i=" + std::to_string(i));
      Word block = Word::zeros(n) + Word::from_bits("01");
      Nat side = 2 * (prev + 1);
      rep.check(block.length() == side * side, "square identity at c=" + std::to_string(c) + " i=" + std::to_string(i));
      Opt got = re(hdr + Word::zeros(prev) + Word::from_bits("01") + tail);
      rep.check(got && *got == hdr + block + tail, "reexpand at c=" + std::to_string(c) + " i=" + std::to_string(i));
      prev = n;
    }
    rep.line("c=" + std::to_string(c) + ": N_4 has " + std::to_string(to_string(prev).size()) + " digits");
  }
}

// ---- budget -----------------------------------------------------------------

void budget(Report& rep, const SuiteOptions& o) {
  std::mt19937 rng(o.seed);
  for (PolyBound b : {PolyBound{1, 1}, PolyBound{1, 2}, PolyBound{3, 1}}) {
    Program p = looping_program(b);
    Nat worst = 0;
    for (unsigned len = 0; len <= 200; ++len) {
      Word x = Word::from_bits(random_bits(rng, len));
      RunOutcome r = run(p, x);
      rep.check(!r.ok() && r.reason == RunOutcome::Reason::budget_exceeded,
                b.str() + ": |x|=" + std::to_string(len) + " gave " + reason_name(r.reason));
      rep.check(r.steps <= b.eval(len) + 1, b.str() + ": " + to_string(r.steps) + " steps at |x|=" + std::to_string(len));
      worst = std::max(worst, Nat(r.steps - b.eval(len)));
    }
    rep.line(b.str() + ": lengths 0..200 all budget_exceeded, max overshoot " + to_string(worst));
  }
}

// ---- f_pref -----------------------------------------------------------------

void fpref(Report& rep, const SuiteOptions& o) {
  auto fx = chain_fixtures();
  std::vector<Fixture> rm = fx;
  rm.push_back({"s", s_program(), std::nullopt});
  std::mt19937 rng(o.seed);
  for (std::size_t i = 0; i < rm.size(); ++i) {
    const auto& f = rm[i];
    Program pref = prefix_closure(f.program);
    std::vector<Word> xs;
    if (f.name == "s")
      for (std::size_t j = 0; j < o.samples; ++j)
        xs.push_back(WordBuilder().zeros(rng() % 6).bit(1).bits(random_bits(rng, rng() % 5)).finish());
    else
      xs = fixture_inputs(f, o.samples, o.seed + static_cast<unsigned>(i));
    std::size_t bad = 0;
    for (const auto& x : xs) {
      Opt a = run_opt(f.program, x), b = run_opt(pref, x);
      if (a != b) {
        ++bad;
        rep.fail(f.name + ": f=" + show(a) + " f_pref=" + show(b) + " at " + x.to_text());
      }
    }
    rep.line(f.name + ": f_pref = f on " + std::to_string(xs.size()) + " samples, mismatches=" + std::to_string(bad));
  }

  Program plain = append_one_program();
  Morphism f = machine_morphism(plain), fp = machine_morphism(prefix_closure(plain), "pref(append one)");
  std::size_t differ = 0, pairs = 0;
  std::vector<Word> zs;
  for (unsigned l = 0; l <= 3; ++l)
    for (auto& z : words_of_length(l)) zs.push_back(z);
  for (std::size_t j = 0; j < o.samples; ++j) {
    Word x = Word::from_bits(random_bits(rng, rng() % 65));
    Opt a = f(x), b = fp(x);
    if (a != b) ++differ;
    if (!b) continue;
    for (const auto& z : zs) {
      ++pairs;
      Opt bz = fp(x + z);
      rep.check(bz && *bz == *b + z, "f_pref of append one not right-ideal at " + x.to_text() + " z=" + z.to_text());
    }
  }
  rep.check(differ > 0, "f_pref of a non-rm program agreed everywhere");
  rep.line("append one: f_pref differs on " + std::to_string(differ) + " of " + std::to_string(o.samples) +
           " samples, right-ideal pairs=" + std::to_string(pairs));
}

const std::map<std::string, void (*)(Report&, const SuiteOptions&)>& registry() {
  static const std::map<std::string, void (*)(Report&, const SuiteOptions&)> r{
      {"star-identity", star_identity},
      {"factorization", factorization},
      {"regular-factorization", regular_factorization},
      {"right-ideal", right_ideal},
      {"balanced-inverse", balanced_inverse},
      {"inversion", inversion},
      {"witness-family", witness_family},
      {"suffix-tracer", suffix_tracer},
      {"s-growth", s_growth},
      {"n-sequence", n_sequence_suite},
      {"budget", budget},
      {"fpref", fpref},
  };
  return r;
}

}  // namespace

std::vector<Fixture> chain_fixtures() {
  auto w = [](std::string a, bool constant, PolyBound b) {
    WitnessSpec s{a, "0010", constant, b};
    std::string name = (constant ? "const " : "witness ") + a + " " + b.str();
    return Fixture{name, witness_program(s), s};
  };
  return {
      {"identity (1,1)", identity_program({1, 1}), std::nullopt},
      w("1", false, {1, 1}),
      w("0", false, {2, 2}),
      w("10", false, {2, 2}),
      w("1", true, {2, 2}),
      w("0", true, {2, 2}),
      w("10", true, {2, 2}),
  };
}

std::vector<Word> fixture_inputs(const Fixture& f, std::size_t count, unsigned seed, unsigned max_len) {
  std::mt19937 rng(seed);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!f.spec || i % 5 == 4) {
      out.push_back(Word::from_bits(random_bits(rng, rng() % (max_len + 1))));
      continue;
    }
    const unsigned step = 2 * static_cast<unsigned>(f.spec->a.size());
    const unsigned top = std::max(1u, (max_len - static_cast<unsigned>(f.spec->tail.size())) / step);
    Word u = witness_word(*f.spec, 1 + rng() % top);
    std::size_t room = max_len - static_cast<std::size_t>(u.length());
    out.push_back(u + Word::from_bits(random_bits(rng, rng() % (room + 1))));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "star-identity", "factorization", "regular-factorization", "right-ideal", "balanced-inverse", "inversion",
      "witness-family", "suffix-tracer", "s-growth", "n-sequence", "budget", "fpref"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    it->second(rep, opts);
  } catch (const std::exception& e) {
    rep.fail(std::string("exception: ") + e.what());
  }
  SuiteResult r;
  r.name = name;
  r.pass = rep.ok();
  r.lines = rep.take();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace rmc
