#include "rmc/lab.hpp"

#include "rmc/codes.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>

namespace rmc {

namespace {

std::string repeat(const std::string& s, unsigned n) {
  std::string r;
  for (unsigned i = 0; i < n; ++i) r += s;
  return r;
}

Word witness_word(const WitnessSpec& spec, unsigned m) {
  return encode(Word::from_bits(repeat(spec.a, m))) + Word::from_bits(spec.tail);
}

std::set<Word> domain_set(const Program& p, unsigned L) {
  std::set<Word> s;
  for (auto& e : enumerate_domain_code(p, L)) s.insert(std::move(e.u));
  return s;
}

void fail_once(PropertyResult& r, std::string why) {
  if (r.pass) r.first_failure = std::move(why);
  r.pass = false;
}

}  // namespace

WitnessReport check_witness_properties(const WitnessSpec& spec, const std::vector<Program>& F,
                                       const WitnessCheckOptions& opt) {
  WitnessReport rep;
  const Program p = witness_program(spec);
  const auto dom = domain_set(p, opt.length_bound);

  for (const auto& u : dom) {
    ++rep.no_11.checked;
    if (u.bits().find("11") != std::string::npos) fail_once(rep.no_11, "domain-code word " + u.to_text() + " contains 11");
  }

  for (std::size_t i = 0; i < F.size(); ++i) {
    ++rep.distinct.checked;
    if (domain_set(F[i], opt.length_bound) == dom)
      fail_once(rep.distinct, "F[" + std::to_string(i) + "] has the same domain code up to length " +
                                  std::to_string(opt.length_bound));
  }

  const Word c = Word::from_bits(spec.tail);
  for (unsigned m = 1; m <= opt.n_max; ++m) {
    const Word u0 = encode(Word::from_bits(repeat(spec.a, m)));
    const Word u = witness_word(spec, m);
    for (unsigned n = 1; n <= opt.n_max; ++n) {
      ++rep.extendable.checked;
      const Word v = witness_word(spec, n + m);
      std::string at = " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
      if (!in_domain_code(p, u)) fail_once(rep.extendable, "u not in domC" + at);
      else if (!in_domain_code(p, v)) fail_once(rep.extendable, "v not in domC" + at);
      else if (!(u == u0 + c)) fail_once(rep.extendable, "u != u0 c" + at);
      else if (c.length() > 4) fail_once(rep.extendable, "|c| > 4" + at);
      else if (!(v.length() > n)) fail_once(rep.extendable, "|v| <= n" + at);
      else if (!v.starts_with(u0)) fail_once(rep.extendable, "u0 not a prefix of v" + at);
    }
  }
  return rep;
}

DomainOracleReport check_witness_domain(const WitnessSpec& spec, unsigned length_bound, std::size_t random_samples,
                                        unsigned seed) {
  DomainOracleReport rep;
  const Program p = witness_program(spec);
  const std::string ca = encode(Word::from_bits(spec.a)).bits();
  const std::regex re("^(" + ca + ")+" + spec.tail);
  auto check = [&](const std::string& bits) {
    bool expect = std::regex_search(bits, re);
    bool got = run(p, Word::from_bits(bits)).ok();
    if (expect != got && rep.mismatches.size() < 20)
      rep.mismatches.push_back(bits + (expect ? " should be accepted" : " should be rejected"));
  };

  for (unsigned len = 0; len <= std::min(12u, length_bound); ++len)
    for (const auto& w : words_of_length(len)) {
      check(w.bits());
      ++rep.exhaustive;
    }

  std::set<Word> expected;
  for (unsigned m = 1;; ++m) {
    Word u = witness_word(spec, m);
    if (u.length() > length_bound) break;
    expected.insert(u);
  }
  auto got = domain_set(p, length_bound);
  rep.enumerated = got.size();
  if (got != expected) rep.mismatches.push_back("domain code up to length " + std::to_string(length_bound) + " differs");

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5);
  for (std::size_t i = 0; i < random_samples; ++i) {
    std::string s;
    while (s.size() < length_bound) {
      int r = pick(rng);
      if (r < 3) s += ca;
      else if (r == 3) s += spec.tail;
      else s += static_cast<char>('0' + (rng() & 1));
      if ((rng() & 7) == 0) break;
    }
    if (s.size() > length_bound) s.resize(length_bound);
    check(s);
    ++rep.random;
  }
  return rep;
}

Morphism GeneratorWord::composite() const {
  if (letters.empty()) return identity_m();
  return compose(letters);
}

std::optional<SShape> s_shape(const Word& x) {
  auto a = parse_coded_prefix(x);
  if (!a) return std::nullopt;
  auto b = parse_coded_prefix(a->second);
  if (!b) return std::nullopt;
  return SShape{std::move(a->first), std::move(b->first), std::move(b->second)};
}

Nat SuffixTrace::min_common_suffix() const {
  Nat m = stages.empty() ? Nat(0) : stages.front().common_suffix;
  for (const auto& s : stages) m = std::min(m, s.common_suffix);
  return m;
}

const TraceStage* SuffixTrace::last_shaped() const {
  for (auto it = stages.rbegin(); it != stages.rend(); ++it)
    if (it->shape) return &*it;
  return nullptr;
}

SuffixTrace suffix_trace(const GeneratorWord& X, const Program& p, const Word& input) {
  const Word header = program_header(p);
  if (!input.starts_with(header)) throw std::invalid_argument("input does not start with code(w) 11");
  const Word u = input.drop(header.length());

  SuffixTrace t;
  auto record = [&](std::size_t index, std::string letter, Word value, std::optional<Nat> growth) {
    TraceStage s;
    s.index = index;
    s.letter = std::move(letter);
    s.shape = s_shape(value);
    s.common_suffix = common_suffix_length(s.shape ? s.shape->u2 : value, u);
    s.value = std::move(value);
    s.gamma_growth = std::move(growth);
    t.stages.push_back(std::move(s));
  };

  record(0, "", input, std::nullopt);
  Word cur = input;
  std::size_t i = 0;
  for (auto it = X.letters.rbegin(); it != X.letters.rend(); ++it) {
    ++i;
    auto next = (*it)(cur);
    if (!next) {
      t.undefined_early = true;
      t.undefined_at = i;
      t.undefined_letter = it->name();
      break;
    }
    std::optional<Nat> growth;
    if (it->name().rfind("gamma", 0) == 0) growth = Nat(next->length() - cur.length());
    cur = std::move(*next);
    record(i, it->name(), cur, std::move(growth));
  }
  return t;
}

GeneratorWord chain_letters(const Program& p) {
  const unsigned m = chain_m(p);
  GeneratorWord g;
  const std::string h = program_header(p).bits();
  for (auto it = h.rbegin(); it != h.rend(); ++it) g.letters.push_back(rho(Word::from_bits(std::string(1, *it))));
  g.letters.push_back(decode2_m());
  g.letters.push_back(contr_m());
  for (unsigned i = 0; i < 2 * m; ++i) g.letters.push_back(recontr_m());
  g.letters.push_back(evr_cc(q2_config()));
  for (unsigned i = 0; i < m; ++i) g.letters.push_back(reexpand_m());
  g.letters.push_back(expand_m());
  g.letters.push_back(gamma_w(p));
  return g;
}

Morphism s_morphism() { return machine_morphism(s_program(), "s"); }

Nat s_iterate(unsigned m, const Nat& n) {
  Nat t = n;
  for (unsigned i = 0; i < m; ++i) t = 2 * t * t;
  return t;
}

std::vector<Sample> default_rm_samples(unsigned max_x) {
  std::vector<Sample> out;
  const std::vector<Word> zs{Word(), Word::from_bits("0"), Word::from_bits("1"), Word::from_bits("10")};
  for (const auto& x : words_up_to(max_x))
    for (const auto& z : zs) out.emplace_back(x, z);
  return out;
}

bool s2q_certificate(const Program& p, const PolyBound& q, const std::vector<Sample>& samples) {
  if (p.discipline() != Discipline::rm || !p.bound().within(q)) return false;
  return check_rm(p, samples).pass();
}

Morphism direct_simulation(const Program& p, const EvalConfig& cfg) {
  const Word h = program_header(p);
  return compose({rho(h), evr_c(cfg), pi(h)}).renamed("direct(W)");
}

}  // namespace rmc
