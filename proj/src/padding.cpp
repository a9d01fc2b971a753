#include "rmc/padding.hpp"

#include "rmc/codes.hpp"
#include "rmc/vm.hpp"

#include <boost/multiprecision/integer.hpp>

namespace rmc {

std::vector<StepLog::Entry> StepLog::entries() const {
  std::lock_guard lock(mu_);
  return entries_;
}

void StepLog::add(Nat input_length, Nat steps) {
  std::lock_guard lock(mu_);
  entries_.push_back({std::move(input_length), std::move(steps)});
}

namespace {

const Word k11 = Word::from_bits("11");
const Word k01 = Word::from_bits("01");

// code(ex(z)) 11 0^k 01 code(y) 11 v, split into its parts. `zeros` is k.
struct Padded {
  HeaderSplit head;
  Nat zeros;
  Word coded;  // code(y) 11 v
  Word y;
  Word v;
};

std::optional<Padded> split_padded(const Word& x) {
  auto h = split_program_header(x);
  if (!h || h->program.kind() != Program::Kind::ex) return std::nullopt;
  Nat z = h->rest.leading_zeros();
  if (z == h->rest.length()) return std::nullopt;  // no separator 1
  // leading zeros of 0^k 01 are k + 1
  if (z < 2) return std::nullopt;
  Word coded = h->rest.drop(z + 1);
  auto yv = parse_coded_prefix(coded);
  if (!yv) return std::nullopt;
  return Padded{std::move(*h), z - 1, std::move(coded), std::move(yv->first), std::move(yv->second)};
}

Word padded(const Word& header, const Nat& zeros, const Word& coded) {
  return WordBuilder().append(header).zeros(zeros).append(k01).append(coded).finish();
}

Word tuple_after(const Word& header, std::initializer_list<Word> blocks, const Word& tail) {
  WordBuilder b;
  b.append(header);
  for (const auto& u : blocks) b.append(encode(u)).append(k11);
  b.append(tail);
  return b.finish();
}

Morphism make_expand(bool checked) {
  return Morphism::named(checked ? "expand" : "expand!", [checked](const Word& x) -> std::optional<Word> {
    auto h = split_program_header(x);
    if (!h || h->program.discipline() != Discipline::rm) return std::nullopt;
    auto uv = parse_coded_prefix(h->rest);
    if (!uv) return std::nullopt;
    if (checked && !in_domain_code(h->program, uv->first)) return std::nullopt;
    Word ex_header = program_header(Program::ex(h->program));
    Nat c = uv->first.length() * 2;
    return padded(ex_header, padding_length(c), tuple_after(Word(), {uv->first}, uv->second));
  });
}

// Shared front half of evr_cc and e_q: admitted program, coded u in domC.
struct Evaluated {
  HeaderSplit head;
  Word u, v, y;
};

std::optional<Evaluated> evaluate_coded(const Word& x, const EvalConfig& cfg) {
  auto h = split_program_header(x);
  if (!h || !admitted(h->program, cfg)) return std::nullopt;
  auto uv = parse_coded_prefix(h->rest);
  if (!uv) return std::nullopt;
  RunOutcome r = run(h->program, uv->first);
  if (cfg.step_meter) cfg.step_meter->add(x.length(), r.steps);
  if (!r.ok() || !r.copy_start || *r.copy_start != uv->first.length()) return std::nullopt;
  return Evaluated{std::move(*h), std::move(uv->first), std::move(uv->second), std::move(r.output)};
}

std::optional<Word> gamma_on(const Program& p, const Word& header, const Word& t) {
  RunOutcome r = run(p, t);
  if (!r.ok() || !r.copy_start) return std::nullopt;
  return tuple_after(header, {t.prefix(*r.copy_start)}, t.drop(*r.copy_start));
}

}  // namespace

Word program_header(const Program& p) { return encode(Word::from_bits(serialize(p))) + k11; }

std::optional<HeaderSplit> split_program_header(const Word& x) {
  auto wr = parse_coded_prefix(x);
  if (!wr) return std::nullopt;
  auto bits = wr->first.try_bits(std::size_t{1} << 22);
  if (!bits) return std::nullopt;
  auto p = try_deserialize(*bits);
  if (!p) return std::nullopt;
  Word header = x.prefix(x.length() - wr->second.length());
  return HeaderSplit{std::move(*p), std::move(header), std::move(wr->second)};
}

bool admitted(const Program& p, const EvalConfig& cfg) {
  return p.discipline() == Discipline::rm && p.bound().within(cfg.q);
}

Nat padding_length(const Nat& c) { return 4 * c * c + 8 * c + 2; }

Nat n_sequence(const Nat& c, unsigned i) {
  Nat n = c;
  for (unsigned j = 0; j < i; ++j) n = padding_length(n);
  return n;
}

Nat recontr_exponent(const Nat& k) {
  Nat e = boost::multiprecision::sqrt(k) / 2;
  return e > 2 ? Nat(e - 1) : Nat(1);
}

Morphism expand_m() { return make_expand(true); }
Morphism expand_unchecked_m() { return make_expand(false); }

Morphism reexpand_m() {
  return Morphism::named("reexpand", [](const Word& x) -> std::optional<Word> {
    auto p = split_padded(x);
    if (!p) return std::nullopt;
    return padded(p->head.header, padding_length(p->zeros), p->coded);
  });
}

Morphism recontr_m() {
  return Morphism::named("recontr", [](const Word& x) -> std::optional<Word> {
    auto p = split_padded(x);
    if (!p || p->zeros % 2 != 0) return std::nullopt;
    Nat k = p->zeros / 2;
    return padded(p->head.header, 2 * recontr_exponent(k), p->coded);
  });
}

Morphism contr_m() {
  return Morphism::named("contr", [](const Word& x) -> std::optional<Word> {
    auto p = split_padded(x);
    if (!p || p->zeros % 2 != 0) return std::nullopt;
    if (p->zeros > padding_length(p->y.length() * 2)) return std::nullopt;
    return program_header(p->head.program.inner()) + p->coded;
  });
}

Morphism gamma_w(const Program& p) {
  Word header = program_header(p);
  return Morphism::named("gamma(W)", [p, header](const Word& x) -> std::optional<Word> {
    if (!x.starts_with(header)) return std::nullopt;
    return gamma_on(p, header, x.drop(header.length()));
  });
}

Morphism gamma_o_w(const Program& p) {
  Word header = program_header(p);
  return Morphism::named("gammao(W)", [p, header](const Word& x) { return gamma_on(p, header, x); });
}

Morphism gamma_q(const EvalConfig& cfg) {
  return Morphism::named("gammaq", [cfg](const Word& x) -> std::optional<Word> {
    auto h = split_program_header(x);
    if (!h || !admitted(h->program, cfg)) return std::nullopt;
    return gamma_on(h->program, h->header, h->rest);
  });
}

Morphism evr_cc(const EvalConfig& cfg) {
  return Morphism::named("evRcc" + cfg.q.str(), [cfg](const Word& x) -> std::optional<Word> {
    auto e = evaluate_coded(x, cfg);
    if (!e) return std::nullopt;
    return tuple_after(e->head.header, {e->y}, e->v);
  });
}

Morphism evr_c(const EvalConfig& cfg) {
  return compose({decode2_m(), evr_cc(cfg), gamma_q(cfg)}).renamed("evRc" + cfg.q.str());
}

Morphism evr_c_direct(const EvalConfig& cfg) {
  return Morphism::named("evRc!" + cfg.q.str(), [cfg](const Word& x) -> std::optional<Word> {
    auto h = split_program_header(x);
    if (!h || !admitted(h->program, cfg)) return std::nullopt;
    RunOutcome r = run(h->program, h->rest);
    if (!r.ok()) return std::nullopt;
    return h->header + r.output;
  });
}

Morphism e_q(const EvalConfig& cfg) {
  return Morphism::named("Eq" + cfg.q.str(), [cfg](const Word& x) -> std::optional<Word> {
    auto e = evaluate_coded(x, cfg);
    if (!e) return std::nullopt;
    return tuple_after(e->head.header, {e->u, e->y}, e->v);
  });
}

Morphism rho2_q(const EvalConfig& cfg) {
  return Morphism::named("rho2q" + cfg.q.str(), [cfg](const Word& x) -> std::optional<Word> {
    auto a = parse_coded_prefix(x);
    if (!a) return std::nullopt;
    auto b = parse_coded_prefix(a->second);
    if (!b) return std::nullopt;
    auto c = parse_coded_prefix(b->second);
    if (!c) return std::nullopt;
    if (b->first.length() > cfg.q.eval(c->first.length())) return std::nullopt;
    return encode_tuple({a->first, c->first, c->second});
  });
}

unsigned chain_m(const Program& p) { return ceil_log2(p.bound().a + p.bound().k); }

Morphism lemma_chain(const Program& p) {
  const unsigned m = chain_m(p);
  return compose({rho(program_header(p)).renamed("rho(code(W)11)"), decode2_m(), contr_m(),
                  power(recontr_m(), 2 * m), evr_cc(q2_config()), power(reexpand_m(), m), expand_m(),
                  gamma_o_w(p)});
}

}  // namespace rmc
