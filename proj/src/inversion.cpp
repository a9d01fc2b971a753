#include "rmc/inversion.hpp"

#include "rmc/vm.hpp"

#include <map>
#include <stdexcept>

namespace rmc {

Morphism restrict_balanced(const Morphism& f_inv, PolyBound q) {
  return Morphism::restricted(
      f_inv,
      [q](const Word& y, const Word& x) { return y.length() <= q.eval(x.length()) && x.length() <= q.eval(y.length()); },
      "balanced" + q.str() + "(" + f_inv.name() + ")");
}

namespace {

struct PreimageTable {
  Program program;
  std::map<Word, Word> first_preimage;  // image -> shortlex-first domain-code word
};

PreimageTable enumerate_preimages(const Program& p, unsigned max_len) {
  PreimageTable t{p, {}};
  for (auto& e : enumerate_domain_code(p, max_len)) t.first_preimage.emplace(std::move(e.image), std::move(e.u));
  return t;
}

class ReferenceInverse {
 public:
  ReferenceInverse(EvalConfig cfg, const std::vector<Program>& fixtures, unsigned max_len) : cfg_(std::move(cfg)) {
    for (const auto& p : fixtures) tables_.emplace(serialize(p), enumerate_preimages(p, max_len));
  }

  std::optional<Word> invert(const Word& y) const {
    auto h = split_program_header(y);
    if (!h || !admitted(h->program, cfg_)) return std::nullopt;
    bool padded = h->program.kind() == Program::Kind::ex;
    auto it = tables_.find(serialize(padded ? h->program.inner() : h->program));
    if (it == tables_.end()) return std::nullopt;
    auto pz = parse_coded_prefix(h->rest);
    if (!pz) return std::nullopt;
    Word image = pz->first;
    Nat lead = 0;
    if (padded) {
      lead = image.leading_zeros();
      if (lead == 0 || lead == image.length()) return std::nullopt;
      image = image.drop(lead + 1);
    }
    auto pre = it->second.first_preimage.find(image);
    if (pre == it->second.first_preimage.end()) return std::nullopt;
    Word t = pre->second;
    if (padded) t = WordBuilder().zeros(lead).bit(1).append(t).finish();
    return h->header + encode_tuple({t, pz->second});
  }

 private:
  EvalConfig cfg_;
  std::map<std::string, PreimageTable> tables_;
};

}  // namespace

std::shared_ptr<const OracleInverse> reference_e_prime(const EvalConfig& cfg, const std::vector<Program>& fixtures,
                                                       unsigned max_len) {
  auto ref = std::make_shared<ReferenceInverse>(cfg, fixtures, max_len);
  return std::make_shared<OracleInverse>([ref](const Word& y) { return ref->invert(y); },
                                         [ref](const Word& y) { return ref->invert(y).has_value(); });
}

Morphism build_inverse(const Program& p, std::shared_ptr<const OracleInverse> e_prime, const EvalConfig& cfg) {
  const unsigned m = chain_m(p);
  const Word header = program_header(p);
  const Word k11 = Word::from_bits("11");
  Morphism pad = compose({power(reexpand_m(), m), expand_unchecked_m()});
  Morphism e = Morphism::oracle("e'", [e_prime](const Word& y) { return e_prime->call(y); });
  Morphism unpad = compose({decode_m(), rho(header).renamed("rho(code(W)11)"), contr_m(),
                            power(recontr_m(), 2 * m), e, pad});
  if (!admitted(Program::ex(p), cfg)) throw std::invalid_argument("ex(w) is not admitted by the evaluator bound");

  return Morphism::named("phi'(W)", [=](const Word& y) -> std::optional<Word> {
    for (Nat i = 0; i <= y.length(); i += 1) {
      Word head = y.prefix(i);
      auto padded = pad(header + encode(head) + k11);
      if (!padded || !e_prime->domain_test(*padded)) continue;
      auto hit = e_prime->call(*padded);
      if (!hit) continue;
      // recover t_i from code(ex(w)) 11 code(0^h 1 t_i) 11
      auto h = split_program_header(*hit);
      if (!h) continue;
      auto tz = parse_coded_prefix(h->rest);
      if (!tz) continue;
      Nat lead = tz->first.leading_zeros();
      if (lead == tz->first.length()) continue;
      Word t = tz->first.drop(lead + 1);
      if (!run(p, t).ok()) continue;
      return unpad(header + encode(head) + k11 + y.drop(i));
    }
    return std::nullopt;
  });
}

Morphism invert_e_q(const EvalConfig& cfg) {
  return Morphism::named("Eq^-1" + cfg.q.str(), [cfg](const Word& x) -> std::optional<Word> {
    auto h = split_program_header(x);
    if (!h || !admitted(h->program, cfg)) return std::nullopt;
    auto a = parse_coded_prefix(h->rest);
    if (!a) return std::nullopt;
    auto b = parse_coded_prefix(a->second);
    if (!b) return std::nullopt;
    RunOutcome r = run(h->program, a->first);
    if (!r.ok() || !r.copy_start || *r.copy_start != a->first.length() || !(r.output == b->first))
      return std::nullopt;
    return h->header + encode_tuple({a->first, b->second});
  });
}

Morphism invert_rho2_q(const EvalConfig& cfg) {
  return Morphism::named("rho2q^-1" + cfg.q.str(), [](const Word& x) -> std::optional<Word> {
    auto a = parse_coded_prefix(x);
    if (!a) return std::nullopt;
    auto b = parse_coded_prefix(a->second);
    if (!b) return std::nullopt;
    return encode_tuple({a->first, Word(), b->first, b->second});
  });
}

InverseReport check_semigroup_inverse(const Morphism& f, const Morphism& g, const std::vector<Word>& samples,
                                      bool strengthened) {
  InverseReport rep;
  auto bad = [&](const std::string& law, const Word& at) { rep.violations.push_back(law + " fails at " + at.to_text()); };
  auto fgf = [&](const Morphism& inv, const Word& fx) {
    auto gy = inv(fx);
    if (!gy) return false;
    auto back = f(*gy);
    return back && *back == fx;
  };
  Morphism v = compose({g, f, g});
  for (const auto& x : samples) {
    auto fx = f(x);
    if (!fx) continue;
    ++rep.checked;
    if (!fgf(g, *fx)) {
      bad("f g f = f", x);
      continue;
    }
    if (!strengthened) continue;
    // g f g = g at y = f(x)
    auto gy = g(*fx);
    auto ggy = compose({g, f})(*gy);
    if (!ggy || !(*ggy == *gy)) bad("g f g = g", *fx);
    if (!fgf(v, *fx)) bad("f v f = f", x);
    auto vy = v(*fx);
    if (!vy) {
      bad("v defined on Im(f)", *fx);
      continue;
    }
    auto fvy = f(*vy);
    auto vfvy = fvy ? v(*fvy) : std::nullopt;
    if (!vfvy || !(*vfvy == *vy)) bad("v f v = v", *fx);
  }
  return rep;
}

}  // namespace rmc
