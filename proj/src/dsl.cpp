#include "rmc/dsl.hpp"

#include "rmc/codes.hpp"
#include "rmc/lab.hpp"

#include <cctype>

namespace rmc {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const DslContext& ctx) : s_(s), ctx_(ctx) {}

  Morphism morphism() {
    Morphism m = expr();
    expect_end();
    return m;
  }

  Word word() {
    Word w = word_expr();
    expect_end();
    return w;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  const DslContext& ctx_;

  [[noreturn]] void error(const std::string& what) const {
    throw DslError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void need(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  void expect_end() {
    skip();
    if (i_ != s_.size()) error("unexpected trailing input");
  }

  std::string ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    std::string r(s_.substr(i_, j - i_));
    i_ = j;
    return r;
  }

  std::string digits() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) error("expected a number");
    std::string r(s_.substr(i_, j - i_));
    i_ = j;
    return r;
  }

  const Program& program() const {
    if (!ctx_.program) throw DslError("W used without a program (pass --program)");
    return *ctx_.program;
  }

  Morphism expr() {
    std::vector<Morphism> parts{term()};
    while (eat('.')) parts.push_back(term());
    return parts.size() == 1 ? parts.front() : compose(std::move(parts));
  }

  Morphism term() {
    Morphism a = atom();
    if (eat('^')) {
      std::string n = digits();
      if (n.size() > 6) error("exponent too large");
      a = power(a, static_cast<unsigned>(std::stoul(n)));
    }
    return a;
  }

  // (q2) or (a,k); absent means the context bound.
  EvalConfig bound_arg() {
    EvalConfig cfg = ctx_.cfg;
    if (!eat('(')) return cfg;
    skip();
    if (s_.substr(i_, 2) == "q2") {
      i_ += 2;
      cfg.q = q2_config().q;
    } else {
      std::string a = digits();
      need(',');
      std::string k = digits();
      if (a.size() > 12 || k.size() > 12) error("bound too large");
      cfg.q = PolyBound{std::stoull(a), std::stoull(k)};
    }
    need(')');
    return cfg;
  }

  void program_arg() {
    need('(');
    skip();
    if (!eat('W')) error("expected W");
    need(')');
  }

  Morphism atom() {
    if (eat('(')) {
      Morphism m = expr();
      need(')');
      return m;
    }
    std::string id = ident();
    if (id.empty()) error("expected a morphism");
    if (id == "pi" || id == "rho") {
      need('(');
      Word w = word_expr();
      need(')');
      return id == "pi" ? pi(w) : rho(w);
    }
    if (id == "pi0") return pi(Word::from_bits("0"));
    if (id == "pi1") return pi(Word::from_bits("1"));
    if (id == "rho0") return rho(Word::from_bits("0"));
    if (id == "rho1") return rho(Word::from_bits("1"));
    if (id == "id") return identity_m();
    if (id == "s") return s_morphism();
    if (id == "decode") return decode_m();
    if (id == "decode2") return decode2_m();
    if (id == "expand") return expand_m();
    if (id == "reexpand") return reexpand_m();
    if (id == "recontr") return recontr_m();
    if (id == "contr") return contr_m();
    if (id == "evRcc") return evr_cc(bound_arg());
    if (id == "evRc") return evr_c(bound_arg());
    if (id == "gammaq") return gamma_q(bound_arg());
    if (id == "Eq") return e_q(bound_arg());
    if (id == "rho2q") return rho2_q(bound_arg());
    if (id == "gamma" || id == "gammao" || id == "phi" || id == "pref" || id == "chain" || id == "direct") {
      program_arg();
      const Program& p = program();
      if (id == "gamma") return gamma_w(p);
      if (id == "gammao") return gamma_o_w(p);
      if (id == "phi") return machine_morphism(p, "phi(W)");
      if (id == "pref") return machine_morphism(prefix_closure(p), "pref(W)");
      if (id == "chain") return lemma_chain(p);
      return direct_simulation(p, ctx_.cfg);
    }
    error("unknown morphism '" + id + "'");
  }

  Word word_expr() {
    WordBuilder b;
    do b.append(item());
    while (eat('+'));
    return b.finish();
  }

  Word item() {
    skip();
    if (i_ < s_.size() && (s_[i_] == '0' || s_[i_] == '1')) {
      std::size_t j = i_;
      while (j < s_.size() && (s_[j] == '0' || s_[j] == '1')) ++j;
      if (j < s_.size() && s_[j] == '*') {
        if (j != i_ + 1 || s_[i_] != '0') error("zero run must be written 0*n");
        i_ = j + 1;
        return Word::zeros(Nat(digits()));
      }
      Word w = Word::from_bits(s_.substr(i_, j - i_));
      i_ = j;
      return w;
    }
    std::string id = ident();
    if (id == "eps") return Word();
    if (id == "W") return Word::from_bits(serialize(program()));
    if (id == "header") return program_header(program());
    if (id == "code") {
      need('(');
      Word w = word_expr();
      need(')');
      return encode(w);
    }
    error(id.empty() ? "expected a word" : "unknown word item '" + id + "'");
  }
};

}  // namespace

Morphism parse_morphism(std::string_view text, const DslContext& ctx) { return Parser(text, ctx).morphism(); }

Word parse_word_expr(std::string_view text, const DslContext& ctx) { return Parser(text, ctx).word(); }

}  // namespace rmc
