#include "rmc/morphism.hpp"

#include "rmc/codes.hpp"
#include "rmc/vm.hpp"

#include <stdexcept>

namespace rmc {

struct Morphism::Node {
  Kind kind = Kind::named;
  std::string name;
  bool right_ideal = true;
  PartialFn fn;                  // named, oracle
  std::optional<Program> prog;   // machine
  std::vector<Morphism> parts;   // composite
  std::function<bool(const Word&, const Word&)> keep;  // restricted (base in parts[0])
};

Morphism Morphism::named(std::string name, PartialFn f, bool right_ideal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::named;
  n->name = std::move(name);
  n->fn = std::move(f);
  n->right_ideal = right_ideal;
  return Morphism(n);
}

Morphism Morphism::machine(Program p, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::machine;
  n->name = name.empty() ? "machine" : std::move(name);
  n->right_ideal = p.discipline() == Discipline::rm;
  n->prog = std::move(p);
  return Morphism(n);
}

Morphism Morphism::composite(std::vector<Morphism> parts) {
  if (parts.empty()) throw std::invalid_argument("compose: empty list");
  auto n = std::make_shared<Node>();
  n->kind = Kind::composite;
  for (auto& p : parts) {
    if (p.kind() == Kind::composite) {
      n->parts.insert(n->parts.end(), p.parts().begin(), p.parts().end());
    } else {
      n->parts.push_back(std::move(p));
    }
  }
  n->right_ideal = true;
  for (std::size_t i = 0; i < n->parts.size(); ++i) {
    if (i) n->name += " . ";
    n->name += n->parts[i].name();
    n->right_ideal = n->right_ideal && n->parts[i].right_ideal();
  }
  return Morphism(n);
}

Morphism Morphism::restricted(Morphism base, std::function<bool(const Word&, const Word&)> keep,
                              std::string name, bool right_ideal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::restricted;
  n->name = std::move(name);
  n->right_ideal = right_ideal;
  n->parts.push_back(std::move(base));
  n->keep = std::move(keep);
  return Morphism(n);
}

Morphism Morphism::oracle(std::string name, PartialFn f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::oracle;
  n->name = std::move(name);
  n->fn = std::move(f);
  n->right_ideal = false;
  return Morphism(n);
}

std::optional<Word> Morphism::operator()(const Word& x) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::named:
    case Kind::oracle:
      return n.fn(x);
    case Kind::machine: {
      RunOutcome r = run(*n.prog, x);
      if (!r.ok()) return std::nullopt;
      return std::move(r.output);
    }
    case Kind::composite: {
      std::optional<Word> cur = x;
      for (auto it = n.parts.rbegin(); it != n.parts.rend() && cur; ++it) cur = (*it)(*cur);
      return cur;
    }
    case Kind::restricted: {
      auto y = n.parts[0](x);
      if (!y || !n.keep(x, *y)) return std::nullopt;
      return y;
    }
  }
  return std::nullopt;
}

Morphism::Kind Morphism::kind() const { return node_->kind; }
const std::string& Morphism::name() const { return node_->name; }
bool Morphism::right_ideal() const { return node_->right_ideal; }
const std::vector<Morphism>& Morphism::parts() const { return node_->parts; }

const Program& Morphism::program() const {
  if (!node_->prog) throw std::logic_error("not a machine-backed morphism");
  return *node_->prog;
}

Morphism Morphism::renamed(std::string name) const {
  auto n = std::make_shared<Node>(*node_);
  n->name = std::move(name);
  return Morphism(n);
}

Morphism compose(std::vector<Morphism> fs) {
  if (fs.size() == 1) return fs.front();
  return Morphism::composite(std::move(fs));
}

Morphism power(const Morphism& f, unsigned n) {
  if (n == 0) return identity_m();
  if (n == 1) return f;
  return Morphism::composite(std::vector<Morphism>(n, f));
}

Morphism identity_m() {
  return Morphism::named("id", [](const Word& x) { return std::optional<Word>(x); });
}

Morphism pi(const Word& w) {
  return Morphism::named("pi(" + w.to_text() + ")", [w](const Word& x) { return std::optional<Word>(w + x); });
}

Morphism rho(const Word& w) {
  return Morphism::named("rho(" + w.to_text() + ")", [w](const Word& x) -> std::optional<Word> {
    if (!x.starts_with(w)) return std::nullopt;
    return x.drop(w.length());
  });
}

Morphism decode_m() {
  return Morphism::named("decode", [](const Word& x) -> std::optional<Word> {
    auto p = parse_coded_prefix(x);
    if (!p) return std::nullopt;
    return p->first + p->second;
  });
}

Morphism decode2_m() {
  return Morphism::named("decode2", [](const Word& x) -> std::optional<Word> {
    auto a = parse_coded_prefix(x);
    if (!a) return std::nullopt;
    auto b = parse_coded_prefix(a->second);
    if (!b) return std::nullopt;
    return encode_tuple({a->first, b->first + b->second});
  });
}

Morphism c_embed(const Morphism& f) {
  return Morphism::named("C(" + f.name() + ")", [f](const Word& x) -> std::optional<Word> {
    auto p = parse_coded_prefix(x);
    if (!p) return std::nullopt;
    auto y = f(p->first);
    if (!y) return std::nullopt;
    return encode_tuple({*y, p->second});
  });
}

Morphism machine_morphism(const Program& p, std::string name) { return Morphism::machine(p, std::move(name)); }

std::vector<Word> domain_code(const Morphism& f, unsigned L) {
  return right_ideal_code([&](const Word& x) { return f(x).has_value(); }, L).code;
}

}  // namespace rmc
