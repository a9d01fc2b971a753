#pragma once

#include "rmc/program.hpp"
#include "rmc/word.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rmc {

using PartialFn = std::function<std::optional<Word>(const Word&)>;

/// A partial map on binary words. Values are cheap to copy and immutable.
class Morphism {
 public:
  enum class Kind { named, machine, composite, restricted, oracle };

  static Morphism named(std::string name, PartialFn f, bool right_ideal = true);
  static Morphism machine(Program p, std::string name = "");
  /// Applies the last element first.
  static Morphism composite(std::vector<Morphism> parts);
  /// Keeps only the points where keep(x, f(x)) holds.
  static Morphism restricted(Morphism base, std::function<bool(const Word&, const Word&)> keep,
                             std::string name, bool right_ideal = false);
  static Morphism oracle(std::string name, PartialFn f);

  std::optional<Word> operator()(const Word& x) const;

  Kind kind() const;
  const std::string& name() const;
  /// Declared to satisfy f(xz) = f(x) z.
  bool right_ideal() const;
  /// Composite parts in application order reversed (outermost first).
  const std::vector<Morphism>& parts() const;
  /// Machine-backed values only.
  const Program& program() const;
  Morphism renamed(std::string name) const;

 private:
  struct Node;
  explicit Morphism(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline std::optional<Word> apply(const Morphism& f, const Word& x) { return f(x); }

/// Non-empty list; compose({f, g})(x) = f(g(x)). Nested composites are flattened.
Morphism compose(std::vector<Morphism> fs);
/// n-fold self-composition; power(f, 0) is the identity.
Morphism power(const Morphism& f, unsigned n);

Morphism identity_m();
/// x -> w x.
Morphism pi(const Word& w);
/// w x -> x.
Morphism rho(const Word& w);
/// code(u) 11 v -> u v.
Morphism decode_m();
/// code(u1) 11 code(u2) 11 v -> code(u1) 11 u2 v.
Morphism decode2_m();
/// code(x) 11 v -> code(f(x)) 11 v for x in Dom(f).
Morphism c_embed(const Morphism& f);
Morphism machine_morphism(const Program& p, std::string name = "");

/// Prefix-minimal elements of Dom(f) among words of length <= L.
std::vector<Word> domain_code(const Morphism& f, unsigned L);

}  // namespace rmc
