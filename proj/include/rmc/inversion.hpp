#pragma once

#include "rmc/codes.hpp"
#include "rmc/morphism.hpp"
#include "rmc/padding.hpp"

#include <atomic>
#include <memory>
#include <string>
#include <vector>

namespace rmc {

/// Black-box inverse e' with logged access. call(y) is defined iff
/// domain_test(y) holds.
class OracleInverse {
 public:
  OracleInverse(PartialFn call, Predicate domain_test)
      : call_(std::move(call)), test_(std::move(domain_test)) {}

  std::optional<Word> call(const Word& y) const {
    ++calls_;
    return call_(y);
  }
  bool domain_test(const Word& y) const {
    ++tests_;
    return test_(y);
  }

  std::size_t call_count() const { return calls_; }
  std::size_t domain_test_count() const { return tests_; }
  void reset_counts() const {
    calls_ = 0;
    tests_ = 0;
  }

 private:
  PartialFn call_;
  Predicate test_;
  mutable std::atomic<std::size_t> calls_{0};
  mutable std::atomic<std::size_t> tests_{0};
};

/// g restricted to {y : |y| <= q(|g(y)|) and |g(y)| <= q(|y|)}.
Morphism restrict_balanced(const Morphism& f_inv, PolyBound q);

/// Brute-force inverse of evr_cc on words headed by a fixture program w or
/// by ex(w). Preimages are searched among domain-code words of length at
/// most max_len; ties go to the shortlex-first one.
std::shared_ptr<const OracleInverse> reference_e_prime(const EvalConfig& cfg, const std::vector<Program>& fixtures,
                                                       unsigned max_len = 48);

/// The oracle inverse construction: tests prefixes of y in order, pads each,
/// asks the oracle, verifies the preimage by a forward run, and unpads.
Morphism build_inverse(const Program& p, std::shared_ptr<const OracleInverse> e_prime,
                       const EvalConfig& cfg = q2_config());

/// code(w) 11 code(u) 11 code(y) 11 v -> code(w) 11 code(u) 11 v when y = f_w(u).
Morphism invert_e_q(const EvalConfig& cfg);
/// code(z) 11 code(y) 11 v -> code(z) 11 code(empty) 11 code(y) 11 v.
Morphism invert_rho2_q(const EvalConfig& cfg);

struct InverseReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// f g f = f on samples in Dom(f). In strengthened mode also g f g = g on
/// the points f(x), and for v = g f g both f v f = f and v f v = v.
InverseReport check_semigroup_inverse(const Morphism& f, const Morphism& g, const std::vector<Word>& samples,
                                      bool strengthened = false);

}  // namespace rmc
