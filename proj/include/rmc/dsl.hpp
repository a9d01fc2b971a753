#pragma once

#include "rmc/morphism.hpp"
#include "rmc/padding.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace rmc {

/// Morphism expressions.
///
///   expr  := term ('.' term)*          composition, rightmost applied first
///   term  := atom ('^' n)?
///   atom  := pi(word) | rho(word) | pi0 | pi1 | rho0 | rho1 | id | s
///          | decode | decode2 | expand | reexpand | recontr | contr
///          | evRcc | evRc | gammaq | Eq | rho2q     (optionally (q2) or (a,k))
///          | gamma(W) | gammao(W) | phi(W) | pref(W) | chain(W) | direct(W)
///          | '(' expr ')'
///   word  := item ('+' item)*
///   item  := bits | 0*n | eps | W | code(word) | header
///
/// W is the program supplied in the context; header is code(W) 11.
struct DslContext {
  std::optional<Program> program;
  EvalConfig cfg = q2_config();
};

class DslError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Morphism parse_morphism(std::string_view text, const DslContext& ctx = {});
Word parse_word_expr(std::string_view text, const DslContext& ctx = {});

}  // namespace rmc
