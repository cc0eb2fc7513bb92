#pragma once

#include <string_view>

#include "cjcalc/character.hpp"
#include "cjcalc/decomp.hpp"

namespace cjcalc {

/// What an expression may refer to. `provider` is needed only for
/// simple(...), and (p, r) only for st and twist.
struct ExprContext {
  const RootSystem* rs = nullptr;
  const DecompositionProvider* provider = nullptr;
  Int p = 0;
  Int r = 1;
};

/// Evaluates
///   e := weyl(w) | simple(w) | st | twist(e, s) | dual(e) | (e) | e + e | e * e
/// where w is a comma-separated list of integers. A chain of binary
/// operators must use a single operator; mixing + and * needs parentheses.
/// Syntax errors throw InputError giving the 1-based column.
Character evaluate_expression(std::string_view text, const ExprContext& context);

}  // namespace cjcalc
