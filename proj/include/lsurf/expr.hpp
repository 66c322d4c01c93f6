#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lsurf/lorentz.hpp"

namespace lsurf {

/// Closed-form A-valued expression of a point (s, t).
///
/// Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] INTEGER)?
///   primary := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'
///
/// Names: a (= u + sigma v), ahat, s, t, u, v, sigma, pi.
/// Functions: sin, cos, sinh, cosh, exp (applied to each split component), hat.
class Expr {
 public:
  /// Throws Error(ParseError) with the offending column.
  static Expr parse(std::string_view text);

  LorentzNum operator()(double s, double t) const;
  LorentzNum at(const LorentzNum& a) const;

  const std::string& source() const { return source_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace lsurf
