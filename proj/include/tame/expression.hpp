#pragma once

// Ideal expressions such as "(x,y*z)*(x,y)*(x,z)" or "vars x,y; x^2, x*y".
//
//   text    := header? sum
//   header  := 'vars' name (',' name)* ';'
//   sum     := product (',' product)*        ideal sum
//   product := power ('*' power)*            ideal product
//   power   := primary ('^' uint)?
//   primary := '(' sum ')' | name
//   name    := letter digit* ('_' digit+)*
//
// A bare term list and a parenthesized group are both sums; a monomial x*y is
// the product of the principal ideals (x) and (y).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tame/charts.hpp"
#include "tame/core.hpp"

namespace tame::expr {

struct Node {
  enum class Kind { Variable, Sum, Product, Power };
  Kind kind = Kind::Variable;
  std::size_t variable = 0;  // Variable
  int exponent = 1;          // Power
  std::vector<Node> children;
  std::size_t position = 0;
};

struct IdealExpression {
  Node root;
  std::vector<std::string> names;  // variable index -> name
};

/// Variable order comes from `vars` (if given), else a `vars` header in the
/// text. Otherwise names x1..xn over a single letter are indexed by subscript
/// (n = largest subscript) and any other naming by first appearance.
/// Throws SyntaxError or UnknownVariable.
IdealExpression parse_expression(std::string_view text,
                                 const std::optional<std::vector<std::string>>& vars = std::nullopt);

/// Expands products and powers and minimalizes.
MonomialIdeal evaluate(const IdealExpression& expression);

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> names;
};

ParsedIdeal parse_ideal(std::string_view text, const std::optional<std::vector<std::string>>& vars = std::nullopt);

/// Parses a single monomial such as "x^2*y" over fixed variable names.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names);

std::vector<std::string> split_names(std::string_view list);
bool is_valid_name(std::string_view name);

std::string print(const IdealExpression& expression);
std::string print_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string print_laurent(const charts::LaurentMonomial& m, const std::vector<std::string>& names);
/// "x^2, x*y"; with `header`, prefixed by "vars x,y; " so parsing it back
/// reproduces both the ideal and the variable order.
std::string print_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names, bool header = false);
/// "{x1,x2}".
std::string print_set(VertexSet s, const std::vector<std::string>& names);

/// Default names x1..xn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace tame::expr
