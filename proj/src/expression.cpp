#include "tame/expression.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace tame::expr {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& vars) : text_(text) {
    if (vars) {
      for (const auto& v : *vars) declare(v, 0);
      fixed_ = true;
    }
  }

  IdealExpression run() {
    skip_space();
    if (text_.substr(pos_, 4) == "vars" && pos_ + 4 < text_.size() &&
        !is_digit(text_[pos_ + 4]) && text_[pos_ + 4] != '_') {
      parse_header();
    }
    Node root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (names_.empty()) fail("no variables");
    if (!fixed_) index_by_subscript(root);
    return IdealExpression{std::move(root), std::move(names_)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void declare(const std::string& name, std::size_t where) {
    if (!is_valid_name(name)) throw SyntaxError(where, "invalid variable name '" + name + "'");
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
      throw SyntaxError(where, "variable '" + name + "' declared twice");
    }
    names_.push_back(name);
  }

  std::string read_name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_letter(text_[pos_])) fail("expected a variable name");
    ++pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    while (pos_ + 1 < text_.size() && text_[pos_] == '_' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (is_letter(text_[pos_]) || text_[pos_] == '_')) {
      fail("variable names are a letter followed by digits; use '*' between factors");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_header() {
    pos_ += 4;
    if (fixed_) fail("a vars header conflicts with an explicit variable list");
    do {
      const std::size_t where = pos_;
      declare(read_name(), where);
    } while (accept(','));
    if (!accept(';')) fail("expected ';' after the vars header");
    fixed_ = true;
  }

  int read_uint() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max() / 10) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent");
    if (value == 0) {
      pos_ = start;
      fail("exponents must be positive");
    }
    return static_cast<int>(value);
  }

  Node parse_sum() {
    Node first = parse_product();
    if (!peek(',')) return first;
    Node sum{Node::Kind::Sum, 0, 1, {}, first.position};
    sum.children.push_back(std::move(first));
    while (accept(',')) sum.children.push_back(parse_product());
    return sum;
  }

  Node parse_product() {
    Node first = parse_power();
    if (!peek('*')) return first;
    Node prod{Node::Kind::Product, 0, 1, {}, first.position};
    prod.children.push_back(std::move(first));
    while (accept('*')) prod.children.push_back(parse_power());
    return prod;
  }

  Node parse_power() {
    Node base = parse_primary();
    if (!accept('^')) return base;
    Node power{Node::Kind::Power, 0, read_uint(), {}, base.position};
    power.children.push_back(std::move(base));
    return power;
  }

  Node parse_primary() {
    skip_space();
    const std::size_t where = pos_;
    if (accept('(')) {
      Node inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const std::string name = read_name();
    auto it = std::find(names_.begin(), names_.end(), name);
    std::size_t index;
    if (it != names_.end()) {
      index = static_cast<std::size_t>(it - names_.begin());
    } else if (fixed_) {
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + name + "' at position " + std::to_string(where));
    } else {
      index = names_.size();
      names_.push_back(name);
    }
    return Node{Node::Kind::Variable, index, 1, {}, where};
  }

  // Without a declared order, names x1..xn sharing one letter are indexed by
  // their subscript, so "x2*x3" lives in three variables.
  void index_by_subscript(Node& root) {
    const char letter = names_.front()[0];
    std::vector<std::size_t> subscript;
    std::size_t top = 0;
    for (const auto& name : names_) {
      if (name.size() < 2 || name[0] != letter || name[1] == '0' || name.size() > 3) return;
      if (!std::all_of(name.begin() + 1, name.end(), is_digit)) return;
      subscript.push_back(static_cast<std::size_t>(std::stoul(name.substr(1))));
      top = std::max(top, subscript.back());
    }
    if (top > kMaxVertices) return;
    remap(root, subscript);
    names_.clear();
    for (std::size_t i = 1; i <= top; ++i) names_.push_back(std::string(1, letter) + std::to_string(i));
  }

  static void remap(Node& node, const std::vector<std::size_t>& subscript) {
    if (node.kind == Node::Kind::Variable) node.variable = subscript[node.variable] - 1;
    for (auto& child : node.children) remap(child, subscript);
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_ = false;
  std::vector<std::string> names_;
};

MonomialIdeal eval(const Node& node, std::size_t n) {
  switch (node.kind) {
    case Node::Kind::Variable:
      return MonomialIdeal::make(n, {Monomial::variable(n, node.variable)});
    case Node::Kind::Sum: {
      MonomialIdeal acc = eval(node.children.front(), n);
      for (std::size_t i = 1; i < node.children.size(); ++i) acc = acc + eval(node.children[i], n);
      return acc;
    }
    case Node::Kind::Product: {
      MonomialIdeal acc = eval(node.children.front(), n);
      for (std::size_t i = 1; i < node.children.size(); ++i) acc = acc * eval(node.children[i], n);
      return acc;
    }
    case Node::Kind::Power: {
      const MonomialIdeal base = eval(node.children.front(), n);
      MonomialIdeal acc = base;
      for (int i = 1; i < node.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  throw Error(ErrorCode::SyntaxError, "unknown expression node");
}

std::string print_node(const Node& node, const std::vector<std::string>& names, int context) {
  // context: 0 = sum level, 1 = product operand, 2 = power base
  switch (node.kind) {
    case Node::Kind::Variable:
      return names.at(node.variable);
    case Node::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) s += ", ";
        s += print_node(node.children[i], names, 0);
      }
      return context > 0 ? "(" + s + ")" : s;
    }
    case Node::Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) s += "*";
        s += print_node(node.children[i], names, 1);
      }
      return context > 1 ? "(" + s + ")" : s;
    }
    case Node::Kind::Power:
      return print_node(node.children.front(), names, 2) + "^" + std::to_string(node.exponent);
  }
  return {};
}

std::string factors(const std::vector<int>& e, const std::vector<std::string>& names, int sign) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int k = sign * e[i];
    if (k <= 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

bool is_valid_name(std::string_view name) {
  std::size_t i = 0;
  if (name.empty() || !is_letter(name[0])) return false;
  ++i;
  while (i < name.size() && is_digit(name[i])) ++i;
  while (i < name.size()) {
    if (name[i] != '_' || i + 1 >= name.size() || !is_digit(name[i + 1])) return false;
    ++i;
    while (i < name.size() && is_digit(name[i])) ++i;
  }
  return name != "vars";
}

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') {
      flush();
    } else if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      cur += c;
    }
  }
  flush();
  return out;
}

IdealExpression parse_expression(std::string_view text, const std::optional<std::vector<std::string>>& vars) {
  return Parser(text, vars).run();
}

MonomialIdeal evaluate(const IdealExpression& expression) {
  return eval(expression.root, expression.names.size());
}

ParsedIdeal parse_ideal(std::string_view text, const std::optional<std::vector<std::string>>& vars) {
  auto e = parse_expression(text, vars);
  MonomialIdeal ideal = evaluate(e);
  return ParsedIdeal{std::move(ideal), std::move(e.names)};
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names) {
  const auto e = parse_expression(text, names);
  const MonomialIdeal ideal = evaluate(e);
  if (ideal.size() != 1) throw Error(ErrorCode::SyntaxError, "expected a single monomial");
  return ideal.generators().front();
}

std::string print(const IdealExpression& expression) {
  return print_node(expression.root, expression.names, 0);
}

std::string print_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string s = factors(m.exponents(), names, 1);
  return s.empty() ? "1" : s;
}

std::string print_laurent(const charts::LaurentMonomial& m, const std::vector<std::string>& names) {
  std::string num = factors(m.exponents(), names, 1);
  const std::string den = factors(m.exponents(), names, -1);
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  const bool compound = std::count_if(m.exponents().begin(), m.exponents().end(), [](int e) { return e < 0; }) > 1;
  return num + "/" + (compound ? "(" + den + ")" : den);
}

std::string print_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names, bool header) {
  std::string s;
  if (header) {
    s = "vars ";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) s += ",";
      s += names[i];
    }
    s += "; ";
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) s += ", ";
    s += print_monomial(ideal.generators()[i], names);
  }
  return s;
}

std::string print_set(VertexSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v : vset::members(s)) {
    if (!first) out += ",";
    out += names.at(v);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace tame::expr
