#include "latticeforge/catalog.hpp"

#include <cctype>
#include <utility>

#include "latticeforge/errors.hpp"

namespace lf {

namespace {

IntegerLattice root_a(int n) {
  IntMat g = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) {
      g(i, i + 1) = 1;
      g(i + 1, i) = 1;
    }
  }
  return IntegerLattice::from_gram(g);
}

IntegerLattice root_d(int n) {
  // Nodes 0..n-3 form a path; nodes n-2 and n-1 both attach to node n-3.
  IntMat g = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  for (int i = 0; i + 1 < n - 1; ++i) {
    g(i, i + 1) = -1;
    g(i + 1, i) = -1;
  }
  g(n - 3, n - 1) = -1;
  g(n - 1, n - 3) = -1;
  return IntegerLattice::from_gram(g);
}

IntegerLattice root_e(int n) {
  // Path 0..n-2 with the extra node n-1 attached to node 2.
  IntMat g = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  for (int i = 0; i + 1 < n - 1; ++i) {
    g(i, i + 1) = -1;
    g(i + 1, i) = -1;
  }
  g(2, n - 1) = -1;
  g(n - 1, 2) = -1;
  return IntegerLattice::from_gram(g);
}

}  // namespace

IntegerLattice named_lattice(const std::string& name) {
  if (name.empty()) fail("UnknownName", "empty lattice name");

  if (name[0] == '<') {
    if (name.back() != '>') fail("UnknownName", "malformed rank-one lattice name: " + name);
    std::string inner = name.substr(1, name.size() - 2);
    if (inner.empty() || (inner == "-")) fail("BadParameter", "missing norm in " + name);
    for (size_t i = 0; i < inner.size(); ++i) {
      if (!(std::isdigit(static_cast<unsigned char>(inner[i])) || (i == 0 && inner[i] == '-'))) {
        fail("BadParameter", "non-integer norm in " + name);
      }
    }
    IntMat g(1, 1);
    g(0, 0) = Int(inner);
    return IntegerLattice::from_gram(g);
  }

  const char head = name[0];
  const std::string tail = name.substr(1);
  auto parse_int = [&](const std::string& s) -> long {
    if (s.empty()) fail("BadParameter", "missing rank parameter in " + name);
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail("UnknownName", "unknown lattice name: " + name);
      }
    }
    return std::stol(s);
  };

  switch (head) {
    case 'A': {
      long n = parse_int(tail);
      if (n < 1) fail("BadParameter", "A-series rank must be at least 1");
      if (n > 64) fail("BadParameter", "A-series rank capped at 64");
      return root_a(static_cast<int>(n));
    }
    case 'D': {
      long n = parse_int(tail);
      if (n < 4) fail("BadParameter", "D-series rank must be at least 4");
      if (n > 64) fail("BadParameter", "D-series rank capped at 64");
      return root_d(static_cast<int>(n));
    }
    case 'E': {
      long n = parse_int(tail);
      if (n < 6 || n > 8) fail("BadParameter", "E-series rank must be 6, 7, or 8");
      return root_e(static_cast<int>(n));
    }
    case 'U': {
      if (!tail.empty()) fail("UnknownName", "unknown lattice name: " + name);
      IntMat g(2, 2);
      g << Int(0), Int(1), Int(1), Int(0);
      return IntegerLattice::from_gram(g);
    }
    case 'I': {
      auto comma = tail.find(',');
      if (comma == std::string::npos) fail("UnknownName", "unknown lattice name: " + name);
      long p = parse_int(tail.substr(0, comma));
      long q = parse_int(tail.substr(comma + 1));
      if (p < 0 || q < 0 || p + q == 0) fail("BadParameter", "invalid signature in " + name);
      if (p + q > 64) fail("BadParameter", "I-series rank capped at 64");
      IntMat g = IntMat::Zero(p + q, p + q);
      for (long i = 0; i < p; ++i) g(i, i) = 1;
      for (long i = p; i < p + q; ++i) g(i, i) = -1;
      return IntegerLattice::from_gram(g);
    }
    default:
      fail("UnknownName", "unknown lattice name: " + name);
  }
}

IntegerLattice cubic_primitive_lattice() { return lattice_from_expression("A2 + 2*E8 + 2*U"); }

IntegerLattice k3_lattice() { return lattice_from_expression("2*E8 + 3*U"); }

namespace {

struct Token {
  enum class Type { Name, Integer, Plus, Star, LParen, RParen, End };
  Type type = Type::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    if (c == '+') {
      current_ = {Token::Type::Plus, "+", pos_++};
      return;
    }
    if (c == '*') {
      current_ = {Token::Type::Star, "*", pos_++};
      return;
    }
    if (c == '(') {
      current_ = {Token::Type::LParen, "(", pos_++};
      return;
    }
    if (c == ')') {
      current_ = {Token::Type::RParen, ")", pos_++};
      return;
    }
    if (c == '<') {
      size_t end = text_.find('>', pos_);
      if (end == std::string::npos) {
        fail("SyntaxError", "unterminated '<' at position " + std::to_string(pos_));
      }
      current_ = {Token::Type::Name, text_.substr(pos_, end - pos_ + 1), pos_};
      pos_ = end + 1;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = {Token::Type::Integer, text_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // The comma form is only valid for I names, e.g. I19,3.
      if (pos_ < text_.size() && text_[pos_] == ',' && text_[start] == 'I') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      current_ = {Token::Type::Name, text_.substr(start, pos_ - start), start};
      return;
    }
    fail("SyntaxError",
         std::string("unexpected character '") + c + "' at position " + std::to_string(pos_));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  Token current_;
};

using ExprPtr = std::shared_ptr<LatticeExpression>;

ExprPtr parse_expr(Lexer& lex);

ExprPtr parse_atom(Lexer& lex) {
  const Token& t = lex.current();
  if (t.type == Token::Type::LParen) {
    lex.advance();
    ExprPtr inner = parse_expr(lex);
    if (lex.current().type != Token::Type::RParen) {
      fail("SyntaxError", "expected ')' at position " + std::to_string(lex.current().pos));
    }
    lex.advance();
    return inner;
  }
  if (t.type == Token::Type::Name) {
    auto node = std::make_shared<LatticeExpression>();
    node->kind = LatticeExpression::Kind::Named;
    node->name = t.text;
    named_lattice(node->name);  // validate eagerly for early errors
    lex.advance();
    return node;
  }
  fail("SyntaxError", "expected a lattice name or '(' at position " + std::to_string(t.pos));
}

ExprPtr parse_term(Lexer& lex) {
  Int count = 0;
  bool repeated = false;
  if (lex.current().type == Token::Type::Integer) {
    count = Int(lex.current().text);
    if (count <= 0) {
      fail("SyntaxError",
           "repeat count must be positive at position " + std::to_string(lex.current().pos));
    }
    repeated = true;
    lex.advance();
    if (lex.current().type != Token::Type::Star) {
      fail("SyntaxError", "expected '*' at position " + std::to_string(lex.current().pos));
    }
    lex.advance();
  }
  ExprPtr node = parse_atom(lex);
  // Optional scale suffix "(k)", binding to the atom. An atom that is itself
  // parenthesized has already consumed its parentheses, so "(U)(2)" scales U
  // by 2.
  if (lex.current().type == Token::Type::LParen) {
    lex.advance();
    if (lex.current().type != Token::Type::Integer) {
      fail("SyntaxError",
           "expected an integer scale at position " + std::to_string(lex.current().pos));
    }
    Int scale(lex.current().text);
    if (scale == 0) fail("ZeroScale", "scaling by zero is not allowed");
    lex.advance();
    if (lex.current().type != Token::Type::RParen) {
      fail("SyntaxError", "expected ')' at position " + std::to_string(lex.current().pos));
    }
    lex.advance();
    auto scaled = std::make_shared<LatticeExpression>();
    scaled->kind = LatticeExpression::Kind::Scale;
    scaled->scale = scale;
    scaled->children.push_back(std::move(node));
    node = std::move(scaled);
  }
  if (repeated) {
    auto repeat = std::make_shared<LatticeExpression>();
    repeat->kind = LatticeExpression::Kind::Repeat;
    repeat->count = count;
    repeat->children.push_back(std::move(node));
    node = std::move(repeat);
  }
  return node;
}

ExprPtr parse_expr(Lexer& lex) {
  ExprPtr first = parse_term(lex);
  if (lex.current().type != Token::Type::Plus) return first;
  auto sum = std::make_shared<LatticeExpression>();
  sum->kind = LatticeExpression::Kind::Sum;
  sum->children.push_back(std::move(first));
  while (lex.current().type == Token::Type::Plus) {
    lex.advance();
    sum->children.push_back(parse_term(lex));
  }
  return sum;
}

void print_expr(const LatticeExpression& e, std::string& out, bool parenthesize_sum) {
  switch (e.kind) {
    case LatticeExpression::Kind::Named:
      out += e.name;
      break;
    case LatticeExpression::Kind::Repeat: {
      out += e.count.get_str();
      out += '*';
      const LatticeExpression& child = *e.children.at(0);
      bool plain = child.kind == LatticeExpression::Kind::Named ||
                   (child.kind == LatticeExpression::Kind::Scale &&
                    child.children.at(0)->kind == LatticeExpression::Kind::Named);
      if (plain) {
        print_expr(child, out, true);
      } else {
        out += '(';
        print_expr(child, out, false);
        out += ')';
      }
      break;
    }
    case LatticeExpression::Kind::Scale: {
      const LatticeExpression& child = *e.children.at(0);
      if (child.kind == LatticeExpression::Kind::Named) {
        print_expr(child, out, true);
      } else {
        out += '(';
        print_expr(child, out, false);
        out += ')';
      }
      out += '(';
      out += e.scale.get_str();
      out += ')';
      break;
    }
    case LatticeExpression::Kind::Sum: {
      if (parenthesize_sum) out += '(';
      bool first = true;
      for (const auto& child : e.children) {
        if (!first) out += " + ";
        first = false;
        print_expr(*child, out, true);
      }
      if (parenthesize_sum) out += ')';
      break;
    }
  }
}

}  // namespace

LatticeExpression parse_expression(const std::string& text) {
  Lexer lex(text);
  ExprPtr root = parse_expr(lex);
  if (lex.current().type != Token::Type::End) {
    fail("SyntaxError",
         "unexpected trailing input at position " + std::to_string(lex.current().pos));
  }
  return *root;
}

std::string to_string(const LatticeExpression& expr) {
  std::string out;
  print_expr(expr, out, false);
  return out;
}

IntegerLattice evaluate(const LatticeExpression& expr) {
  switch (expr.kind) {
    case LatticeExpression::Kind::Named:
      return named_lattice(expr.name);
    case LatticeExpression::Kind::Scale:
      return rescale(evaluate(*expr.children.at(0)), expr.scale);
    case LatticeExpression::Kind::Repeat: {
      IntegerLattice part = evaluate(*expr.children.at(0));
      if (!expr.count.fits_slong_p() || expr.count.get_si() * part.rank() > 4096) {
        fail("BadParameter", "repeated sum is too large");
      }
      IntegerLattice acc;  // rank 0
      for (long i = 0; i < expr.count.get_si(); ++i) acc = direct_sum(acc, part);
      return acc;
    }
    case LatticeExpression::Kind::Sum: {
      IntegerLattice acc;  // rank 0
      for (const auto& child : expr.children) acc = direct_sum(acc, evaluate(*child));
      return acc;
    }
  }
  fail("SyntaxError", "malformed expression tree");
}

IntegerLattice lattice_from_expression(const std::string& text) {
  return evaluate(parse_expression(text));
}

}  // namespace lf
