#include "gwo/term.hpp"

#include <cctype>
#include <cstring>

#include "gwo/error.hpp"

namespace gwo {

namespace {

constexpr const char* kSymbolChars = "*~^@#&!?%:.|<>";

struct Token {
  enum class Kind { End, Zero, Ident, Symbol, Plus, Minus, LParen, RParen,
                    Comma, Equals };
  Kind kind;
  std::string text;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
    int col = (int)pos_ + 1;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", col};
    char c = text_[pos_];
    if (c == '0') { ++pos_; return {Token::Kind::Zero, "0", col}; }
    if (std::isdigit((unsigned char)c))
      throw Error(ErrorCode::ParseError,
                  "unexpected digit at column " + std::to_string(col) +
                      " (only the constant 0 is allowed)");
    if (c == '+') { ++pos_; return {Token::Kind::Plus, "+", col}; }
    if (c == '-') { ++pos_; return {Token::Kind::Minus, "-", col}; }
    if (c == '(') { ++pos_; return {Token::Kind::LParen, "(", col}; }
    if (c == ')') { ++pos_; return {Token::Kind::RParen, ")", col}; }
    if (c == ',') { ++pos_; return {Token::Kind::Comma, ",", col}; }
    if (c == '=') { ++pos_; return {Token::Kind::Equals, "=", col}; }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
        ++pos_;
      return {Token::Kind::Ident, text_.substr(start, pos_ - start), col};
    }
    if (std::strchr(kSymbolChars, c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::strchr(kSymbolChars, text_[pos_]))
        ++pos_;
      return {Token::Kind::Symbol, text_.substr(start, pos_ - start), col};
    }
    throw Error(ErrorCode::ParseError, "unexpected character '" +
                                           std::string(1, c) + "' at column " +
                                           std::to_string(col));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { advance(); }

  IdentityTerm parse() {
    IdentityTerm id;
    id.lhs = parse_sum(id);
    expect(Token::Kind::Equals, "'='");
    id.rhs = parse_sum(id);
    if (cur_.kind != Token::Kind::End)
      throw Error(ErrorCode::ParseError, "trailing input at column " +
                                             std::to_string(cur_.col));
    if (id.vars.size() > 4)
      throw Error(ErrorCode::ParseError,
                  "identity uses " + std::to_string(id.vars.size()) +
                      " variables; at most 4 are allowed");
    return id;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind)
      throw Error(ErrorCode::ParseError, std::string("expected ") + what +
                                             " at column " +
                                             std::to_string(cur_.col));
    advance();
  }

  int add_node(IdentityTerm& id, TermNode node) {
    id.nodes.push_back(std::move(node));
    return (int)id.nodes.size() - 1;
  }

  int parse_sum(IdentityTerm& id) {
    int left = parse_product(id);
    while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
      bool minus = cur_.kind == Token::Kind::Minus;
      advance();
      int right = parse_product(id);
      if (minus)
        right = add_node(id, {TermNode::Kind::Neg, right, -1, -1, ""});
      left = add_node(id, {TermNode::Kind::Add, left, right, -1, ""});
    }
    return left;
  }

  int parse_product(IdentityTerm& id) {
    int left = parse_unary(id);
    while (cur_.kind == Token::Kind::Symbol) {
      std::string op = cur_.text;
      advance();
      int right = parse_unary(id);
      left = add_node(id, {TermNode::Kind::Bin, left, right, -1, op});
    }
    return left;
  }

  int parse_unary(IdentityTerm& id) {
    if (cur_.kind == Token::Kind::Minus) {
      advance();
      int child = parse_unary(id);
      return add_node(id, {TermNode::Kind::Neg, child, -1, -1, ""});
    }
    return parse_atom(id);
  }

  int parse_atom(IdentityTerm& id) {
    if (cur_.kind == Token::Kind::Zero) {
      advance();
      return add_node(id, {TermNode::Kind::Zero, -1, -1, -1, ""});
    }
    if (cur_.kind == Token::Kind::LParen) {
      advance();
      int inner = parse_sum(id);
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (cur_.kind == Token::Kind::Ident || cur_.kind == Token::Kind::Symbol) {
      std::string name = cur_.text;
      bool symbolic = cur_.kind == Token::Kind::Symbol;
      advance();
      if (cur_.kind == Token::Kind::LParen) {
        advance();
        int first = parse_sum(id);
        if (cur_.kind == Token::Kind::Comma) {
          advance();
          int second = parse_sum(id);
          expect(Token::Kind::RParen, "')'");
          return add_node(id, {TermNode::Kind::Bin, first, second, -1, name});
        }
        expect(Token::Kind::RParen, "')'");
        return add_node(id, {TermNode::Kind::Un, first, -1, -1, name});
      }
      if (symbolic)
        throw Error(ErrorCode::ParseError,
                    "operation '" + name + "' needs arguments");
      int slot = -1;
      for (size_t i = 0; i < id.vars.size(); ++i)
        if (id.vars[i] == name) slot = (int)i;
      if (slot < 0) {
        id.vars.push_back(name);
        slot = (int)id.vars.size() - 1;
      }
      return add_node(id, {TermNode::Kind::Var, -1, -1, slot, ""});
    }
    throw Error(ErrorCode::ParseError,
                "expected a term at column " + std::to_string(cur_.col));
  }

  Lexer lex_;
  Token cur_{Token::Kind::End, "", 0};
};

}  // namespace

IdentityTerm parse_identity(const std::string& text) {
  Parser parser(text);
  IdentityTerm id = parser.parse();
  id.text = text;
  return id;
}

}  // namespace gwo
