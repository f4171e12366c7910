#include "jsuper/textio.hpp"

#include <cctype>
#include <vector>

namespace jsuper {
namespace expr {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };
  Kind kind;
  std::string text;
  size_t pos;
};

[[noreturn]] void fail(size_t pos, const std::string& what) {
  throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
}

std::vector<Token> lex(const std::string& in) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < in.size()) {
    unsigned char c = static_cast<unsigned char>(in[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    // tolerate the typographic minus sign U+2212
    if (c == 0xe2 && i + 2 < in.size() && static_cast<unsigned char>(in[i + 1]) == 0x88 &&
        static_cast<unsigned char>(in[i + 2]) == 0x92) {
      out.push_back({Token::Kind::Minus, "-", i});
      i += 3;
      continue;
    }
    size_t start = i;
    if (std::isdigit(c)) {
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Token::Kind::Number, in.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < in.size() && std::isalnum(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Token::Kind::Ident, in.substr(start, i - start), start});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case '/': k = Token::Kind::Slash; break;
      default: fail(i, std::string("unexpected character '") + in[i] + "'");
    }
    out.push_back({k, in.substr(i, 1), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", in.size()});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  bool eat(Token::Kind k) {
    if (peek().kind != k) return false;
    ++at;
    return true;
  }

  NodePtr make(Node n) { return std::make_shared<Node>(std::move(n)); }

  NodePtr number() {
    Token t = take();
    BigInt num(t.text);
    if (eat(Token::Kind::Slash)) {
      if (peek().kind != Token::Kind::Number) fail(peek().pos, "expected denominator");
      Token d = take();
      BigInt den(d.text);
      if (sgn(den) == 0) fail(d.pos, "zero denominator");
      Node n{Node::Kind::Number, Rat(num, den), 0, 0, nullptr, nullptr, nullptr};
      return make(std::move(n));
    }
    Node n{Node::Kind::Number, Rat(num, BigInt(1)), 0, 0, nullptr, nullptr, nullptr};
    return make(std::move(n));
  }

  NodePtr slot_atom(Node::Kind kind, int slot, size_t pos) {
    if (!eat(Token::Kind::LParen)) fail(pos, "slot atom needs a parenthesized argument");
    NodePtr inner = expr();
    if (!eat(Token::Kind::RParen)) fail(peek().pos, "expected ')'");
    Node n{kind, Rat(0), slot, 0, nullptr, nullptr, inner};
    return make(std::move(n));
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Number:
        return number();
      case Token::Kind::LParen: {
        take();
        NodePtr inner = expr();
        if (!eat(Token::Kind::RParen)) fail(peek().pos, "expected ')'");
        return inner;
      }
      case Token::Kind::Ident: {
        Token id = take();
        if (id.text == "x") return make(Node{Node::Kind::SymX, Rat(0), 0, 0, nullptr, nullptr, nullptr});
        if (id.text == "y") return make(Node{Node::Kind::SymY, Rat(0), 0, 0, nullptr, nullptr, nullptr});
        if (id.text == "bar") return slot_atom(Node::Kind::Bar, 0, id.pos);
        if (id.text.size() == 2 && (id.text[0] == 'w' || id.text[0] == 'x') &&
            id.text[1] >= '1' && id.text[1] <= '3') {
          Node::Kind k = id.text[0] == 'w' ? Node::Kind::WSlot : Node::Kind::XSlot;
          return slot_atom(k, id.text[1] - '0', id.pos);
        }
        fail(id.pos, "unknown symbol '" + id.text + "'");
      }
      default:
        fail(t.pos, "expected a value");
    }
  }

  NodePtr factor() {
    if (eat(Token::Kind::Minus)) {
      NodePtr inner = factor();
      return make(Node{Node::Kind::Neg, Rat(0), 0, 0, nullptr, nullptr, inner});
    }
    NodePtr base = primary();
    while (eat(Token::Kind::Caret)) {
      if (peek().kind != Token::Kind::Number) fail(peek().pos, "exponent must be an integer");
      Token e = take();
      int v;
      try {
        v = std::stoi(e.text);
      } catch (...) {
        fail(e.pos, "exponent out of range");
      }
      base = make(Node{Node::Kind::Pow, Rat(0), 0, v, nullptr, nullptr, base});
    }
    return base;
  }

  NodePtr term() {
    NodePtr l = factor();
    while (eat(Token::Kind::Star)) {
      NodePtr r = factor();
      l = make(Node{Node::Kind::Mul, Rat(0), 0, 0, l, r, nullptr});
    }
    return l;
  }

  NodePtr expr() {
    bool neg = false;
    if (peek().kind == Token::Kind::Minus) {
      take();
      neg = true;
    } else {
      eat(Token::Kind::Plus);
    }
    NodePtr l = term();
    if (neg) l = make(Node{Node::Kind::Neg, Rat(0), 0, 0, nullptr, nullptr, l});
    for (;;) {
      if (eat(Token::Kind::Plus)) {
        NodePtr r = term();
        l = make(Node{Node::Kind::Add, Rat(0), 0, 0, l, r, nullptr});
      } else if (eat(Token::Kind::Minus)) {
        NodePtr r = term();
        l = make(Node{Node::Kind::Sub, Rat(0), 0, 0, l, r, nullptr});
      } else {
        return l;
      }
    }
  }
};

}  // namespace

NodePtr parse(const std::string& text) {
  Parser p{lex(text)};
  NodePtr n = p.expr();
  if (p.peek().kind != Token::Kind::End) fail(p.peek().pos, "trailing input");
  return n;
}

bool pure_gamma(const NodePtr& n) {
  switch (n->kind) {
    case Node::Kind::Bar:
    case Node::Kind::WSlot:
    case Node::Kind::XSlot:
      return false;
    default:
      break;
  }
  if (n->lhs && !pure_gamma(n->lhs)) return false;
  if (n->rhs && !pure_gamma(n->rhs)) return false;
  if (n->arg && !pure_gamma(n->arg)) return false;
  return true;
}

GammaEl eval_gamma(const NodePtr& n) {
  switch (n->kind) {
    case Node::Kind::Number: return n->number * GammaEl::one();
    case Node::Kind::SymX: return GammaEl::x();
    case Node::Kind::SymY: return GammaEl::y();
    case Node::Kind::Add: return eval_gamma(n->lhs) + eval_gamma(n->rhs);
    case Node::Kind::Sub: return eval_gamma(n->lhs) - eval_gamma(n->rhs);
    case Node::Kind::Neg: return -eval_gamma(n->arg);
    case Node::Kind::Mul: return eval_gamma(n->lhs) * eval_gamma(n->rhs);
    case Node::Kind::Pow: {
      GammaEl acc = GammaEl::one();
      GammaEl base = eval_gamma(n->arg);
      for (int i = 0; i < n->exponent; ++i) acc = acc * base;
      return acc;
    }
    default:
      throw std::invalid_argument("slot atom in a coordinate-algebra expression");
  }
}

}  // namespace expr

GammaEl parse_gamma(const std::string& text) { return expr::eval_gamma(expr::parse(text)); }

Poly parse_poly(const std::string& text) {
  GammaEl g = parse_gamma(text);
  if (!g.q().is_zero())
    throw std::invalid_argument("expected a polynomial in y, got an x term: " + text);
  return g.p();
}

}  // namespace jsuper
