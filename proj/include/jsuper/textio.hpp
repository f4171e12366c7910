#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "jsuper/gamma.hpp"

namespace jsuper {

/*
 * Expression text for elements.  Grammar, loosest to tightest binding:
 *
 *   expr    :=  ['-'] term (('+' | '-') term)*
 *   term    :=  factor ('*' factor)*
 *   factor  :=  '-' factor  |  primary ['^' INT]*
 *   primary :=  NUMBER | 'x' | 'y' | slot '(' expr ')' | '(' expr ')'
 *   slot    :=  'bar' | 'w1' | 'w2' | 'w3' | 'x1' | 'x2' | 'x3'
 *   NUMBER  :=  INT ['/' INT]
 *
 * Whitespace is free, term order is free, any x^k reduces through the curve
 * relation when evaluated.  Slot atoms take a pure coordinate-algebra
 * argument; whether a slot is legal at all depends on the construction the
 * caller evaluates against.
 */
namespace expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, SymX, SymY, Add, Sub, Neg, Mul, Pow, Bar, WSlot, XSlot };
  Kind kind;
  Rat number;
  int slot = 0;      // 1..3 for WSlot/XSlot
  int exponent = 0;  // for Pow
  NodePtr lhs, rhs, arg;
};

NodePtr parse(const std::string& text);

// true when the tree never uses bar/w/x-slot atoms
bool pure_gamma(const NodePtr& n);

// evaluate a pure coordinate-algebra tree; throws on slot atoms
GammaEl eval_gamma(const NodePtr& n);

/*
 * Evaluate against any construction.  Ops supplies the element type and the
 * atom/arith hooks; slot arguments are evaluated as coordinate-algebra
 * subtrees first.  Powers apply left-associatively.
 */
template <typename Ops>
typename Ops::Element eval_super(const NodePtr& n, const Ops& ops) {
  using E = typename Ops::Element;
  // fold coordinate-only subtrees in the coordinate algebra, so membership
  // constraints apply to the subtree's value rather than its intermediates
  if (pure_gamma(n)) return ops.from_gamma(eval_gamma(n));
  switch (n->kind) {
    case Node::Kind::Number:
      return ops.from_gamma(n->number * GammaEl::one());
    case Node::Kind::SymX:
      return ops.from_gamma(GammaEl::x());
    case Node::Kind::SymY:
      return ops.from_gamma(GammaEl::y());
    case Node::Kind::Add:
      return ops.add(eval_super(n->lhs, ops), eval_super(n->rhs, ops));
    case Node::Kind::Sub:
      return ops.add(eval_super(n->lhs, ops), ops.neg(eval_super(n->rhs, ops)));
    case Node::Kind::Neg:
      return ops.neg(eval_super(n->arg, ops));
    case Node::Kind::Mul:
      return ops.mul(eval_super(n->lhs, ops), eval_super(n->rhs, ops));
    case Node::Kind::Pow: {
      if (n->exponent == 0) return ops.from_gamma(GammaEl::one());
      E acc = eval_super(n->arg, ops);
      E base = acc;
      for (int i = 1; i < n->exponent; ++i) acc = ops.mul(acc, base);
      return acc;
    }
    case Node::Kind::Bar:
      return ops.bar(eval_gamma(n->arg));
    case Node::Kind::WSlot:
      return ops.w(n->slot, eval_gamma(n->arg));
    case Node::Kind::XSlot:
      return ops.xi(n->slot, eval_gamma(n->arg));
  }
  throw std::logic_error("unreachable expression node");
}

}  // namespace expr

Poly parse_poly(const std::string& text);
GammaEl parse_gamma(const std::string& text);

}  // namespace jsuper
