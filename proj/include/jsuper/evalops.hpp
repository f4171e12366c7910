#pragma once

#include <stdexcept>

#include "jsuper/ck.hpp"
#include "jsuper/jadelta.hpp"
#include "jsuper/jvec.hpp"
#include "jsuper/textio.hpp"

namespace jsuper {

/*
 * Hooks that evaluate parsed expression trees into concrete constructions.
 * Slot atoms a construction does not have raise invalid_argument, as does a
 * jadelta part outside A + bar(M).
 */

struct JVecEvalOps {
  using Element = JVecEl;
  Element from_gamma(GammaEl g) const { return JVecEl::from_even(std::move(g)); }
  Element bar(GammaEl g) const { return JVecEl::from_odd(std::move(g)); }
  Element w(int, const GammaEl&) const {
    throw std::invalid_argument("w slots do not exist in this construction");
  }
  Element xi(int, const GammaEl&) const {
    throw std::invalid_argument("x slots do not exist in this construction");
  }
  Element add(const Element& a, const Element& b) const { return {a.even + b.even, a.odd + b.odd}; }
  Element neg(const Element& a) const { return {-a.even, -a.odd}; }
  Element mul(const Element& a, const Element& b) const { return jvec_mul(a, b); }
};

struct JADeltaEvalOps {
  using Element = JADeltaEl;
  Element from_gamma(GammaEl g) const { return JADeltaEl::checked(std::move(g), GammaEl()); }
  Element bar(GammaEl g) const { return JADeltaEl::checked(GammaEl(), std::move(g)); }
  Element w(int, const GammaEl&) const {
    throw std::invalid_argument("w slots do not exist in this construction");
  }
  Element xi(int, const GammaEl&) const {
    throw std::invalid_argument("x slots do not exist in this construction");
  }
  Element add(const Element& a, const Element& b) const { return {a.even + b.even, a.odd + b.odd}; }
  Element neg(const Element& a) const { return {-a.even, -a.odd}; }
  Element mul(const Element& a, const Element& b) const {
    return jadelta_mul(a, b, MulPath::Direct);
  }
};

struct CKEvalOps {
  using Element = CKEl;
  Element from_gamma(GammaEl g) const { return CKEl::from_gamma(std::move(g)); }
  Element bar(GammaEl g) const { return CKEl::bar(std::move(g)); }
  Element w(int i, const GammaEl& g) const { return CKEl::w_slot(i, g); }
  Element xi(int i, const GammaEl& g) const { return CKEl::x_slot(i, g); }
  Element add(const Element& a, const Element& b) const { return CKAlgebra().add(a, b); }
  Element neg(const Element& a) const { return CKAlgebra().scale(Rat(-1), a); }
  Element mul(const Element& a, const Element& b) const { return ck_mul(a, b); }
};

// GCK shares CK arithmetic but every slot argument must stay in A or M
struct GCKEvalOps : CKEvalOps {
  Element check(Element e) const {
    auto proj = gck_project(e);
    if (!proj.in_gck)
      throw std::invalid_argument("element leaves the constrained subalgebra: slot " +
                                  proj.violating_slot + " holds " + proj.witness.str());
    return e;
  }
  Element from_gamma(GammaEl g) const { return check(CKEvalOps::from_gamma(std::move(g))); }
  Element bar(GammaEl g) const { return check(CKEvalOps::bar(std::move(g))); }
  Element w(int i, const GammaEl& g) const { return check(CKEvalOps::w(i, g)); }
  Element xi(int i, const GammaEl& g) const { return check(CKEvalOps::xi(i, g)); }
};

inline JVecEl parse_jvec(const std::string& text) {
  return expr::eval_super(expr::parse(text), JVecEvalOps{});
}

inline JADeltaEl parse_jadelta(const std::string& text) {
  return expr::eval_super(expr::parse(text), JADeltaEvalOps{});
}

inline CKEl parse_ck_expr(const std::string& text) {
  return expr::eval_super(expr::parse(text), CKEvalOps{});
}

}  // namespace jsuper
