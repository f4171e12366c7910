#pragma once

#include <optional>
#include <string>

#include "jsuper/gamma.hpp"
#include "jsuper/super.hpp"

namespace jsuper {

/*
 * Element of the vector-type superalgebra on the curve algebra: the even
 * part is a plain coordinate-algebra element, the odd part is a second copy
 * written bar(b).
 */
struct JVecEl {
  GammaEl even, odd;

  static JVecEl from_even(GammaEl a) { return {std::move(a), GammaEl()}; }
  static JVecEl from_odd(GammaEl b) { return {GammaEl(), std::move(b)}; }

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  friend bool operator==(const JVecEl& a, const JVecEl& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

/*
 * (a1 + bar(b1))(a2 + bar(b2))
 *   = a1 a2 + D(b1) b2 - b1 D(b2)  +  bar(a1 b2 + b1 a2)
 */
JVecEl jvec_mul(const JVecEl& l, const JVecEl& r);

std::string jvec_describe(const JVecEl& e);

class JVecAlgebra {
 public:
  using Element = JVecEl;

  Element mult(const Element& l, const Element& r) const { return jvec_mul(l, r); }
  Element add(const Element& l, const Element& r) const {
    return {l.even + r.even, l.odd + r.odd};
  }
  Element sub(const Element& l, const Element& r) const {
    return {l.even - r.even, l.odd - r.odd};
  }
  Element scale(const Rat& s, const Element& e) const { return {s * e.even, s * e.odd}; }
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return Element::from_even(GammaEl::one()); }
  bool is_zero(const Element& e) const { return e.is_zero(); }

  ParityClass parity_of(const Element& e) const {
    bool ev = e.odd.is_zero(), od = e.even.is_zero();
    if (ev && od) return ParityClass::Zero;
    if (ev) return ParityClass::Even;
    if (od) return ParityClass::Odd;
    return ParityClass::Mixed;
  }

  Element sample(Parity par, int max_deg, Rng& rng) const {
    GammaEl g = sample_random(Space::Gamma, max_deg, rng);
    return par == Parity::Even ? Element::from_even(std::move(g)) : Element::from_odd(std::move(g));
  }

  std::string describe(const Element& e) const { return jvec_describe(e); }
  std::string name() const { return "jvec"; }
};

/*
 * The curve algebra viewed as a purely even supercommutative carrier, the
 * host for Jordan brackets and for the Kantor double.
 */
class GammaCarrier {
 public:
  using Element = GammaEl;

  Element mult(const Element& l, const Element& r) const { return l * r; }
  Element add(const Element& l, const Element& r) const { return l + r; }
  Element sub(const Element& l, const Element& r) const { return l - r; }
  Element scale(const Rat& s, const Element& e) const { return s * e; }
  Element zero() const { return GammaEl(); }
  std::optional<Element> unit() const { return GammaEl::one(); }
  bool is_zero(const Element& e) const { return e.is_zero(); }

  ParityClass parity_of(const Element& e) const {
    return e.is_zero() ? ParityClass::Zero : ParityClass::Even;
  }

  Element sample(Parity par, int max_deg, Rng& rng) const {
    if (par == Parity::Odd) return GammaEl();
    return sample_random(Space::Gamma, max_deg, rng);
  }

  Element even_part(const Element& e) const { return e; }
  Element odd_part(const Element&) const { return GammaEl(); }
  bool has_odd_part() const { return false; }

  std::string describe(const Element& e) const { return e.str(); }
  std::string name() const { return "Gamma"; }
};

// {a, b} = D(a) b - a D(b) on the curve algebra
BracketSpec<GammaCarrier> d_bracket_spec(const GammaCarrier& carrier);

using GammaDouble = KantorDouble<GammaCarrier>;

}  // namespace jsuper
