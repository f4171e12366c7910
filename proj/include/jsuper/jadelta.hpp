#pragma once

#include <optional>
#include <string>
#include <utility>

#include "jsuper/gamma.hpp"
#include "jsuper/super.hpp"

namespace jsuper {

/*
 * Element of the subalgebra J(A, Delta): even part in A, odd part bar(m)
 * with m in M.  checked() rejects slot values outside those spaces.
 */
struct JADeltaEl {
  GammaEl even;  // in A
  GammaEl odd;   // in M, stored under the bar

  static JADeltaEl checked(GammaEl a, GammaEl m);

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  friend bool operator==(const JADeltaEl& a, const JADeltaEl& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

enum class MulPath { Direct, Expanded };

// decompose m in M as x*a + y*b with a, b in A; returns (a, b)
std::pair<GammaEl, GammaEl> split_xy(const GammaEl& m);

/*
 * Product in J(A, Delta).  Direct evaluates inside the ambient vector-type
 * algebra; Expanded writes bar(m1) bar(m2) through the three closed-form
 * products of the x/y decomposition,
 *   bar(xa) bar(xb) = D11(a) b - a D11(b)
 *   bar(ya) bar(yb) = D22(a) b - a D22(b)
 *   bar(xa) bar(yb) = g ab + D12(a) b - a D12(b),   g = gamma12,
 * with the (y, x) order completed by super-anticommutativity.  Both paths
 * must agree; keeping them separate is the point of the dual check.
 * Operands outside A + bar(M) raise an error naming the offending part.
 */
JADeltaEl jadelta_mul(const JADeltaEl& l, const JADeltaEl& r, MulPath path);

std::string jadelta_describe(const JADeltaEl& e);

class JADeltaAlgebra {
 public:
  using Element = JADeltaEl;

  static JADeltaAlgebra standard(MulPath path = MulPath::Direct);
  // Expanded-path algebra with gamma12 replaced; for mutation tests.
  static JADeltaAlgebra with_gamma12(GammaEl g);

  MulPath path() const { return path_; }
  const GammaEl& gamma12() const { return gamma12_; }

  Element mult(const Element& l, const Element& r) const;
  Element add(const Element& l, const Element& r) const {
    return {l.even + r.even, l.odd + r.odd};
  }
  Element sub(const Element& l, const Element& r) const {
    return {l.even - r.even, l.odd - r.odd};
  }
  Element scale(const Rat& s, const Element& e) const { return {s * e.even, s * e.odd}; }
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return Element{GammaEl::one(), GammaEl()}; }
  bool is_zero(const Element& e) const { return e.is_zero(); }

  ParityClass parity_of(const Element& e) const {
    bool ev = e.odd.is_zero(), od = e.even.is_zero();
    if (ev && od) return ParityClass::Zero;
    if (ev) return ParityClass::Even;
    if (od) return ParityClass::Odd;
    return ParityClass::Mixed;
  }

  Element sample(Parity par, int max_deg, Rng& rng) const {
    if (par == Parity::Even) return {sample_random(Space::A, max_deg, rng), GammaEl()};
    return {GammaEl(), sample_random(Space::M, max_deg, rng)};
  }

  std::string describe(const Element& e) const { return jadelta_describe(e); }
  std::string name() const { return path_ == MulPath::Direct ? "jadelta" : "jadelta[formula8]"; }

 private:
  JADeltaAlgebra(MulPath path, GammaEl g) : path_(path), gamma12_(std::move(g)) {}
  MulPath path_;
  GammaEl gamma12_;
};

}  // namespace jsuper
