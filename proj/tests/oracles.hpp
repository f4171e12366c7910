#pragma once

#include <cstddef>
#include <vector>

#include "jsuper/gamma.hpp"
#include "jsuper/poly.hpp"
#include "jsuper/rational.hpp"

/*
 * Independent reference arithmetic for cross-checking the curve algebra.
 * Elements live as dense vectors of y-polynomials indexed by the x-power,
 * with no canonical form: products are plain bivariate products, and the
 * curve relation is applied afterwards by literal substitution x^2 = 1-y^4.
 * Nothing here shares code with the canonical-form implementation.
 */
namespace oracle {

struct XY {
  std::vector<jsuper::Poly> rows;  // rows[i] multiplies x^i

  static XY from_gamma(const jsuper::GammaEl& g) {
    XY r;
    r.rows = {g.p(), g.q()};
    r.trim();
    return r;
  }

  void trim() {
    while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
  }

  XY add(const XY& o) const {
    XY r = *this;
    if (o.rows.size() > r.rows.size()) r.rows.resize(o.rows.size());
    for (std::size_t i = 0; i < o.rows.size(); ++i) r.rows[i] += o.rows[i];
    r.trim();
    return r;
  }

  // plain bivariate product, no curve reduction
  XY mul(const XY& o) const {
    XY r;
    if (rows.empty() || o.rows.empty()) return r;
    r.rows.assign(rows.size() + o.rows.size() - 1, jsuper::Poly());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < o.rows.size(); ++j) r.rows[i + j] += rows[i] * o.rows[j];
    r.trim();
    return r;
  }

  // substitute x^2 = 1 - y^4 until the x-degree is at most 1
  XY reduce() const {
    using jsuper::Poly;
    using jsuper::Rat;
    const Poly relation({Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
    XY r = *this;
    while (r.rows.size() > 2) {
      Poly top = r.rows.back();
      r.rows.pop_back();
      r.rows[r.rows.size() - 2] += top * relation;
      r.trim();
    }
    return r;
  }

  // 2 y^3 d/dx - x d/dy on the dense representation
  XY deriv() const {
    using jsuper::Poly;
    using jsuper::Rat;
    XY r;
    r.rows.assign(rows.size() + 2, Poly());
    const Poly y3 = Poly::monomial(3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i >= 1) r.rows[i - 1] += Rat(2 * static_cast<long>(i)) * (y3 * rows[i]);
      r.rows[i + 1] -= rows[i].derivative();
    }
    r.trim();
    return r;
  }

  jsuper::Rat eval(const jsuper::Rat& x0, const jsuper::Rat& y0) const {
    jsuper::Rat acc, xp(1);
    for (const auto& row : rows) {
      acc += xp * row.eval(y0);
      xp *= x0;
    }
    return acc;
  }

  bool matches(const jsuper::GammaEl& g) const {
    XY r = reduce();
    jsuper::Poly p = r.rows.size() > 0 ? r.rows[0] : jsuper::Poly();
    jsuper::Poly q = r.rows.size() > 1 ? r.rows[1] : jsuper::Poly();
    return p == g.p() && q == g.q();
  }
};

}  // namespace oracle
