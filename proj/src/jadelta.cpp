#include "jsuper/jadelta.hpp"

#include <stdexcept>

#include "jsuper/jvec.hpp"

namespace jsuper {

namespace {

void require_member(const GammaEl& u, Space s, const char* slot) {
  if (!in_space(u, s))
    throw std::invalid_argument(std::string("element leaves J(A, Delta): ") + slot + " part " +
                                u.str() + " is not in " + space_name(s));
}

}  // namespace

JADeltaEl JADeltaEl::checked(GammaEl a, GammaEl m) {
  require_member(a, Space::A, "even");
  require_member(m, Space::M, "odd");
  return {std::move(a), std::move(m)};
}

std::pair<GammaEl, GammaEl> split_xy(const GammaEl& m) {
  require_member(m, Space::M, "decomposed");
  // m = P(y) + x Q(y) with P odd-support and Q even-support; then
  // m = x * Q + y * (P/y), and both cofactors lie in A.
  const Poly& pp = m.p();
  std::vector<Rat> shifted;
  if (auto d = pp.degree()) {
    shifted.reserve(static_cast<size_t>(*d));
    for (int i = 1; i <= *d; ++i) shifted.push_back(pp.coeff(i));
  }
  GammaEl a = GammaEl::from_poly(m.q());
  GammaEl b = GammaEl::from_poly(Poly(std::move(shifted)));
  return {std::move(a), std::move(b)};
}

namespace {

// bar(xa) bar(yb) in the formula-(8) expansion, with configurable gamma12
GammaEl cross_term(const GammaEl& a, const GammaEl& b, const GammaEl& gamma12) {
  return gamma12 * (a * b) + apply_derivation(DerivationSpec::D12(), a) * b -
         a * apply_derivation(DerivationSpec::D12(), b);
}

GammaEl odd_mul_formula8(const GammaEl& m1, const GammaEl& m2, const GammaEl& gamma12) {
  auto [a1, b1] = split_xy(m1);
  auto [a2, b2] = split_xy(m2);
  GammaEl xx = apply_derivation(DerivationSpec::D11(), a1) * a2 -
               a1 * apply_derivation(DerivationSpec::D11(), a2);
  GammaEl yy = apply_derivation(DerivationSpec::D22(), b1) * b2 -
               b1 * apply_derivation(DerivationSpec::D22(), b2);
  // the (y, x) pattern follows from the (x, y) one by super-anticommutativity
  GammaEl xy = cross_term(a1, b2, gamma12);
  GammaEl yx = -cross_term(a2, b1, gamma12);
  return xx + xy + yx + yy;
}

}  // namespace

JADeltaEl jadelta_mul(const JADeltaEl& l, const JADeltaEl& r, MulPath path) {
  return JADeltaAlgebra::standard(path).mult(l, r);
}

JADeltaAlgebra JADeltaAlgebra::standard(MulPath path) {
  return JADeltaAlgebra(path, GammaEl::one() + GammaEl::from_poly(Poly::monomial(4)));
}

JADeltaAlgebra JADeltaAlgebra::with_gamma12(GammaEl g) {
  return JADeltaAlgebra(MulPath::Expanded, std::move(g));
}

JADeltaAlgebra::Element JADeltaAlgebra::mult(const Element& l, const Element& r) const {
  require_member(l.even, Space::A, "left even");
  require_member(l.odd, Space::M, "left odd");
  require_member(r.even, Space::A, "right even");
  require_member(r.odd, Space::M, "right odd");
  GammaEl odd = l.even * r.odd + l.odd * r.even;
  GammaEl even;
  if (path_ == MulPath::Direct) {
    JVecEl prod = jvec_mul({l.even, l.odd}, {r.even, r.odd});
    even = prod.even;
    odd = prod.odd;
  } else {
    even = l.even * r.even + odd_mul_formula8(l.odd, r.odd, gamma12_);
  }
  return {std::move(even), std::move(odd)};
}

std::string jadelta_describe(const JADeltaEl& e) {
  return jvec_describe({e.even, e.odd});
}

}  // namespace jsuper
