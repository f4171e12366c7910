#include "jsuper/jvec.hpp"

namespace jsuper {

JVecEl jvec_mul(const JVecEl& l, const JVecEl& r) {
  GammaEl even = l.even * r.even + apply_D(l.odd) * r.odd - l.odd * apply_D(r.odd);
  GammaEl odd = l.even * r.odd + l.odd * r.even;
  return {std::move(even), std::move(odd)};
}

std::string jvec_describe(const JVecEl& e) {
  if (e.is_zero()) return "0";
  std::string s;
  if (!e.even.is_zero()) s += e.even.str();
  if (!e.odd.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "bar(" + e.odd.str() + ")";
  }
  return s;
}

BracketSpec<GammaCarrier> d_bracket_spec(const GammaCarrier& carrier) {
  return BracketSpec<GammaCarrier>{
      &carrier,
      [](const GammaEl& a, const GammaEl& b) { return apply_D(a) * b - a * apply_D(b); },
      "D-bracket"};
}

}  // namespace jsuper
