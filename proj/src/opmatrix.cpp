#include "jsuper/opmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace jsuper {

OperatorExpr OperatorExpr::right_mul(GammaEl c) {
  OperatorExpr e;
  if (c.is_zero()) return e;
  e.terms_.push_back({Rat(1), {Sym{false, std::move(c)}}});
  return e;
}

OperatorExpr OperatorExpr::deriv() {
  OperatorExpr e;
  e.terms_.push_back({Rat(1), {Sym{true, GammaEl()}}});
  return e;
}

OperatorExpr OperatorExpr::identity() {
  OperatorExpr e;
  e.terms_.push_back({Rat(1), {}});
  return e;
}

GammaEl OperatorExpr::apply(const GammaEl& u) const {
  GammaEl acc;
  for (const Term& t : terms_) {
    GammaEl v = u;
    for (const Sym& s : t.word) v = s.is_deriv ? apply_D(v) : v * s.c;
    acc += t.coeff * v;
  }
  return acc;
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
  OperatorExpr e(*this);
  e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
  return e;
}

OperatorExpr OperatorExpr::scaled(const Rat& s) const {
  if (s.is_zero()) return OperatorExpr();
  OperatorExpr e(*this);
  for (Term& t : e.terms_) t.coeff *= s;
  return e;
}

OperatorExpr OperatorExpr::then(const OperatorExpr& next) const {
  OperatorExpr e;
  for (const Term& a : terms_)
    for (const Term& b : next.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      t.word = a.word;
      t.word.insert(t.word.end(), b.word.begin(), b.word.end());
      e.terms_.push_back(std::move(t));
    }
  return e;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.str() << "*[";
    if (t.word.empty()) os << "id";
    for (size_t i = 0; i < t.word.size(); ++i) {
      if (i) os << " ";
      if (t.word[i].is_deriv)
        os << "D";
      else
        os << "R{" << t.word[i].c.str() << "}";
    }
    os << "]";
  }
  return os.str();
}

std::pair<GammaEl, GammaEl> OpMatrix::apply(const GammaEl& u, const GammaEl& v) const {
  return {e[0][0].apply(u) + e[0][1].apply(v), e[1][0].apply(u) + e[1][1].apply(v)};
}

OpMatrix embed_special(const JVecEl& el) {
  if (!el.even.is_zero() && !el.odd.is_zero())
    throw std::invalid_argument("embedding needs a homogeneous element, got " + jvec_describe(el));
  OpMatrix m;
  if (el.odd.is_zero()) {
    m.parity = OpParity::Even;
    m.e[0][0] = OperatorExpr::right_mul(el.even);
    m.e[1][1] = OperatorExpr::right_mul(el.even);
  } else {
    const GammaEl& b = el.odd;
    m.parity = OpParity::Odd;
    // 4 R_b D + 2 R_{D(b)} read with D acting first
    m.e[0][1] = OperatorExpr::deriv().then(OperatorExpr::right_mul(b)).scaled(Rat(4)) +
                OperatorExpr::right_mul(apply_D(b)).scaled(Rat(2));
    m.e[1][0] = OperatorExpr::right_mul(b).scaled(Rat(-1));
  }
  return m;
}

namespace {

// (p*q)_ij = sum_k p_ik . q_kj, where q acts first
OpMatrix compose(const OpMatrix& p, const OpMatrix& q) {
  OpMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.e[i][j] = q.e[0][j].then(p.e[i][0]) + q.e[1][j].then(p.e[i][1]);
  return m;
}

OpMatrix scale_matrix(const OpMatrix& p, const Rat& s) {
  OpMatrix m = p;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.e[i][j] = p.e[i][j].scaled(s);
  return m;
}

OpMatrix add_matrix(const OpMatrix& p, const OpMatrix& q) {
  OpMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.e[i][j] = p.e[i][j] + q.e[i][j];
  return m;
}

}  // namespace

OpMatrix opmatrix_super_product(const OpMatrix& p, const OpMatrix& q) {
  int sign = (p.parity == OpParity::Odd && q.parity == OpParity::Odd) ? -1 : 1;
  OpMatrix m = add_matrix(compose(p, q), scale_matrix(compose(q, p), Rat(sign)));
  m = scale_matrix(m, Rat(1, 2));
  m.parity = (p.parity == q.parity) ? OpParity::Even : OpParity::Odd;
  return m;
}

}  // namespace jsuper
