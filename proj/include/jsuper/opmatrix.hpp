#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jsuper/gamma.hpp"
#include "jsuper/jvec.hpp"

namespace jsuper {

/*
 * Formal endomorphism of the curve algebra: a rational combination of words
 * in right multiplications R_c and the derivation D.  Words are stored in
 * application order (first symbol acts first); no symbolic simplification
 * is attempted, equality is always tested pointwise.
 */
class OperatorExpr {
 public:
  struct Sym {
    bool is_deriv = false;
    GammaEl c;  // the multiplier for R_c symbols
  };
  struct Term {
    Rat coeff;
    std::vector<Sym> word;  // empty word is the identity map
  };

  OperatorExpr() = default;  // the zero operator

  static OperatorExpr right_mul(GammaEl c);
  static OperatorExpr deriv();
  static OperatorExpr identity();

  bool formally_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  GammaEl apply(const GammaEl& u) const;

  OperatorExpr operator+(const OperatorExpr& o) const;
  OperatorExpr scaled(const Rat& s) const;
  // this followed by next:  (this.then(next))(u) = next(this(u))
  OperatorExpr then(const OperatorExpr& next) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

enum class OpParity { Even, Odd };

/*
 * 2x2 matrix over formal endomorphisms with a parity tag: even matrices are
 * diagonal, odd ones antidiagonal.  The carrier of the speciality embedding.
 */
struct OpMatrix {
  OperatorExpr e[2][2];
  OpParity parity = OpParity::Even;

  // action on a column (u, v)
  std::pair<GammaEl, GammaEl> apply(const GammaEl& u, const GammaEl& v) const;
};

/*
 * a + bar(b)  |->  [ R_a          4 R_b D + 2 R_{D(b)} ]
 *                  [ -R_b         R_a                  ]
 * restricted to homogeneous inputs; the even image is the diagonal part,
 * the odd image the antidiagonal part.  Inhomogeneous input is an error.
 */
OpMatrix embed_special(const JVecEl& e);

// (1/2) (P*Q + (-1)^{p(P)p(Q)} Q*P) with * the matrix product over composition
OpMatrix opmatrix_super_product(const OpMatrix& p, const OpMatrix& q);

}  // namespace jsuper
