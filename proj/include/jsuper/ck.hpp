#pragma once

#include <array>
#include <optional>
#include <string>

#include "jsuper/gamma.hpp"
#include "jsuper/super.hpp"

namespace jsuper {

/*
 * Element of the eight-component Cheng-Kac carrier over the curve algebra:
 *   even part  a + w1 a1 + w2 a2 + w3 a3,
 *   odd part   bar(b) + x1 bar(b1) + x2 bar(b2) + x3 bar(b3).
 * Slots are indexed 0..2 for w1..w3 and x1..x3.
 */
struct CKEl {
  GammaEl a;
  std::array<GammaEl, 3> w;
  GammaEl b;
  std::array<GammaEl, 3> xb;

  static CKEl from_gamma(GammaEl g) {
    CKEl e;
    e.a = std::move(g);
    return e;
  }
  static CKEl bar(GammaEl g) {
    CKEl e;
    e.b = std::move(g);
    return e;
  }
  static CKEl w_slot(int i, GammaEl g);   // i in 1..3
  static CKEl x_slot(int i, GammaEl g);   // i in 1..3

  bool is_zero() const;
  bool even_only() const;
  bool odd_only() const;
  friend bool operator==(const CKEl& l, const CKEl& r) {
    return l.a == r.a && l.w == r.w && l.b == r.b && l.xb == r.xb;
  }
};

// "a | w1:a1 | w2:a2 | w3:a3 | bar:b | x1:b1 | x2:b2 | x3:b3", zero slots omitted
std::string ck_describe(const CKEl& e);
// inverse of ck_describe; omitted slots read as zero
CKEl parse_ck(const std::string& text);

/*
 * The cross table x_{i x j}: product slot and sign for w_i a . x_j bar(b).
 * sign == 0 encodes the zero product (the diagonal).  The opposite order
 * x_i bar(b) . w_j a evaluates through the transposed entry with the sign
 * flipped, which on the standard table is exactly the super-commutativity
 * completion.
 */
struct CrossTable {
  struct Entry {
    int sign = 0;
    int slot = 0;  // 1..3 when sign != 0
  };
  Entry e[3][3];

  const Entry& at(int i, int j) const { return e[i - 1][j - 1]; }

  static CrossTable standard();
  // copy with the (i, j) entry's sign negated; for mutation tests
  CrossTable flipped(int i, int j) const;
};

CKEl ck_mul(const CKEl& l, const CKEl& r, const CrossTable& cross = CrossTable::standard());

class CKAlgebra {
 public:
  using Element = CKEl;

  CKAlgebra() : cross_(CrossTable::standard()), mutated_(false) {}
  explicit CKAlgebra(CrossTable cross) : cross_(cross), mutated_(true) {}

  Element mult(const Element& l, const Element& r) const { return ck_mul(l, r, cross_); }
  Element add(const Element& l, const Element& r) const;
  Element sub(const Element& l, const Element& r) const;
  Element scale(const Rat& s, const Element& e) const;
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return Element::from_gamma(GammaEl::one()); }
  bool is_zero(const Element& e) const { return e.is_zero(); }
  ParityClass parity_of(const Element& e) const;
  Element sample(Parity par, int max_deg, Rng& rng) const;
  std::string describe(const Element& e) const { return ck_describe(e); }
  std::string name() const { return mutated_ ? "ck[mutated]" : "ck"; }

 private:
  CrossTable cross_;
  bool mutated_;
};

/*
 * Slot-constrained subalgebra: even slots over A, odd slots over M.
 * Products delegate to the full carrier; closure is part of what the test
 * suites verify.
 */
struct GCKProjection {
  bool in_gck = true;
  std::string violating_slot;
  GammaEl witness;
};

GCKProjection gck_project(const CKEl& e);

class GCKAlgebra {
 public:
  using Element = CKEl;

  Element mult(const Element& l, const Element& r) const { return ck_mul(l, r); }
  Element add(const Element& l, const Element& r) const { return full_.add(l, r); }
  Element sub(const Element& l, const Element& r) const { return full_.sub(l, r); }
  Element scale(const Rat& s, const Element& e) const { return full_.scale(s, e); }
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return Element::from_gamma(GammaEl::one()); }
  bool is_zero(const Element& e) const { return e.is_zero(); }
  ParityClass parity_of(const Element& e) const { return full_.parity_of(e); }
  Element sample(Parity par, int max_deg, Rng& rng) const;
  std::string describe(const Element& e) const { return ck_describe(e); }
  std::string name() const { return "gck"; }

 private:
  CKAlgebra full_;
};

}  // namespace jsuper
