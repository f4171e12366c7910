#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsuper/poly.hpp"
#include "jsuper/rng.hpp"

namespace jsuper {

/*
 * Element of the coordinate algebra of the affine curve x^2 + y^4 = 1,
 * stored in the canonical form p(y) + x*q(y).  Multiplication rewrites
 * every x^2 that appears as 1 - y^4, so representatives stay canonical.
 *
 * The derivation D = 2y^3 d/dx - x d/dy acts on canonical representatives as
 *   D(p + x q) = (2 y^3 q - (1 - y^4) q') - x p'.
 */
class GammaEl {
 public:
  GammaEl() = default;
  GammaEl(Poly p, Poly q);

  static GammaEl zero() { return GammaEl(); }
  static GammaEl one() { return GammaEl(Poly(Rat(1)), Poly()); }
  static GammaEl x() { return GammaEl(Poly(), Poly(Rat(1))); }
  static GammaEl y() { return GammaEl(Poly::y(), Poly()); }
  static GammaEl from_poly(Poly p) { return GammaEl(std::move(p), Poly()); }

  const Poly& p() const { return p_; }
  const Poly& q() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_one() const;

  // max(deg p, 1 + deg q); the weight of x is 1
  std::optional<int> total_degree() const;

  GammaEl operator-() const;
  GammaEl& operator+=(const GammaEl& o);
  GammaEl& operator-=(const GammaEl& o);
  friend GammaEl operator+(GammaEl a, const GammaEl& b) { return a += b; }
  friend GammaEl operator-(GammaEl a, const GammaEl& b) { return a -= b; }
  friend GammaEl operator*(const GammaEl& a, const GammaEl& b);
  friend GammaEl operator*(const Rat& s, const GammaEl& a);
  friend bool operator==(const GammaEl& a, const GammaEl& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const GammaEl& a, const GammaEl& b) { return !(a == b); }

  // evaluation at a rational point of the curve (x0^2 + y0^4 must equal 1)
  Rat eval(const Rat& x0, const Rat& y0) const;

  // canonical text "p + x*(q)"; bare "x" when p = 0, q = 1; "0" when zero
  std::string str() const;

 private:
  Poly p_, q_;
};

enum class Space { Gamma, A, M };

std::string space_name(Space s);

/*
 * The even/odd decomposition under the curve's parity grading:
 *   A = { p even support, q odd support },  M = { p odd support, q even support }.
 * Every element splits uniquely as a_part + m_part.
 */
struct Membership {
  bool in_a = false;
  bool in_m = false;
  GammaEl a_part, m_part;
};

Membership classify_membership(const GammaEl& u);
bool in_space(const GammaEl& u, Space s);

// A named coefficient multiple c*D of the curve derivation.
struct DerivationSpec {
  GammaEl coeff;
  std::string label;

  static const DerivationSpec& D();    // coefficient 1
  static const DerivationSpec& D11();  // (1 - y^4) D
  static const DerivationSpec& D12();  // x y D
  static const DerivationSpec& D22();  // y^2 D
};

// the plain curve derivation applied to a canonical representative
GammaEl apply_D(const GammaEl& u);
GammaEl apply_derivation(const DerivationSpec& d, const GammaEl& u);

/*
 * Deterministic monomial basis of the chosen space up to total degree
 * max_deg: the y-power block in ascending degree, then the x*y-power block
 * in ascending degree.
 */
std::vector<GammaEl> enumerate_basis(Space s, int max_deg);

// random element with integer coefficients in [-3, 3] over enumerate_basis
GammaEl sample_random(Space s, int max_deg, Rng& rng);
GammaEl sample_random_nonzero(Space s, int max_deg, Rng& rng);

/*
 * Coordinates of u over enumerate_basis(s, max_deg), or nullopt when u has
 * support outside that basis (degree above the bound, or the wrong parity
 * block for A / M).
 */
std::optional<std::vector<Rat>> coords_in_basis(const GammaEl& u, Space s, int max_deg);

}  // namespace jsuper
