#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsuper/rational.hpp"

namespace jsuper {

/*
 * Dense univariate polynomial in y over the rationals.  Canonical form: the
 * coefficient vector carries no trailing zeros, so the zero polynomial is
 * the empty vector and degree() reports "minus infinity" as std::nullopt,
 * never as a number.
 */
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(int deg, const Rat& coeff = Rat(1));
  static Poly y() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  // coefficient of y^i, zero past the degree
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;

  // (even-degree part, odd-degree part); the pair sums back to the input
  std::pair<Poly, Poly> parity_split() const;
  bool even_support_only() const;
  bool odd_support_only() const;

  Rat eval(const Rat& at) const;

  // ascending-degree canonical text, e.g. "1 - 2*y^4 + y^8"
  std::string str() const;

 private:
  std::vector<Rat> c_;
  void trim();
};

// monic gcd via the Euclidean algorithm; gcd(p, 0) = monic p; gcd(0, 0) is
// a domain error
Poly gcd(const Poly& a, const Poly& b);

// (quotient, remainder) with deg r < deg b; b must be nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

}  // namespace jsuper
