#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace jsuper {

using BigInt = mpz_class;

/*
 * Exact rational scalar over GMP.  Kept canonical at all times: reduced to
 * lowest terms, denominator positive, zero stored as 0/1.  mpq_class does
 * not canonicalize constructor arguments on its own, so every entry point
 * here does it explicitly.
 */
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d);
  Rat(const BigInt& n, const BigInt& d);
  explicit Rat(const mpq_class& v);

  // accepts "n" or "n/d" with optional sign
  static Rat from_string(const std::string& text);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_one() const { return v_ == 1; }

  std::string str() const;

  Rat operator-() const;
  // *this += a * b without materializing a fresh rational per call
  Rat& add_mul(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

}  // namespace jsuper
