#include "jsuper/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace jsuper {

namespace {

// the dominant case in practice is integer scalars; skipping the generic
// mpq canonicalization there removes its gcd work from the inner loops
bool is_integer(const mpq_class& v) { return mpz_cmp_ui(mpq_denref(v.get_mpq_t()), 1) == 0; }

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rat Rat::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return Rat(v);
}

std::string Rat::str() const { return v_.get_str(); }

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (is_integer(v_) && is_integer(o.v_)) {
    mpz_add(mpq_numref(v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
            mpq_numref(o.v_.get_mpq_t()));
    return *this;
  }
  v_ += o.v_;
  return *this;
}

Rat& Rat::add_mul(const Rat& a, const Rat& b) {
  if (is_integer(v_) && is_integer(a.v_) && is_integer(b.v_)) {
    static thread_local mpz_class zscratch;
    mpz_mul(zscratch.get_mpz_t(), mpq_numref(a.v_.get_mpq_t()), mpq_numref(b.v_.get_mpq_t()));
    mpz_add(mpq_numref(v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), zscratch.get_mpz_t());
    return *this;
  }
  static thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (is_integer(v_) && is_integer(o.v_)) {
    mpz_sub(mpq_numref(v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
            mpq_numref(o.v_.get_mpq_t()));
    return *this;
  }
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  if (is_integer(v_) && is_integer(o.v_)) {
    mpz_mul(mpq_numref(v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
            mpq_numref(o.v_.get_mpq_t()));
    return *this;
  }
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

}  // namespace jsuper
