#include "jsuper/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jsuper {

namespace {
// lazy so that callers running during another unit's static initialization
// never observe a not-yet-constructed constant
const Rat& kZero() {
  static const Rat zero(0);
  return zero;
}
}  // namespace

Poly::Poly(const Rat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int deg, const Rat& coeff) {
  if (deg < 0) throw std::invalid_argument("monomial with negative degree");
  Poly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(deg) + 1, kZero());
  p.c_.back() = coeff;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return kZero();
  return c_[static_cast<size_t>(i)];
}

Rat Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, kZero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j].add_mul(a.c_[i], b.c_[j]);
    }
  }
  return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& a) {
  if (s.is_zero()) return Poly();
  Poly r(a);
  for (auto& v : r.c_) v *= s;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> out(c_.size() - 1, kZero());
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::parity_split() const {
  std::vector<Rat> ev(c_.size(), kZero()), od(c_.size(), kZero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 0)
      ev[i] = c_[i];
    else
      od[i] = c_[i];
  }
  return {Poly(std::move(ev)), Poly(std::move(od))};
}

bool Poly::even_support_only() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Poly::odd_support_only() const {
  for (size_t i = 0; i < c_.size(); i += 2)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rat& cv = c_[i];
    if (cv.is_zero()) continue;
    Rat mag = cv.sign() < 0 ? -cv : cv;
    if (first) {
      if (cv.sign() < 0) os << "-";
      first = false;
    } else {
      os << (cv.sign() < 0 ? " - " : " + ");
    }
    bool unit_coeff = mag.is_one();
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit_coeff) os << mag.str() << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly r(a), q;
  int db = *b.degree();
  Rat lb = b.leading();
  while (!r.is_zero() && *r.degree() >= db) {
    int shift = *r.degree() - db;
    Rat f = r.leading() / lb;
    Poly t = Poly::monomial(shift, f);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Poly u(a), v(b);
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = v;
    v = r;
  }
  return Rat(1) / u.leading() * u;
}

}  // namespace jsuper
