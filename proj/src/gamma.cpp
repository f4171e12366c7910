#include "jsuper/gamma.hpp"

#include <sstream>
#include <stdexcept>

namespace jsuper {

namespace {

// 1 - y^4, the value of x^2 on the curve
const Poly& x_squared() {
  static const Poly v = Poly(Rat(1)) - Poly::monomial(4);
  return v;
}

// (1 - y^4) q as a shift-and-subtract pass instead of a convolution
Poly mul_x_squared(const Poly& q) {
  auto dq = q.degree();
  if (!dq) return Poly();
  std::vector<Rat> out(static_cast<size_t>(*dq) + 5);
  for (int k = 0; k <= *dq; ++k) out[static_cast<size_t>(k)] = q.coeff(k);
  for (int k = 0; k <= *dq; ++k) out[static_cast<size_t>(k) + 4] -= q.coeff(k);
  return Poly(std::move(out));
}

}  // namespace

GammaEl::GammaEl(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {}

bool GammaEl::is_one() const { return q_.is_zero() && p_ == Poly(Rat(1)); }

std::optional<int> GammaEl::total_degree() const {
  std::optional<int> d;
  if (auto dp = p_.degree()) d = *dp;
  if (auto dq = q_.degree()) {
    int v = *dq + 1;
    if (!d || v > *d) d = v;
  }
  return d;
}

GammaEl GammaEl::operator-() const { return GammaEl(-p_, -q_); }

GammaEl& GammaEl::operator+=(const GammaEl& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

GammaEl& GammaEl::operator-=(const GammaEl& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

GammaEl operator*(const GammaEl& a, const GammaEl& b) {
  // (p1 + x q1)(p2 + x q2) = p1 p2 + (1 - y^4) q1 q2 + x (p1 q2 + q1 p2)
  Poly p = a.p_ * b.p_;
  p += mul_x_squared(a.q_ * b.q_);
  Poly q = a.p_ * b.q_;
  q += a.q_ * b.p_;
  return GammaEl(std::move(p), std::move(q));
}

GammaEl operator*(const Rat& s, const GammaEl& a) {
  return GammaEl(s * a.p_, s * a.q_);
}

Rat GammaEl::eval(const Rat& x0, const Rat& y0) const {
  Rat rel = x0 * x0 + y0 * y0 * y0 * y0;
  if (!(rel == Rat(1)))
    throw std::invalid_argument("evaluation point is not on the curve");
  return p_.eval(y0) + x0 * q_.eval(y0);
}

std::string GammaEl::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (!p_.is_zero()) os << p_.str();
  if (!q_.is_zero()) {
    if (!p_.is_zero()) os << " + ";
    if (q_ == Poly(Rat(1)))
      os << "x";
    else
      os << "x*(" << q_.str() << ")";
  }
  return os.str();
}

std::string space_name(Space s) {
  switch (s) {
    case Space::Gamma: return "Gamma";
    case Space::A: return "A";
    case Space::M: return "M";
  }
  return "?";
}

Membership classify_membership(const GammaEl& u) {
  auto [pe, po] = u.p().parity_split();
  auto [qe, qo] = u.q().parity_split();
  Membership m;
  m.a_part = GammaEl(pe, qo);
  m.m_part = GammaEl(po, qe);
  m.in_a = m.m_part.is_zero();
  m.in_m = m.a_part.is_zero();
  return m;
}

bool in_space(const GammaEl& u, Space s) {
  switch (s) {
    case Space::Gamma: return true;
    case Space::A: return classify_membership(u).in_a;
    case Space::M: return classify_membership(u).in_m;
  }
  return false;
}

GammaEl apply_D(const GammaEl& u) {
  // D(p + x q) = (2 y^3 q - (1 - y^4) q') - x p'
  Poly p = Poly::monomial(3, Rat(2)) * u.q() - x_squared() * u.q().derivative();
  Poly q = -u.p().derivative();
  return GammaEl(std::move(p), std::move(q));
}

GammaEl apply_derivation(const DerivationSpec& d, const GammaEl& u) {
  return d.coeff * apply_D(u);
}

const DerivationSpec& DerivationSpec::D() {
  static const DerivationSpec v{GammaEl::one(), "D"};
  return v;
}

const DerivationSpec& DerivationSpec::D11() {
  static const DerivationSpec v{GammaEl::from_poly(Poly(Rat(1)) - Poly::monomial(4)), "D11"};
  return v;
}

const DerivationSpec& DerivationSpec::D12() {
  static const DerivationSpec v{GammaEl(Poly(), Poly::y()), "D12"};
  return v;
}

const DerivationSpec& DerivationSpec::D22() {
  static const DerivationSpec v{GammaEl::from_poly(Poly::monomial(2)), "D22"};
  return v;
}

std::vector<GammaEl> enumerate_basis(Space s, int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("negative degree bound");
  std::vector<GammaEl> out;
  auto push_y = [&](int k) { out.push_back(GammaEl(Poly::monomial(k), Poly())); };
  auto push_xy = [&](int k) { out.push_back(GammaEl(Poly(), Poly::monomial(k))); };
  switch (s) {
    case Space::Gamma:
      for (int k = 0; k <= max_deg; ++k) push_y(k);
      for (int k = 0; k + 1 <= max_deg; ++k) push_xy(k);
      break;
    case Space::A:
      for (int k = 0; k <= max_deg; k += 2) push_y(k);
      for (int k = 1; k + 1 <= max_deg; k += 2) push_xy(k);
      break;
    case Space::M:
      for (int k = 1; k <= max_deg; k += 2) push_y(k);
      for (int k = 0; k + 1 <= max_deg; k += 2) push_xy(k);
      break;
  }
  return out;
}

GammaEl sample_random(Space s, int max_deg, Rng& rng) {
  GammaEl acc;
  for (const GammaEl& b : enumerate_basis(s, max_deg)) {
    long c = rng.uniform_int(-3, 3);
    if (c != 0) acc += Rat(c) * b;
  }
  return acc;
}

GammaEl sample_random_nonzero(Space s, int max_deg, Rng& rng) {
  if (enumerate_basis(s, max_deg).empty())
    throw std::invalid_argument("empty basis: no nonzero sample in " + space_name(s) +
                                " at degree " + std::to_string(max_deg));
  for (;;) {
    GammaEl u = sample_random(s, max_deg, rng);
    if (!u.is_zero()) return u;
  }
}

std::optional<std::vector<Rat>> coords_in_basis(const GammaEl& u, Space s, int max_deg) {
  // supported y-exponents for (p, q) per space; anything else must be zero
  auto p_ok = [&](int k) {
    switch (s) {
      case Space::Gamma: return k <= max_deg;
      case Space::A: return k <= max_deg && k % 2 == 0;
      case Space::M: return k <= max_deg && k % 2 == 1;
    }
    return false;
  };
  auto q_ok = [&](int k) {
    switch (s) {
      case Space::Gamma: return k + 1 <= max_deg;
      case Space::A: return k + 1 <= max_deg && k % 2 == 1;
      case Space::M: return k + 1 <= max_deg && k % 2 == 0;
    }
    return false;
  };
  if (auto d = u.p().degree())
    for (int k = 0; k <= *d; ++k)
      if (!u.p().coeff(k).is_zero() && !p_ok(k)) return std::nullopt;
  if (auto d = u.q().degree())
    for (int k = 0; k <= *d; ++k)
      if (!u.q().coeff(k).is_zero() && !q_ok(k)) return std::nullopt;

  std::vector<Rat> out;
  switch (s) {
    case Space::Gamma:
      for (int k = 0; k <= max_deg; ++k) out.push_back(u.p().coeff(k));
      for (int k = 0; k + 1 <= max_deg; ++k) out.push_back(u.q().coeff(k));
      break;
    case Space::A:
      for (int k = 0; k <= max_deg; k += 2) out.push_back(u.p().coeff(k));
      for (int k = 1; k + 1 <= max_deg; k += 2) out.push_back(u.q().coeff(k));
      break;
    case Space::M:
      for (int k = 1; k <= max_deg; k += 2) out.push_back(u.p().coeff(k));
      for (int k = 0; k + 1 <= max_deg; k += 2) out.push_back(u.q().coeff(k));
      break;
  }
  return out;
}

}  // namespace jsuper
