#include "jsuper/ck.hpp"

#include <sstream>
#include <stdexcept>

#include "jsuper/textio.hpp"

namespace jsuper {

CKEl CKEl::w_slot(int i, GammaEl g) {
  if (i < 1 || i > 3) throw std::invalid_argument("w slot index out of range");
  CKEl e;
  e.w[static_cast<size_t>(i - 1)] = std::move(g);
  return e;
}

CKEl CKEl::x_slot(int i, GammaEl g) {
  if (i < 1 || i > 3) throw std::invalid_argument("x slot index out of range");
  CKEl e;
  e.xb[static_cast<size_t>(i - 1)] = std::move(g);
  return e;
}

bool CKEl::is_zero() const { return even_only() && odd_only(); }

bool CKEl::even_only() const {
  return b.is_zero() && xb[0].is_zero() && xb[1].is_zero() && xb[2].is_zero();
}

bool CKEl::odd_only() const {
  return a.is_zero() && w[0].is_zero() && w[1].is_zero() && w[2].is_zero();
}

std::string ck_describe(const CKEl& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& tag, const GammaEl& g) {
    if (g.is_zero()) return;
    if (!first) os << " | ";
    first = false;
    if (!tag.empty()) os << tag << ":";
    os << g.str();
  };
  emit("", e.a);
  emit("w1", e.w[0]);
  emit("w2", e.w[1]);
  emit("w3", e.w[2]);
  emit("bar", e.b);
  emit("x1", e.xb[0]);
  emit("x2", e.xb[1]);
  emit("x3", e.xb[2]);
  return os.str();
}

CKEl parse_ck(const std::string& text) {
  CKEl out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t bar = text.find('|', start);
    std::string seg = text.substr(start, bar == std::string::npos ? bar : bar - start);
    start = bar == std::string::npos ? text.size() + 1 : bar + 1;

    size_t b = seg.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    size_t e = seg.find_last_not_of(" \t");
    seg = seg.substr(b, e - b + 1);
    if (seg == "0") continue;

    size_t colon = seg.find(':');
    std::string tag = colon == std::string::npos ? "" : seg.substr(0, colon);
    // a colon inside an expression is impossible, so a missing tag means the plain slot
    std::string body = colon == std::string::npos ? seg : seg.substr(colon + 1);
    GammaEl g = parse_gamma(body);
    if (tag.empty())
      out.a += g;
    else if (tag == "bar")
      out.b += g;
    else if (tag.size() == 2 && (tag[0] == 'w' || tag[0] == 'x') && tag[1] >= '1' && tag[1] <= '3') {
      auto& slots = tag[0] == 'w' ? out.w : out.xb;
      slots[static_cast<size_t>(tag[1] - '1')] += g;
    } else {
      throw std::invalid_argument("unknown slot tag '" + tag + "'");
    }
  }
  return out;
}

CrossTable CrossTable::standard() {
  CrossTable t;
  auto set = [&](int i, int j, int sign, int slot) { t.e[i - 1][j - 1] = {sign, slot}; };
  set(1, 2, 1, 3);
  set(2, 1, -1, 3);
  set(1, 3, 1, 2);
  set(3, 1, -1, 2);
  set(2, 3, -1, 1);
  set(3, 2, 1, 1);
  return t;
}

CrossTable CrossTable::flipped(int i, int j) const {
  CrossTable t = *this;
  t.e[i - 1][j - 1].sign = -t.e[i - 1][j - 1].sign;
  return t;
}

CKEl ck_mul(const CKEl& l, const CKEl& r, const CrossTable& cross) {
  CKEl out;

  // even . even
  out.a = l.a * r.a;
  out.a += l.w[0] * r.w[0] + l.w[1] * r.w[1] - l.w[2] * r.w[2];
  for (int i = 0; i < 3; ++i) out.w[i] = l.a * r.w[i] + l.w[i] * r.a;

  // odd . odd
  out.a += apply_D(l.b) * r.b - l.b * apply_D(r.b);
  for (int i = 0; i < 3; ++i) out.w[i] += l.xb[i] * r.b - l.b * r.xb[i];

  // even . odd
  out.b += l.a * r.b;
  for (int j = 0; j < 3; ++j) out.xb[j] += l.a * r.xb[j];
  for (int i = 0; i < 3; ++i) out.xb[i] += apply_D(l.w[i]) * r.b;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const auto& e = cross.at(i, j);
      if (e.sign == 0) continue;
      out.xb[e.slot - 1] += Rat(e.sign) * (l.w[i - 1] * r.xb[j - 1]);
    }

  // odd . even
  out.b += l.b * r.a;
  for (int j = 0; j < 3; ++j) out.xb[j] += l.xb[j] * r.a;
  for (int j = 0; j < 3; ++j) out.xb[j] += apply_D(r.w[j]) * l.b;
  // x_i bar(b) . w_j a goes through the transposed table entry, negated
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const auto& e = cross.at(i, j);
      if (e.sign == 0) continue;
      out.xb[e.slot - 1] += Rat(-e.sign) * (l.xb[i - 1] * r.w[j - 1]);
    }

  return out;
}

CKAlgebra::Element CKAlgebra::add(const Element& l, const Element& r) const {
  CKEl out;
  out.a = l.a + r.a;
  out.b = l.b + r.b;
  for (int i = 0; i < 3; ++i) {
    out.w[i] = l.w[i] + r.w[i];
    out.xb[i] = l.xb[i] + r.xb[i];
  }
  return out;
}

CKAlgebra::Element CKAlgebra::sub(const Element& l, const Element& r) const {
  CKEl out;
  out.a = l.a - r.a;
  out.b = l.b - r.b;
  for (int i = 0; i < 3; ++i) {
    out.w[i] = l.w[i] - r.w[i];
    out.xb[i] = l.xb[i] - r.xb[i];
  }
  return out;
}

CKAlgebra::Element CKAlgebra::scale(const Rat& s, const Element& e) const {
  CKEl out;
  out.a = s * e.a;
  out.b = s * e.b;
  for (int i = 0; i < 3; ++i) {
    out.w[i] = s * e.w[i];
    out.xb[i] = s * e.xb[i];
  }
  return out;
}

ParityClass CKAlgebra::parity_of(const Element& e) const {
  bool ev = e.even_only(), od = e.odd_only();
  if (ev && od) return ParityClass::Zero;
  if (ev) return ParityClass::Even;
  if (od) return ParityClass::Odd;
  return ParityClass::Mixed;
}

CKAlgebra::Element CKAlgebra::sample(Parity par, int max_deg, Rng& rng) const {
  CKEl e;
  if (par == Parity::Even) {
    e.a = sample_random(Space::Gamma, max_deg, rng);
    for (int i = 0; i < 3; ++i) e.w[i] = sample_random(Space::Gamma, max_deg, rng);
  } else {
    e.b = sample_random(Space::Gamma, max_deg, rng);
    for (int i = 0; i < 3; ++i) e.xb[i] = sample_random(Space::Gamma, max_deg, rng);
  }
  return e;
}

GCKProjection gck_project(const CKEl& e) {
  GCKProjection out;
  auto check = [&](const GammaEl& g, Space s, const std::string& slot) {
    if (!out.in_gck || in_space(g, s)) return;
    out.in_gck = false;
    out.violating_slot = slot;
    out.witness = g;
  };
  check(e.a, Space::A, "a");
  check(e.w[0], Space::A, "w1");
  check(e.w[1], Space::A, "w2");
  check(e.w[2], Space::A, "w3");
  check(e.b, Space::M, "bar");
  check(e.xb[0], Space::M, "x1");
  check(e.xb[1], Space::M, "x2");
  check(e.xb[2], Space::M, "x3");
  return out;
}

GCKAlgebra::Element GCKAlgebra::sample(Parity par, int max_deg, Rng& rng) const {
  CKEl e;
  if (par == Parity::Even) {
    e.a = sample_random(Space::A, max_deg, rng);
    for (int i = 0; i < 3; ++i) e.w[i] = sample_random(Space::A, max_deg, rng);
  } else {
    e.b = sample_random(Space::M, max_deg, rng);
    for (int i = 0; i < 3; ++i) e.xb[i] = sample_random(Space::M, max_deg, rng);
  }
  return e;
}

}  // namespace jsuper
