#include "jsuper/certificate.hpp"

#include <stdexcept>

#include "jsuper/jvec.hpp"
#include "jsuper/linsolve.hpp"

namespace jsuper {

namespace {

const DerivationSpec& spec_for(int deriv) {
  switch (deriv) {
    case 11: return DerivationSpec::D11();
    case 12: return DerivationSpec::D12();
    case 22: return DerivationSpec::D22();
  }
  throw std::invalid_argument("certificate derivation index must be 11, 12, or 22");
}

// odd pair whose associator realizes the derivation
std::pair<GammaEl, GammaEl> odd_pair_for(int deriv) {
  switch (deriv) {
    case 11: return {GammaEl::x(), GammaEl::x()};
    case 12: return {GammaEl::x(), GammaEl::y()};
    case 22: return {GammaEl::y(), GammaEl::y()};
  }
  throw std::invalid_argument("certificate derivation index must be 11, 12, or 22");
}

}  // namespace

CertificateResult find_certificate(const GammaEl& target, int deg_bound) {
  if (!in_space(target, Space::A))
    throw std::invalid_argument("certificate target must lie in A");
  if (deg_bound < 0) throw std::invalid_argument("certificate degree bound must be nonnegative");

  CertificateResult res;
  res.target = target;
  res.deg_bound = deg_bound;
  if (target.is_zero()) {
    res.found = true;
    return res;
  }

  // the derivations raise degree by at most 7 and a product by 2 more
  const int row_deg = 2 * deg_bound + 12;
  auto basis = enumerate_basis(Space::A, deg_bound);

  struct Candidate {
    size_t left, arg;
    int deriv;
  };
  std::vector<Candidate> cands;
  std::vector<QVec> cols;
  for (int deriv : {11, 12, 22}) {
    std::vector<GammaEl> derived(basis.size());
    for (size_t m = 0; m < basis.size(); ++m)
      derived[m] = apply_derivation(spec_for(deriv), basis[m]);
    for (size_t l = 0; l < basis.size(); ++l)
      for (size_t m = 0; m < basis.size(); ++m) {
        auto c = coords_in_basis(basis[l] * derived[m], Space::A, row_deg);
        if (!c) throw std::logic_error("certificate column escaped its coordinate window");
        cols.push_back(std::move(*c));
        cands.push_back({l, m, deriv});
      }
  }

  auto rhs = coords_in_basis(target, Space::A, row_deg);
  if (!rhs) return res;  // target above the window the bound can reach

  LinearSolveResult lin = solve_linear(cols, *rhs);
  if (!lin.feasible) return res;

  for (size_t j = 0; j < cands.size(); ++j) {
    if (lin.solution[j].is_zero()) continue;
    res.cert.push_back(CertTerm{lin.solution[j] * basis[cands[j].left], cands[j].deriv,
                                basis[cands[j].arg], GammaEl::one()});
  }
  res.found = true;
  return res;
}

bool verify_certificate(const GammaEl& target, const Certificate& cert) {
  if (!in_space(target, Space::A)) return false;
  GammaEl sum;
  for (const CertTerm& t : cert) {
    if (!in_space(t.left, Space::A) || !in_space(t.argument, Space::A) ||
        !in_space(t.right, Space::A))
      return false;
    sum += t.left * apply_derivation(spec_for(t.deriv), t.argument) * t.right;
  }
  return sum == target;
}

bool verify_certificate_associators(const GammaEl& target, const Certificate& cert) {
  if (!in_space(target, Space::A)) return false;
  auto assoc = [](const JVecEl& u, const JVecEl& v, const JVecEl& w) {
    JVecEl l = jvec_mul(jvec_mul(u, v), w);
    JVecEl r = jvec_mul(u, jvec_mul(v, w));
    return JVecEl{l.even - r.even, l.odd - r.odd};
  };
  GammaEl sum;
  for (const CertTerm& t : cert) {
    if (!in_space(t.left, Space::A) || !in_space(t.argument, Space::A) ||
        !in_space(t.right, Space::A))
      return false;
    auto [s1, s2] = odd_pair_for(t.deriv);
    JVecEl a = assoc(JVecEl::from_even(t.argument), JVecEl::from_odd(s1), JVecEl::from_odd(s2));
    if (!a.odd.is_zero()) return false;
    sum += t.left * a.even * t.right;
  }
  return sum == target;
}

}  // namespace jsuper
