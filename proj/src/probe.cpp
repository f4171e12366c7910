#include "jsuper/probe.hpp"

#include <stdexcept>

#include "jsuper/jadelta.hpp"

namespace jsuper {

namespace {

// columns z * e for e over the A-basis, as M-coordinates at row_deg
std::vector<QVec> probe_columns(const GammaEl& z, int deg_bound, int row_deg) {
  std::vector<QVec> cols;
  for (const GammaEl& e : enumerate_basis(Space::A, deg_bound)) {
    auto c = coords_in_basis(z * e, Space::M, row_deg);
    if (!c) throw std::logic_error("probe product escaped its coordinate window");
    cols.push_back(std::move(*c));
  }
  return cols;
}

GammaEl combine_basis(const QVec& coeffs, const std::vector<GammaEl>& basis) {
  GammaEl out;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * basis[i];
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

ProbeResult noncyclic_probe(const GammaEl& z, int deg_bound) {
  if (z.is_zero() || !in_space(z, Space::M))
    throw std::invalid_argument("probe needs a nonzero element of M");
  if (deg_bound < 0) throw std::invalid_argument("probe degree bound must be nonnegative");

  ProbeResult res;
  res.z = z;
  res.deg_bound = deg_bound;
  // products z * e can exceed deg z + deg e by the x^2 rewrite, never by
  // more than the rewrite's own degree
  res.row_deg = *z.total_degree() + deg_bound + 4;

  auto basis = enumerate_basis(Space::A, deg_bound);
  auto cols = probe_columns(z, deg_bound, res.row_deg);

  auto run = [&](const GammaEl& target, std::optional<GammaEl>& sol, std::optional<QVec>& farkas) {
    auto rhs = coords_in_basis(target, Space::M, res.row_deg);
    if (!rhs) throw std::logic_error("probe target escaped its coordinate window");
    LinearSolveResult lin = solve_linear(cols, *rhs);
    if (lin.feasible)
      sol = combine_basis(lin.solution, basis);
    else
      farkas = std::move(lin.farkas);
    return lin.feasible;
  };

  bool got_x = run(GammaEl::x(), res.c, res.farkas_x);
  bool got_y = run(GammaEl::y(), res.d, res.farkas_y);
  res.status = (got_x && got_y) ? ProbeStatus::Solution : ProbeStatus::Infeasible;
  return res;
}

bool verify_probe_farkas(const ProbeResult& res) {
  if (res.status != ProbeStatus::Infeasible) return false;
  if (!res.farkas_x && !res.farkas_y) return false;

  auto cols = probe_columns(res.z, res.deg_bound, res.row_deg);
  auto check = [&](const QVec& y, const GammaEl& target) {
    auto rhs = coords_in_basis(target, Space::M, res.row_deg);
    if (!rhs || y.size() != rhs->size()) return false;
    for (const QVec& col : cols)
      if (!dot(y, col).is_zero()) return false;
    return !dot(y, *rhs).is_zero();
  };

  if (res.farkas_x && !check(*res.farkas_x, GammaEl::x())) return false;
  if (res.farkas_y && !check(*res.farkas_y, GammaEl::y())) return false;
  return true;
}

bool verify_probe_solution(const GammaEl& z, const GammaEl& c, const GammaEl& d) {
  if (!in_space(c, Space::A) || !in_space(d, Space::A)) return false;
  if (z.is_zero() || !in_space(z, Space::M)) return false;

  const GammaEl x = GammaEl::x(), y = GammaEl::y();
  if (z * c != x || z * d != y) return false;
  if (x * d != y * c) return false;

  auto [a, b] = split_xy(z);  // z = x a + y b
  GammaEl s = a * c + b * d;
  return x * s == x && y * s == y;
}

ParityDegreeWitness parity_degree_witness(const Poly& h1, const Poly& e1, const Rat& u) {
  if (!h1.even_support_only() || !e1.even_support_only())
    throw std::invalid_argument("witness inputs must be polynomials in y^2");
  if (u.is_zero()) throw std::invalid_argument("witness scalar must be nonzero");

  Poly one_minus_y4 = Poly(Rat(1)) - Poly::monomial(4);
  Poly left = u * (one_minus_y4 * (h1 * h1));
  Poly right = Poly(Rat(1)) + u * (Poly::monomial(2) * (e1 * e1));

  ParityDegreeWitness w;
  w.left_degree = left.degree();
  w.right_degree = *right.degree();
  w.distinct = left != right;
  return w;
}

}  // namespace jsuper
