#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "jsuper/certificate.hpp"
#include "jsuper/linsolve.hpp"
#include "jsuper/probe.hpp"
#include "jsuper/saturate.hpp"
#include "jsuper/textio.hpp"

using namespace jsuper;

namespace {

GammaEl P(const std::string& text) { return parse_gamma(text); }

const std::vector<DerivationSpec> kDelta = {DerivationSpec::D11(), DerivationSpec::D12(),
                                            DerivationSpec::D22()};

Rat dot(const QVec& a, const QVec& b) {
  Rat acc;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

TEST_CASE("row spans express members and witness non-members") {
  RowSpan span(3);
  QVec v0 = {Rat(1), Rat(0), Rat(1)}, v1 = {Rat(0), Rat(1), Rat(0)};
  CHECK(span.insert(v0));
  CHECK(span.insert(v1));
  CHECK_FALSE(span.insert({Rat(2), Rat(3), Rat(2)}));  // dependent
  CHECK(span.rank() == 2);

  QVec member = {Rat(2), Rat(-1), Rat(2)};
  CHECK(span.contains(member));
  auto combo = span.express(member);
  REQUIRE(combo.has_value());
  // the coefficients rebuild the vector over the successfully inserted rows
  const std::vector<QVec> raws = {v0, v1};
  for (size_t col = 0; col < 3; ++col) {
    Rat acc;
    for (size_t k = 0; k < combo->size() && k < raws.size(); ++k) acc += (*combo)[k] * raws[k][col];
    CHECK(acc == member[col]);
  }

  QVec outside = {Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(span.contains(outside));
  CHECK_FALSE(span.express(outside).has_value());
  auto wit = span.orthogonal_witness(outside);
  REQUIRE(wit.has_value());
  CHECK(dot(*wit, v0) == Rat(0));
  CHECK(dot(*wit, v1) == Rat(0));
  CHECK(dot(*wit, outside) != Rat(0));
  CHECK_FALSE(span.orthogonal_witness(member).has_value());
}

TEST_CASE("exact linear solving with Farkas certificates") {
  std::vector<QVec> cols = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  auto res = solve_linear(cols, {Rat(3), Rat(2)});
  REQUIRE(res.feasible);
  for (size_t r = 0; r < 2; ++r) {
    Rat acc;
    for (size_t j = 0; j < cols.size(); ++j) acc += res.solution[j] * cols[j][r];
    CHECK(acc == (r == 0 ? Rat(3) : Rat(2)));
  }

  auto bad = solve_linear({{Rat(1), Rat(1)}}, {Rat(1), Rat(2)});
  REQUIRE_FALSE(bad.feasible);
  CHECK(dot(bad.farkas, {Rat(1), Rat(1)}) == Rat(0));
  CHECK(dot(bad.farkas, {Rat(1), Rat(2)}) != Rat(0));
}

TEST_CASE("the derivation ideal of the curve algebra saturates to the unit") {
  SaturationReport rep = d_ideal_saturate(Space::Gamma, {DerivationSpec::D()}, P("1 - y^4"), 24, 48);
  CHECK(rep.reached_one);
  CHECK(rep.label == "d-ideal:Gamma");
  CHECK(rep.seed_text == "1 - y^4");
  CHECK(replay_saturation(rep));
}

TEST_CASE("the even subalgebra saturates under its derivation family") {
  SaturationReport rep = d_ideal_saturate(Space::A, kDelta, P("y^2"), 32, 48);
  CHECK(rep.reached_one);
  CHECK(replay_saturation(rep));
}

TEST_CASE("without derivations a proper ideal stays proper") {
  SaturationReport rep = d_ideal_saturate(Space::Gamma, {}, P("y^2"), 24, 32);
  CHECK_FALSE(rep.reached_one);
  CHECK_FALSE(replay_saturation(rep));  // nothing to replay without a trace
}

TEST_CASE("super-ideals of the subalgebra saturate from odd and even seeds") {
  SaturationReport odd = super_ideal_saturate(JADeltaEl::checked(GammaEl(), GammaEl::x()), 24, 48);
  CHECK(odd.reached_one);
  CHECK(replay_saturation(odd));

  SaturationReport even = super_ideal_saturate(JADeltaEl::checked(P("y^2"), GammaEl()), 24, 48);
  CHECK(even.reached_one);
  CHECK(replay_saturation(even));
}

TEST_CASE("super-ideals of the constrained eight-component algebra saturate") {
  SaturationReport rep = super_ideal_saturate(CKEl::w_slot(1, P("y^2")), 24, 48);
  CHECK(rep.reached_one);
  CHECK(replay_saturation(rep));

  SaturationReport odd = super_ideal_saturate(CKEl::bar(GammaEl::x()), 24, 48);
  CHECK(odd.reached_one);
  CHECK(replay_saturation(odd));
}

TEST_CASE("a unit seed has an empty trace and a one-term combination") {
  SaturationReport rep = super_ideal_saturate(JADeltaEl::checked(GammaEl::one(), GammaEl()), 8, 8);
  CHECK(rep.reached_one);
  CHECK(rep.trace.empty());
  REQUIRE(rep.combination.size() == 1);
  CHECK(rep.combination[0].step == -1);
  CHECK(rep.combination[0].coeff == Rat(1));
  CHECK(replay_saturation(rep));
}

TEST_CASE("saturation rejects unusable seeds and windows") {
  CHECK_THROWS_AS(d_ideal_saturate(Space::Gamma, {}, GammaEl(), 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(d_ideal_saturate(Space::A, {}, GammaEl::x(), 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(super_ideal_saturate(JADeltaEl{}, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(super_ideal_saturate(CKEl{}, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(d_ideal_saturate(Space::Gamma, {}, GammaEl::one(), 0, 8), std::invalid_argument);
  CHECK_THROWS_AS(d_ideal_saturate(Space::Gamma, {}, GammaEl::one(), 16, 8), std::invalid_argument);
}

TEST_CASE("tampered reports fail the replay") {
  SaturationReport good = d_ideal_saturate(Space::Gamma, {DerivationSpec::D()}, P("1 - y^4"), 24, 48);
  REQUIRE(good.reached_one);
  REQUIRE(replay_saturation(good));
  REQUIRE_FALSE(good.trace.empty());

  SaturationReport wrong_coeff = good;
  wrong_coeff.combination[0].coeff += Rat(1);
  CHECK_FALSE(replay_saturation(wrong_coeff));

  SaturationReport wrong_element = good;
  wrong_element.trace[0].element = "y^2";
  CHECK_FALSE(replay_saturation(wrong_element));

  SaturationReport wrong_op = good;
  wrong_op.trace[0].op = "mul:frobnicate(";
  CHECK_FALSE(replay_saturation(wrong_op));

  SaturationReport wrong_label = good;
  wrong_label.label = "bogus";
  CHECK_FALSE(replay_saturation(wrong_label));
}

TEST_CASE("the span rank grows monotonically with the window") {
  SaturationReport small = d_ideal_saturate(Space::Gamma, {}, P("y^2"), 16, 16, true);
  SaturationReport large = d_ideal_saturate(Space::Gamma, {}, P("y^2"), 20, 20, true);
  CHECK(small.basis_dim <= large.basis_dim);
  CHECK_FALSE(small.span_elements.empty());
  CHECK(small.span_elements[0] == "y^2");
}

TEST_CASE("the fixpoint span is invariant under the generating operations") {
  const int W = 20;
  SaturationReport rep =
      d_ideal_saturate(Space::Gamma, {DerivationSpec::D()}, P("1 - y^4"), W, W, true);
  REQUIRE_FALSE(rep.span_elements.empty());

  RowSpan span(static_cast<int>(enumerate_basis(Space::Gamma, W).size()));
  std::vector<GammaEl> elems;
  for (const auto& text : rep.span_elements) {
    GammaEl u = P(text);
    auto c = coords_in_basis(u, Space::Gamma, W);
    REQUIRE(c.has_value());
    span.insert(*c);
    elems.push_back(std::move(u));
  }
  CHECK(span.rank() == rep.basis_dim);

  auto check_closed = [&](const GammaEl& v) {
    auto c = coords_in_basis(v, Space::Gamma, W);
    if (!c) return;  // escapes the window: outside the engine's contract
    CHECK(span.contains(*c));
  };
  for (const GammaEl& u : elems) {
    check_closed(u * GammaEl::y());
    check_closed(u * GammaEl::x());
    check_closed(apply_D(u));
  }
}

TEST_CASE("bounded-degree probes are infeasible with checkable witnesses") {
  // z = x reaches the target x itself (c = 1), so only the y-side witness
  // exists; z = x + y reaches neither target and carries both witnesses
  ProbeResult at_x = noncyclic_probe(P("x"), 12);
  CHECK(at_x.status == ProbeStatus::Infeasible);
  CHECK_FALSE(at_x.farkas_x.has_value());
  REQUIRE(at_x.c.has_value());
  CHECK(*at_x.c == GammaEl::one());
  CHECK(at_x.farkas_y.has_value());
  CHECK(verify_probe_farkas(at_x));

  ProbeResult mixed = noncyclic_probe(P("x + y"), 12);
  CHECK(mixed.status == ProbeStatus::Infeasible);
  CHECK(mixed.farkas_x.has_value());
  CHECK(mixed.farkas_y.has_value());
  CHECK(verify_probe_farkas(mixed));
}

TEST_CASE("probe preconditions") {
  CHECK_THROWS_AS(noncyclic_probe(GammaEl::one(), 8), std::invalid_argument);  // not in M
  CHECK_THROWS_AS(noncyclic_probe(GammaEl(), 8), std::invalid_argument);       // zero
}

TEST_CASE("fake probe solutions are rejected") {
  CHECK_FALSE(verify_probe_solution(GammaEl::x(), GammaEl::one(), GammaEl::one()));
  CHECK_FALSE(verify_probe_solution(GammaEl::x(), GammaEl(), GammaEl()));
  // c outside A is rejected even if the products happened to match
  CHECK_FALSE(verify_probe_solution(GammaEl::x(), GammaEl::y(), GammaEl::y()));
}

TEST_CASE("the degree obstruction separates the two sides") {
  ParityDegreeWitness w = parity_degree_witness(Poly(Rat(1)), Poly(Rat(1)), Rat(1));
  CHECK(w.distinct);
  REQUIRE(w.left_degree.has_value());
  CHECK(*w.left_degree == 4);
  CHECK(w.right_degree == 2);

  ParityDegreeWitness z = parity_degree_witness(Poly(), Poly(), Rat(1));
  CHECK(z.distinct);
  CHECK_FALSE(z.left_degree.has_value());  // the zero polynomial
  CHECK(z.right_degree == 0);              // the constant 1

  ParityDegreeWitness big =
      parity_degree_witness(Poly::monomial(2), Poly::monomial(4), Rat(-2));
  CHECK(big.distinct);
  CHECK(*big.left_degree == 8);
  CHECK(big.right_degree == 10);

  CHECK_THROWS_AS(parity_degree_witness(Poly::y(), Poly(), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(parity_degree_witness(Poly(), Poly(), Rat(0)), std::invalid_argument);
}

TEST_CASE("certificates verify through both routes") {
  GammaEl target = P("3*y^4 - 1");
  CertificateResult res = find_certificate(target, 8);
  REQUIRE(res.found);
  CHECK_FALSE(res.cert.empty());
  CHECK(verify_certificate(target, res.cert));
  CHECK(verify_certificate_associators(target, res.cert));

  // a hand-built certificate for the same target: D(xy) split over the family
  GammaEl xy = P("x*y");
  Certificate hand = {{GammaEl::one(), 11, xy, GammaEl::one()},
                      {P("y^2"), 22, xy, GammaEl::one()}};
  CHECK(verify_certificate(target, hand));
  CHECK(verify_certificate_associators(target, hand));
}

TEST_CASE("the unit has a certificate at the standard bound") {
  CertificateResult res = find_certificate(GammaEl::one(), 8);
  REQUIRE(res.found);
  CHECK(verify_certificate(GammaEl::one(), res.cert));
  CHECK(verify_certificate_associators(GammaEl::one(), res.cert));
}

TEST_CASE("certificate edge cases") {
  CertificateResult zero = find_certificate(GammaEl(), 4);
  CHECK(zero.found);
  CHECK(zero.cert.empty());
  CHECK(verify_certificate(GammaEl(), zero.cert));

  CHECK_THROWS_AS(find_certificate(GammaEl::x(), 4), std::invalid_argument);  // not in A

  // a corrupted certificate no longer verifies
  CertificateResult res = find_certificate(P("3*y^4 - 1"), 8);
  REQUIRE(res.found);
  Certificate broken = res.cert;
  broken.pop_back();
  CHECK_FALSE(verify_certificate(P("3*y^4 - 1"), broken));

  // terms with factors outside the even subalgebra are rejected
  Certificate bad = {{GammaEl::x(), 11, GammaEl::one(), GammaEl::one()}};
  CHECK_FALSE(verify_certificate(apply_derivation(DerivationSpec::D11(), GammaEl::one()), bad));
}
