#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jsuper/certificate.hpp"
#include "jsuper/evalops.hpp"
#include "jsuper/opmatrix.hpp"
#include "jsuper/probe.hpp"
#include "jsuper/saturate.hpp"
#include "jsuper/suite.hpp"
#include "jsuper/textio.hpp"

/*
 * Release gate: every function below checks one acceptance criterion and the
 * binary prints one [PASS]/[FAIL] line per criterion.  All criteria run even
 * after a failure; the exit status is nonzero if any line failed.
 */

using namespace jsuper;

namespace {

GammaEl P(const std::string& text) { return parse_gamma(text); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: the full Jordan identity suite on all five constructions, within budget
bool criterion_identity_suites(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (Construction c : {Construction::JVec, Construction::JADelta, Construction::Double,
                         Construction::CK, Construction::GCK}) {
    SuiteConfig cfg;
    cfg.construction = c;
    cfg.suite = SuiteKind::Jordan;
    cfg.trials = 200;
    cfg.max_deg = 4;
    cfg.seed = 2026;
    RunReport rep = run_suite(cfg);
    if (rep.overall != Overall::Pass) {
      ok = false;
      note += construction_name(c) + " failed; ";
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << secs << " s, budget 60 s";
  note += os.str();
  return ok && secs < 60.0;
}

// 2: closed forms of the odd generator products
bool criterion_generator_products(std::string& note) {
  bool ok = parse_jvec("bar(x) * bar(y)") == JVecEl::from_even(P("1 + y^4")) &&
            parse_jvec("bar(y) * bar(x)") == JVecEl::from_even(P("-1 - y^4")) &&
            parse_jvec("bar(x) * bar(x)").is_zero() && parse_jvec("bar(y) * bar(y)").is_zero();
  if (!ok) note = "an odd generator product deviates from its closed form";
  return ok;
}

// 3: the derivation's frozen values, parity preservation, and decomposition
bool criterion_derivation(std::string& note) {
  if (apply_D(P("y^2")) != P("-2*x*y")) {
    note = "D(y^2) deviates";
    return false;
  }
  if (apply_D(P("x*y")) != P("3*y^4 - 1")) {
    note = "D(x*y) deviates";
    return false;
  }
  Rng rng(303);
  GammaEl y2 = P("y^2");
  for (int t = 0; t < 100; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    Rng ra = rt.split(0), rg = rt.split(1);
    GammaEl a = sample_random(Space::A, 5, ra);
    if (!in_space(apply_D(a), Space::A)) {
      note = "D left the even subalgebra on " + a.str();
      return false;
    }
    GammaEl u = sample_random(Space::Gamma, 5, rg);
    GammaEl lhs = apply_D(u);
    GammaEl rhs = apply_derivation(DerivationSpec::D11(), u) +
                  y2 * apply_derivation(DerivationSpec::D22(), u);
    if (lhs != rhs) {
      note = "the derivation family decomposition failed on " + u.str();
      return false;
    }
  }
  return true;
}

// 4: the direct product and the expanded closed-form product agree on odd pairs
bool criterion_dual_path(std::string& note) {
  JADeltaAlgebra direct = JADeltaAlgebra::standard();
  JADeltaAlgebra formula = JADeltaAlgebra::standard(MulPath::Expanded);
  Rng rng(404);
  for (int t = 0; t < 500; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    Rng r0 = rt.split(0), r1 = rt.split(1);
    JADeltaEl l = JADeltaEl::checked(GammaEl(), sample_random(Space::M, 4, r0));
    JADeltaEl r = JADeltaEl::checked(GammaEl(), sample_random(Space::M, 4, r1));
    if (direct.mult(l, r) != formula.mult(l, r)) {
      note = "paths disagree on " + jadelta_describe(l) + " and " + jadelta_describe(r);
      return false;
    }
  }
  return true;
}

// 5: derivation ideals saturate to the unit; a derivation-free ideal does not
bool criterion_d_simplicity(std::string& note) {
  const std::vector<DerivationSpec> delta = {DerivationSpec::D11(), DerivationSpec::D12(),
                                             DerivationSpec::D22()};
  Rng rng(505);
  for (int t = 0; t < 20; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    GammaEl seed = sample_random_nonzero(Space::Gamma, 4, rt);
    SaturationReport rep = d_ideal_saturate(Space::Gamma, {DerivationSpec::D()}, seed, 24, 48);
    if (!rep.reached_one || !replay_saturation(rep)) {
      note = "full-algebra seed " + seed.str() + " did not verifiably reach the unit";
      return false;
    }
  }
  for (int t = 0; t < 20; ++t) {
    Rng rt = rng.split(1000 + static_cast<std::uint64_t>(t));
    GammaEl seed = sample_random_nonzero(Space::A, 4, rt);
    SaturationReport rep = d_ideal_saturate(Space::A, delta, seed, 24, 48);
    if (!rep.reached_one || !replay_saturation(rep)) {
      note = "even-subalgebra seed " + seed.str() + " did not verifiably reach the unit";
      return false;
    }
  }
  SaturationReport control = d_ideal_saturate(Space::Gamma, {}, P("y^2"), 24, 48);
  if (control.reached_one) {
    note = "the derivation-free control ideal reached the unit";
    return false;
  }
  return true;
}

// 6: super-ideal saturation in both superalgebras, and the w-slot extraction
bool criterion_super_ideals(std::string& note) {
  Rng rng(606);
  for (int t = 0; t < 10; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    JADeltaEl seed = t % 2 == 0
                         ? JADeltaEl::checked(sample_random_nonzero(Space::A, 3, rt), GammaEl())
                         : JADeltaEl::checked(GammaEl(), sample_random_nonzero(Space::M, 3, rt));
    SaturationReport rep = super_ideal_saturate(seed, 24, 48);
    if (!rep.reached_one || !replay_saturation(rep)) {
      note = "subalgebra seed " + jadelta_describe(seed) + " did not verifiably reach the unit";
      return false;
    }
  }
  GCKAlgebra gck;
  for (int t = 0; t < 10; ++t) {
    Rng rt = rng.split(2000 + static_cast<std::uint64_t>(t));
    CKEl seed;
    while (seed.is_zero()) seed = gck.sample(t % 2 ? Parity::Odd : Parity::Even, 3, rt);
    SaturationReport rep = super_ideal_saturate(seed, 24, 48);
    if (!rep.reached_one || !replay_saturation(rep)) {
      note = "constrained seed " + ck_describe(seed) + " did not verifiably reach the unit";
      return false;
    }
  }
  CKAlgebra full;
  CKEl w1 = CKEl::w_slot(1, GammaEl::one());
  CKEl w2 = CKEl::w_slot(2, GammaEl::one());
  for (int t = 0; t < 100; ++t) {
    Rng rt = rng.split(4000 + static_cast<std::uint64_t>(t));
    CKEl r = full.sample(Parity::Even, 4, rt);
    if (ck_mul(w2, ck_mul(w2, ck_mul(w1, r))) != CKEl::from_gamma(r.w[0])) {
      note = "w-extraction failed on " + ck_describe(r);
      return false;
    }
  }
  return true;
}

// 7: bounded probes stay infeasible, the degree obstruction holds, fakes fail
bool criterion_noncyclic(std::string& note) {
  Rng rng(707);
  for (int t = 0; t < 50; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    GammaEl z = sample_random_nonzero(Space::M, 4, rt);
    ProbeResult res = noncyclic_probe(z, 16);
    if (res.status != ProbeStatus::Infeasible) {
      note = "a probe found a bounded-degree generator: z = " + z.str();
      return false;
    }
    if (!verify_probe_farkas(res)) {
      note = "a Farkas witness failed its recheck for z = " + z.str();
      return false;
    }
  }
  for (int t = 0; t < 200; ++t) {
    Rng rt = rng.split(5000 + static_cast<std::uint64_t>(t));
    std::vector<Rat> hc(5), ec(5);
    for (int k = 0; k < 5; ++k) {
      hc[static_cast<size_t>(k)] = Rat(rt.uniform_int(-3, 3));
      ec[static_cast<size_t>(k)] = Rat(rt.uniform_int(-3, 3));
    }
    auto spread = [](const std::vector<Rat>& c) {
      std::vector<Rat> out(2 * c.size() - 1);
      for (size_t i = 0; i < c.size(); ++i) out[2 * i] = c[i];
      return Poly(std::move(out));
    };
    Poly h1 = spread(hc), e1 = spread(ec);
    Rat u;
    while (u.is_zero()) u = Rat(rt.uniform_int(-6, 6));
    ParityDegreeWitness w = parity_degree_witness(h1, e1, u);
    bool left_ok = !w.left_degree.has_value() || (*w.left_degree >= 4 && *w.left_degree % 4 == 0);
    bool right_ok = w.right_degree == 0 || w.right_degree % 4 == 2;
    if (!w.distinct || !left_ok || !right_ok) {
      note = "the degree obstruction failed on h1 = " + h1.str() + ", e1 = " + e1.str();
      return false;
    }
  }
  if (verify_probe_solution(GammaEl::x(), GammaEl::one(), GammaEl::one()) ||
      verify_probe_solution(GammaEl::x(), GammaEl::y(), GammaEl::y()) ||
      verify_probe_solution(P("x + y"), GammaEl::one(), GammaEl::one())) {
    note = "a fabricated generator pair was accepted";
    return false;
  }
  return true;
}

// 8: the embedding is a unital homomorphism onto symmetrized operator products
bool criterion_embedding(std::string& note) {
  auto basis = enumerate_basis(Space::Gamma, 8);
  OpMatrix one = embed_special(JVecEl::from_even(GammaEl::one()));
  for (const GammaEl& g : basis) {
    auto [a, b] = one.apply(g, GammaEl());
    auto [c, d] = one.apply(GammaEl(), g);
    if (a != g || !b.is_zero() || !c.is_zero() || d != g) {
      note = "the unit does not act as the identity on " + g.str();
      return false;
    }
  }
  JVecAlgebra alg;
  Rng rng(808);
  for (int t = 0; t < 100; ++t) {
    Rng rt = rng.split(static_cast<std::uint64_t>(t));
    Rng ru = rt.split(0), rv = rt.split(1), rc = rt.split(2);
    JVecEl u = alg.sample(t % 2 ? Parity::Odd : Parity::Even, 4, ru);
    JVecEl v = alg.sample((t / 2) % 2 ? Parity::Odd : Parity::Even, 4, rv);
    OpMatrix lhs = embed_special(alg.mult(u, v));
    OpMatrix rhs = opmatrix_super_product(embed_special(u), embed_special(v));
    auto agree = [&](const GammaEl& p, const GammaEl& q) {
      auto l = lhs.apply(p, q);
      auto r = rhs.apply(p, q);
      return l.first == r.first && l.second == r.second;
    };
    for (const GammaEl& g : basis) {
      if (!agree(g, GammaEl()) || !agree(GammaEl(), g)) {
        note = "operator images disagree on a basis column for u = " + jvec_describe(u) +
               ", v = " + jvec_describe(v);
        return false;
      }
    }
    for (int k = 0; k < 10; ++k) {
      GammaEl p = sample_random(Space::Gamma, 6, rc), q = sample_random(Space::Gamma, 6, rc);
      if (!agree(p, q)) {
        note = "operator images disagree on a random column for u = " + jvec_describe(u) +
               ", v = " + jvec_describe(v);
        return false;
      }
    }
  }
  return true;
}

// 9: a certificate for the unit exists and survives both recomputations
bool criterion_unit_certificate(std::string& note) {
  CertificateResult res = find_certificate(GammaEl::one(), 8);
  if (!res.found) {
    note = "no certificate for the unit at degree bound 8";
    return false;
  }
  if (!verify_certificate(GammaEl::one(), res.cert)) {
    note = "the unit certificate failed the derivation recomputation";
    return false;
  }
  if (!verify_certificate_associators(GammaEl::one(), res.cert)) {
    note = "the unit certificate failed the associator recomputation";
    return false;
  }
  note = std::to_string(res.cert.size()) + " terms";
  return true;
}

// at most 500 samples per identity, spread over that identity's pattern count
template <typename Alg>
bool mutation_caught(const Alg& alg, std::uint64_t seed) {
  Rng rng(seed);
  const int max_deg = 3;
  auto budget = [&](long patterns) {
    return CheckConfig{500 / patterns, max_deg, ExecPolicy::Serial};
  };
  if (check_grading(alg, budget(4), rng.split(0)).status == CheckStatus::Counterexample)
    return true;
  if (check_identity_1(alg, budget(4), rng.split(1)).status == CheckStatus::Counterexample)
    return true;
  if (check_identity_2(alg, budget(2), rng.split(2)).status == CheckStatus::Counterexample)
    return true;
  if (check_identity_3(alg, budget(8), rng.split(3)).status == CheckStatus::Counterexample)
    return true;
  if (check_identity_4(alg, budget(16), rng.split(4)).status == CheckStatus::Counterexample)
    return true;
  return false;
}

// 10: deliberately wrong structure data is caught by the same suites
bool criterion_mutations(std::string& note) {
  if (!mutation_caught(JADeltaAlgebra::with_gamma12(P("-1 - y^4")), 1010)) {
    note = "the sign-flipped structure constant went unnoticed";
    return false;
  }
  if (!mutation_caught(CKAlgebra(CrossTable::standard().flipped(2, 3)), 1011)) {
    note = "the sign-flipped cross-table entry went unnoticed";
    return false;
  }
  GammaCarrier carrier;
  BracketCheckOptions opt;
  opt.drop_unit_term_axiom5 = true;
  auto reps = check_jordan_bracket(d_bracket_spec(carrier), CheckConfig{500, 3, ExecPolicy::Serial},
                                   Rng(1012), opt);
  bool caught = false;
  for (const auto& r : reps) caught |= r.status == CheckStatus::Counterexample;
  if (!caught) {
    note = "dropping the unit correction went unnoticed";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    bool (*fn)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "Jordan identity suites pass on all five constructions", criterion_identity_suites},
      {2, "odd generator products match their closed forms", criterion_generator_products},
      {3, "the derivation acts correctly and decomposes over the family", criterion_derivation},
      {4, "both odd-product paths agree on 500 random pairs", criterion_dual_path},
      {5, "derivation ideals saturate to the unit; the control does not", criterion_d_simplicity},
      {6, "super-ideals saturate and w-multiplication extracts the slot", criterion_super_ideals},
      {7, "module probes are infeasible with verified witnesses", criterion_noncyclic},
      {8, "the embedding is a homomorphism onto operator matrices", criterion_embedding},
      {9, "the unit certificate verifies through both routes", criterion_unit_certificate},
      {10, "seeded structure mutations are caught by the suites", criterion_mutations},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " " << c.number << ": " << c.title;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n" << std::flush;
  }
  return failures == 0 ? 0 : 1;
}
