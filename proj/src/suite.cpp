#include "jsuper/suite.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "jsuper/certificate.hpp"
#include "jsuper/ck.hpp"
#include "jsuper/jadelta.hpp"
#include "jsuper/jvec.hpp"
#include "jsuper/opmatrix.hpp"
#include "jsuper/probe.hpp"
#include "jsuper/saturate.hpp"

namespace jsuper {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::JVec: return "jvec";
    case Construction::JADelta: return "jadelta";
    case Construction::Double: return "double";
    case Construction::CK: return "ck";
    case Construction::GCK: return "gck";
  }
  return "?";
}

std::string suite_name(SuiteKind k) {
  switch (k) {
    case SuiteKind::Jordan: return "jordan";
    case SuiteKind::Bracket: return "bracket";
    case SuiteKind::Simplicity: return "simplicity";
    case SuiteKind::Noncyclic: return "noncyclic";
    case SuiteKind::Embedding: return "embedding";
    case SuiteKind::Certificates: return "certificates";
    case SuiteKind::All: return "all";
  }
  return "?";
}

std::string overall_name(Overall o) {
  switch (o) {
    case Overall::Pass: return "pass";
    case Overall::Fail: return "fail";
    case Overall::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<Construction> construction_from_name(const std::string& s) {
  for (Construction c : {Construction::JVec, Construction::JADelta, Construction::Double,
                         Construction::CK, Construction::GCK})
    if (construction_name(c) == s) return c;
  return std::nullopt;
}

std::optional<SuiteKind> suite_from_name(const std::string& s) {
  for (SuiteKind k : {SuiteKind::Jordan, SuiteKind::Bracket, SuiteKind::Simplicity,
                      SuiteKind::Noncyclic, SuiteKind::Embedding, SuiteKind::Certificates,
                      SuiteKind::All})
    if (suite_name(k) == s) return k;
  return std::nullopt;
}

std::vector<SuiteKind> applicable_suites(Construction c) {
  switch (c) {
    case Construction::JVec:
      return {SuiteKind::Jordan, SuiteKind::Simplicity, SuiteKind::Embedding};
    case Construction::JADelta:
      return {SuiteKind::Jordan, SuiteKind::Simplicity, SuiteKind::Noncyclic,
              SuiteKind::Certificates};
    case Construction::Double: return {SuiteKind::Jordan, SuiteKind::Bracket};
    case Construction::CK: return {SuiteKind::Jordan, SuiteKind::Simplicity};
    case Construction::GCK: return {SuiteKind::Jordan, SuiteKind::Simplicity};
  }
  return {};
}

namespace {

struct Ctx {
  const SuiteConfig& cfg;
  Rng base;
  std::uint64_t counter = 0;
  std::vector<CheckReport> checks;

  explicit Ctx(const SuiteConfig& c) : cfg(c), base(c.seed) {}

  Rng next_rng() { return base.split(counter++); }
  CheckConfig check_cfg() const { return CheckConfig{cfg.trials, cfg.max_deg, cfg.exec}; }
  void add(CheckReport r) { checks.push_back(std::move(r)); }
  void add_all(std::vector<CheckReport> rs) {
    for (auto& r : rs) checks.push_back(std::move(r));
  }
};

Witness saturation_witness(const SaturationReport& sat, const char* what, long trial) {
  Witness w;
  w.inputs = {{"seed", sat.seed_text}, {"algebra", sat.label}};
  w.lhs = what;
  w.rhs = "window " + std::to_string(sat.window) + ", span rank " +
          std::to_string(sat.basis_dim);
  w.trial_index = trial;
  return w;
}

// run `count` saturations; pass needs every one to reach the unit and replay
template <typename GenFn>
CheckReport saturation_check(std::string identity, long count, const Rng& base, GenFn&& gen) {
  CheckReport rep;
  rep.identity = std::move(identity);
  rep.trials = count;
  for (long i = 0; i < count; ++i) {
    Rng r = base.split(static_cast<std::uint64_t>(i));
    SaturationReport sat = gen(r);
    if (!sat.reached_one) {
      rep.status = CheckStatus::Inconclusive;
      rep.witness = saturation_witness(sat, "unit not reached within the window", i);
      return rep;
    }
    if (!replay_saturation(sat)) {
      rep.status = CheckStatus::Counterexample;
      rep.witness = saturation_witness(sat, "trace replay failed", i);
      return rep;
    }
  }
  return rep;
}

void run_jordan(Ctx& ctx) {
  const CheckConfig cc = ctx.check_cfg();
  switch (ctx.cfg.construction) {
    case Construction::JVec: ctx.add_all(check_jordan_suite(JVecAlgebra{}, cc, ctx.next_rng())); break;
    case Construction::JADelta: {
      JADeltaAlgebra direct = JADeltaAlgebra::standard();
      ctx.add_all(check_jordan_suite(direct, cc, ctx.next_rng()));
      JADeltaAlgebra formula = JADeltaAlgebra::standard(MulPath::Expanded);
      ctx.add(run_trials("the two product paths agree", cc.trials, ctx.next_rng(), cc.exec,
                         [&, cc](long idx, Rng& rng) -> std::optional<Witness> {
                           long pattern = idx % 4;
                           Rng rl = rng.split(0), rr = rng.split(1);
                           auto l = direct.sample(
                               detail::pattern_bit(pattern, 0) ? Parity::Odd : Parity::Even,
                               cc.max_deg, rl);
                           auto r = direct.sample(
                               detail::pattern_bit(pattern, 1) ? Parity::Odd : Parity::Even,
                               cc.max_deg, rr);
                           auto a = direct.mult(l, r), b = formula.mult(l, r);
                           if (a == b) return std::nullopt;
                           Witness w;
                           w.inputs = {{"l", jadelta_describe(l)}, {"r", jadelta_describe(r)}};
                           w.lhs = jadelta_describe(a);
                           w.rhs = jadelta_describe(b);
                           return w;
                         }));
      break;
    }
    case Construction::Double: {
      GammaCarrier carrier;
      GammaDouble dbl(d_bracket_spec(carrier));
      ctx.add_all(check_jordan_suite(dbl, cc, ctx.next_rng()));
      break;
    }
    case Construction::CK: ctx.add_all(check_jordan_suite(CKAlgebra{}, cc, ctx.next_rng())); break;
    case Construction::GCK: ctx.add_all(check_jordan_suite(GCKAlgebra{}, cc, ctx.next_rng())); break;
  }
}

void run_bracket(Ctx& ctx) {
  GammaCarrier carrier;
  ctx.add_all(check_jordan_bracket(d_bracket_spec(carrier), ctx.check_cfg(), ctx.next_rng()));
}

CheckReport negative_control(const Ctx& ctx) {
  CheckReport rep;
  rep.identity = "negative control: without the derivation a proper ideal stays proper";
  rep.trials = 1;
  GammaEl y2 = GammaEl::y() * GammaEl::y();
  SaturationReport sat = d_ideal_saturate(Space::Gamma, {}, y2, ctx.cfg.window,
                                          ctx.cfg.max_window, true);
  if (sat.reached_one) {
    rep.status = CheckStatus::Counterexample;
    rep.witness = saturation_witness(sat, "the plain ideal of y^2 claimed to reach the unit", 0);
  }
  return rep;
}

void run_simplicity(Ctx& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  switch (cfg.construction) {
    case Construction::JVec:
    case Construction::CK:
      // both constructions rest on the same coefficient-algebra condition
      ctx.add(saturation_check(
          "differential simplicity: random seed ideals reach the unit", cfg.trials,
          ctx.next_rng(), [&cfg](Rng& r) {
            GammaEl seed = sample_random_nonzero(Space::Gamma, cfg.max_deg, r);
            return d_ideal_saturate(Space::Gamma, {DerivationSpec::D()}, seed, cfg.window,
                                    cfg.max_window);
          }));
      ctx.add(negative_control(ctx));
      break;
    case Construction::JADelta:
      ctx.add(saturation_check(
          "differential simplicity: random seed ideals reach the unit", cfg.trials,
          ctx.next_rng(), [&cfg](Rng& r) {
            GammaEl seed = sample_random_nonzero(Space::A, cfg.max_deg, r);
            return d_ideal_saturate(
                Space::A, {DerivationSpec::D11(), DerivationSpec::D12(), DerivationSpec::D22()},
                seed, cfg.window, cfg.max_window);
          }));
      ctx.add(saturation_check(
          "simplicity: ideals of homogeneous superalgebra seeds reach the unit", 10,
          ctx.next_rng(), [&cfg](Rng& r) {
            JADeltaAlgebra alg = JADeltaAlgebra::standard();
            Parity p = r.coin() ? Parity::Odd : Parity::Even;
            JADeltaEl seed = alg.sample(p, cfg.max_deg, r);
            while (seed.is_zero()) seed = alg.sample(p, cfg.max_deg, r);
            return super_ideal_saturate(seed, cfg.window, cfg.max_window);
          }));
      break;
    case Construction::GCK:
      ctx.add(saturation_check(
          "simplicity: ideals of homogeneous superalgebra seeds reach the unit", 10,
          ctx.next_rng(), [&cfg](Rng& r) {
            GCKAlgebra alg;
            Parity p = r.coin() ? Parity::Odd : Parity::Even;
            CKEl seed = alg.sample(p, cfg.max_deg, r);
            while (seed.is_zero()) seed = alg.sample(p, cfg.max_deg, r);
            return super_ideal_saturate(seed, cfg.window, cfg.max_window);
          }));
      {
        GCKAlgebra alg;
        const CKEl w1 = CKEl::w_slot(1, GammaEl::one());
        const CKEl w2 = CKEl::w_slot(2, GammaEl::one());
        ctx.add(run_trials(
            "w-multiplications extract the w1 slot from even elements", 100, ctx.next_rng(),
            cfg.exec, [&alg, &w1, &w2, &cfg](long, Rng& rng) -> std::optional<Witness> {
              CKEl r = alg.sample(Parity::Even, cfg.max_deg, rng);
              CKEl got = ck_mul(w2, ck_mul(w2, ck_mul(w1, r)));
              CKEl want = CKEl::from_gamma(r.w[0]);
              if (got == want) return std::nullopt;
              Witness w;
              w.inputs = {{"r", ck_describe(r)}};
              w.lhs = ck_describe(got);
              w.rhs = ck_describe(want);
              return w;
            }));
      }
      break;
    case Construction::Double:
      throw std::invalid_argument("the simplicity suite does not apply to the double");
  }
}

CheckReport probe_check(Ctx& ctx) {
  const SuiteConfig& cfg = ctx.cfg;
  CheckReport rep;
  rep.identity = "no bounded-degree module element generates both x and y";
  rep.trials = cfg.trials;
  Rng base = ctx.next_rng();
  for (long i = 0; i < cfg.trials; ++i) {
    Rng r = base.split(static_cast<std::uint64_t>(i));
    GammaEl z = sample_random_nonzero(Space::M, cfg.max_deg, r);
    ProbeResult pr = noncyclic_probe(z, cfg.deg_bound);
    Witness w;
    w.inputs = {{"z", z.str()}};
    w.trial_index = i;
    if (pr.status == ProbeStatus::Solution) {
      bool honest = verify_probe_solution(z, *pr.c, *pr.d);
      w.inputs.emplace_back("c", pr.c->str());
      w.inputs.emplace_back("d", pr.d->str());
      w.lhs = honest ? "a verified generator" : "an unverifiable claimed generator";
      w.rhs = "joint infeasibility expected";
      rep.status = CheckStatus::Counterexample;
      rep.witness = std::move(w);
      return rep;
    }
    if (!verify_probe_farkas(pr)) {
      w.lhs = "infeasibility witness failed its recheck";
      w.rhs = "degree bound " + std::to_string(cfg.deg_bound);
      rep.status = CheckStatus::Counterexample;
      rep.witness = std::move(w);
      return rep;
    }
  }
  return rep;
}

CheckReport parity_obstruction_check(Ctx& ctx) {
  CheckReport rep;
  rep.identity = "degree obstruction: u(1-y^4)h^2 never equals 1 + u y^2 e^2";
  rep.trials = 200;
  Rng base = ctx.next_rng();
  const int half = std::max(1, ctx.cfg.max_deg);
  for (long i = 0; i < rep.trials; ++i) {
    Rng r = base.split(static_cast<std::uint64_t>(i));
    auto even_poly = [&](Rng& rr) {
      std::vector<Rat> c(static_cast<size_t>(2 * half + 1), Rat(0));
      for (int k = 0; k <= half; ++k) c[static_cast<size_t>(2 * k)] = Rat(rr.uniform_int(-3, 3));
      return Poly(std::move(c));
    };
    Poly h = even_poly(r), e = even_poly(r);
    Rat u(0);
    while (u.is_zero()) u = Rat(r.uniform_int(-3, 3));
    ParityDegreeWitness pw = parity_degree_witness(h, e, u);
    bool left_ok = !pw.left_degree || (*pw.left_degree >= 4 && *pw.left_degree % 4 == 0);
    bool right_ok = pw.right_degree == 0 || pw.right_degree % 4 == 2;
    if (pw.distinct && left_ok && right_ok) continue;
    Witness w;
    w.inputs = {{"h", h.str()}, {"e", e.str()}, {"u", u.str()}};
    w.lhs = pw.left_degree ? "left degree " + std::to_string(*pw.left_degree) : "left zero";
    w.rhs = "right degree " + std::to_string(pw.right_degree);
    w.trial_index = i;
    rep.status = CheckStatus::Counterexample;
    rep.witness = std::move(w);
    return rep;
  }
  return rep;
}

void run_noncyclic(Ctx& ctx) {
  if (ctx.cfg.construction != Construction::JADelta)
    throw std::invalid_argument("the noncyclic suite applies only to jadelta");
  ctx.add(probe_check(ctx));
  ctx.add(parity_obstruction_check(ctx));
}

// pointwise comparison of two operator matrices on a shared set of columns
std::optional<std::pair<std::string, std::string>> op_mismatch(const OpMatrix& l,
                                                               const OpMatrix& r,
                                                               const GammaEl& u,
                                                               const GammaEl& v) {
  auto [le, lo] = l.apply(u, v);
  auto [re, ro] = r.apply(u, v);
  if (le == re && lo == ro) return std::nullopt;
  return std::make_pair("(" + le.str() + ", " + lo.str() + ")",
                        "(" + re.str() + ", " + ro.str() + ")");
}

void run_embedding(Ctx& ctx) {
  if (ctx.cfg.construction != Construction::JVec)
    throw std::invalid_argument("the embedding suite applies only to jvec");
  const CheckConfig cc = ctx.check_cfg();

  {
    CheckReport rep;
    rep.identity = "the unit embeds as the identity operator";
    OpMatrix one = embed_special(JVecEl::from_even(GammaEl::one()));
    auto pts = enumerate_basis(Space::Gamma, 8);
    rep.trials = static_cast<long>(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      auto [a, b] = one.apply(pts[i], GammaEl());
      auto [c, d] = one.apply(GammaEl(), pts[i]);
      if (a == pts[i] && b.is_zero() && c.is_zero() && d == pts[i]) continue;
      Witness w;
      w.inputs = {{"point", pts[i].str()}};
      w.lhs = "(" + a.str() + ", " + b.str() + ") / (" + c.str() + ", " + d.str() + ")";
      w.rhs = "identity action";
      w.trial_index = static_cast<long>(i);
      rep.status = CheckStatus::Counterexample;
      rep.witness = std::move(w);
      break;
    }
    ctx.add(rep);
  }

  ctx.add(run_trials(
      "products embed onto the symmetrized operator product", cc.trials, ctx.next_rng(), cc.exec,
      [cc](long idx, Rng& rng) -> std::optional<Witness> {
        JVecAlgebra alg;
        long pattern = idx % 4;
        Rng ru = rng.split(0), rv = rng.split(1), rt = rng.split(2);
        JVecEl u = alg.sample(detail::pattern_bit(pattern, 0) ? Parity::Odd : Parity::Even,
                              cc.max_deg, ru);
        JVecEl v = alg.sample(detail::pattern_bit(pattern, 1) ? Parity::Odd : Parity::Even,
                              cc.max_deg, rv);
        OpMatrix lhs = embed_special(jvec_mul(u, v));
        OpMatrix rhs = opmatrix_super_product(embed_special(u), embed_special(v));

        auto report = [&](const GammaEl& p, const GammaEl& q,
                          std::pair<std::string, std::string> mm) {
          Witness w;
          w.inputs = {{"u", jvec_describe(u)},
                      {"v", jvec_describe(v)},
                      {"column", "(" + p.str() + ", " + q.str() + ")"}};
          w.lhs = mm.first;
          w.rhs = mm.second;
          return w;
        };

        for (const GammaEl& g : enumerate_basis(Space::Gamma, 6)) {
          if (auto mm = op_mismatch(lhs, rhs, g, GammaEl())) return report(g, GammaEl(), *mm);
          if (auto mm = op_mismatch(lhs, rhs, GammaEl(), g)) return report(GammaEl(), g, *mm);
        }
        for (int k = 0; k < 3; ++k) {
          GammaEl p = sample_random(Space::Gamma, cc.max_deg, rt);
          GammaEl q = sample_random(Space::Gamma, cc.max_deg, rt);
          if (auto mm = op_mismatch(lhs, rhs, p, q)) return report(p, q, *mm);
        }
        return std::nullopt;
      }));
}

CheckReport certificate_check(std::string identity, const GammaEl& target, int deg_bound) {
  CheckReport rep;
  rep.identity = std::move(identity);
  rep.trials = 1;
  CertificateResult res = find_certificate(target, deg_bound);
  Witness w;
  w.inputs = {{"target", target.str()}};
  w.trial_index = 0;
  if (!res.found) {
    rep.status = CheckStatus::Inconclusive;
    w.lhs = "no certificate found";
    w.rhs = "degree bound " + std::to_string(deg_bound);
    rep.witness = std::move(w);
    return rep;
  }
  if (!verify_certificate(target, res.cert)) {
    rep.status = CheckStatus::Counterexample;
    w.lhs = "certificate failed the derivation recomputation";
    w.rhs = std::to_string(res.cert.size()) + " terms";
    rep.witness = std::move(w);
    return rep;
  }
  if (!verify_certificate_associators(target, res.cert)) {
    rep.status = CheckStatus::Counterexample;
    w.lhs = "certificate failed the associator recomputation";
    w.rhs = std::to_string(res.cert.size()) + " terms";
    rep.witness = std::move(w);
    return rep;
  }
  return rep;
}

void run_certificates(Ctx& ctx) {
  if (ctx.cfg.construction != Construction::JADelta)
    throw std::invalid_argument("the certificates suite applies only to jadelta");
  ctx.add(certificate_check("the unit is a combination of derivation products", GammaEl::one(),
                            ctx.cfg.deg_bound));
  GammaEl sample_target =
      GammaEl::from_poly(Poly(std::vector<Rat>{Rat(-1), Rat(0), Rat(0), Rat(0), Rat(3)}));
  ctx.add(certificate_check("a sample target has a verified certificate", sample_target,
                            ctx.cfg.deg_bound));
  {
    CheckReport rep;
    rep.identity = "random targets have verified certificates";
    rep.trials = 10;
    Rng base = ctx.next_rng();
    for (long i = 0; i < rep.trials; ++i) {
      Rng r = base.split(static_cast<std::uint64_t>(i));
      GammaEl target = sample_random(Space::A, 2, r);
      CheckReport one = certificate_check("", target, ctx.cfg.deg_bound);
      if (one.status == CheckStatus::Pass) continue;
      rep.status = one.status;
      rep.witness = std::move(one.witness);
      if (rep.witness) rep.witness->trial_index = i;
      break;
    }
    ctx.add(rep);
  }
}

void dispatch(Ctx& ctx, SuiteKind kind) {
  switch (kind) {
    case SuiteKind::Jordan: run_jordan(ctx); break;
    case SuiteKind::Bracket:
      if (ctx.cfg.construction != Construction::Double)
        throw std::invalid_argument("the bracket suite applies only to the double");
      run_bracket(ctx);
      break;
    case SuiteKind::Simplicity: run_simplicity(ctx); break;
    case SuiteKind::Noncyclic: run_noncyclic(ctx); break;
    case SuiteKind::Embedding: run_embedding(ctx); break;
    case SuiteKind::Certificates: run_certificates(ctx); break;
    case SuiteKind::All:
      for (SuiteKind k : applicable_suites(ctx.cfg.construction)) dispatch(ctx, k);
      break;
  }
}

Overall fold(const std::vector<CheckReport>& checks) {
  bool inconclusive = false;
  for (const CheckReport& c : checks) {
    if (c.status == CheckStatus::Counterexample) return Overall::Fail;
    if (c.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Overall::Inconclusive : Overall::Pass;
}

}  // namespace

RunReport run_suite(const SuiteConfig& cfg) {
  if (cfg.suite != SuiteKind::All) {
    auto ok = applicable_suites(cfg.construction);
    if (std::find(ok.begin(), ok.end(), cfg.suite) == ok.end())
      throw std::invalid_argument("the " + suite_name(cfg.suite) + " suite does not apply to " +
                                  construction_name(cfg.construction));
  }
  auto t0 = std::chrono::steady_clock::now();
  Ctx ctx(cfg);
  dispatch(ctx, cfg.suite);
  RunReport rep;
  rep.config = cfg;
  rep.checks = std::move(ctx.checks);
  rep.overall = fold(rep.checks);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

nlohmann::ordered_json report_to_json(const RunReport& rep) {
  nlohmann::ordered_json j;
  // execution policy and wall time are deliberately not serialized: the
  // report must be byte-identical across policies and machines
  j["config"] = {{"construction", construction_name(rep.config.construction)},
                 {"suite", suite_name(rep.config.suite)},
                 {"trials", rep.config.trials},
                 {"maxDeg", rep.config.max_deg},
                 {"window", rep.config.window},
                 {"maxWindow", rep.config.max_window},
                 {"degBound", rep.config.deg_bound},
                 {"seed", rep.config.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckReport& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["identity"] = c.identity;
    jc["trials"] = c.trials;
    jc["status"] = check_status_name(c.status);
    if (c.witness) {
      nlohmann::ordered_json jw;
      jw["inputs"] = nlohmann::ordered_json::array();
      for (const auto& [k, v] : c.witness->inputs)
        jw["inputs"].push_back({{"name", k}, {"value", v}});
      jw["lhs"] = c.witness->lhs;
      jw["rhs"] = c.witness->rhs;
      jw["trialIndex"] = c.witness->trial_index;
      jc["witness"] = std::move(jw);
    } else {
      jc["witness"] = nullptr;
    }
    j["checks"].push_back(std::move(jc));
  }
  j["overall"] = overall_name(rep.overall);
  return j;
}

}  // namespace jsuper
