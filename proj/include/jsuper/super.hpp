#pragma once

#include <omp.h>

#include <concepts>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsuper/rational.hpp"
#include "jsuper/rng.hpp"

namespace jsuper {

enum class Parity { Even = 0, Odd = 1 };

// classification of a stored element; Zero counts as homogeneous of either parity
enum class ParityClass { Zero, Even, Odd, Mixed };

/*
 * Carrier contract for a superalgebra under test.  All operations are exact;
 * sample() draws integer coefficients in [-3, 3] over the carrier's basis
 * up to the degree bound and may return zero.
 */
template <typename A>
concept SuperCarrier = requires(const A& alg, const typename A::Element& u,
                                const typename A::Element& v, const Rat& s, Parity par,
                                int max_deg, Rng& rng) {
  typename A::Element;
  { alg.mult(u, v) } -> std::same_as<typename A::Element>;
  { alg.add(u, v) } -> std::same_as<typename A::Element>;
  { alg.sub(u, v) } -> std::same_as<typename A::Element>;
  { alg.scale(s, u) } -> std::same_as<typename A::Element>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.unit() } -> std::same_as<std::optional<typename A::Element>>;
  { alg.is_zero(u) } -> std::same_as<bool>;
  { alg.parity_of(u) } -> std::same_as<ParityClass>;
  { alg.sample(par, max_deg, rng) } -> std::same_as<typename A::Element>;
  { alg.describe(u) } -> std::same_as<std::string>;
  { alg.name() } -> std::same_as<std::string>;
};

enum class CheckStatus { Pass, Counterexample, VacuousPass, Inconclusive };

inline std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Counterexample: return "counterexample";
    case CheckStatus::VacuousPass: return "vacuous-pass";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Witness {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs, rhs;
  long trial_index = -1;
};

struct CheckReport {
  std::string identity;
  long trials = 0;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
};

enum class ExecPolicy { Serial, Parallel };

struct CheckConfig {
  long trials = 200;
  int max_deg = 4;
  ExecPolicy exec = ExecPolicy::Serial;
};

/*
 * Shared trial engine.  `trial` maps (flat index, private rng) to a witness
 * on failure; the report always carries the failure with the smallest flat
 * index, so the serial and OpenMP paths produce identical results and
 * reruns with the same seed reproduce the same witness.
 */
template <typename TrialFn>
CheckReport run_trials(std::string identity, long total, const Rng& base, ExecPolicy exec,
                       TrialFn&& trial) {
  CheckReport rep;
  rep.identity = std::move(identity);
  rep.trials = total;

  long best_idx = -1;
  std::optional<Witness> best;

  if (exec == ExecPolicy::Serial) {
    for (long i = 0; i < total; ++i) {
      Rng r = base.split(static_cast<std::uint64_t>(i));
      if (auto w = trial(i, r)) {
        best_idx = i;
        best = std::move(w);
        break;
      }
    }
  } else {
    std::mutex mu;
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < total; ++i) {
      {
        std::lock_guard<std::mutex> lk(mu);
        if (best_idx >= 0 && i > best_idx) continue;
      }
      Rng r = base.split(static_cast<std::uint64_t>(i));
      auto w = trial(i, r);
      if (w) {
        std::lock_guard<std::mutex> lk(mu);
        if (best_idx < 0 || i < best_idx) {
          best_idx = i;
          best = std::move(w);
        }
      }
    }
  }

  if (best) {
    best->trial_index = best_idx;
    rep.status = CheckStatus::Counterexample;
    rep.witness = std::move(best);
  }
  return rep;
}

namespace detail {

inline int sign_pow(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// parity bits of the slots of a flat trial index: pattern p in [0, 2^n)
inline int pattern_bit(long pattern, int slot) { return (pattern >> slot) & 1; }

template <SuperCarrier A>
typename A::Element sample_general(const A& alg, int max_deg, Rng& rng) {
  Rng re = rng.split(0), ro = rng.split(1);
  return alg.add(alg.sample(Parity::Even, max_deg, re), alg.sample(Parity::Odd, max_deg, ro));
}

template <SuperCarrier A>
void record_inputs(const A& alg, Witness& w,
                   std::initializer_list<std::pair<const char*, const typename A::Element*>> xs) {
  for (auto& [name, el] : xs) w.inputs.emplace_back(name, alg.describe(*el));
}

}  // namespace detail

/*
 * (1)  a b = (-1)^{p(a) p(b)} b a  on homogeneous a, b.
 * Trials split evenly over the 4 parity patterns; the pattern is the high
 * part of the flat index so witnesses stay reproducible.
 */
template <SuperCarrier A>
CheckReport check_identity_1(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  const long patterns = 4;
  return run_trials(
      "(1) super-commutativity", patterns * cfg.trials, rng, cfg.exec,
      [&](long idx, Rng r) -> std::optional<Witness> {
        long pat = idx / cfg.trials;
        int pa = detail::pattern_bit(pat, 0), pb = detail::pattern_bit(pat, 1);
        Rng ra = r.split(0), rb = r.split(1);
        auto a = alg.sample(pa ? Parity::Odd : Parity::Even, cfg.max_deg, ra);
        auto b = alg.sample(pb ? Parity::Odd : Parity::Even, cfg.max_deg, rb);
        auto lhs = alg.mult(a, b);
        auto rhs = alg.scale(Rat(detail::sign_pow(pa * pb)), alg.mult(b, a));
        if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
        Witness w;
        detail::record_inputs(alg, w, {{"a", &a}, {"b", &b}});
        w.lhs = alg.describe(lhs);
        w.rhs = alg.describe(rhs);
        return w;
      });
}

/*
 * (2)  R_{a^2} R_a = R_a R_{a^2}  on homogeneous a, checked pointwise on a
 * random (generally inhomogeneous) test element t: ((t a) a^2) = ((t a^2) a).
 * Operators act on the right and compose left to right.
 */
template <SuperCarrier A>
CheckReport check_identity_2(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  const long patterns = 2;
  return run_trials(
      "(2) operator commutation of R_a and R_{a^2}", patterns * cfg.trials, rng, cfg.exec,
      [&](long idx, Rng r) -> std::optional<Witness> {
        long pat = idx / cfg.trials;
        int pa = detail::pattern_bit(pat, 0);
        Rng ra = r.split(0), rt = r.split(1);
        auto a = alg.sample(pa ? Parity::Odd : Parity::Even, cfg.max_deg, ra);
        auto t = detail::sample_general(alg, cfg.max_deg, rt);
        auto a2 = alg.mult(a, a);
        auto lhs = alg.mult(alg.mult(t, a2), a);
        auto rhs = alg.mult(alg.mult(t, a), a2);
        if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
        Witness w;
        detail::record_inputs(alg, w, {{"a", &a}, {"t", &t}});
        w.lhs = alg.describe(lhs);
        w.rhs = alg.describe(rhs);
        return w;
      });
}

/*
 * (3)  R_a R_b R_c + (-1)^{p(a)p(b)+p(a)p(c)+p(b)p(c)} R_c R_b R_a
 *        + (-1)^{p(b)p(c)} R_{(ac)b}
 *      = R_a R_{bc} + (-1)^{p(a)p(b)} R_b R_{ac} + (-1)^{p(a)p(c)+p(b)p(c)} R_c R_{ab}
 * on homogeneous a, b, c, checked pointwise on a random test element.
 */
template <SuperCarrier A>
CheckReport check_identity_3(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  const long patterns = 8;
  return run_trials(
      "(3) five-term operator identity", patterns * cfg.trials, rng, cfg.exec,
      [&](long idx, Rng r) -> std::optional<Witness> {
        long pat = idx / cfg.trials;
        int pa = detail::pattern_bit(pat, 0), pb = detail::pattern_bit(pat, 1),
            pc = detail::pattern_bit(pat, 2);
        Rng ra = r.split(0), rb = r.split(1), rc = r.split(2), rt = r.split(3);
        auto a = alg.sample(pa ? Parity::Odd : Parity::Even, cfg.max_deg, ra);
        auto b = alg.sample(pb ? Parity::Odd : Parity::Even, cfg.max_deg, rb);
        auto c = alg.sample(pc ? Parity::Odd : Parity::Even, cfg.max_deg, rc);
        auto t = detail::sample_general(alg, cfg.max_deg, rt);

        auto ab = alg.mult(a, b);
        auto ac = alg.mult(a, c);
        auto bc = alg.mult(b, c);
        auto acb = alg.mult(ac, b);

        auto lhs = alg.mult(alg.mult(alg.mult(t, a), b), c);
        lhs = alg.add(lhs, alg.scale(Rat(detail::sign_pow(pa * pb + pa * pc + pb * pc)),
                                     alg.mult(alg.mult(alg.mult(t, c), b), a)));
        lhs = alg.add(lhs, alg.scale(Rat(detail::sign_pow(pb * pc)), alg.mult(t, acb)));

        auto rhs = alg.mult(alg.mult(t, a), bc);
        rhs = alg.add(rhs, alg.scale(Rat(detail::sign_pow(pa * pb)), alg.mult(alg.mult(t, b), ac)));
        rhs = alg.add(rhs, alg.scale(Rat(detail::sign_pow(pa * pc + pb * pc)),
                                     alg.mult(alg.mult(t, c), ab)));

        if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
        Witness w;
        detail::record_inputs(alg, w, {{"a", &a}, {"b", &b}, {"c", &c}, {"t", &t}});
        w.lhs = alg.describe(lhs);
        w.rhs = alg.describe(rhs);
        return w;
      });
}

// (x, z, y) = (xz)y - x(zy), all products in the algebra under test
template <SuperCarrier A>
typename A::Element associator(const A& alg, const typename A::Element& x,
                               const typename A::Element& z, const typename A::Element& y) {
  return alg.sub(alg.mult(alg.mult(x, z), y), alg.mult(x, alg.mult(z, y)));
}

/*
 * (4)  (x, tz, y) = (-1)^{p(x)p(t)} t (x, z, y) + (-1)^{p(y)p(z)} (x, t, y) z
 * on homogeneous x, t, z, y.
 */
template <SuperCarrier A>
CheckReport check_identity_4(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  const long patterns = 16;
  return run_trials(
      "(4) associator derivation identity", patterns * cfg.trials, rng, cfg.exec,
      [&](long idx, Rng r) -> std::optional<Witness> {
        long pat = idx / cfg.trials;
        int px = detail::pattern_bit(pat, 0), pt = detail::pattern_bit(pat, 1),
            pz = detail::pattern_bit(pat, 2), py = detail::pattern_bit(pat, 3);
        Rng rx = r.split(0), rt = r.split(1), rz = r.split(2), ry = r.split(3);
        auto x = alg.sample(px ? Parity::Odd : Parity::Even, cfg.max_deg, rx);
        auto t = alg.sample(pt ? Parity::Odd : Parity::Even, cfg.max_deg, rt);
        auto z = alg.sample(pz ? Parity::Odd : Parity::Even, cfg.max_deg, rz);
        auto y = alg.sample(py ? Parity::Odd : Parity::Even, cfg.max_deg, ry);

        auto lhs = associator(alg, x, alg.mult(t, z), y);
        auto rhs = alg.scale(Rat(detail::sign_pow(px * pt)), alg.mult(t, associator(alg, x, z, y)));
        rhs = alg.add(rhs, alg.scale(Rat(detail::sign_pow(py * pz)),
                                     alg.mult(associator(alg, x, t, y), z)));

        if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
        Witness w;
        detail::record_inputs(alg, w, {{"x", &x}, {"t", &t}, {"z", &z}, {"y", &y}});
        w.lhs = alg.describe(lhs);
        w.rhs = alg.describe(rhs);
        return w;
      });
}

// products of homogeneous elements must land in the parity predicted by the grading
template <SuperCarrier A>
CheckReport check_grading(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  const long patterns = 4;
  return run_trials(
      "grading closure", patterns * cfg.trials, rng, cfg.exec,
      [&](long idx, Rng r) -> std::optional<Witness> {
        long pat = idx / cfg.trials;
        int pa = detail::pattern_bit(pat, 0), pb = detail::pattern_bit(pat, 1);
        Rng ra = r.split(0), rb = r.split(1);
        auto a = alg.sample(pa ? Parity::Odd : Parity::Even, cfg.max_deg, ra);
        auto b = alg.sample(pb ? Parity::Odd : Parity::Even, cfg.max_deg, rb);
        auto prod = alg.mult(a, b);
        ParityClass got = alg.parity_of(prod);
        ParityClass want = ((pa + pb) % 2 == 0) ? ParityClass::Even : ParityClass::Odd;
        if (got == ParityClass::Zero || got == want) return std::nullopt;
        Witness w;
        detail::record_inputs(alg, w, {{"a", &a}, {"b", &b}});
        w.lhs = alg.describe(prod);
        w.rhs = (want == ParityClass::Even) ? "an even element" : "an odd element";
        return w;
      });
}

template <SuperCarrier A>
std::vector<CheckReport> check_jordan_suite(const A& alg, const CheckConfig& cfg, const Rng& rng) {
  std::vector<CheckReport> out;
  out.push_back(check_grading(alg, cfg, rng.split(0)));
  out.push_back(check_identity_1(alg, cfg, rng.split(1)));
  out.push_back(check_identity_2(alg, cfg, rng.split(2)));
  out.push_back(check_identity_3(alg, cfg, rng.split(3)));
  out.push_back(check_identity_4(alg, cfg, rng.split(4)));
  return out;
}

/*
 * Supercommutative associative carrier: a SuperCarrier that can also project
 * onto its even and odd parts and knows whether the odd part is nonzero at
 * all.  Hosts for Jordan brackets.
 */
template <typename C>
concept SuperCommCarrier = SuperCarrier<C> && requires(const C& alg, const typename C::Element& u) {
  { alg.even_part(u) } -> std::same_as<typename C::Element>;
  { alg.odd_part(u) } -> std::same_as<typename C::Element>;
  { alg.has_odd_part() } -> std::same_as<bool>;
};

template <SuperCommCarrier C>
struct BracketSpec {
  const C* carrier;
  std::function<typename C::Element(const typename C::Element&, const typename C::Element&)> bracket;
  std::string name;
};

/*
 * Test-support switches for the bracket checker.  drop_unit_term removes the
 * {a,1}bc correction from the axiom-(5) right side, which turns the checker
 * into a deliberately broken variant that genuine brackets with {a,1} != 0
 * must fail.
 */
struct BracketCheckOptions {
  bool drop_unit_term_axiom5 = false;
};

/*
 * Jordan bracket axioms on a supercommutative unital carrier:
 *  (5) {a, bc} = {a, b}c + (-1)^{p(a)p(b)} b{a, c} - {a, 1}bc
 *  (6) {a, b} = -(-1)^{p(a)p(b)} {b, a}
 *  (7) {d, d^2-ish}: {d, {d, d}} = {d, d}{d, 1} for odd d
 * (7) is vacuous when the carrier has no odd part and is then reported as
 * VacuousPass.  Returns one report per axiom.
 */
template <SuperCommCarrier C>
std::vector<CheckReport> check_jordan_bracket(const BracketSpec<C>& spec, const CheckConfig& cfg,
                                              const Rng& rng, BracketCheckOptions opt = {}) {
  const C& alg = *spec.carrier;
  auto unit = alg.unit();
  if (!unit) throw std::invalid_argument("bracket carrier must be unital");
  const auto one = *unit;
  bool odd_ok = alg.has_odd_part();

  auto sample_par = [&](int bit, int max_deg, Rng& r) {
    return alg.sample(bit ? Parity::Odd : Parity::Even, max_deg, r);
  };

  std::vector<CheckReport> out;

  {
    // axiom (5): patterns over (p(a), p(b), p(c)); odd patterns skipped when
    // the carrier has no odd part
    std::vector<long> pats;
    for (long p = 0; p < 8; ++p)
      if (odd_ok || p == 0) pats.push_back(p);
    out.push_back(run_trials(
        "(5) bracket Leibniz with unit correction",
        static_cast<long>(pats.size()) * cfg.trials, rng.split(0), cfg.exec,
        [&](long idx, Rng r) -> std::optional<Witness> {
          long pat = pats[static_cast<size_t>(idx / cfg.trials)];
          int pa = detail::pattern_bit(pat, 0), pb = detail::pattern_bit(pat, 1);
          Rng ra = r.split(0), rb = r.split(1), rc = r.split(2);
          auto a = sample_par(detail::pattern_bit(pat, 0), cfg.max_deg, ra);
          auto b = sample_par(detail::pattern_bit(pat, 1), cfg.max_deg, rb);
          auto c = sample_par(detail::pattern_bit(pat, 2), cfg.max_deg, rc);
          auto lhs = spec.bracket(a, alg.mult(b, c));
          auto rhs = alg.add(alg.mult(spec.bracket(a, b), c),
                             alg.scale(Rat(detail::sign_pow(pa * pb)),
                                       alg.mult(b, spec.bracket(a, c))));
          if (!opt.drop_unit_term_axiom5)
            rhs = alg.sub(rhs, alg.mult(alg.mult(spec.bracket(a, one), b), c));
          if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
          Witness w;
          detail::record_inputs(alg, w, {{"a", &a}, {"b", &b}, {"c", &c}});
          w.lhs = alg.describe(lhs);
          w.rhs = alg.describe(rhs);
          return w;
        }));
  }

  {
    std::vector<long> pats;
    for (long p = 0; p < 4; ++p)
      if (odd_ok || p == 0) pats.push_back(p);
    out.push_back(run_trials(
        "(6) bracket super-anticommutativity",
        static_cast<long>(pats.size()) * cfg.trials, rng.split(1), cfg.exec,
        [&](long idx, Rng r) -> std::optional<Witness> {
          long pat = pats[static_cast<size_t>(idx / cfg.trials)];
          int pa = detail::pattern_bit(pat, 0), pb = detail::pattern_bit(pat, 1);
          Rng ra = r.split(0), rb = r.split(1);
          auto a = sample_par(pa, cfg.max_deg, ra);
          auto b = sample_par(pb, cfg.max_deg, rb);
          auto lhs = spec.bracket(a, b);
          auto rhs = alg.scale(Rat(-detail::sign_pow(pa * pb)), spec.bracket(b, a));
          if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
          Witness w;
          detail::record_inputs(alg, w, {{"a", &a}, {"b", &b}});
          w.lhs = alg.describe(lhs);
          w.rhs = alg.describe(rhs);
          return w;
        }));
  }

  if (!odd_ok) {
    CheckReport rep;
    rep.identity = "(7) odd-element bracket constraint";
    rep.trials = 0;
    rep.status = CheckStatus::VacuousPass;
    out.push_back(rep);
  } else {
    out.push_back(run_trials(
        "(7) odd-element bracket constraint", cfg.trials, rng.split(2), cfg.exec,
        [&](long, Rng r) -> std::optional<Witness> {
          Rng rd = r.split(0);
          auto d = alg.sample(Parity::Odd, cfg.max_deg, rd);
          auto lhs = spec.bracket(d, spec.bracket(d, d));
          auto rhs = alg.mult(spec.bracket(d, d), spec.bracket(d, one));
          if (alg.is_zero(alg.sub(lhs, rhs))) return std::nullopt;
          Witness w;
          detail::record_inputs(alg, w, {{"d", &d}});
          w.lhs = alg.describe(lhs);
          w.rhs = alg.describe(rhs);
          return w;
        }));
  }

  return out;
}

/*
 * Kantor double J = C + Cx of a supercommutative carrier with a bracket.
 * Writing elements u + vx, the product is
 *   (u1 + v1 x)(u2 + v2 x)
 *     = u1 u2 + {v1, v2^even} - {v1, v2^odd}
 *       + (u1 v2 + v1 u2^even - v1 u2^odd) x,
 * which packs the sign rules a(bx) = (ab)x, (ax)b = (-1)^{p(b)}(ab)x and
 * (ax)(bx) = (-1)^{p(b)}{a, b} for homogeneous b.
 */
template <SuperCommCarrier C>
class KantorDouble {
 public:
  struct Element {
    typename C::Element u, v;  // u + v x
  };

  explicit KantorDouble(BracketSpec<C> spec) : spec_(std::move(spec)) {}

  const C& carrier() const { return *spec_.carrier; }

  Element from_parts(typename C::Element u, typename C::Element v) const {
    return Element{std::move(u), std::move(v)};
  }

  Element mult(const Element& l, const Element& r) const {
    const C& c = *spec_.carrier;
    auto re = c.even_part(r.v), ro = c.odd_part(r.v);
    auto ue = c.even_part(r.u), uo = c.odd_part(r.u);
    auto gamma = c.add(c.mult(l.u, r.u),
                       c.sub(spec_.bracket(l.v, re), spec_.bracket(l.v, ro)));
    auto xpart = c.add(c.mult(l.u, r.v), c.sub(c.mult(l.v, ue), c.mult(l.v, uo)));
    return Element{std::move(gamma), std::move(xpart)};
  }

  Element add(const Element& l, const Element& r) const {
    const C& c = *spec_.carrier;
    return Element{c.add(l.u, r.u), c.add(l.v, r.v)};
  }

  Element sub(const Element& l, const Element& r) const {
    const C& c = *spec_.carrier;
    return Element{c.sub(l.u, r.u), c.sub(l.v, r.v)};
  }

  Element scale(const Rat& s, const Element& e) const {
    const C& c = *spec_.carrier;
    return Element{c.scale(s, e.u), c.scale(s, e.v)};
  }

  Element zero() const {
    const C& c = *spec_.carrier;
    return Element{c.zero(), c.zero()};
  }

  std::optional<Element> unit() const {
    const C& c = *spec_.carrier;
    auto u = c.unit();
    if (!u) return std::nullopt;
    return Element{*u, c.zero()};
  }

  bool is_zero(const Element& e) const {
    const C& c = *spec_.carrier;
    return c.is_zero(e.u) && c.is_zero(e.v);
  }

  // J0 = C0 + C1 x, J1 = C1 + C0 x
  ParityClass parity_of(const Element& e) const {
    const C& c = *spec_.carrier;
    bool even = c.is_zero(c.odd_part(e.u)) && c.is_zero(c.even_part(e.v));
    bool odd = c.is_zero(c.even_part(e.u)) && c.is_zero(c.odd_part(e.v));
    if (even && odd) return ParityClass::Zero;
    if (even) return ParityClass::Even;
    if (odd) return ParityClass::Odd;
    return ParityClass::Mixed;
  }

  Element sample(Parity par, int max_deg, Rng& rng) const {
    const C& c = *spec_.carrier;
    Rng r0 = rng.split(0), r1 = rng.split(1);
    if (par == Parity::Even)
      return Element{c.sample(Parity::Even, max_deg, r0), c.sample(Parity::Odd, max_deg, r1)};
    return Element{c.sample(Parity::Odd, max_deg, r0), c.sample(Parity::Even, max_deg, r1)};
  }

  std::string describe(const Element& e) const {
    const C& c = *spec_.carrier;
    if (is_zero(e)) return "0";
    std::string s;
    if (!c.is_zero(e.u)) s += c.describe(e.u);
    if (!c.is_zero(e.v)) {
      if (!s.empty()) s += " + ";
      s += "bar(" + c.describe(e.v) + ")";
    }
    return s;
  }

  std::string name() const { return "double[" + spec_.name + "]"; }

 private:
  BracketSpec<C> spec_;
};

}  // namespace jsuper
