#include "jsuper/saturate.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "jsuper/evalops.hpp"
#include "jsuper/textio.hpp"

namespace jsuper {

namespace {

template <typename E>
struct LabeledOp {
  std::string name;
  std::function<E(const E&)> apply;
};

// everything the generic worklist needs to know about one algebra
template <typename E>
struct SatDriver {
  std::string label;
  std::vector<LabeledOp<E>> ops;
  E unit;
  std::function<std::optional<QVec>(const E&, int)> coords;
  std::function<int(int)> dim;
  std::function<std::string(const E&)> describe;
};

template <typename E>
SaturationReport saturate(const SatDriver<E>& drv, const E& seed, int window, int max_window,
                          bool run_to_fixpoint) {
  if (window <= 0 || max_window < window)
    throw std::invalid_argument("saturation window must satisfy 0 < window <= max_window");

  SaturationReport rep;
  rep.label = drv.label;
  rep.seed_text = drv.describe(seed);

  for (int W = window; W <= max_window; W += 4) {
    rep.window = W;
    auto seed_c = drv.coords(seed, W);
    if (!seed_c) continue;  // seed itself is above this window
    auto unit_c = drv.coords(drv.unit, W);
    if (!unit_c) throw std::logic_error("unit does not fit the saturation window");

    struct Entry {
      E elem;
      std::string op;
      int parent;
    };
    std::vector<Entry> entries;
    RowSpan span(drv.dim(W));

    span.insert(*seed_c);
    entries.push_back(Entry{seed, "", -1});
    bool reached = span.contains(*unit_c);

    for (size_t next = 0; next < entries.size() && !(reached && !run_to_fixpoint); ++next) {
      for (const auto& op : drv.ops) {
        E cand = op.apply(entries[next].elem);
        auto c = drv.coords(cand, W);
        if (!c) continue;  // leaves the window: skipped, not truncated
        if (!span.insert(*c)) continue;
        entries.push_back(Entry{std::move(cand), op.name, static_cast<int>(next)});
        if (!reached) reached = span.contains(*unit_c);
        if (reached && !run_to_fixpoint) break;
      }
    }

    rep.basis_dim = span.rank();
    if (run_to_fixpoint) {
      rep.span_elements.clear();
      for (const Entry& en : entries) rep.span_elements.push_back(drv.describe(en.elem));
    }
    if (!reached) continue;
    rep.reached_one = true;

    auto combo = span.express(*unit_c);
    if (!combo) throw std::logic_error("span claims the unit but cannot express it");

    // keep only the ancestry that feeds the combination
    std::vector<char> needed(entries.size(), 0);
    for (size_t i = 0; i < combo->size(); ++i)
      if (!(*combo)[i].is_zero()) needed[i] = 1;
    for (size_t i = entries.size(); i-- > 1;)
      if (needed[i] && entries[i].parent >= 0) needed[static_cast<size_t>(entries[i].parent)] = 1;

    std::vector<int> pos(entries.size(), -1);  // seed keeps position -1
    for (size_t i = 1; i < entries.size(); ++i) {
      if (!needed[i]) continue;
      pos[i] = static_cast<int>(rep.trace.size());
      rep.trace.push_back(SatStep{entries[i].op, pos[static_cast<size_t>(entries[i].parent)],
                                  drv.describe(entries[i].elem)});
    }
    for (size_t i = 0; i < combo->size(); ++i)
      if (!(*combo)[i].is_zero()) rep.combination.push_back(SatCombinationTerm{pos[i], (*combo)[i]});
    return rep;
  }
  return rep;
}

GammaEl y_squared() { return GammaEl::y() * GammaEl::y(); }
GammaEl x_times_y() { return GammaEl::x() * GammaEl::y(); }

SatDriver<GammaEl> gamma_driver(Space space, const std::vector<DerivationSpec>& derivs) {
  SatDriver<GammaEl> drv;
  drv.label = "d-ideal:" + space_name(space);
  switch (space) {
    case Space::Gamma:
      drv.ops.push_back({"mul:y", [](const GammaEl& u) { return u * GammaEl::y(); }});
      drv.ops.push_back({"mul:x", [](const GammaEl& u) { return u * GammaEl::x(); }});
      break;
    case Space::A:
      drv.ops.push_back({"mul:y^2", [](const GammaEl& u) { return u * y_squared(); }});
      drv.ops.push_back({"mul:x*y", [](const GammaEl& u) { return u * x_times_y(); }});
      break;
    case Space::M:
      throw std::invalid_argument("d-ideal saturation needs a multiplicatively closed space");
  }
  for (const auto& d : derivs)
    drv.ops.push_back(
        {"deriv:" + d.label, [d](const GammaEl& u) { return apply_derivation(d, u); }});
  drv.unit = GammaEl::one();
  drv.coords = [space](const GammaEl& u, int W) { return coords_in_basis(u, space, W); };
  drv.dim = [space](int W) { return static_cast<int>(enumerate_basis(space, W).size()); };
  drv.describe = [](const GammaEl& u) { return u.str(); };
  return drv;
}

SatDriver<JADeltaEl> jadelta_driver() {
  SatDriver<JADeltaEl> drv;
  drv.label = "super:jadelta";
  auto mul_by = [](JADeltaEl m) {
    return [m = std::move(m)](const JADeltaEl& u) { return jadelta_mul(u, m, MulPath::Direct); };
  };
  drv.ops.push_back({"mul:y^2", mul_by(JADeltaEl::checked(y_squared(), GammaEl()))});
  drv.ops.push_back({"mul:x*y", mul_by(JADeltaEl::checked(x_times_y(), GammaEl()))});
  drv.ops.push_back({"mul:bar(x)", mul_by(JADeltaEl::checked(GammaEl(), GammaEl::x()))});
  drv.ops.push_back({"mul:bar(y)", mul_by(JADeltaEl::checked(GammaEl(), GammaEl::y()))});
  drv.unit = JADeltaEl::checked(GammaEl::one(), GammaEl());
  drv.coords = [](const JADeltaEl& u, int W) -> std::optional<QVec> {
    auto ec = coords_in_basis(u.even, Space::A, W);
    auto oc = coords_in_basis(u.odd, Space::M, W);
    if (!ec || !oc) return std::nullopt;
    ec->insert(ec->end(), oc->begin(), oc->end());
    return ec;
  };
  drv.dim = [](int W) {
    return static_cast<int>(enumerate_basis(Space::A, W).size() +
                            enumerate_basis(Space::M, W).size());
  };
  drv.describe = [](const JADeltaEl& u) { return jadelta_describe(u); };
  return drv;
}

SatDriver<CKEl> gck_driver() {
  SatDriver<CKEl> drv;
  drv.label = "super:gck";
  auto mul_by = [](CKEl m) {
    return [m = std::move(m)](const CKEl& u) { return ck_mul(u, m); };
  };
  const GammaEl one = GammaEl::one(), x = GammaEl::x(), y = GammaEl::y();
  drv.ops.push_back({"mul:y^2", mul_by(CKEl::from_gamma(y_squared()))});
  drv.ops.push_back({"mul:x*y", mul_by(CKEl::from_gamma(x_times_y()))});
  for (int i = 1; i <= 3; ++i)
    drv.ops.push_back({"mul:w" + std::to_string(i) + "(1)", mul_by(CKEl::w_slot(i, one))});
  drv.ops.push_back({"mul:bar(x)", mul_by(CKEl::bar(x))});
  drv.ops.push_back({"mul:bar(y)", mul_by(CKEl::bar(y))});
  for (int i = 1; i <= 3; ++i) {
    drv.ops.push_back({"mul:x" + std::to_string(i) + "(x)", mul_by(CKEl::x_slot(i, x))});
    drv.ops.push_back({"mul:x" + std::to_string(i) + "(y)", mul_by(CKEl::x_slot(i, y))});
  }
  drv.unit = CKEl::from_gamma(one);
  drv.coords = [](const CKEl& u, int W) -> std::optional<QVec> {
    QVec out;
    auto push = [&](const GammaEl& g, Space s) {
      auto c = coords_in_basis(g, s, W);
      if (!c) return false;
      out.insert(out.end(), c->begin(), c->end());
      return true;
    };
    if (!push(u.a, Space::A)) return std::nullopt;
    for (const auto& g : u.w)
      if (!push(g, Space::A)) return std::nullopt;
    if (!push(u.b, Space::M)) return std::nullopt;
    for (const auto& g : u.xb)
      if (!push(g, Space::M)) return std::nullopt;
    return out;
  };
  drv.dim = [](int W) {
    return static_cast<int>(4 * enumerate_basis(Space::A, W).size() +
                            4 * enumerate_basis(Space::M, W).size());
  };
  drv.describe = [](const CKEl& u) { return ck_describe(u); };
  return drv;
}

/*
 * Replaying a report recomputes every trace element from scratch, so the
 * only trust placed in the report is the list of op names.
 */
struct GammaReplay {
  using E = GammaEl;
  E unit() const { return GammaEl::one(); }
  E parse(const std::string& t) const { return parse_gamma(t); }
  std::string describe(const E& u) const { return u.str(); }
  E add(const E& a, const E& b) const { return a + b; }
  E scale(const Rat& s, const E& a) const { return s * a; }
  E apply(const std::string& op, const E& u) const {
    if (op.rfind("mul:", 0) == 0) return u * parse_gamma(op.substr(4));
    if (op.rfind("deriv:", 0) == 0) {
      const std::string lbl = op.substr(6);
      for (const DerivationSpec* d : {&DerivationSpec::D(), &DerivationSpec::D11(),
                                      &DerivationSpec::D12(), &DerivationSpec::D22()})
        if (d->label == lbl) return apply_derivation(*d, u);
    }
    throw std::invalid_argument("unknown saturation op: " + op);
  }
};

struct JADeltaReplay {
  using E = JADeltaEl;
  E unit() const { return JADeltaEl::checked(GammaEl::one(), GammaEl()); }
  E parse(const std::string& t) const { return parse_jadelta(t); }
  std::string describe(const E& u) const { return jadelta_describe(u); }
  E add(const E& a, const E& b) const { return {a.even + b.even, a.odd + b.odd}; }
  E scale(const Rat& s, const E& a) const { return {s * a.even, s * a.odd}; }
  E apply(const std::string& op, const E& u) const {
    if (op.rfind("mul:", 0) == 0)
      return jadelta_mul(u, parse_jadelta(op.substr(4)), MulPath::Direct);
    throw std::invalid_argument("unknown saturation op: " + op);
  }
};

struct CKReplay {
  using E = CKEl;
  E unit() const { return CKEl::from_gamma(GammaEl::one()); }
  E parse(const std::string& t) const { return parse_ck(t); }
  std::string describe(const E& u) const { return ck_describe(u); }
  E add(const E& a, const E& b) const { return CKAlgebra().add(a, b); }
  E scale(const Rat& s, const E& a) const { return CKAlgebra().scale(s, a); }
  E apply(const std::string& op, const E& u) const {
    if (op.rfind("mul:", 0) == 0) return ck_mul(u, parse_ck_expr(op.substr(4)));
    throw std::invalid_argument("unknown saturation op: " + op);
  }
};

template <typename Ctx>
bool replay_with(const SaturationReport& rep, const Ctx& cx) {
  using E = typename Ctx::E;
  E seed = cx.parse(rep.seed_text);
  std::vector<E> vals;
  vals.reserve(rep.trace.size());
  for (const auto& step : rep.trace) {
    if (step.parent < -1 || step.parent >= static_cast<int>(vals.size())) return false;
    const E& par = step.parent < 0 ? seed : vals[static_cast<size_t>(step.parent)];
    E v = cx.apply(step.op, par);
    if (cx.describe(v) != step.element) return false;
    vals.push_back(std::move(v));
  }
  E acc = cx.scale(Rat(0), seed);
  for (const auto& t : rep.combination) {
    if (t.step < -1 || t.step >= static_cast<int>(vals.size())) return false;
    const E& ref = t.step < 0 ? seed : vals[static_cast<size_t>(t.step)];
    acc = cx.add(acc, cx.scale(t.coeff, ref));
  }
  return acc == cx.unit();
}

}  // namespace

SaturationReport d_ideal_saturate(Space space, const std::vector<DerivationSpec>& derivs,
                                  const GammaEl& seed, int window, int max_window,
                                  bool run_to_fixpoint) {
  if (seed.is_zero()) throw std::invalid_argument("saturation seed must be nonzero");
  if (!in_space(seed, space))
    throw std::invalid_argument("saturation seed is not in " + space_name(space));
  return saturate(gamma_driver(space, derivs), seed, window, max_window, run_to_fixpoint);
}

SaturationReport super_ideal_saturate(const JADeltaEl& seed, int window, int max_window) {
  if (seed.is_zero()) throw std::invalid_argument("saturation seed must be nonzero");
  return saturate(jadelta_driver(), seed, window, max_window, false);
}

SaturationReport super_ideal_saturate(const CKEl& seed, int window, int max_window) {
  if (seed.is_zero()) throw std::invalid_argument("saturation seed must be nonzero");
  return saturate(gck_driver(), seed, window, max_window, false);
}

bool replay_saturation(const SaturationReport& rep) {
  if (!rep.reached_one) return false;
  try {
    if (rep.label.rfind("d-ideal:", 0) == 0) return replay_with(rep, GammaReplay{});
    if (rep.label == "super:jadelta") return replay_with(rep, JADeltaReplay{});
    if (rep.label == "super:gck") return replay_with(rep, CKReplay{});
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace jsuper
