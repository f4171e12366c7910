#pragma once

#include <string>
#include <vector>

#include "jsuper/ck.hpp"
#include "jsuper/gamma.hpp"
#include "jsuper/jadelta.hpp"
#include "jsuper/linsolve.hpp"

namespace jsuper {

/*
 * One step of a saturation trace: `element` was produced by applying `op`
 * to the element at `parent` (-1 means the seed).  Steps are kept only for
 * the chain that actually feeds the final combination, so a seed that is
 * already the unit has an empty trace.
 */
struct SatStep {
  std::string op;
  int parent = -1;
  std::string element;
};

struct SatCombinationTerm {
  int step = -1;  // index into trace, -1 for the seed
  Rat coeff;
};

struct SaturationReport {
  bool reached_one = false;
  int window = 0;     // window in effect when the search stopped
  int basis_dim = 0;  // rank of the accumulated span at that point
  std::vector<SatStep> trace;
  std::vector<SatCombinationTerm> combination;
  std::string seed_text;
  std::string label;  // which algebra/space was saturated
  // texts of every independent element found, seed first; filled only on
  // fixpoint runs so invariance of the full span can be tested
  std::vector<std::string> span_elements;
};

/*
 * Span of the seed's closure under multiplication by the space's generators
 * and under the given derivations, restricted to the degree window.
 * Candidates that leave the window are skipped, not truncated.  If the unit
 * is not reached the window grows by 4 up to max_window before giving up;
 * every element the trace mentions is an honest member of the generated
 * ideal, so reached_one = true is a proof.  run_to_fixpoint disables the
 * early exit so invariance properties of the full span can be tested.
 */
SaturationReport d_ideal_saturate(Space space, const std::vector<DerivationSpec>& derivs,
                                  const GammaEl& seed, int window, int max_window,
                                  bool run_to_fixpoint = false);

// same closure driven inside J(A, Delta) by its generating multipliers
SaturationReport super_ideal_saturate(const JADeltaEl& seed, int window, int max_window);

// and inside the slot-constrained Cheng-Kac subalgebra
SaturationReport super_ideal_saturate(const CKEl& seed, int window, int max_window);

/*
 * Replay a report against the algebra it came from: recompute every trace
 * step from its parent and check that the combination really sums to the
 * unit.  Used by tests; returns false on any mismatch.
 */
bool replay_saturation(const SaturationReport& rep);

}  // namespace jsuper
