#pragma once

#include <optional>
#include <string>

#include "jsuper/gamma.hpp"
#include "jsuper/linsolve.hpp"

namespace jsuper {

enum class ProbeStatus { Infeasible, Solution };

/*
 * Bounded-degree test of whether z could generate M as an A-module: the two
 * decoupled exact systems  z c = x  and  z d = y  over the A-basis up to
 * deg_bound.  Infeasible systems carry a Farkas vector over the M-coordinate
 * rows (basis degree row_deg), so the verdict can be rechecked without
 * rerunning the elimination.
 */
struct ProbeResult {
  ProbeStatus status = ProbeStatus::Infeasible;
  GammaEl z;
  int deg_bound = 0;
  int row_deg = 0;
  std::optional<GammaEl> c, d;             // solutions, in A, when a system is feasible
  std::optional<QVec> farkas_x, farkas_y;  // witnesses when it is not
};

// z must be a nonzero member of M
ProbeResult noncyclic_probe(const GammaEl& z, int deg_bound);

// recheck a Farkas witness against freshly rebuilt columns; true if it
// honestly separates the right-hand side from the column span
bool verify_probe_farkas(const ProbeResult& res);

/*
 * Full recheck of a claimed generator: z c = x, z d = y, the compatibility
 * relations  x d = y c  and  x = x(ac + bd), y = y(ac + bd)  for
 * z = x a + y b, and membership of c, d in A.
 */
bool verify_probe_solution(const GammaEl& z, const GammaEl& c, const GammaEl& d);

/*
 * The degree obstruction that rules out unbounded-degree solutions: for any
 * h1, e1 in F[y^2] and scalar u, the polynomials  u (1 - y^4) h1^2  and
 * 1 + u y^2 e1^2  differ, because the first has degree 0 mod 4 (or is zero)
 * while the second has degree 2 mod 4 (or is the constant 1).
 */
struct ParityDegreeWitness {
  std::optional<int> left_degree;  // nullopt for the zero polynomial
  int right_degree = 0;
  bool distinct = false;
};

// h1 and e1 must have even support
ParityDegreeWitness parity_degree_witness(const Poly& h1, const Poly& e1, const Rat& u);

}  // namespace jsuper
