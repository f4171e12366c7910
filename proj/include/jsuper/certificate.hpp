#pragma once

#include <vector>

#include "jsuper/gamma.hpp"

namespace jsuper {

/*
 * One summand  left * D_deriv(argument) * right  with all three factors in
 * A and deriv one of 11, 12, 22.  A certificate for a target t in A is a
 * list of such summands adding up to t; it witnesses that t lies in
 * A D11(A) + A D12(A) + A D22(A).  The search always emits right = 1; the
 * slot exists because the verified form carries it.
 */
struct CertTerm {
  GammaEl left;
  int deriv = 11;
  GammaEl argument;
  GammaEl right = GammaEl::one();
};

using Certificate = std::vector<CertTerm>;

struct CertificateResult {
  bool found = false;
  GammaEl target;
  int deg_bound = 0;
  Certificate cert;
};

/*
 * Search for a certificate with both factors over the A-basis up to
 * deg_bound.  A zero target has the empty certificate; a miss at this
 * bound is reported as not found, it disproves nothing.
 */
CertificateResult find_certificate(const GammaEl& target, int deg_bound);

// recompute the sum through the derivations themselves
bool verify_certificate(const GammaEl& target, const Certificate& cert);

/*
 * Recompute the sum through associators in the ambient superalgebra, using
 *   (m, bar(x), bar(x)) = D11(m),
 *   (m, bar(x), bar(y)) = D12(m),
 *   (m, bar(y), bar(y)) = D22(m).
 * A certificate passing both routes ties the linear algebra to the product.
 */
bool verify_certificate_associators(const GammaEl& target, const Certificate& cert);

}  // namespace jsuper
