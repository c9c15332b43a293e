#pragma once

#include "sclab/cycles.hpp"

namespace sclab {

// Complex period triple with a quadrature error bound.
struct PeriodVector {
  cplx p1, p2, p3;
  double err = 0;
};

// Integrate the immersion forms along a cycle representative.
PeriodVector integrate_cycle(const CyclePath& cy, const SurfaceParams& p, bool rotated,
                             double tol = 1e-8);

// Closed form for the Scherk-end residue of phi2 at w = cot(alpha):
// 2 pi / sqrt(cot^2 - tan^2) * sqrt((y+x)/(y-x)). Throws as y -> x.
double scherk_end_residue(const SurfaceParams& p);

// 2 Re int_{beta+} dh, normalized positive.
double vertical_period(const SurfaceParams& p, double tol = 1e-10);

// Residual report for the period identities used to validate the cycle set.
struct IdentityReport {
  double resid_a = 0;      // |Re int_c1 phi1 + Re loop_beta g dh| as stated
  double resid_a_alt = 0;  // |Re int_c1 phi1| + |Re loop_beta(outer) g dh| diagnostic
  double resid_b = 0;      // |Re loop_beta g dh - 2 Re int_beta+ g dh|
  double resid_c1 = 0, resid_c2 = 0;  // |Re curve2 (phi1, phi2)|
  double resid_d1 = 0, resid_d2 = 0;  // |Re curve3 (phi1, phi2)|
  double curve3_p3 = 0;               // |Re curve3 phi3|, must exceed 0.1
  double err = 0;
  bool pass(double tol) const {
    return resid_b < tol && resid_c1 < tol && resid_c2 < tol && resid_d1 < tol &&
           resid_d2 < tol && curve3_p3 > 0.1;
  }
};

IdentityReport verify_identities(Cycles& cycles, double tol = 1e-8);

}  // namespace sclab
