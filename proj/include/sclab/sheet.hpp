#pragma once

#include <cmath>
#include <complex>

#include "sclab/params.hpp"

namespace sclab {

// A point of the 4-sheeted cover over the z-plane: the base value z plus
// coherently continued square roots. Invariants (checked in tests):
//   zprime^2 = -(z^2+tan^2)(z^2+cot^2)
//   w^2      = cot^2 + (cot^2-tan^2)/(c f^2 - 1),  f = (z^2-1/y^2)/(zprime+xi z)
//   g^2      = (x+z)/(x-z) * (cot+w)/(cot-w)
struct SheetPoint {
  cplx z;
  cplx zprime;
  cplx w;
  cplx g;
};

// ---- algebraic right-hand sides -------------------------------------------

inline cplx zprime_squared(cplx z, const SurfaceParams& p) {
  const cplx z2 = z * z;
  return -(z2 + p.tan2) * (z2 + p.cot2);
}

// d(zprime)/dz on the sheet through (z, zprime)
inline cplx zprime_deriv(cplx z, cplx zprime, const SurfaceParams& p) {
  return -z * (2.0 * z * z + p.tan2 + p.cot2) / zprime;
}

inline cplx f_value(cplx z, cplx zprime, const SurfaceParams& p) {
  return (z * z - 1.0 / (p.y * p.y)) / (zprime + p.xi * z);
}

// w^2 in a form that stays finite where f blows up:
//   w^2 = cot^2 + (cot^2-tan^2) D / (c N^2 - D),  N = z^2-1/y^2, D = (zprime+xi z)^2
inline cplx w_squared_raw(cplx z, cplx zprime, const SurfaceParams& p) {
  const cplx N = z * z - 1.0 / (p.y * p.y);
  const cplx D = (zprime + p.xi * z) * (zprime + p.xi * z);
  return p.cot2 + (p.cot2 - p.tan2) * D / (p.c * N * N - D);
}

// Throwing variant: rejects the poles of w^2 (c f^2 = 1).
cplx w_squared(cplx z, cplx zprime, const SurfaceParams& p);

// d(w^2)/dz along the sheet
inline cplx w_squared_deriv(cplx z, cplx zprime, const SurfaceParams& p) {
  const cplx N = z * z - 1.0 / (p.y * p.y);
  const cplx S = zprime + p.xi * z;
  const cplx Np = 2.0 * z;
  const cplx Sp = zprime_deriv(z, zprime, p) + p.xi;
  const cplx D = S * S;
  const cplx Dp = 2.0 * S * Sp;
  const cplx den = p.c * N * N - D;
  const cplx denp = 2.0 * p.c * N * Np - Dp;
  return (p.cot2 - p.tan2) * (Dp * den - D * denp) / (den * den);
}

// dw/dz = (w^2)' / (2w)
inline cplx w_deriv(const SheetPoint& sp, const SurfaceParams& p) {
  return w_squared_deriv(sp.z, sp.zprime, p) / (2.0 * sp.w);
}

inline cplx gauss_map_squared_raw(cplx z, cplx w, const SurfaceParams& p) {
  return (p.x + z) / (p.x - z) * (p.cot_a + w) / (p.cot_a - w);
}

// g'/g: logarithmic derivative of the Gauss map along the sheet
inline cplx g_log_deriv(const SheetPoint& sp, const SurfaceParams& p) {
  const cplx wp = w_deriv(sp, p);
  return 0.5 * (1.0 / (p.x + sp.z) + 1.0 / (p.x - sp.z) +
                wp * (1.0 / (p.cot_a + sp.w) + 1.0 / (p.cot_a - sp.w)));
}

// ---- residuals (scale-aware) -----------------------------------------------

inline double torus_residual(const SheetPoint& sp, const SurfaceParams& p) {
  return std::abs(sp.zprime * sp.zprime - zprime_squared(sp.z, p));
}

inline double w_residual(const SheetPoint& sp, const SurfaceParams& p) {
  return std::abs(sp.w * sp.w - w_squared_raw(sp.z, sp.zprime, p));
}

inline double g_residual(const SheetPoint& sp, const SurfaceParams& p) {
  return std::abs(sp.g * sp.g - gauss_map_squared_raw(sp.z, sp.w, p));
}

// ---- the distinguished sheet at z = 0 --------------------------------------
//
// zprime(0) = +i and w(0) = -sqrt(w^2(0)) < 0, g(0) = +sqrt(g^2(0)) > 0.
// The w-branch is the one on which a small loop around the puncture over
// z = -y picks up the Scherk-end residue of the closed form; the opposite
// choice puts the base on the reciprocal end (see tests/test_periods.cpp).
SheetPoint base_point(const SurfaceParams& p);

// Same with w(0) > 0, kept for the seed-convention calibration test.
SheetPoint base_point_flipped(const SurfaceParams& p);

}  // namespace sclab
