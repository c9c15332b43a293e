#pragma once

#include "sclab/sheet.hpp"

namespace sclab {

// Values of the three immersion forms contracted with a tangent dz.
// phi1^2 + phi2^2 + phi3^2 = 0 holds algebraically.
struct FormValue {
  cplx phi1, phi2, phi3;
};

// g^2 from the sheet data; throws at the poles z = x and w = cot(alpha).
cplx gauss_map_squared(const SheetPoint& sp, const SurfaceParams& p);

// e^{-i pi/4} g
inline cplx gauss_map_rotated(const SheetPoint& sp) {
  static const cplx rot = std::exp(cplx(0, -M_PI / 4.0));
  return rot * sp.g;
}

// dh contracted with dz: dz / zprime. Throws at the torus branch points.
cplx height_differential(const SheetPoint& sp, cplx dz, const SurfaceParams& p);

// (phi1, phi2, phi3) contracted with dz, optionally with the rotated Gauss map.
FormValue phi_forms(const SheetPoint& sp, cplx dz, const SurfaceParams& p, bool rotated);

// Residual of the dw-form of the height differential against dz/zprime:
// |(dw/dz * zprime)^2 - (w^2-tan^2)(w^2-cot^2)| scaled; asserted small on tracks.
double dh_consistency_residual(const SheetPoint& sp, const SurfaceParams& p);

// x = y = 1 limit of g^4 as a function of w alone; throws at w = -tan, w = cot.
cplx chm_gauss_quartic(cplx w, const SurfaceParams& p);

// Symmetry involutions acting on sheet data.
enum class Involution {
  rho,        // (g, z) -> (-g, z)
  conj_z,     // (g, z) -> (conj g, conj z)
  anticonj_z, // (g, z) -> (-conj g, conj z)
  sigma       // (g, z) -> (-1/conj g, -conj z)
};

SheetPoint apply_involution(Involution kind, const SheetPoint& sp);

}  // namespace sclab
