#include "sclab/weierstrass.hpp"

namespace sclab {

cplx gauss_map_squared(const SheetPoint& sp, const SurfaceParams& p) {
  if (std::abs(p.x - sp.z) < 1e-13 * (1.0 + std::abs(sp.z)))
    fail(errc::pole, "weierstrass", "g^2 pole at z = x");
  if (std::abs(p.cot_a - sp.w) < 1e-13 * (1.0 + std::abs(sp.w)))
    fail(errc::pole, "weierstrass", "g^2 pole at w = cot(alpha)");
  return gauss_map_squared_raw(sp.z, sp.w, p);
}

cplx height_differential(const SheetPoint& sp, cplx dz, const SurfaceParams&) {
  if (std::abs(sp.zprime) < 1e-12)
    fail(errc::singularity, "weierstrass", "dh undefined at a torus branch point");
  return dz / sp.zprime;
}

FormValue phi_forms(const SheetPoint& sp, cplx dz, const SurfaceParams& p, bool rotated) {
  const cplx dh = height_differential(sp, dz, p);
  const cplx g = rotated ? gauss_map_rotated(sp) : sp.g;
  if (std::abs(g) < 1e-300 || !std::isfinite(std::abs(g)))
    fail(errc::pole, "weierstrass", "phi forms need g away from 0 and infinity");
  FormValue v;
  v.phi1 = 0.5 * (1.0 / g - g) * dh;
  v.phi2 = cplx(0, 0.5) * (1.0 / g + g) * dh;
  v.phi3 = dh;
  return v;
}

double dh_consistency_residual(const SheetPoint& sp, const SurfaceParams& p) {
  const cplx dwdz = w_deriv(sp, p);
  const cplx lhs = dwdz * dwdz * sp.zprime * sp.zprime;
  const cplx w2 = sp.w * sp.w;
  const cplx rhs = (w2 - p.tan2) * (w2 - p.cot2);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-30);
}

cplx chm_gauss_quartic(cplx w, const SurfaceParams& p) {
  const double scale = 1.0 + std::abs(w);
  if (std::abs(w + p.tan_a) < 1e-13 * scale)
    fail(errc::pole, "weierstrass", "limit quartic pole at w = -tan(alpha)");
  if (std::abs(p.cot_a - w) < 1e-13 * scale)
    fail(errc::pole, "weierstrass", "limit quartic pole at w = cot(alpha)");
  const cplx r = (p.cot_a + w) / (p.cot_a - w);
  return (w - p.tan_a) / (p.tan_a + w) * r * r * r;
}

SheetPoint apply_involution(Involution kind, const SheetPoint& sp) {
  SheetPoint out;
  switch (kind) {
    case Involution::rho:
      out = sp;
      out.g = -sp.g;
      break;
    case Involution::conj_z:
      out.z = std::conj(sp.z);
      out.zprime = -std::conj(sp.zprime);
      out.w = std::conj(sp.w);
      out.g = std::conj(sp.g);
      break;
    case Involution::anticonj_z:
      out.z = std::conj(sp.z);
      out.zprime = -std::conj(sp.zprime);
      out.w = std::conj(sp.w);
      out.g = -std::conj(sp.g);
      break;
    case Involution::sigma:
      out.z = -std::conj(sp.z);
      out.zprime = std::conj(sp.zprime);
      out.w = -std::conj(sp.w);
      out.g = -1.0 / std::conj(sp.g);
      break;
  }
  return out;
}

}  // namespace sclab
