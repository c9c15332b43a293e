#include "sclab/sheet.hpp"

namespace sclab {

cplx w_squared(cplx z, cplx zprime, const SurfaceParams& p) {
  const cplx N = z * z - 1.0 / (p.y * p.y);
  const cplx D = (zprime + p.xi * z) * (zprime + p.xi * z);
  const cplx den = p.c * N * N - D;
  const double scale = std::abs(p.c * N * N) + std::abs(D);
  if (std::abs(den) < 1e-12 * scale)
    fail(errc::pole, "riemann_core", "w^2 pole: c f^2 = 1 at this point");
  return p.cot2 + (p.cot2 - p.tan2) * D / den;
}

static SheetPoint base_point_impl(const SurfaceParams& p, bool flipped) {
  SheetPoint sp;
  sp.z = cplx(0, 0);
  sp.zprime = cplx(0, 1);
  cplx w = std::sqrt(w_squared_raw(sp.z, sp.zprime, p));
  if (w.real() < 0) w = -w;
  sp.w = flipped ? w : -w;
  cplx g = std::sqrt(gauss_map_squared_raw(sp.z, sp.w, p));
  if (g.real() < 0) g = -g;
  sp.g = g;
  return sp;
}

SheetPoint base_point(const SurfaceParams& p) { return base_point_impl(p, false); }
SheetPoint base_point_flipped(const SurfaceParams& p) { return base_point_impl(p, true); }

}  // namespace sclab
