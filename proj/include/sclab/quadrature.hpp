#pragma once

#include <vector>

#include "sclab/continuation.hpp"

namespace sclab {

// Integrand selector. All forms are dz-densities evaluated on a SheetPoint;
// phi1/phi2/phi3 are the immersion forms, optionally with the Gauss map
// rotated by e^{-i pi/4}.
enum class Form { dh, g_dh, dh_over_g, phi1, phi2, phi3 };

cplx eval_form(const SheetPoint& sp, const SurfaceParams& p, Form f, bool rotated);

// A straight segment of an integration path. `sing_a`/`sing_b` mark an
// inverse-square-root endpoint; those ends are integrated after the
// substitution u^2 = |z - end| which makes the integrand bounded.
struct Piece {
  cplx a, b;
  bool sing_a = false;
  bool sing_b = false;
};

struct QuadResult {
  std::vector<cplx> values;  // one per requested form
  double err = 0;            // summed two-level Richardson bound
  SheetPoint end;            // continued endpoint sheet
};

// Integrate several forms in one continuation sweep along consecutive
// pieces. `tol` is the absolute tolerance per form.
QuadResult integrate_pieces(const std::vector<Piece>& pieces, const SheetPoint& start,
                            const SurfaceParams& p, const std::vector<Form>& forms,
                            bool rotated, double tol);

// Convenience wrapper for one smooth polyline piece chain given as waypoints.
QuadResult integrate_polyline(const std::vector<cplx>& waypoints, const SheetPoint& start,
                              const SurfaceParams& p, const std::vector<Form>& forms,
                              bool rotated, double tol);

}  // namespace sclab
