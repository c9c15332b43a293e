#pragma once

#include <complex>
#include <vector>

#include "sclab/errors.hpp"

namespace sclab {

using cplx = std::complex<double>;

// One member of the surface family: angle alpha in (0, pi/4) fixing the
// rectangular torus, plus the two real positions x < y on the torus.
// Derived constants are cached here; everything downstream is a pure
// function of this struct.
struct SurfaceParams {
  double alpha = 0;
  double x = 0;
  double y = 0;

  double tan_a = 0;   // tan(alpha)
  double cot_a = 0;   // cot(alpha)
  double tan2 = 0;    // tan^2
  double cot2 = 0;    // cot^2
  cplx xi;            // i*sqrt(y^2 + y^-2 + tan^2 + cot^2), Im(xi) > 2
  cplx c;             // real positive constant in the w^2 relation
  double w_pole_q = 0;  // w has poles over z = +-i*q
  bool relaxed = false; // y <= x allowed (probe/limit evaluations)

  std::vector<cplx> critical;  // {+-x, +-i tan, +-i cot, +-y, +-i q}, deduped
  double clearance = 0;        // default minimum path distance to `critical`
};

// Validating constructor. alpha in (0, pi/4), 0 < x < y.
SurfaceParams make_params(double alpha, double x, double y);

// Same derived data without the y > x ordering requirement (x = y and
// y < x configurations are needed by the limit and bracketing probes).
SurfaceParams make_params_relaxed(double alpha, double x, double y);

}  // namespace sclab
