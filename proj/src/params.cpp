#include "sclab/params.hpp"

#include <algorithm>
#include <cmath>

namespace sclab {

namespace {

SurfaceParams derive(double alpha, double x, double y, bool relaxed) {
  SurfaceParams p;
  p.alpha = alpha;
  p.x = x;
  p.y = y;
  p.relaxed = relaxed;
  p.tan_a = std::tan(alpha);
  p.cot_a = 1.0 / p.tan_a;
  p.tan2 = p.tan_a * p.tan_a;
  p.cot2 = p.cot_a * p.cot_a;

  const double y2 = y * y;
  const double s = y2 + 1.0 / y2 + p.tan2 + p.cot2;
  p.xi = cplx(0.0, std::sqrt(s));

  // c = cot^2 y^2 (y^2 + y^-2 + 2 tan^2)^2 / (2 + cot^2 (y^2 + y^-2))^2
  const double num = p.cot2 * y2 * std::pow(y2 + 1.0 / y2 + 2.0 * p.tan2, 2);
  const double den = std::pow(2.0 + p.cot2 * (y2 + 1.0 / y2), 2);
  p.c = cplx(num / den, 0.0);

  p.w_pole_q = std::sqrt((1.0 + y2 * p.cot2) / (y2 + p.cot2));

  const cplx I(0, 1);
  const cplx cand[10] = {cplx(x, 0),  cplx(-x, 0), I * p.tan_a,    -I * p.tan_a, I * p.cot_a,
                         -I * p.cot_a, cplx(y, 0),  cplx(-y, 0), I * p.w_pole_q, -I * p.w_pole_q};
  for (const cplx& z : cand) {
    bool dup = false;
    for (const cplx& w : p.critical)
      if (std::abs(z - w) < 1e-12) { dup = true; break; }
    if (!dup) p.critical.push_back(z);
  }

  double dmin = 1e300;
  for (size_t i = 0; i < p.critical.size(); ++i)
    for (size_t j = i + 1; j < p.critical.size(); ++j)
      dmin = std::min(dmin, std::abs(p.critical[i] - p.critical[j]));
  p.clearance = 1e-3 * dmin;
  return p;
}

}  // namespace

SurfaceParams make_params(double alpha, double x, double y) {
  if (!(alpha > 0.0) || !(alpha < M_PI / 4.0))
    fail(errc::domain, "riemann_core", "alpha must lie in (0, pi/4)");
  if (!(x > 0.0) || !std::isfinite(y))
    fail(errc::domain, "riemann_core", "x must be positive and y finite");
  if (!(y > x))
    fail(errc::ordering, "riemann_core", "require 0 < x < y");
  return derive(alpha, x, y, false);
}

SurfaceParams make_params_relaxed(double alpha, double x, double y) {
  if (!(alpha > 0.0) || !(alpha < M_PI / 4.0))
    fail(errc::domain, "riemann_core", "alpha must lie in (0, pi/4)");
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(y))
    fail(errc::domain, "riemann_core", "x, y must be positive finite");
  return derive(alpha, x, y, true);
}

}  // namespace sclab
