#include "sclab/periods.hpp"

#include <cmath>

namespace sclab {

PeriodVector integrate_cycle(const CyclePath& cy, const SurfaceParams& p, bool rotated,
                             double tol) {
  const QuadResult q = integrate_pieces(cy.pieces, cy.start, p,
                                        {Form::phi1, Form::phi2, Form::phi3}, rotated, tol);
  double scale = 0;
  for (const cplx& v : q.values) scale += std::abs(v);
  if (q.err > 1e3 * tol * (1.0 + scale))
    fail(errc::non_convergence, "periods", "quadrature error stagnates above tolerance");
  PeriodVector out;
  out.p1 = q.values[0];
  out.p2 = q.values[1];
  out.p3 = q.values[2];
  out.err = q.err;
  return out;
}

double scherk_end_residue(const SurfaceParams& p) {
  if (!(p.y > p.x))
    fail(errc::singularity, "periods", "end residue diverges as y -> x");
  return 2.0 * M_PI / std::sqrt(p.cot2 - p.tan2) * std::sqrt((p.y + p.x) / (p.y - p.x));
}

double vertical_period(const SurfaceParams& p, double tol) {
  Cycles cyc(p, tol);
  const CyclePath bp = cyc.beta_plus();
  const QuadResult q = integrate_pieces(bp.pieces, bp.start, p, {Form::dh}, false, tol);
  return 2.0 * std::abs(q.values[0].real());
}

IdentityReport verify_identities(Cycles& cycles, double tol) {
  const SurfaceParams& p = cycles.params();
  IdentityReport rep;

  const CyclePath bp = cycles.beta_plus();
  const QuadResult half = integrate_pieces(bp.pieces, bp.start, p, {Form::g_dh}, false, tol);
  CyclePath bc = cycles.beta_closed();
  const QuadResult full = integrate_pieces(bc.pieces, bc.start, p, {Form::g_dh}, false, tol);
  rep.resid_b = std::abs(full.values[0].real() - 2.0 * half.values[0].real());

  const PeriodVector c1 = integrate_cycle(cycles.curve1(), p, false, tol);
  rep.resid_a = std::abs(c1.p1.real() + full.values[0].real());
  rep.resid_a_alt = std::abs(c1.p1.real());

  const PeriodVector c2 = integrate_cycle(cycles.curve2(), p, false, tol);
  rep.resid_c1 = std::abs(c2.p1.real());
  rep.resid_c2 = std::abs(c2.p2.real());

  const PeriodVector c3 = integrate_cycle(cycles.curve3(), p, false, tol);
  rep.resid_d1 = std::abs(c3.p1.real());
  rep.resid_d2 = std::abs(c3.p2.real());
  rep.curve3_p3 = std::abs(c3.p3.real());

  rep.err = half.err + full.err + c1.err + c2.err + c3.err;
  if (rep.resid_b > 10.0 * tol + rep.err)
    fail(errc::calibration, "periods", "half/whole loop identity fails: wrong representative");
  return rep;
}

}  // namespace sclab
