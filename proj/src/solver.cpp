#include "sclab/solver.hpp"

#include <array>
#include <cmath>

namespace sclab {

namespace {

constexpr double kQuadTol = 1e-9;  // quadrature tolerance inside residuals

double curve1_F1(const SurfaceParams& p, double tol, double* err) {
  Cycles cyc(p, tol);
  const PeriodVector v = integrate_cycle(cyc.curve1(), p, false, tol);
  if (err) *err = v.err;
  return v.p1.real();
}

}  // namespace

PeriodResidual period_residual(double alpha, double x, double y, double tol) {
  const SurfaceParams p =
      y > x ? make_params(alpha, x, y) : make_params_relaxed(alpha, x, y);
  PeriodResidual r;
  double e1 = 0;
  const double qt = std::min(tol, kQuadTol);
  r.F1 = curve1_F1(p, qt, &e1);
  r.err = e1;
  if (std::abs(y - x) < 1e-12) {
    // collapsed one-dimensional limit problem
    r.F2 = r.F1;
    return r;
  }
  Cycles cyc(p, qt);
  const PeriodVector bp = integrate_cycle(cyc.branch_pair(), p, false, qt);
  const double T2 = 2.0 * M_PI / std::sqrt(p.cot2 - p.tan2) *
                    std::sqrt((p.y + p.x) / std::abs(p.y - p.x));
  r.F2 = bp.p2.real() - T2;
  r.err += bp.err;
  return r;
}

AlphaStar chm_alpha_star_full(double tol) {
  const double lo = 0.01, hi = M_PI / 4.0 - 0.01;
  const int n = 64;
  auto f = [&](double a) { return period_residual(a, 1.0, 1.0, 1e-8).F1; };

  AlphaStar out;
  std::array<double, 64> vals{};
  for (int k = 0; k < n; ++k) vals[k] = f(lo + (hi - lo) * k / (n - 1));
  int bracket = -1;
  for (int k = 0; k + 1 < n; ++k) {
    if (vals[k] == 0.0 || (vals[k] < 0) != (vals[k + 1] < 0)) {
      if (vals[k] == 0.0 && k > 0) continue;
      ++out.sign_changes;
      if (bracket < 0) bracket = k;
    }
  }
  if (out.sign_changes == 0)
    fail(errc::non_convergence, "solver", "no sign change of the limit residual on the scan");
  if (out.sign_changes > 1)
    fail(errc::calibration, "solver", "multiple sign changes of the limit residual");

  double a = lo + (hi - lo) * bracket / (n - 1);
  double b = lo + (hi - lo) * (bracket + 1) / (n - 1);
  double fa = vals[bracket];
  while (b - a > 0.25 * tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa < 0) == (fm < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  out.bisect = 0.5 * (a + b);

  // secant from the original bracket endpoints
  double s0 = lo + (hi - lo) * bracket / (n - 1);
  double s1 = lo + (hi - lo) * (bracket + 1) / (n - 1);
  double f0 = vals[bracket], f1 = vals[bracket + 1];
  for (int it = 0; it < 80 && std::abs(s1 - s0) > 0.25 * tol; ++it) {
    const double s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
    s0 = s1;
    f0 = f1;
    s1 = std::clamp(s2, lo, hi);
    f1 = f(s1);
    if (f1 == 0.0) break;
  }
  out.secant = s1;
  out.residual = std::abs(f(out.bisect));
  return out;
}

double chm_alpha_star(double tol) { return chm_alpha_star_full(tol).bisect; }

FamilyPoint solve_at_alpha(double alpha, std::pair<double, double> seed, double tol) {
  double vx = seed.first, vy = seed.second;
  PeriodResidual F = period_residual(alpha, vx, vy, tol);
  double nrm = std::hypot(F.F1, F.F2);
  for (int it = 0; it < 40; ++it) {
    if (F.max_abs() < tol) break;
    const double hx = 1e-5 * (1.0 + std::abs(vx));
    const double hy = 1e-5 * (1.0 + std::abs(vy));
    const PeriodResidual Fx = period_residual(alpha, vx + hx, vy, tol);
    const PeriodResidual Fy = period_residual(alpha, vx, vy + hy, tol);
    const double j11 = (Fx.F1 - F.F1) / hx, j12 = (Fy.F1 - F.F1) / hy;
    const double j21 = (Fx.F2 - F.F2) / hx, j22 = (Fy.F2 - F.F2) / hy;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14 * (std::abs(j11 * j22) + std::abs(j12 * j21) + 1e-30))
      fail(errc::non_convergence, "solver", "singular Jacobian in the period solve");
    const double dx = (-F.F1 * j22 + F.F2 * j12) / det;
    const double dy = (-j11 * F.F2 + j21 * F.F1) / det;
    double s = 1.0;
    bool accepted = false;
    for (int h = 0; h < 8; ++h) {
      const double tx = vx + s * dx, ty = vy + s * dy;
      if (tx > 0.05 && ty > 0.05) {
        try {
          const PeriodResidual Ft = period_residual(alpha, tx, ty, tol);
          const double nt = std::hypot(Ft.F1, Ft.F2);
          if (nt < nrm) {
            vx = tx;
            vy = ty;
            F = Ft;
            nrm = nt;
            accepted = true;
            break;
          }
        } catch (const error&) {
        }
      }
      s *= 0.5;
    }
    if (!accepted)
      fail(errc::non_convergence, "solver", "damped Newton stalled");
  }
  if (F.max_abs() >= tol)
    fail(errc::non_convergence, "solver", "period solve did not reach tolerance");
  FamilyPoint fp;
  fp.alpha = alpha;
  fp.x = vx;
  fp.y = vy;
  fp.residual = F;
  return fp;
}

std::vector<FamilyPoint> continue_family(double t_max, int steps, double tol) {
  if (steps < 2) fail(errc::bad_config, "solver", "need at least two continuation steps");
  const double astar = chm_alpha_star(1e-9);

  std::vector<FamilyPoint> out;
  FamilyPoint anchor;
  anchor.t = 0;
  anchor.alpha = astar;
  anchor.x = 1.0;
  anchor.y = 1.0;
  anchor.residual = period_residual(astar, 1.0, 1.0, tol);
  out.push_back(anchor);

  // first step off the limit point: a short alpha offset with seeds along the
  // slab direction of the existence proof
  const double h0 = 0.012;
  FamilyPoint first;
  bool got = false;
  for (double sx : {-4.0, -2.5, -5.5, -1.5}) {
    try {
      first = solve_at_alpha(astar + h0, {1.0 + sx * h0, 1.0 + (sx + 2.0) * h0}, tol);
      got = true;
      break;
    } catch (const error&) {
    }
  }
  if (!got)
    fail(errc::non_convergence, "solver", "no family point found next to the anchor");
  out.push_back(first);

  // secant tangent in (alpha, x, y)
  std::array<double, 3> u{first.alpha, first.x, first.y};
  std::array<double, 3> uprev{anchor.alpha, anchor.x, anchor.y};
  double h = 2.5 * h0;
  int accepted = 1;
  while (accepted < steps && u[0] < M_PI / 4.0 - 0.02) {
    std::array<double, 3> tan{u[0] - uprev[0], u[1] - uprev[1], u[2] - uprev[2]};
    const double tn = std::sqrt(tan[0] * tan[0] + tan[1] * tan[1] + tan[2] * tan[2]);
    for (double& v : tan) v /= tn;
    bool ok = false;
    std::array<double, 3> unew{};
    for (int halving = 0; halving < 8 && !ok; ++halving) {
      std::array<double, 3> pred{u[0] + h * tan[0], u[1] + h * tan[1], u[2] + h * tan[2]};
      try {
        // corrector: Newton on (F1, F2, tangent plane) in (alpha, x, y)
        std::array<double, 3> v = pred;
        for (int it = 0; it < 25; ++it) {
          const PeriodResidual F = period_residual(v[0], v[1], v[2], tol);
          const double c3 = tan[0] * (v[0] - pred[0]) + tan[1] * (v[1] - pred[1]) +
                            tan[2] * (v[2] - pred[2]);
          if (F.max_abs() < tol && std::abs(c3) < 1e-12) {
            unew = v;
            ok = true;
            break;
          }
          double J[3][3], rhs[3] = {-F.F1, -F.F2, -c3};
          for (int j = 0; j < 3; ++j) {
            std::array<double, 3> vp = v;
            const double hj = 1e-5 * (1.0 + std::abs(v[j]));
            vp[j] += hj;
            const PeriodResidual Fp = period_residual(vp[0], vp[1], vp[2], tol);
            J[0][j] = (Fp.F1 - F.F1) / hj;
            J[1][j] = (Fp.F2 - F.F2) / hj;
            J[2][j] = tan[j];
          }
          // solve 3x3 by Cramer
          const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                             J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                             J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
          if (std::abs(det) < 1e-18) break;
          auto solve3 = [&](int col) {
            double M[3][3];
            for (int r = 0; r < 3; ++r)
              for (int c = 0; c < 3; ++c) M[r][c] = (c == col) ? rhs[r] : J[r][c];
            return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                   det;
          };
          const double d0 = solve3(0), d1 = solve3(1), d2 = solve3(2);
          v = {v[0] + d0, v[1] + d1, v[2] + d2};
          if (!(v[0] > 0.02 && v[0] < M_PI / 4.0 - 1e-3 && v[1] > 0.05 && v[2] > 0.05)) break;
        }
      } catch (const error&) {
      }
      if (!ok) h *= 0.5;
    }
    if (!ok) break;  // report what we have; last good point stands
    uprev = u;
    u = unew;
    FamilyPoint fp;
    fp.alpha = u[0];
    fp.x = u[1];
    fp.y = u[2];
    fp.residual = period_residual(u[0], u[1], u[2], tol);
    ++accepted;
    fp.t = std::min(double(accepted) / steps * t_max, t_max);
    out.push_back(fp);
    h = std::min(h * 1.4, 0.12);
  }
  return out;
}

}  // namespace sclab
