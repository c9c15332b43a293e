#include "sclab/cycles.hpp"

#include <algorithm>
#include <cmath>

namespace sclab {

namespace {

const cplx I(0, 1);

std::vector<Piece> polyline_pieces(const std::vector<cplx>& pts) {
  std::vector<Piece> out;
  for (size_t k = 0; k + 1 < pts.size(); ++k) out.push_back({pts[k], pts[k + 1], false, false});
  return out;
}

std::vector<cplx> arc_points(cplx center, double r, double a0, double a1, int n) {
  std::vector<cplx> pts;
  pts.reserve(n + 1);
  for (int k = 0; k <= n; ++k)
    pts.push_back(center + r * std::exp(I * (a0 + (a1 - a0) * k / n)));
  return pts;
}

}  // namespace

Cycles::Cycles(const SurfaceParams& p, double tol) : p_(p), base_(base_point(p)), tol_(tol) {
  const double span = p_.cot_a - p_.tan_a;
  bank_m_ = std::max(0.02 * span, 8.0 * p_.clearance);
  // keep the banks off the w-pole level by at least the bank offset itself
  r_bounce_ = std::max(1e-3 * p_.x, 8.0 * p_.clearance);
}

std::vector<cplx> Cycles::cut_connector() const {
  return {cplx(0, 0), cplx(bank_m_, 0), cplx(bank_m_, p_.tan_a)};
}

std::vector<cplx> Cycles::rect_loop_points() const {
  // oriented: down the right bank is *not* used; the calibrated orientation
  // runs A -> under i*tan -> up the left bank -> over i*cot -> down the right
  const double m = bank_m_;
  const double t = p_.tan_a, c = p_.cot_a;
  const cplx A(m, t), B(m, c), C(-m, c), D(-m, t);
  std::vector<cplx> pts{A};
  auto append = [&pts](const std::vector<cplx>& more) {
    pts.insert(pts.end(), more.begin() + 1, more.end());
  };
  append(arc_points(I * t, m, 0.0, -M_PI, 60));            // A -> D under i tan
  append({D, C});                                          // up the left bank
  append(arc_points(I * c, m, M_PI, 0.0, 60));             // C -> B over i cot
  append({B, A});                                          // down the right bank
  return pts;
}

CyclePath Cycles::curve1() const {
  CyclePath cy;
  cy.name = "curve1";
  cy.start = base_;
  std::vector<cplx> pts = cut_connector();
  const std::vector<cplx> loop = rect_loop_points();
  pts.insert(pts.end(), loop.begin() + 1, loop.end());
  const std::vector<cplx> con = cut_connector();
  pts.insert(pts.end(), con.rbegin() + 1, con.rend());
  cy.pieces = polyline_pieces(pts);
  return cy;
}

CyclePath Cycles::curve2() const {
  CyclePath cy = curve1();
  cy.name = "curve2";
  // the lift of curve1 ends on the rho-image sheet; repeating the same
  // z-path closes the geodesic cycle
  std::vector<Piece> twice = cy.pieces;
  twice.insert(twice.end(), cy.pieces.begin(), cy.pieces.end());
  cy.pieces = std::move(twice);
  return cy;
}

CyclePath Cycles::curve3() const {
  CyclePath cy;
  cy.name = "curve3";
  cy.start = base_;
  const double t = p_.tan_a;
  const double reach = std::min(p_.w_pole_q, p_.cot_a) - t;
  const double a3 = t + std::min(0.35 * reach, 0.5 * t);  // vertical semi-axis
  const double m3 = std::min({0.35 * p_.x, 0.5 * t, 0.35 / p_.y});
  std::vector<cplx> pts{cplx(0, 0), cplx(m3, 0)};
  for (int k = 1; k <= 240; ++k) {
    const double th = 2.0 * M_PI * k / 240;
    pts.push_back(cplx(m3 * std::cos(th), a3 * std::sin(th)));
  }
  pts.push_back(cplx(0, 0));
  cy.pieces = polyline_pieces(pts);
  return cy;
}

CyclePath Cycles::branch_pair() const {
  CyclePath cy;
  cy.name = "branch_pair";
  cy.start = base_;
  auto lollipop = [this](double cx) {
    double dmin = 1e300;
    for (const cplx& c : p_.critical)
      if (std::abs(c - cplx(cx, 0)) > 1e-12) dmin = std::min(dmin, std::abs(c - cplx(cx, 0)));
    const double r = 0.25 * dmin;
    const double entry = cx > 0 ? cx - r : cx + r;
    std::vector<cplx> pts{cplx(0, 0), cplx(entry, 0)};
    const double a0 = cx > 0 ? M_PI : 0.0;
    const std::vector<cplx> loop = arc_points(cplx(cx, 0), r, a0, a0 + 2.0 * M_PI, 160);
    pts.insert(pts.end(), loop.begin() + 1, loop.end());
    pts.push_back(cplx(0, 0));
    return pts;
  };
  std::vector<cplx> pts = lollipop(p_.x);
  const std::vector<cplx> second = lollipop(-p_.x);
  pts.insert(pts.end(), second.begin() + 1, second.end());
  cy.pieces = polyline_pieces(pts);
  return cy;
}

double Cycles::beta_minor() const {
  const double lo = p_.tan_a, hi = p_.cot_a, q = p_.w_pole_q;
  double b = 0.5 * (std::clamp(q, lo, hi) + hi);  // between the w-pole and i cot
  return std::clamp(b, lo + 0.2 * (hi - lo), hi - 0.2 * (hi - lo));
}

std::vector<cplx> Cycles::beta_arc(double t0, double t1, int n) const {
  const double b = beta_minor();
  std::vector<cplx> pts;
  pts.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double t = t0 + (t1 - t0) * k / n;
    pts.push_back(cplx(-p_.x * std::cos(t), -b * std::sin(t)));
  }
  return pts;
}

CyclePath Cycles::beta_plus() const {
  // from z = -x (ascending curve) to z = +x along the lower arc, with
  // square-root endpoint pieces; start sheet continued from the base along
  // the real axis to -x
  CyclePath cy;
  cy.name = "beta_plus";
  cy.closed = false;
  const double t1 = 0.2;
  const std::vector<cplx> mid = beta_arc(t1, M_PI - t1, 400);
  std::vector<Piece> pieces;
  pieces.push_back({cplx(-p_.x, 0), mid.front(), true, false});
  for (size_t k = 0; k + 1 < mid.size(); ++k) pieces.push_back({mid[k], mid[k + 1], false, false});
  pieces.push_back({mid.back(), cplx(p_.x, 0), false, true});
  // connector: 0 -> near -x stays on the real axis, then drop to the arc entry
  cy.start = continue_to_end({cplx(0, 0), cplx(-p_.x + 0.05 * p_.x, 0), mid.front()}, base_, p_);
  cy.pieces = std::move(pieces);
  return cy;
}

CyclePath Cycles::beta_minus() const {
  CyclePath cy;
  cy.name = "beta_minus";
  cy.closed = false;
  const double t1 = 0.2;
  const std::vector<cplx> mid = beta_arc(M_PI + t1, 2.0 * M_PI - t1, 400);
  std::vector<Piece> pieces;
  pieces.push_back({cplx(p_.x, 0), mid.front(), true, false});
  for (size_t k = 0; k + 1 < mid.size(); ++k) pieces.push_back({mid[k], mid[k + 1], false, false});
  pieces.push_back({mid.back(), cplx(-p_.x, 0), false, true});
  cy.start = continue_to_end({cplx(0, 0), cplx(p_.x - 0.05 * p_.x, 0), mid.front()}, base_, p_);
  cy.pieces = std::move(pieces);
  return cy;
}

CyclePath Cycles::beta_closed_variant(bool inner) const {
  CyclePath cy;
  cy.name = "beta";
  const double b = beta_minor();
  // tip angle giving bounce radius ~ r_bounce_
  const double eps = std::max(r_bounce_ / std::hypot(p_.x, b), 4e-4);
  const std::vector<cplx> lower = beta_arc(eps, M_PI - eps, 400);
  const std::vector<cplx> upper = beta_arc(M_PI + eps, 2.0 * M_PI - eps, 400);
  auto bounce = [&](cplx center, cplx from, cplx to) {
    const double r = std::abs(from - center);
    double a0 = std::arg(from - center), a1 = std::arg(to - center);
    const double through = center.real() > 0 ? M_PI : 0.0;  // inner side faces the origin
    double sweep = std::fmod(a1 - a0 + 4.0 * M_PI, 2.0 * M_PI);
    double midang = a0 + 0.5 * sweep;
    auto angdiff = [](double u, double v) {
      return std::abs(std::remainder(u - v, 2.0 * M_PI));
    };
    const bool ccw_passes_inner = angdiff(midang, through) < angdiff(midang + M_PI, through);
    if (ccw_passes_inner != inner) sweep -= 2.0 * M_PI;
    return arc_points(center, r, a0, a0 + sweep, 80);
  };
  std::vector<cplx> pts = lower;
  auto append = [&pts](const std::vector<cplx>& more) {
    pts.insert(pts.end(), more.begin() + 1, more.end());
  };
  append(bounce(cplx(p_.x, 0), lower.back(), upper.front()));
  append(upper);
  append(bounce(cplx(-p_.x, 0), upper.back(), lower.front()));
  cy.pieces = polyline_pieces(pts);
  cy.start = continue_to_end({cplx(0, 0), cplx(-p_.x + 1.2 * r_bounce_, 0), lower.front()}, base_, p_);
  return cy;
}

CyclePath Cycles::beta_closed() {
  if (beta_side_ == 0) {
    // calibrate the bounce side against the open half-loop
    CyclePath bp = beta_plus();
    const QuadResult half =
        integrate_pieces(bp.pieces, bp.start, p_, {Form::g_dh}, false, 0.1 * tol_);
    double best = 1e300;
    int side = +1;
    for (int s : {+1, -1}) {
      CyclePath cand = beta_closed_variant(s > 0);
      QuadResult full;
      try {
        full = integrate_pieces(cand.pieces, cand.start, p_, {Form::g_dh}, false, 0.1 * tol_);
      } catch (const error&) {
        continue;
      }
      const double clos = std::abs(full.end.zprime - cand.start.zprime) +
                          std::abs(full.end.w - cand.start.w) +
                          std::abs(full.end.g - cand.start.g);
      if (clos > 1e-6 * (1.0 + std::abs(cand.start.g))) continue;
      const double resid = std::abs(full.values[0].real() - 2.0 * half.values[0].real());
      if (resid < best) {
        best = resid;
        side = s;
      }
    }
    if (best > 1e300 * 0.5)
      fail(errc::calibration, "periods", "no closed beta lift found");
    beta_side_ = side;
  }
  return beta_closed_variant(beta_side_ > 0);
}

CyclePath Cycles::end_loop(double delta) {
  // the puncture with w = +cot sits over z = -y on the base sheet; reach it
  // along the negative real axis, stepping over -x with a small arc
  CyclePath cy;
  cy.name = "end_loop";
  double dmin = 1e300;
  for (const cplx& c : p_.critical)
    if (std::abs(c - cplx(-p_.y, 0)) > 1e-12) dmin = std::min(dmin, std::abs(c + cplx(p_.y, 0)));

  const double rx = std::min(0.25 * std::abs(p_.y - p_.x), 0.25 * p_.x);
  std::vector<cplx> con{cplx(0, 0), cplx(-p_.x + rx, 0)};
  {
    const std::vector<cplx> bump = arc_points(cplx(-p_.x, 0), rx, 0.0, M_PI, 60);
    con.insert(con.end(), bump.begin() + 1, bump.end());
  }
  SheetPoint at = continue_to_end(con, base_, p_);

  // probe the quadratic rate of w - cot toward the puncture
  const double rp = 0.2 * std::min(dmin, std::abs(p_.y - p_.x));
  at = continue_to_end({at.z, cplx(-p_.y + rp, 0)}, at, p_);
  const double kappa = std::abs(at.w - p_.cot_a) / (rp * rp);
  double rd = std::sqrt(delta / std::max(kappa, 1e-12));
  rd = std::clamp(rd, 4.0 * p_.clearance, 0.45 * std::min(dmin, std::abs(p_.y - p_.x)));

  cy.start = continue_to_end({at.z, cplx(-p_.y + rd, 0)}, at, p_);
  cy.pieces = polyline_pieces(arc_points(cplx(-p_.y, 0), rd, 0.0, 2.0 * M_PI, 240));
  return cy;
}

}  // namespace sclab
