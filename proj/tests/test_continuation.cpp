#include <cmath>

#include "doctest.h"
#include "sclab/continuation.hpp"

using namespace sclab;

namespace {

std::vector<cplx> circle_pts(cplx c, double r, int n, bool ccw = true) {
  std::vector<cplx> pts;
  for (int k = 0; k <= n; ++k) {
    const double th = (ccw ? 1.0 : -1.0) * 2.0 * M_PI * k / n;
    pts.push_back(c + r * std::exp(cplx(0, th)));
  }
  return pts;
}

double sheet_distance(const SheetPoint& a, const SheetPoint& b) {
  return std::abs(a.zprime - b.zprime) + std::abs(a.w - b.w) + std::abs(a.g - b.g);
}

// brute-force monodromy oracle: fixed tiny steps around the full circle,
// starting at the current point's phase
SheetPoint brute_loop(const SheetPoint& start, cplx center, double r, int n,
                      const SurfaceParams& p) {
  SheetPoint cur = start;
  const double a0 = std::arg(start.z - center);
  for (int k = 1; k <= n; ++k)
    cur = advance(cur, center + r * std::exp(cplx(0, a0 + 2.0 * M_PI * k / n)), p);
  return cur;
}

}  // namespace

TEST_CASE("contractible loop has trivial monodromy") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  PathSpec path;
  path.start = b;
  path.waypoints = circle_pts(cplx(0.2, -0.15), 0.1, 64);
  // route from base to the loop and back
  std::vector<cplx> full{cplx(0, 0)};
  for (const cplx& z : path.waypoints) full.push_back(z);
  full.push_back(cplx(0, 0));
  path.waypoints = full;
  const Track tr = continue_along(path, p);
  CHECK(sheet_distance(tr.back(), b) < 1e-9);
  CHECK(std::abs(tr.back().z - b.z) < 1e-14);
}

TEST_CASE("single loop around i tan flips zprime; around x flips g") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);

  // oracle: 10^4 brute steps on a small loop
  SheetPoint near_t = continue_to_end({cplx(0, 0), cplx(0, p.tan_a - 0.01)}, b, p);
  SheetPoint once = brute_loop(near_t, cplx(0, p.tan_a), 0.01, 10000, p);
  CHECK(std::abs(once.zprime + near_t.zprime) < 1e-7 * std::abs(near_t.zprime));
  CHECK(std::abs(once.z - near_t.z) < 1e-14);

  SheetPoint near_x = continue_to_end({cplx(0, 0), cplx(p.x - 0.01, 0)}, b, p);
  SheetPoint oncex = brute_loop(near_x, cplx(p.x, 0), 0.01, 10000, p);
  CHECK(std::abs(oncex.g + near_x.g) < 1e-7 * std::abs(near_x.g));
  CHECK(std::abs(oncex.zprime - near_x.zprime) < 1e-9 * std::abs(near_x.zprime));
}

TEST_CASE("double loops restore the sheet") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  for (cplx center : {cplx(0, p.tan_a), cplx(p.x, 0), cplx(0, -p.tan_a), cplx(-p.x, 0)}) {
    const cplx dir = center / std::abs(center);
    SheetPoint entry = continue_to_end({cplx(0, 0), center - 0.02 * dir}, b, p, 0.02);
    SheetPoint cur = entry;
    for (int loop = 0; loop < 2; ++loop)
      cur = brute_loop(cur, center, 0.02, 2000, p);
    CHECK(sheet_distance(cur, entry) < 1e-9 * (1.0 + std::abs(entry.g)));
  }
}

TEST_CASE("torus residual stays small along accepted tracks") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  PathSpec path;
  path.start = base_point(p);
  path.waypoints = {cplx(0, 0), cplx(0.6, -0.4), cplx(2.2, -0.8), cplx(3.2, 0.9), cplx(0.2, 0.4)};
  const Track tr = continue_along(path, p);
  for (const auto& node : tr.nodes) {
    const double scale = 1.0 + std::pow(std::abs(node.sp.z), 4);
    CHECK(torus_residual(node.sp, p) < 1e-10 * scale);
    CHECK(w_residual(node.sp, p) < 1e-9 * (1.0 + std::norm(node.sp.w)));
    CHECK(g_residual(node.sp, p) < 1e-9 * (1.0 + std::norm(node.sp.g)));
  }
}

TEST_CASE("conjugation symmetry of w along mirrored tracks") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  const std::vector<cplx> zs{cplx(0, 0), cplx(0.3, -0.2), cplx(0.8, -0.5), cplx(1.6, -0.3)};

  std::vector<cplx> conj_zs, negconj_zs;
  for (const cplx& z : zs) {
    conj_zs.push_back(std::conj(z));
    negconj_zs.push_back(-std::conj(z));
  }
  // mirrored start sheets
  SheetPoint b_conj{b.z, -std::conj(b.zprime), std::conj(b.w), std::conj(b.g)};
  SheetPoint b_neg{b.z, std::conj(b.zprime), -std::conj(b.w), -1.0 / std::conj(b.g)};

  SheetPoint e = continue_to_end(zs, b, p, 0.02);
  SheetPoint ec = continue_to_end(conj_zs, b_conj, p, 0.02);
  SheetPoint en = continue_to_end(negconj_zs, b_neg, p, 0.02);
  CHECK(std::abs(ec.w - std::conj(e.w)) < 1e-9 * (1.0 + std::abs(e.w)));
  CHECK(std::abs(en.w + std::conj(e.w)) < 1e-9 * (1.0 + std::abs(e.w)));
}

TEST_CASE("clearance violations are rejected") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  PathSpec path;
  path.start = base_point(p);
  path.waypoints = {cplx(0, 0), cplx(p.x, 0)};  // ends on a critical point
  CHECK_THROWS_AS(continue_along(path, p), error);
}
