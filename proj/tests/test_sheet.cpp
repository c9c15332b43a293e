#include <cmath>

#include "doctest.h"
#include "sclab/sheet.hpp"
#include "sclab/weierstrass.hpp"

using namespace sclab;

TEST_CASE("zprime_squared anchors") {
  const SurfaceParams p = make_params(M_PI / 8, 1.0, 2.0);
  // branch point by construction
  CHECK(std::abs(zprime_squared(cplx(0, p.tan_a), p)) < 1e-14);
  // z = 0: -tan^2 cot^2 = -1 exactly
  CHECK(std::abs(zprime_squared(cplx(0, 0), p) - cplx(-1, 0)) < 1e-14);
  // real axis: negative real values
  for (double t : {0.3, 0.9, 1.7, 4.0}) {
    const cplx v = zprime_squared(cplx(t, 0), p);
    CHECK(std::abs(v.imag()) < 1e-14 * std::abs(v));
    CHECK(v.real() < 0);
  }
}

TEST_CASE("w_squared anchor at the origin") {
  for (double a : {M_PI / 16, M_PI / 8, M_PI / 6}) {
    const SurfaceParams p = make_params_relaxed(a, 0.5, 1.0);
    const cplx w2 = w_squared(cplx(0, 0), cplx(0, 1), p);
    CHECK(std::abs(w2 - cplx(1, 0)) < 1e-12);
  }
}

TEST_CASE("w_squared pole detection") {
  const SurfaceParams p = make_params(M_PI / 8, 1.0, 2.0);
  const double q = p.w_pole_q;
  const cplx z(0, q);
  // both sheets satisfy the torus relation; exactly one carries the pole
  cplx zp = std::sqrt(zprime_squared(z, p));
  CHECK(std::abs(zp * zp - zprime_squared(z, p)) < 1e-12);
  auto cf2_dist = [&](cplx zpv) {
    const cplx f = f_value(z, zpv, p);
    return std::abs(p.c * f * f - 1.0);
  };
  const cplx zp_pole = cf2_dist(zp) < cf2_dist(-zp) ? zp : -zp;
  CHECK(cf2_dist(zp_pole) < 1e-10);
  CHECK_THROWS_AS(w_squared(z, zp_pole, p), error);
  // the other sheet stays finite
  const cplx w2 = w_squared(z, -zp_pole, p);
  CHECK(std::isfinite(std::abs(w2)));
  CHECK(std::abs(w2) < 1e3);
}

TEST_CASE("w real and bounded by cot on the real axis") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  for (double t : {0.0, 0.4, 0.9, 1.6, 3.0}) {
    const cplx zp = std::sqrt(zprime_squared(cplx(t, 0), p));
    const cplx w2 = w_squared(cplx(t, 0), zp, p);
    CHECK(std::abs(w2.imag()) < 1e-12 * (1.0 + std::abs(w2)));
    CHECK(w2.real() < p.cot2 + 1e-12);
    CHECK(w2.real() > -1e-12);
  }
}

TEST_CASE("base point satisfies all sheet invariants") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  CHECK(torus_residual(b, p) < 1e-13);
  CHECK(w_residual(b, p) < 1e-13);
  CHECK(g_residual(b, p) < 1e-13);
  CHECK(b.zprime == cplx(0, 1));
  CHECK(b.w.real() < 0);  // end-residue fixes the branch
  CHECK(b.g.real() > 0);
  CHECK(std::abs(b.g.imag()) < 1e-14);
}

TEST_CASE("gauss map anchor at the origin, unit-w sheet") {
  // at y = 1 the origin carries w^2 = 1; on the w = +1 branch
  // g^2 = (cot+1)/(cot-1) = cot(pi/8) = 1 + sqrt(2)
  const SurfaceParams p = make_params_relaxed(M_PI / 8, 0.5, 1.0);
  SheetPoint sp = base_point_flipped(p);
  CHECK(std::abs(sp.w - cplx(1, 0)) < 1e-12);
  const cplx g2 = gauss_map_squared(sp, p);
  CHECK(std::abs(g2 - cplx(1.0 + std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("dw/dz consistency of the two height-differential forms") {
  // (dw/dz * zprime)^2 = (w^2 - tan^2)(w^2 - cot^2) pointwise
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  SheetPoint sp = base_point(p);
  CHECK(dh_consistency_residual(sp, p) < 1e-12);
}
