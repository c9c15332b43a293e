#include <cmath>

#include "doctest.h"
#include "sclab/periods.hpp"

using namespace sclab;

namespace {

// complete elliptic integral K(k) by the arithmetic-geometric mean
double elliptic_K(double k) {
  double a = 1.0, b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 60 && std::abs(a - b) > 1e-17; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (2.0 * a);
}

}  // namespace

TEST_CASE("closed form of the end residue") {
  const SurfaceParams p = make_params(M_PI / 8, 1.0, 2.0);
  // cot^2 - tan^2 = 4 sqrt(2) at pi/8 and sqrt((y+x)/(y-x)) = sqrt(3)
  const double expect = 2.0 * M_PI * std::sqrt(3.0) / std::sqrt(4.0 * std::sqrt(2.0));
  CHECK(std::abs(scherk_end_residue(p) - expect) < 1e-12);
  CHECK(std::abs(expect - 4.57565215012206) < 1e-10);

  // y -> infinity limit: 2 pi / sqrt(cot^2 - tan^2)
  const SurfaceParams pinf = make_params(M_PI / 8, 1.0, 1e6);
  CHECK(std::abs(scherk_end_residue(pinf) - 2.0 * M_PI / std::sqrt(4.0 * std::sqrt(2.0))) <
        1e-5 * scherk_end_residue(pinf));

  CHECK_THROWS_AS(scherk_end_residue(make_params_relaxed(M_PI / 8, 1.0, 1.0)), error);
}

TEST_CASE("end loop quadrature reproduces the residue") {
  const SurfaceParams p = make_params(M_PI / 8, 1.0, 2.0);
  Cycles cyc(p);
  const CyclePath loop = cyc.end_loop(1e-3);
  const PeriodVector v = integrate_cycle(loop, p, false, 1e-9);
  const double T2 = scherk_end_residue(p);
  CHECK(std::abs(std::abs(v.p2.real()) - T2) < 1e-6 * T2);
  CHECK(std::abs(v.p1.real()) < 1e-6);
  CHECK(std::abs(v.p3.real()) < 1e-6);

  // delta-halving consistency
  const PeriodVector v2 = integrate_cycle(cyc.end_loop(5e-4), p, false, 1e-9);
  CHECK(std::abs(std::abs(v2.p2.real()) - std::abs(v.p2.real())) < 1e-7 * T2);
}

TEST_CASE("end loop residue on a 3x3 grid") {
  for (double a : {M_PI / 10, M_PI / 8, M_PI / 6}) {
    for (double ratio : {1.6, 2.0, 3.0}) {
      const SurfaceParams p = make_params(a, 1.0, ratio);
      Cycles cyc(p);
      const PeriodVector v = integrate_cycle(cyc.end_loop(1e-3), p, false, 1e-9);
      const double T2 = scherk_end_residue(p);
      CHECK(std::abs(std::abs(v.p2.real()) - T2) < 1e-6 * T2);
      CHECK(std::abs(v.p1.real()) < 1e-6);
      CHECK(std::abs(v.p3.real()) < 1e-6);
    }
  }
}

TEST_CASE("vertical period against the elliptic integral") {
  // at alpha = pi/8, x = 1: int_0^pi dt / sqrt(6 + 2 cos 2t) = K(1/sqrt 2)/sqrt 2
  const SurfaceParams p = make_params(M_PI / 8, 1.0, 2.0);
  const double half = elliptic_K(1.0 / std::sqrt(2.0)) / std::sqrt(2.0);
  CHECK(std::abs(half - 1.3110287771460596) < 1e-12);
  const double T3 = vertical_period(p);
  CHECK(std::abs(T3 - 2.0 * half) < 1e-6);
  CHECK(T3 > 0);
}

TEST_CASE("vertical period is positive across parameters") {
  for (double a : {0.25, 0.39, 0.55}) {
    for (double x : {0.8, 1.0, 1.3}) {
      for (double ratio : {1.2, 1.8, 2.5}) {
        const SurfaceParams p = make_params(a, x, x * ratio);
        CHECK(vertical_period(p, 1e-8) > 0);
      }
    }
  }
}

TEST_CASE("vertical period is invariant under homotopic perturbation") {
  // the circle class only depends on alpha; perturb x within the safe band
  const double a = M_PI / 8;
  const double v1 = vertical_period(make_params(a, 1.0, 2.0));
  const double v2 = vertical_period(make_params(a, 1.13, 2.0));
  CHECK(std::abs(v1 - v2) < 1e-8);
}

TEST_CASE("identity suite at the smoke triple") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  Cycles cyc(p, 1e-9);
  const IdentityReport rep = verify_identities(cyc, 1e-9);
  CHECK(rep.resid_b < 1e-6);
  CHECK(rep.resid_c1 < 1e-6);
  CHECK(rep.resid_c2 < 1e-6);
  CHECK(rep.resid_d1 < 1e-6);
  CHECK(rep.resid_d2 < 1e-6);
  CHECK(rep.curve3_p3 > 0.1);
}

TEST_CASE("curve1 is a branch-switching arc; curve2 and curve3 close") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  Cycles cyc(p);
  auto endpoint = [&](const CyclePath& cy) {
    return integrate_pieces(cy.pieces, cy.start, p, {Form::dh}, false, 1e-6).end;
  };
  const SheetPoint b = cyc.base();
  const SheetPoint e1 = endpoint(cyc.curve1());
  CHECK(std::abs(e1.z - b.z) < 1e-12);
  CHECK(std::abs(e1.zprime - b.zprime) < 1e-9);
  CHECK(std::abs(e1.w - b.w) < 1e-9);
  CHECK(std::abs(e1.g + b.g) < 1e-9);  // opposite Gauss branch
  const SheetPoint e2 = endpoint(cyc.curve2());
  CHECK(std::abs(e2.g - b.g) < 1e-9);
  const SheetPoint e3 = endpoint(cyc.curve3());
  CHECK(std::abs(e3.zprime - b.zprime) + std::abs(e3.w - b.w) + std::abs(e3.g - b.g) < 1e-9);
}

TEST_CASE("closed cycle periods are homotopy invariant") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  Cycles cyc(p);
  const PeriodVector v3 = integrate_cycle(cyc.curve3(), p, false, 1e-10);
  // an independently shaped representative of the same class: the branch
  // pair of +-i tan encircled by a wider ellipse
  CyclePath alt = cyc.curve3();
  for (Piece& pc : alt.pieces) {
    pc.a = cplx(1.18 * pc.a.real(), 1.04 * pc.a.imag());
    pc.b = cplx(1.18 * pc.b.real(), 1.04 * pc.b.imag());
  }
  const PeriodVector v3b = integrate_cycle(alt, p, false, 1e-10);
  CHECK(std::abs(v3.p3.real() - v3b.p3.real()) < 1e-7);
  CHECK(std::abs(v3.p1.real() - v3b.p1.real()) < 1e-7);
}
