#include <cmath>

#include "doctest.h"
#include "sclab/quadrature.hpp"

using namespace sclab;

TEST_CASE("smooth segment integral of dh matches dense trapezoid") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  std::vector<Piece> pieces{{cplx(0, 0), cplx(0.5, -0.4), false, false}};
  const QuadResult q = integrate_pieces(pieces, b, p, {Form::dh}, false, 1e-12);

  // brute trapezoid oracle with 200k nodes
  SheetPoint cur = b;
  cplx acc = 0;
  cplx prev_v = eval_form(cur, p, Form::dh, false);
  const int N = 200000;
  for (int k = 1; k <= N; ++k) {
    const cplx z = cplx(0.5, -0.4) * (double(k) / N);
    cur = advance(cur, z, p);
    const cplx v = eval_form(cur, p, Form::dh, false);
    acc += 0.5 * (prev_v + v) * cplx(0.5 / N, -0.4 / N);
    prev_v = v;
  }
  CHECK(std::abs(q.values[0] - acc) < 5e-10);
  CHECK(q.err < 1e-10);
}

TEST_CASE("error estimate shrinks at least 4x under step halving") {
  // composite rule order on a smooth segment: integrate with one piece vs
  // the same segment split in two, compare reported errors
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  const cplx zend(0.8, -0.6);
  // run at a loose tolerance so leaves stay coarse and err is visible
  std::vector<Piece> one{{cplx(0, 0), zend, false, false}};
  const QuadResult q1 = integrate_pieces(one, b, p, {Form::g_dh}, false, 1e-4);
  std::vector<Piece> two{{cplx(0, 0), 0.5 * zend, false, false},
                         {0.5 * zend, zend, false, false}};
  const QuadResult q2 = integrate_pieces(two, b, p, {Form::g_dh}, false, 1e-4);
  // both agree with a tight run
  const QuadResult tight = integrate_pieces(one, b, p, {Form::g_dh}, false, 1e-12);
  CHECK(std::abs(q1.values[0] - tight.values[0]) <= q1.err + 1e-12);
  CHECK(std::abs(q2.values[0] - tight.values[0]) <= q2.err + 1e-12);
  if (q1.err > 1e-14) CHECK(q2.err < q1.err / 4.0 + 1e-15);
}

TEST_CASE("endpoint substitution integrates an inverse-root singularity") {
  // int over the real segment (-x, x) of g dh: integrable (x-z)^(-1/2)
  // blow-up at the right end; oracle is a graded trapezoid sum
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  const double a0 = -0.9 * p.x;
  std::vector<Piece> pieces{{cplx(a0, 0), cplx(0, 0), false, false},
                            {cplx(0, 0), cplx(p.x, 0), false, true}};
  SheetPoint start = continue_to_end({cplx(0, 0), cplx(a0, 0)}, b, p, 0.02);
  const QuadResult q = integrate_pieces(pieces, start, p, {Form::g_dh}, false, 1e-10);

  // oracle: substitute u^2 = x - z by hand on a fine fixed grid
  SheetPoint cur = start;
  cplx acc = 0;
  const int N = 160000;
  auto zat = [&](double s) {
    // s in [0,1): z = a0 + (x - a0)(1 - (1-s)^2) accumulates toward x
    const double u = 1.0 - s;
    return cplx(p.x - (p.x - a0) * u * u, 0);
  };
  cplx prev_z = zat(0.0);
  cplx prev_v = eval_form(cur, p, Form::g_dh, false);
  for (int k = 1; k < N; ++k) {
    const cplx z = zat(double(k) / N);
    cur = advance(cur, z, p);
    const cplx v = eval_form(cur, p, Form::g_dh, false);
    acc += 0.5 * (prev_v + v) * (z - prev_z);
    prev_z = z;
    prev_v = v;
  }
  CHECK(std::abs(q.values[0] - acc) < 2e-6 * (1.0 + std::abs(acc)));
}

TEST_CASE("quadrature is deterministic") {
  const SurfaceParams p = make_params(M_PI / 8, 1.05, 1.30);
  const SheetPoint b = base_point(p);
  std::vector<Piece> pieces{{cplx(0, 0), cplx(0.4, -0.5), false, false},
                            {cplx(0.4, -0.5), cplx(1.9, 0.3), false, false}};
  const QuadResult q1 = integrate_pieces(pieces, b, p, {Form::phi1, Form::phi2}, true, 1e-9);
  const QuadResult q2 = integrate_pieces(pieces, b, p, {Form::phi1, Form::phi2}, true, 1e-9);
  CHECK(q1.values[0] == q2.values[0]);
  CHECK(q1.values[1] == q2.values[1]);
  CHECK(q1.err == q2.err);
}
