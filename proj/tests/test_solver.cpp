#include <cmath>

#include "doctest.h"
#include "sclab/solver.hpp"

using namespace sclab;

TEST_CASE("limit residual collapses at x = y and brackets across it") {
  const double astar = chm_alpha_star(1e-9);
  CHECK(astar > 0.01);
  CHECK(astar < M_PI / 4 - 0.01);

  const PeriodResidual at = period_residual(astar, 1.0, 1.0, 1e-8);
  CHECK(std::abs(at.F1) < 1e-7);
  CHECK(at.F2 == at.F1);  // collapsed limit problem

  // Case I / Case II bracket near alpha*
  const PeriodResidual up = period_residual(astar, 1.0, 1.01, 1e-8);
  const PeriodResidual dn = period_residual(astar, 1.0, 0.99, 1e-8);
  CHECK(up.F1 * dn.F1 < 0);
  CHECK(up.F1 < 0);  // y > x side carries the negative sign
  CHECK(dn.F1 > 0);

  // torsion probe at x = y = 1.05: nonzero first component with margin
  const PeriodResidual tor = period_residual(astar, 1.05, 1.05, 1e-8);
  CHECK(std::abs(tor.F1) > 1e-2);
  CHECK(std::abs(tor.F1) > 100 * tor.err);
}

TEST_CASE("bisection and secant agree") {
  const AlphaStar a = chm_alpha_star_full(1e-9);
  CHECK(std::abs(a.bisect - a.secant) < 1e-8);
  CHECK(a.sign_changes == 1);
  CHECK(a.residual < 1e-7);
}

TEST_CASE("newton solve lands on the family with x != y") {
  const double astar = chm_alpha_star(1e-9);
  const double al = astar + 0.02;
  const FamilyPoint fp = solve_at_alpha(al, {0.95, 1.0}, 1e-8);
  CHECK(fp.residual.max_abs() < 1e-8);
  CHECK(std::abs(fp.x - fp.y) > 1e-7);
  // determinism
  const FamilyPoint fp2 = solve_at_alpha(al, {0.95, 1.0}, 1e-8);
  CHECK(fp.x == fp2.x);
  CHECK(fp.y == fp2.y);
}

TEST_CASE("transversal bracket at a solved point") {
  const double astar = chm_alpha_star(1e-9);
  const FamilyPoint fp = solve_at_alpha(astar + 0.02, {0.95, 1.0}, 1e-8);
  const PeriodResidual up = period_residual(fp.alpha, fp.x, fp.y + 1e-2, 1e-8);
  const PeriodResidual dn = period_residual(fp.alpha, fp.x, fp.y - 1e-2, 1e-8);
  CHECK(up.F1 * dn.F1 < 0);
}

TEST_CASE("short continuation run") {
  const std::vector<FamilyPoint> fam = continue_family(1.0, 6, 1e-8);
  CHECK(fam.size() >= 4);
  CHECK(std::abs(fam.front().alpha - chm_alpha_star(1e-9)) < 1e-4);
  for (size_t k = 1; k < fam.size(); ++k) {
    CHECK(fam[k].residual.max_abs() < 1e-8);
    CHECK(std::abs(fam[k].x - fam[k].y) > 1e-7);
    CHECK(fam[k].t >= fam[k - 1].t);
  }
}
