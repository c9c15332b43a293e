#pragma once

#include <utility>

#include "sclab/periods.hpp"

namespace sclab {

// The two real closing conditions solved by the family:
//   F1: horizontal phi1-period of curve1 (vanishes on the solution curve;
//       changes sign between y > x and y < x near alpha*),
//   F2: phi2-period of the cycle around both branch points +-x minus the
//       end-lattice vector from the closed-form residue.
// At x = y (limit data) the problem collapses to one dimension and F2 is
// reported equal to F1.
struct PeriodResidual {
  double F1 = 0;
  double F2 = 0;
  double err = 0;
  double max_abs() const { return std::max(std::abs(F1), std::abs(F2)); }
};

struct FamilyPoint {
  double t = 0;  // arclength parameter in [0, 1)
  double alpha = 0, x = 0, y = 0;
  PeriodResidual residual;
};

PeriodResidual period_residual(double alpha, double x, double y, double tol = 1e-6);

struct AlphaStar {
  double bisect = 0;   // primary result
  double secant = 0;   // independent cross-check
  double residual = 0; // |F1| at the returned root
  int sign_changes = 0;
};

// Root of the one-dimensional limit problem F1(alpha, 1, 1) on a 64-point
// scan of (0.01, pi/4 - 0.01); throws when the scan finds no bracket or
// more than one sign change.
AlphaStar chm_alpha_star_full(double tol = 1e-8);
double chm_alpha_star(double tol = 1e-8);

FamilyPoint solve_at_alpha(double alpha, std::pair<double, double> seed, double tol = 1e-8);

// Pseudo-arclength continuation anchored at (alpha*, 1, 1).
std::vector<FamilyPoint> continue_family(double t_max, int steps, double tol = 1e-8);

}  // namespace sclab
