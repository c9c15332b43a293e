#pragma once

#include <string>

#include "sclab/quadrature.hpp"

namespace sclab {

// A homology-cycle representative (or symmetry arc with closed z-image),
// realized as integration pieces from an explicit start sheet.
struct CyclePath {
  std::string name;          // curve1, curve2, curve3, beta, beta_plus, beta_minus, end_loop
  std::vector<Piece> pieces;
  SheetPoint start;
  bool closed = true;        // closed z-image
};

// Builds and caches the cycle representatives for one parameter set.
//
// curve1: loop hugging the segment [i tan, i cot] (both banks), entered from
//         the base point. Its lift ends on the opposite Gauss-map branch;
//         traversing it twice gives the closed geodesic cycle curve2.
// curve3: loop around the pair {+-i tan}; carries the vertical period.
// beta:   |z|-ellipse through +-x, closed by small arcs around the branch
//         points; the arc side is calibrated so Re of the g dh loop equals
//         twice the open half-loop (the half/whole identity).
// end_loop: lift of the circle |w - cot| = delta around the puncture over
//         z = +y, reached through a branch-point detour that switches the
//         zprime sheet.
class Cycles {
public:
  Cycles(const SurfaceParams& p, double tol = 1e-8);

  const SurfaceParams& params() const { return p_; }
  const SheetPoint& base() const { return base_; }

  CyclePath curve1() const;
  CyclePath curve2() const;
  CyclePath curve3() const;
  CyclePath branch_pair() const;  // cycle winding once around each of +-x
  CyclePath beta_plus() const;   // open arc from -x to x (lower half)
  CyclePath beta_minus() const;  // open arc from x to -x (upper half)
  CyclePath beta_closed();       // bounce-calibrated closed loop
  CyclePath end_loop(double delta = 1e-3);

  // connector waypoints from z = 0 to the start of the cut-rectangle
  std::vector<cplx> cut_connector() const;

  double tol() const { return tol_; }

private:
  SurfaceParams p_;
  SheetPoint base_;
  double tol_;
  int beta_side_ = 0;  // 0: uncalibrated, +1: inner bounces, -1: outer
  double bank_m_ = 0;  // cut-rectangle bank offset
  double r_bounce_ = 0;

  std::vector<cplx> rect_loop_points() const;         // cut rectangle, oriented
  std::vector<cplx> beta_arc(double t0, double t1, int n) const;
  double beta_minor() const;
  CyclePath beta_closed_variant(bool inner) const;
};

}  // namespace sclab
