#pragma once

#include <vector>

#include "sclab/sheet.hpp"

namespace sclab {

// A z-plane path: straight segments between consecutive waypoints, walked
// from `start`. `max_step` caps the base step; `clearance` is the minimum
// allowed distance of any segment to the critical set.
struct PathSpec {
  std::vector<cplx> waypoints;
  SheetPoint start;
  double max_step = 0.05;
  double clearance = 0;  // 0: use params default
};

// Densely sampled continuation of (zprime, w, g) along a path. Samples are
// ordered by arclength parameter t in [0, 1] per segment chain.
struct Track {
  struct Node {
    double t = 0;  // cumulative arclength fraction
    SheetPoint sp;
  };
  std::vector<Node> nodes;
  double length = 0;

  const SheetPoint& front() const { return nodes.front().sp; }
  const SheetPoint& back() const { return nodes.back().sp; }
};

// Verify the path keeps `clearance` from every critical point; throws.
void check_clearance(const PathSpec& path, const SurfaceParams& p);

// Advance one step from `from` to z1, choosing branches nearest to the
// analytic predictor. Throws step_failure when the relative jump stays
// ambiguous (> 0.7 of the value) at the refinement floor.
SheetPoint advance(const SheetPoint& from, cplx z1, const SurfaceParams& p);

// Branch-tracked continuation along the whole path with adaptive substeps.
Track continue_along(const PathSpec& path, const SurfaceParams& p);

// Continue from `start` through the waypoint list and return only the
// endpoint (cheaper than a full track when samples are not needed).
SheetPoint continue_to_end(const std::vector<cplx>& waypoints, const SheetPoint& start,
                           const SurfaceParams& p, double max_step = 0.05);

}  // namespace sclab
