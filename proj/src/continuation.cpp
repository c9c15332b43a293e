#include "sclab/continuation.hpp"

#include <algorithm>
#include <cmath>

namespace sclab {

namespace {

constexpr double kJumpLimit = 0.7;   // ambiguity threshold, relative to |value|
constexpr double kSmoothJump = 0.35; // target relative change per accepted step

inline cplx pick_root(cplx root, cplx predicted) {
  return (std::abs(root - predicted) <= std::abs(-root - predicted)) ? root : -root;
}

struct StepResult {
  SheetPoint sp;
  double jump;  // max relative jump over the three tracked roots
};

StepResult try_step(const SheetPoint& from, cplx z1, const SurfaceParams& p) {
  const cplx dz = z1 - from.z;
  StepResult r;
  r.sp.z = z1;

  const cplx zp_pred = from.zprime + zprime_deriv(from.z, from.zprime, p) * dz;
  const cplx zp_root = std::sqrt(zprime_squared(z1, p));
  r.sp.zprime = pick_root(zp_root, zp_pred);
  double jump = std::abs(r.sp.zprime - from.zprime) / (std::abs(from.zprime) + 1e-300);

  const cplx w_pred = from.w + w_squared_deriv(from.z, from.zprime, p) / (2.0 * from.w) * dz;
  const cplx w_root = std::sqrt(w_squared_raw(z1, r.sp.zprime, p));
  r.sp.w = pick_root(w_root, w_pred);
  jump = std::max(jump, std::abs(r.sp.w - from.w) / (std::abs(from.w) + 1e-300));

  SheetPoint mid = from;  // derivative data at the old point
  const cplx g_pred = from.g + from.g * g_log_deriv(mid, p) * dz;
  const cplx g_root = std::sqrt(gauss_map_squared_raw(z1, r.sp.w, p));
  r.sp.g = pick_root(g_root, g_pred);
  jump = std::max(jump, std::abs(r.sp.g - from.g) / (std::abs(from.g) + 1e-300));

  r.jump = jump;
  return r;
}

}  // namespace

void check_clearance(const PathSpec& path, const SurfaceParams& p) {
  const double clr = path.clearance > 0 ? path.clearance : p.clearance;
  for (size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
    const cplx a = path.waypoints[k], b = path.waypoints[k + 1];
    const cplx ab = b - a;
    const double ab2 = std::norm(ab);
    for (const cplx& c : p.critical) {
      double t = ab2 > 0 ? std::clamp(((c - a) * std::conj(ab)).real() / ab2, 0.0, 1.0) : 0.0;
      if (std::abs(a + t * ab - c) < clr)
        fail(errc::clearance, "riemann_core", "path strays into the critical set");
    }
  }
}

SheetPoint advance(const SheetPoint& from, cplx z1, const SurfaceParams& p) {
  SheetPoint cur = from;
  cplx target = z1;
  int depth = 0;
  long guard = 0;
  while (true) {
    if (++guard > 2000000)
      fail(errc::step_failure, "riemann_core", "continuation exceeded the step budget");
    StepResult st = try_step(cur, target, p);
    if (st.jump < kJumpLimit || std::abs(target - cur.z) < 1e-14 * (1.0 + std::abs(cur.z))) {
      cur = st.sp;
      depth = 0;
      if (target == z1) return cur;
      target = z1;
    } else {
      target = 0.5 * (cur.z + target);
      if (++depth > 120)
        fail(errc::step_failure, "riemann_core",
             "adaptive subdivision cannot disambiguate branches");
    }
  }
}

Track continue_along(const PathSpec& path, const SurfaceParams& p) {
  check_clearance(path, p);
  Track tr;
  double total = 0;
  for (size_t k = 0; k + 1 < path.waypoints.size(); ++k)
    total += std::abs(path.waypoints[k + 1] - path.waypoints[k]);
  tr.length = total;
  if (total == 0) {
    tr.nodes.push_back({0.0, path.start});
    return tr;
  }

  SheetPoint cur = path.start;
  double done = 0;
  tr.nodes.push_back({0.0, cur});
  for (size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
    const cplx a = path.waypoints[k], b = path.waypoints[k + 1];
    const double seglen = std::abs(b - a);
    if (seglen == 0) continue;
    double s = 0;
    double h = std::min(path.max_step, seglen);
    while (s < seglen) {
      h = std::min(h, seglen - s);
      cplx ztry = a + (s + h) / seglen * (b - a);
      StepResult st = try_step(cur, ztry, p);
      if (st.jump >= kSmoothJump && h > 1e-13 * seglen) {
        h *= 0.5;
        continue;
      }
      if (st.jump >= kJumpLimit) {
        // refine through advance() which enforces the hard limit
        st.sp = advance(cur, ztry, p);
        st.jump = 0;
      }
      cur = st.sp;
      s += h;
      done += h;
      tr.nodes.push_back({done / total, cur});
      if (st.jump < 0.05) h = std::min(h * 1.7, path.max_step);
    }
  }
  return tr;
}

SheetPoint continue_to_end(const std::vector<cplx>& waypoints, const SheetPoint& start,
                           const SurfaceParams& p, double max_step) {
  SheetPoint cur = start;
  for (size_t k = 0; k + 1 < waypoints.size(); ++k) {
    const cplx a = waypoints[k], b = waypoints[k + 1];
    const double seglen = std::abs(b - a);
    if (seglen == 0) continue;
    int n = std::max(1, static_cast<int>(std::ceil(seglen / max_step)));
    for (int i = 1; i <= n; ++i) cur = advance(cur, a + double(i) / n * (b - a), p);
  }
  return cur;
}

}  // namespace sclab
