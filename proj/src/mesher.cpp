#include "sclab/mesher.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <set>

namespace sclab {

namespace {

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 unit(const Vec3& a) {
  const double n = norm(a);
  return n > 0 ? (1.0 / n) * a : Vec3{0, 0, 0};
}

// graded radial knots: geometric tails (ratio 0.7) toward each anchor plus a
// uniform backbone per band
std::vector<double> radial_knots(const SurfaceParams& p, int resolution, double rmax) {
  std::vector<double> anchors{p.tan_a, p.x, p.cot_a, p.y};
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                anchors.end());

  std::set<double> knots;
  const double floor_d = std::max(4.0 * p.clearance, 1e-6);
  std::vector<double> edges{0.0};
  for (double a : anchors) edges.push_back(a);
  edges.push_back(rmax);
  for (size_t b = 0; b + 1 < edges.size(); ++b) {
    const int n = std::max(3, resolution / 2);
    for (int k = 1; k < n; ++k) knots.insert(edges[b] + (edges[b + 1] - edges[b]) * k / n);
  }
  for (double a : anchors) {
    double lo = 0.0, hi = rmax;
    for (double e : edges) {
      if (e < a - 1e-12) lo = std::max(lo, e);
      if (e > a + 1e-12) hi = std::min(hi, e);
    }
    for (int side = 0; side < 2; ++side) {
      double d = side == 0 ? 0.45 * (a - lo) : 0.45 * (hi - a);
      for (int k = 0; k < 60 && d > floor_d; ++k, d *= 0.7)
        knots.insert(side == 0 ? a - d : a + d);
    }
  }
  knots.insert(rmax);
  std::vector<double> out;
  double last = 0.0;
  for (double r : knots) {
    if (r <= floor_d || r > rmax + 1e-12) continue;
    bool near_anchor = false;
    for (double a : anchors)
      if (std::abs(r - a) < 0.8 * floor_d) near_anchor = true;
    if (near_anchor) continue;
    if (r - last < 0.25 * floor_d) continue;
    out.push_back(r);
    last = r;
  }
  if (out.empty() || std::abs(out.back() - rmax) > 1e-9) out.push_back(rmax);
  return out;
}

}  // namespace

DomainMesh triangulate_domain(const SurfaceParams& p, int resolution, double end_cutoff) {
  if (resolution < 8) fail(errc::bad_config, "mesher", "resolution must be at least 8");
  if (!(end_cutoff > 0)) fail(errc::bad_config, "mesher", "end cutoff must be positive");
  if (p.y - p.x < 12.0 * p.clearance || p.cot_a - p.tan_a < 12.0 * p.clearance)
    fail(errc::degenerate_region, "mesher", "boundary curves collide within tolerance");
  if (end_cutoff > 0.45 * (p.y - p.x))
    fail(errc::bad_config, "mesher", "end cutoff exceeds the gap to the branch point");

  DomainMesh dm;
  dm.end_cutoff = end_cutoff;
  dm.resolution = resolution;

  const double rmax = 2.5 * std::max(p.y, p.cot_a);
  const std::vector<double> rk = radial_knots(p, resolution, rmax);
  int ntheta = std::max(8, resolution);
  if (ntheta % 2) ++ntheta;

  const int nr = static_cast<int>(rk.size());
  const int jcut = ntheta / 2;
  auto on_cut = [&](int i) { return rk[i] > p.tan_a && rk[i] < p.cot_a; };

  std::vector<std::vector<int>> idright(nr, std::vector<int>(ntheta + 1, -1));
  std::vector<int> idleft_cut(nr, -1);
  dm.nodes.push_back({cplx(0, 0), BoundaryTag::line_segment});

  auto tag_of = [&](int i, int j) {
    if (std::abs(rk[i] - rk[nr - 1]) < 1e-12) return BoundaryTag::end_truncation;
    if (j == 0 || j == ntheta) return BoundaryTag::line_segment;
    if (j == jcut && on_cut(i)) return BoundaryTag::planar_geodesic;
    return BoundaryTag::none;
  };

  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j <= ntheta; ++j) {
      const double th = M_PI * j / ntheta;
      if (j == ntheta && std::abs(rk[i] - p.y) < end_cutoff) continue;  // puncture notch
      const cplx z = rk[i] * std::exp(cplx(0, th));
      dm.nodes.push_back({z, tag_of(i, j)});
      idright[i][j] = static_cast<int>(dm.nodes.size()) - 1;
      if (j == jcut && on_cut(i)) {
        dm.nodes.push_back({z, BoundaryTag::planar_geodesic});
        idleft_cut[i] = static_cast<int>(dm.nodes.size()) - 1;
      }
    }
  }

  // quads left of the cut use the duplicated column
  auto node_id = [&](int i, int j, bool left_of_cut) {
    if (j == jcut && on_cut(i) && left_of_cut) return idleft_cut[i];
    return idright[i][j];
  };

  for (int j = 0; j < ntheta; ++j) {
    const int a = node_id(0, j, j >= jcut);
    const int b = node_id(0, j + 1, j + 1 > jcut);
    if (a >= 0 && b >= 0) dm.triangles.push_back({0, a, b});
  }
  for (int i = 0; i + 1 < nr; ++i) {
    for (int j = 0; j < ntheta; ++j) {
      const bool left = j >= jcut;  // the quad [j, j+1] lies left of the cut line
      const int a = node_id(i, j, left);
      const int b = node_id(i + 1, j, left);
      const int c = node_id(i + 1, j + 1, left);
      const int d = node_id(i, j + 1, left);
      if (a < 0 || b < 0 || c < 0 || d < 0) continue;
      dm.triangles.push_back({a, b, c});
      dm.triangles.push_back({a, c, d});
    }
  }
  for (auto& t : dm.triangles) {
    const cplx za = dm.nodes[t[0]].z, zb = dm.nodes[t[1]].z, zc = dm.nodes[t[2]].z;
    if (((zb - za) * std::conj(zc - za)).imag() < 0) std::swap(t[1], t[2]);
  }
  return dm;
}

MeshPatch immerse(const DomainMesh& dm, const SurfaceParams& p) {
  const int n = static_cast<int>(dm.nodes.size());
  MeshPatch mp;
  mp.vertices.assign(n, Vec3{});
  mp.normals.assign(n, Vec3{});
  mp.vertex_tags.resize(n);
  for (int i = 0; i < n; ++i) mp.vertex_tags[i] = dm.nodes[i].tag;
  mp.faces = dm.triangles;
  mp.copy_tags.assign(mp.faces.size(), "id");

  auto ekey = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::map<std::pair<int, int>, std::array<cplx, 3>> eint;
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : dm.triangles)
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      if (eint.emplace(ekey(a, b), std::array<cplx, 3>{}).second) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }

  std::vector<int> parent(n, -2);
  std::vector<SheetPoint> sheet(n);
  std::queue<int> bfs;
  parent[0] = -1;
  sheet[0] = base_point(p);
  bfs.push(0);
  std::vector<int> order{0};
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    for (int v : adj[u])
      if (parent[v] == -2) {
        parent[v] = u;
        bfs.push(v);
        order.push_back(v);
      }
  }

  const std::vector<Form> forms{Form::phi1, Form::phi2, Form::phi3};
  auto edge_quad = [&](int a, int b) {
    const double len = std::abs(dm.nodes[b].z - dm.nodes[a].z);
    return integrate_pieces({{dm.nodes[a].z, dm.nodes[b].z, false, false}}, sheet[a], p, forms,
                            false, 1e-12 * (1.0 + len));
  };
  for (int v : order) {
    const int u = parent[v];
    if (u < 0) continue;
    const QuadResult q = edge_quad(u, v);
    sheet[v] = q.end;
    const double sgn = u < v ? 1.0 : -1.0;
    eint[ekey(u, v)] = {sgn * q.values[0], sgn * q.values[1], sgn * q.values[2]};
    mp.vertices[v] =
        mp.vertices[u] + Vec3{q.values[0].real(), q.values[1].real(), q.values[2].real()};
  }
  for (auto& [key, val] : eint) {
    const auto [a, b] = key;
    if (parent[b] == a || parent[a] == b) continue;
    const QuadResult q = edge_quad(a, b);
    val = {q.values[0], q.values[1], q.values[2]};
  }

  double worst = 0;
  for (const auto& t : dm.triangles) {
    cplx s1 = 0, s2 = 0, s3 = 0;
    double var = 0;
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      const auto& v = eint[ekey(a, b)];
      const double sgn = a < b ? 1.0 : -1.0;
      s1 += sgn * v[0];
      s2 += sgn * v[1];
      s3 += sgn * v[2];
      var += std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
    }
    worst = std::max(worst, (std::abs(s1.real()) + std::abs(s2.real()) + std::abs(s3.real())) /
                                (var + 1e-300));
  }
  mp.max_closure_defect = worst;
  if (worst > 1e-8)
    fail(errc::step_failure, "mesher", "triangle closure defect signals a branch slip");

  double orient = 0;
  std::vector<Vec3> gn(n);
  for (int i = 0; i < n; ++i) {
    const cplx g = sheet[i].g;
    gn[i] = unit(Vec3{2.0 * g.real(), 2.0 * g.imag(), std::norm(g) - 1.0});
  }
  for (const auto& t : dm.triangles) {
    const Vec3 fn =
        cross(mp.vertices[t[1]] - mp.vertices[t[0]], mp.vertices[t[2]] - mp.vertices[t[0]]);
    orient += dot(unit(fn), unit(gn[t[0]] + gn[t[1]] + gn[t[2]]));
  }
  const double s = orient >= 0 ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) mp.normals[i] = s * gn[i];
  return mp;
}

namespace {

MeshPatch transformed(const MeshPatch& src, const std::array<double, 9>& L, const Vec3& t,
                      const std::string& tag) {
  MeshPatch out = src;
  const bool flip = (L[0] * (L[4] * L[8] - L[5] * L[7]) - L[1] * (L[3] * L[8] - L[5] * L[6]) +
                     L[2] * (L[3] * L[7] - L[4] * L[6])) < 0;
  auto lin = [&](const Vec3& v) {
    return Vec3{L[0] * v.x + L[1] * v.y + L[2] * v.z, L[3] * v.x + L[4] * v.y + L[5] * v.z,
                L[6] * v.x + L[7] * v.y + L[8] * v.z};
  };
  for (Vec3& v : out.vertices) v = lin(v) + t;
  for (Vec3& nv : out.normals) nv = lin(nv);
  if (flip)
    for (auto& f : out.faces) std::swap(f[1], f[2]);
  for (auto& ct : out.copy_tags) ct = tag + (ct == "id" ? "" : "*" + ct);
  return out;
}

void append(MeshPatch& dst, const MeshPatch& src) {
  const int off = static_cast<int>(dst.vertices.size());
  dst.vertices.insert(dst.vertices.end(), src.vertices.begin(), src.vertices.end());
  dst.normals.insert(dst.normals.end(), src.normals.begin(), src.normals.end());
  dst.vertex_tags.insert(dst.vertex_tags.end(), src.vertex_tags.begin(), src.vertex_tags.end());
  for (const auto& f : src.faces) dst.faces.push_back({f[0] + off, f[1] + off, f[2] + off});
  dst.copy_tags.insert(dst.copy_tags.end(), src.copy_tags.begin(), src.copy_tags.end());
  dst.max_closure_defect = std::max(dst.max_closure_defect, src.max_closure_defect);
}

}  // namespace

MeshPatch assemble_piece(const MeshPatch& patch, const SurfaceParams& p, int n2, int n3) {
  const std::array<double, 9> Id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const std::array<double, 9> Rho{-1, 0, 0, 0, -1, 0, 0, 0, 1};   // half turn about x3
  const std::array<double, 9> Seg{-1, 0, 0, 0, 1, 0, 0, 0, -1};   // half turn about the x2 line
  const std::array<double, 9> RhoSeg{1, 0, 0, 0, -1, 0, 0, 0, -1};
  const std::array<double, 9> Mir{1, 0, 0, 0, 1, 0, 0, 0, -1};    // reflection part of V_odd

  MeshPatch piece;
  append(piece, transformed(patch, Id, {0, 0, 0}, "id"));
  append(piece, transformed(patch, Rho, {0, 0, 0}, "rho"));
  append(piece, transformed(patch, Seg, {0, 0, 0}, "seg"));
  append(piece, transformed(patch, RhoSeg, {0, 0, 0}, "rho.seg"));

  LatticeGroup lat;
  lat.T2 = scherk_end_residue(p);
  lat.T3 = vertical_period(p);

  MeshPatch out;
  for (int k = 0; k < std::max(1, n3); ++k) {
    for (int j = 0; j < std::max(1, n2); ++j) {
      char tag[64];
      std::snprintf(tag, sizeof(tag), "H%dV%d", j, k);
      out.max_closure_defect = std::max(out.max_closure_defect, piece.max_closure_defect);
      append(out, transformed(piece, k % 2 == 0 ? Id : Mir,
                              Vec3{0, j * lat.T2, k * lat.T3}, tag));
    }
  }
  return out;
}

DiscreteReport discrete_checks(const MeshPatch& patch, const SurfaceParams& p) {
  (void)p;
  DiscreteReport rep;
  rep.max_closure_defect = patch.max_closure_defect;
  const int n = static_cast<int>(patch.vertices.size());

  std::map<std::pair<int, int>, int> ecount;
  for (const auto& f : patch.faces)
    for (int e = 0; e < 3; ++e)
      ecount[{std::min(f[e], f[(e + 1) % 3]), std::max(f[e], f[(e + 1) % 3])}]++;
  std::vector<bool> boundary(n, false);
  for (const auto& [k, c] : ecount)
    if (c == 1) boundary[k.first] = boundary[k.second] = true;

  std::vector<Vec3> hsum(n, Vec3{});
  std::vector<double> area(n, 0.0);
  auto cot_at = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 u = b - a, v = c - a;
    const double s = norm(cross(u, v));
    return s > 1e-300 ? dot(u, v) / s : 0.0;
  };
  for (const auto& f : patch.faces) {
    const Vec3 &A = patch.vertices[f[0]], &B = patch.vertices[f[1]], &C = patch.vertices[f[2]];
    const double ca = cot_at(A, B, C), cb = cot_at(B, C, A), cc = cot_at(C, A, B);
    const double fa = 0.5 * norm(cross(B - A, C - A));
    hsum[f[0]] = hsum[f[0]] + cb * (A - C) + cc * (A - B);
    hsum[f[1]] = hsum[f[1]] + cc * (B - A) + ca * (B - C);
    hsum[f[2]] = hsum[f[2]] + ca * (C - B) + cb * (C - A);
    if (ca >= 0 && cb >= 0 && cc >= 0) {
      const double lab = dot(B - A, B - A), lbc = dot(C - B, C - B), lca = dot(A - C, A - C);
      area[f[0]] += (lab * cc + lca * cb) / 8.0;
      area[f[1]] += (lbc * ca + lab * cc) / 8.0;
      area[f[2]] += (lca * cb + lbc * ca) / 8.0;
    } else {
      area[f[0]] += fa * (ca < 0 ? 0.5 : 0.25);
      area[f[1]] += fa * (cb < 0 ? 0.5 : 0.25);
      area[f[2]] += fa * (cc < 0 ? 0.5 : 0.25);
    }
  }
  double rms = 0;
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (boundary[i] || area[i] <= 0) continue;
    const double h = norm(hsum[i]) / (4.0 * area[i]);
    rms += h * h;
    ++m;
  }
  rep.rms_mean_curvature = m ? std::sqrt(rms / m) : 0.0;

  std::vector<double> devs;
  for (const auto& f : patch.faces) {
    const Vec3 fn = unit(cross(patch.vertices[f[1]] - patch.vertices[f[0]],
                               patch.vertices[f[2]] - patch.vertices[f[0]]));
    const Vec3 gn = unit(patch.normals[f[0]] + patch.normals[f[1]] + patch.normals[f[2]]);
    if (norm(fn) == 0 || norm(gn) == 0) continue;
    devs.push_back(std::acos(std::clamp(std::abs(dot(fn, gn)), 0.0, 1.0)) * 180.0 / M_PI);
  }
  std::sort(devs.begin(), devs.end());
  rep.median_normal_dev_deg = devs.empty() ? 0.0 : devs[devs.size() / 2];

  double cover = 0;
  for (const auto& f : patch.faces) {
    const Vec3 a = patch.normals[f[0]], b = patch.normals[f[1]], c = patch.normals[f[2]];
    const double num = std::abs(dot(a, cross(b, c)));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(a, c);
    cover += 2.0 * std::abs(std::atan2(num, den));
  }
  rep.degree_estimate = 8.0 * cover / (4.0 * M_PI);

  Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const Vec3& v : patch.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  const double diam = norm(hi - lo);

  double planar_dev = 0;
  {
    std::vector<double> zs;
    for (int i = 0; i < n; ++i)
      if (patch.vertex_tags[i] == BoundaryTag::planar_geodesic)
        zs.push_back(patch.vertices[i].z);
    if (!zs.empty()) {
      std::sort(zs.begin(), zs.end());
      const double split = zs.front() + 0.5 * (zs.back() - zs.front());
      std::vector<double> grp[2];
      for (double v : zs) grp[v < split ? 0 : 1].push_back(v);
      for (auto& g : grp) {
        if (g.empty()) continue;
        const double med = g[g.size() / 2];
        for (double v : g) planar_dev = std::max(planar_dev, std::abs(v - med));
      }
    }
  }
  rep.planar_boundary_dev = diam > 0 ? planar_dev / diam : 0.0;

  double line_dev = 0;
  for (int i = 0; i < n; ++i) {
    if (patch.vertex_tags[i] != BoundaryTag::line_segment) continue;
    const Vec3& v = patch.vertices[i];
    const double d_x2axis = std::hypot(v.x, v.z);  // the segment line through 0
    const double d_x1line = std::abs(v.z);         // the x1-direction boundary lines
    line_dev = std::max(line_dev, std::min(d_x2axis, d_x1line));
  }
  rep.line_boundary_dev = diam > 0 ? line_dev / diam : 0.0;
  return rep;
}

int count_self_intersections(const MeshPatch& patch) {
  const int nf = static_cast<int>(patch.faces.size());
  Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const Vec3& v : patch.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  const double diam = norm(hi - lo);
  const double weld = std::max(1e-9 * diam, 1e-300);
  std::map<std::array<long long, 3>, int> weld_map;
  std::vector<int> wid(patch.vertices.size());
  for (size_t i = 0; i < patch.vertices.size(); ++i) {
    const Vec3& v = patch.vertices[i];
    const std::array<long long, 3> key{(long long)std::llround(v.x / weld),
                                       (long long)std::llround(v.y / weld),
                                       (long long)std::llround(v.z / weld)};
    auto [it, fresh] = weld_map.emplace(key, static_cast<int>(i));
    wid[i] = it->second;
    (void)fresh;
  }

  const double cell = diam / 48.0;
  std::map<std::array<long long, 3>, std::vector<int>> grid;
  std::vector<std::array<Vec3, 2>> boxes(nf);
  for (int f = 0; f < nf; ++f) {
    Vec3 l{1e300, 1e300, 1e300}, h{-1e300, -1e300, -1e300};
    for (int k = 0; k < 3; ++k) {
      const Vec3& v = patch.vertices[patch.faces[f][k]];
      l = {std::min(l.x, v.x), std::min(l.y, v.y), std::min(l.z, v.z)};
      h = {std::max(h.x, v.x), std::max(h.y, v.y), std::max(h.z, v.z)};
    }
    boxes[f] = {l, h};
    for (long long i = (long long)std::floor(l.x / cell); i <= (long long)std::floor(h.x / cell);
         ++i)
      for (long long j = (long long)std::floor(l.y / cell);
           j <= (long long)std::floor(h.y / cell); ++j)
        for (long long k = (long long)std::floor(l.z / cell);
             k <= (long long)std::floor(h.z / cell); ++k)
          grid[{i, j, k}].push_back(f);
  }

  auto share_vertex = [&](int f1, int f2) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (wid[patch.faces[f1][a]] == wid[patch.faces[f2][b]]) return true;
    return false;
  };
  auto seg_tri = [&](const Vec3& p0, const Vec3& p1, const Vec3& a, const Vec3& b,
                     const Vec3& c) {
    const Vec3 d = p1 - p0;
    const Vec3 nrm = cross(b - a, c - a);
    const double den = dot(nrm, d);
    if (std::abs(den) < 1e-300) return false;
    const double t = dot(nrm, a - p0) / den;
    const double eps = 1e-9;
    if (t < eps || t > 1.0 - eps) return false;
    const Vec3 q = p0 + t * d;
    const Vec3 v0 = b - a, v1 = c - a, v2 = q - a;
    const double d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1);
    const double d20 = dot(v2, v0), d21 = dot(v2, v1);
    const double den2 = d00 * d11 - d01 * d01;
    if (std::abs(den2) < 1e-300) return false;
    const double v = (d11 * d20 - d01 * d21) / den2;
    const double w = (d00 * d21 - d01 * d20) / den2;
    return v > eps && w > eps && 1.0 - v - w > eps;
  };

  int count = 0;
  std::set<std::pair<int, int>> tested;
  for (const auto& [key, faces] : grid) {
    (void)key;
    for (size_t u = 0; u < faces.size(); ++u)
      for (size_t v = u + 1; v < faces.size(); ++v) {
        const int f1 = std::min(faces[u], faces[v]), f2 = std::max(faces[u], faces[v]);
        if (!tested.insert({f1, f2}).second) continue;
        bool overlap = boxes[f1][0].x <= boxes[f2][1].x && boxes[f2][0].x <= boxes[f1][1].x &&
                       boxes[f1][0].y <= boxes[f2][1].y && boxes[f2][0].y <= boxes[f1][1].y &&
                       boxes[f1][0].z <= boxes[f2][1].z && boxes[f2][0].z <= boxes[f1][1].z;
        if (!overlap || share_vertex(f1, f2)) continue;
        const auto& fa = patch.faces[f1];
        const auto& fb = patch.faces[f2];
        bool hit = false;
        for (int e = 0; e < 3 && !hit; ++e)
          hit = seg_tri(patch.vertices[fa[e]], patch.vertices[fa[(e + 1) % 3]],
                        patch.vertices[fb[0]], patch.vertices[fb[1]], patch.vertices[fb[2]]) ||
                seg_tri(patch.vertices[fb[e]], patch.vertices[fb[(e + 1) % 3]],
                        patch.vertices[fa[0]], patch.vertices[fa[1]], patch.vertices[fa[2]]);
        if (hit) ++count;
      }
  }
  return count;
}

}  // namespace sclab
