#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sclab/solver.hpp"

namespace sclab {

enum class BoundaryTag : std::uint8_t { none, line_segment, planar_geodesic, end_truncation };

// Triangulation of the fundamental region in the z-chart: the upper half
// disk slit along [i tan, i cot], truncated near the puncture over z = -y
// and at a far-field radius.
struct DomainMesh {
  struct Node {
    cplx z;
    BoundaryTag tag = BoundaryTag::none;
  };
  std::vector<Node> nodes;
  std::vector<std::array<int, 3>> triangles;  // ccw in the z-chart
  double end_cutoff = 0;
  int resolution = 0;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

struct MeshPatch {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<Vec3> normals;               // unit, per vertex
  std::vector<std::string> copy_tags;      // one per face, symmetry word
  std::vector<BoundaryTag> vertex_tags;
  double max_closure_defect = 0;           // scaled triangle closure residual
};

// Vertical screw-reflection and horizontal translation generators.
struct LatticeGroup {
  double T2 = 0;  // horizontal translation along x2
  double T3 = 0;  // vertical offset of the reflection generator
  Vec3 vertical(const Vec3& v, int k) const {
    return {v.x, v.y, (k % 2 == 0 ? v.z : -v.z) + k * T3};
  }
  Vec3 horizontal(const Vec3& v, int j) const { return {v.x, v.y + j * T2, v.z}; }
};

DomainMesh triangulate_domain(const SurfaceParams& p, int resolution, double end_cutoff);

// Integrate the immersion over a spanning tree of mesh edges; the node at
// z = 0 maps to the originad and carries the base sheet.
MeshPatch immerse(const DomainMesh& dm, const SurfaceParams& p);

// Fundamental piece (4 symmetry copies) and lattice copies under the group.
MeshPatch assemble_piece(const MeshPatch& patch, const SurfaceParams& p, int n2, int n3);

struct DiscreteReport {
  double rms_mean_curvature = 0;
  double median_normal_dev_deg = 0;  // face normal vs Gauss-map normal
  double degree_estimate = 0;        // sphere coverage on the quotient
  double max_closure_defect = 0;
  double planar_boundary_dev = 0;    // relative to patch diameter
  double line_boundary_dev = 0;
};

DiscreteReport discrete_checks(const MeshPatch& patch, const SurfaceParams& p);

// Axis-aligned-box filtered triangle pair intersection count; shared-vertex
// neighbours excluded (vertices welded at 1e-12 of the diameter).
int count_self_intersections(const MeshPatch& patch);

}  // namespace sclab
