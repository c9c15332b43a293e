#pragma once

#include <string>

#include "sclab/mesher.hpp"

namespace sclab {

enum class MeshFormat { OBJ, PLY };

// ASCII export with 17 significant digits; vertex text round-trips bit-exact.
void export_mesh(const MeshPatch& patch, MeshFormat format, const std::string& path);

// minimal parsers for round-trip checks
MeshPatch parse_obj(const std::string& path);
MeshPatch parse_ply(const std::string& path);

// CSV with a header row; every value printed with %.17g
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

struct Metadata {
  double alpha = 0, x = 0, y = 0;
  double tol = 0;
  double alpha_star = 0;  // 0 when not computed
  double T2 = 0, T3 = 0;
  std::string mode;
};

// sidecar <basename>.json next to an output file
void write_metadata(const std::string& out_path_base, const Metadata& md);

// simple SVG polyline plot of (x, y) columns, one path per series
void write_svg_polyline(const std::string& path, const std::vector<std::vector<double>>& xs,
                        const std::vector<std::vector<double>>& ys);

}  // namespace sclab
