#include "sclab/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sclab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void export_mesh(const MeshPatch& patch, MeshFormat format, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(errc::io, "cli_io", "cannot open " + path);
  if (format == MeshFormat::OBJ) {
    for (const Vec3& v : patch.vertices)
      os << "v " << fmt17(v.x) << " " << fmt17(v.y) << " " << fmt17(v.z) << "\n";
    for (const Vec3& nv : patch.normals)
      os << "vn " << fmt17(nv.x) << " " << fmt17(nv.y) << " " << fmt17(nv.z) << "\n";
    for (const auto& f : patch.faces)
      os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  } else {
    os << "ply\nformat ascii 1.0\n";
    os << "element vertex " << patch.vertices.size() << "\n";
    os << "property double x\nproperty double y\nproperty double z\n";
    os << "element face " << patch.faces.size() << "\n";
    os << "property list uchar int vertex_indices\nend_header\n";
    for (const Vec3& v : patch.vertices)
      os << fmt17(v.x) << " " << fmt17(v.y) << " " << fmt17(v.z) << "\n";
    for (const auto& f : patch.faces) os << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  }
  if (!os) fail(errc::io, "cli_io", "write failed: " + path);
}

MeshPatch parse_obj(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(errc::io, "cli_io", "cannot open " + path);
  MeshPatch mp;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec3 v;
      ss >> v.x >> v.y >> v.z;
      mp.vertices.push_back(v);
    } else if (tag == "vn") {
      Vec3 v;
      ss >> v.x >> v.y >> v.z;
      mp.normals.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      ss >> f[0] >> f[1] >> f[2];
      mp.faces.push_back({f[0] - 1, f[1] - 1, f[2] - 1});
    }
  }
  return mp;
}

MeshPatch parse_ply(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(errc::io, "cli_io", "cannot open " + path);
  MeshPatch mp;
  std::string line;
  size_t nv = 0, nf = 0;
  while (std::getline(is, line) && line != "end_header") {
    std::istringstream ss(line);
    std::string a, b;
    ss >> a >> b;
    if (a == "element" && b == "vertex") ss >> nv;
    if (a == "element" && b == "face") ss >> nf;
  }
  for (size_t i = 0; i < nv; ++i) {
    Vec3 v;
    is >> v.x >> v.y >> v.z;
    mp.vertices.push_back(v);
  }
  for (size_t i = 0; i < nf; ++i) {
    int c = 0;
    std::array<int, 3> f{};
    is >> c >> f[0] >> f[1] >> f[2];
    mp.faces.push_back(f);
  }
  return mp;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(errc::io, "cli_io", "cannot open " + path);
  for (size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << fmt17(row[k]);
    os << "\n";
  }
}

void write_metadata(const std::string& out_path_base, const Metadata& md) {
  nlohmann::json j;
  j["params"] = {{"alpha", md.alpha}, {"x", md.x}, {"y", md.y}};
  j["tolerance"] = md.tol;
  if (md.alpha_star > 0) j["alpha_star"] = md.alpha_star;
  if (md.T2 > 0) j["T2"] = md.T2;
  if (md.T3 > 0) j["T3"] = md.T3;
  j["mode"] = md.mode;
  j["versions"] = {{"sclab", "0.1.0"}, {"format", 1}};
  std::ofstream os(out_path_base + ".json", std::ios::binary);
  if (!os) fail(errc::io, "cli_io", "cannot open " + out_path_base + ".json");
  os << j.dump(2) << "\n";
}

void write_svg_polyline(const std::string& path, const std::vector<std::vector<double>>& xs,
                        const std::vector<std::vector<double>>& ys) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(errc::io, "cli_io", "cannot open " + path);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (size_t s = 0; s < xs.size(); ++s)
    for (size_t k = 0; k < xs[s].size(); ++k) {
      xmin = std::min(xmin, xs[s][k]);
      xmax = std::max(xmax, xs[s][k]);
      ymin = std::min(ymin, ys[s][k]);
      ymax = std::max(ymax, ys[s][k]);
    }
  if (!(xmax > xmin)) { xmin = 0; xmax = 1; }
  if (!(ymax > ymin)) { ymin = 0; ymax = 1; }
  const double W = 640, H = 480, pad = 20;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\">\n";
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (size_t s = 0; s < xs.size(); ++s) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[s % 4] << "\" points=\"";
    for (size_t k = 0; k < xs[s].size(); ++k) {
      const double px = pad + (W - 2 * pad) * (xs[s][k] - xmin) / (xmax - xmin);
      const double py = H - pad - (H - 2 * pad) * (ys[s][k] - ymin) / (ymax - ymin);
      os << fmt17(px) << "," << fmt17(py) << " ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace sclab
