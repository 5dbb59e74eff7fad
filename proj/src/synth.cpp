// Copyright 2026 The Riccimorph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riccimorph/synth.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "riccimorph/errors.hpp"
#include "riccimorph/ml.hpp"  // substream

namespace riccimorph {

namespace {

constexpr double kRoot3Over2 = 0.86602540378443864676;

int hex_distance(int q, int r) {
  return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2;
}

}  // namespace

SynthSpec smooth_spec(int rings, uint64_t seed) {
  SynthSpec spec;
  spec.class_tag = "smooth";
  spec.rings = rings;
  spec.bump_amplitude = 0.12;
  spec.bump_count = 4;
  spec.noise_sigma = 0.0035;
  spec.seed = seed;
  return spec;
}

SynthSpec atrophied_spec(int rings, uint64_t seed) {
  SynthSpec spec;
  spec.class_tag = "atrophied";
  spec.rings = rings;
  spec.bump_amplitude = 0.125;
  spec.bump_count = 10;
  spec.noise_sigma = 0.0055;
  spec.seed = seed;
  return spec;
}

TriMesh make_disk(int rings) {
  if (rings < 1) throw ConfigError("make_disk needs rings >= 1");
  // axial lattice coordinates with basis (1, 0) and (1/2, sqrt(3)/2)
  std::map<std::pair<int, int>, int> ids;
  std::vector<Vec3> vertices;
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      if (hex_distance(q, r) > rings) continue;
      const double x = (q + r / 2.0) / rings;
      const double y = r * kRoot3Over2 / rings;
      ids[{q, r}] = static_cast<int>(vertices.size());
      vertices.push_back({x, y, 0.0});
    }
  }
  std::vector<std::array<int, 3>> faces;
  const auto id = [&](int q, int r) {
    auto it = ids.find({q, r});
    return it == ids.end() ? -1 : it->second;
  };
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      const int a = id(q, r), b = id(q + 1, r), c = id(q, r + 1),
                d = id(q + 1, r + 1);
      if (a >= 0 && b >= 0 && c >= 0) faces.push_back({a, b, c});  // upward
      if (b >= 0 && d >= 0 && c >= 0) faces.push_back({b, d, c});  // downward
    }
  }
  return build_mesh(std::move(vertices), std::move(faces));
}

TriMesh make_subject(const SynthSpec& spec) {
  TriMesh mesh = make_disk(spec.rings);
  auto rng = substream(spec.seed, /*tag=*/1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  struct Bump {
    double cx, cy, width, amplitude;
  };
  // more bumps come out narrower, so classes differ in fine structure
  const double width_scale = 1.0 / std::sqrt(double(spec.bump_count) + 1.0);
  const double subject_gain = 0.45 + 1.1 * unit(rng);  // within-class spread
  std::vector<Bump> bumps(std::max(spec.bump_count, 0));
  for (Bump& bump : bumps) {
    const double radius = 0.85 * std::sqrt(unit(rng));
    const double angle = 2 * 3.14159265358979323846 * unit(rng);
    bump.cx = radius * std::cos(angle);
    bump.cy = radius * std::sin(angle);
    bump.width = (0.35 + 0.40 * unit(rng)) * width_scale;
    // draws split into named steps so the rng consumption order is fixed
    const double jitter = 0.7 + 0.6 * unit(rng);
    const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
    bump.amplitude = spec.bump_amplitude * subject_gain * jitter * sign;
  }
  std::normal_distribution<double> noise(0.0, 1.0);
  for (Vec3& p : mesh.vertices) {
    double z = 0;
    for (const Bump& bump : bumps) {
      const double dx = p[0] - bump.cx, dy = p[1] - bump.cy;
      z += bump.amplitude *
           std::exp(-(dx * dx + dy * dy) / (2 * bump.width * bump.width));
    }
    if (spec.noise_sigma > 0) z += spec.noise_sigma * noise(rng);
    p[2] = z;
  }
  return mesh;
}

std::string write_cohort(const CohortOptions& opts,
                         const std::string& out_dir) {
  if (opts.subjects < 2)
    throw ConfigError("cohort needs at least two subjects");
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(out_dir) / "meshes");

  std::vector<ManifestRow> rows;
  char name[64];
  for (int s = 0; s < opts.subjects; ++s) {
    const bool atrophied = s % 2 == 0;  // alternate so truncations stay balanced
    std::snprintf(name, sizeof name, "subj%03d", s);
    const char* regions[2] = {"left", "right"};
    for (int r = 0; r < 2; ++r) {
      const SynthSpec spec =
          atrophied ? atrophied_spec(opts.rings,
                                     substream(opts.seed, 4, s, r)())
                    : smooth_spec(opts.rings, substream(opts.seed, 4, s, r)());
      const TriMesh mesh = make_subject(spec);
      const std::string rel =
          std::string("meshes/") + name + "_" + regions[r] + ".off";
      save_off(mesh, (fs::path(out_dir) / rel).string());
      rows.push_back({name, regions[r], rel, atrophied ? "AD" : "CN"});
    }
  }
  std::string manifest = (fs::path(out_dir) / "manifest.csv").string();
  write_manifest(rows, manifest);
  return manifest;
}

void write_manifest(const std::vector<ManifestRow>& rows,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << "subject_id,region,path,label\n";
  for (const ManifestRow& row : rows)
    out << row.subject_id << ',' << row.region << ',' << row.path << ','
        << row.label << '\n';
}

std::vector<ManifestRow> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("subject_id,region,path", 0) != 0)
    throw ParseError("bad manifest header in " + path);
  std::vector<ManifestRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    ManifestRow row;
    if (!std::getline(ls, row.subject_id, ',') ||
        !std::getline(ls, row.region, ',') ||
        !std::getline(ls, row.path, ',') || !std::getline(ls, row.label))
      throw ParseError("bad manifest row: " + line);
    if (row.label != "AD" && row.label != "CN")
      throw ParseError("manifest label must be AD or CN, got '" + row.label +
                       "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty manifest: " + path);
  return rows;
}

}  // namespace riccimorph
