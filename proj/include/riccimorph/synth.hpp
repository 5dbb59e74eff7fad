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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riccimorph/mesh.hpp"

namespace riccimorph {

/// Generator parameters for one synthetic disk patch. The two class
/// profiles differ in bump amplitude and count, standing in for the
/// folding differences between cohorts.
struct SynthSpec {
  std::string class_tag = "smooth";  // "smooth" or "atrophied"
  int rings = 16;
  double bump_amplitude = 0.0;
  int bump_count = 0;
  double noise_sigma = 0.0;
  uint64_t seed = 0;
};

SynthSpec smooth_spec(int rings, uint64_t seed);
SynthSpec atrophied_spec(int rings, uint64_t seed);

/// Flat triangulated unit disk: a hexagonal patch of the regular
/// triangular lattice with the given ring count. V = 1 + 3r(r+1), chi = 1,
/// zero angle defect at every interior vertex.
TriMesh make_disk(int rings);

/// Disk lifted by a sum of seeded Gaussian bumps plus per-vertex height
/// noise. Pure in the spec (same spec, same mesh).
TriMesh make_subject(const SynthSpec& spec);

struct ManifestRow {
  std::string subject_id;
  std::string region;
  std::string path;  // relative to the manifest's directory
  std::string label;  // "AD" or "CN"
};

struct CohortOptions {
  int subjects = 160;  // total, alternating AD/CN
  int rings = 16;
  uint64_t seed = 42;
};

/// Writes subjects x {left, right} OFF meshes under out_dir/meshes and a
/// manifest CSV; atrophied patches carry the AD label, smooth ones CN.
/// Returns the manifest path.
std::string write_cohort(const CohortOptions& opts,
                         const std::string& out_dir);

std::vector<ManifestRow> read_manifest(const std::string& path);
void write_manifest(const std::vector<ManifestRow>& rows,
                    const std::string& path);

}  // namespace riccimorph
