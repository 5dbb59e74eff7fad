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

namespace riccimorph {

// Central tolerance constants. The Newton solver needs tight residuals, so
// everything downstream of the metric is pinned here rather than scattered.
inline constexpr double kLengthEps = 1e-12;       // minimum admissible edge length
inline constexpr double kAngleSumEps = 1e-10;     // per-face angle sum vs pi
inline constexpr double kGaussBonnetEps = 1e-9;   // total curvature vs 2*pi*chi
inline constexpr double kMeanZeroEps = 1e-10;     // sum of conformal factors
inline constexpr double kCgTol = 1e-12;           // conjugate gradient residual
inline constexpr double kEmbedBandRel = 1e-9;     // circle intersection tolerance band
inline constexpr double kProbSumEps = 1e-9;       // probability normalization check

}  // namespace riccimorph
