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

#include <stdexcept>
#include <string>

namespace riccimorph {

/// Malformed input file (OFF/OBJ/CSV/JSON grammar violations).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-manifold edges, inconsistent orientation, multiple components.
class TopologyError : public std::runtime_error {
 public:
  explicit TopologyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate or invalid metric: nonpositive lengths, triangle-inequality
/// violations, metric collapse during flow.
class MetricError : public std::runtime_error {
 public:
  explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Circle packing could not be constructed (nonpositive corner radius).
class PackingError : public std::runtime_error {
 public:
  explicit PackingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear solver failed to converge.
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ricci flow precondition violation or unrecoverable step failure.
class FlowError : public std::runtime_error {
 public:
  explicit FlowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Planar embedding failure (circle intersection out of tolerance).
class EmbedError : public std::runtime_error {
 public:
  explicit EmbedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or arguments.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or degenerate statistical input.
class StatsError : public std::runtime_error {
 public:
  explicit StatsError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Classifier training diverged.
class TrainError : public std::runtime_error {
 public:
  explicit TrainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace riccimorph
