# Copyright 2026 The Riccimorph Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Conformal morphometry toolkit.

Ricci-flow planar parameterization of disk meshes, entropy-encoded shape
descriptors, and a small classification harness. The heavy lifting lives
in the C++ extension module; this package re-exports its surface.
"""

from ._riccimorph import (  # noqa: F401
    ConfigError,
    EmbedError,
    FeatureFields,
    FlowError,
    FlowState,
    MetricError,
    PackingError,
    PackingMetric,
    ParseError,
    PlanarEmbedding,
    SolveError,
    StatsError,
    TopologyError,
    TrainError,
    TriMesh,
    area_distortion,
    build_mesh,
    confusion_metrics,
    conformal_factor,
    corner_angles,
    default_target_curvature,
    embed_plane,
    euclidean_edge_lengths,
    extract_features,
    gaussian_curvature,
    histogram_probabilities,
    initial_packing,
    lengths_from_packing,
    load_mesh,
    make_disk,
    make_subject,
    ricci_flow,
    roc_auc,
    run_pipeline,
    save_off,
    shannon_entropy,
    welch_t_test,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
