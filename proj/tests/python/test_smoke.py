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

import json
import math

import pytest

import riccimorph as rm


def test_make_disk_counts():
    disk = rm.make_disk(1)
    assert disk.num_vertices == 7
    assert disk.num_faces == 6
    assert disk.num_edges == 12
    assert disk.euler_characteristic == 1
    assert disk.is_disk


def test_gauss_bonnet_on_a_bumpy_patch():
    mesh = rm.make_subject("atrophied", rings=6, seed=3)
    k = rm.gaussian_curvature(mesh, rm.euclidean_edge_lengths(mesh))
    assert sum(k) == pytest.approx(2 * math.pi, abs=1e-9)


def test_packing_identity():
    mesh = rm.make_disk(3)
    lengths = rm.euclidean_edge_lengths(mesh)
    metric = rm.initial_packing(mesh, lengths)
    back = rm.lengths_from_packing(mesh, metric, [0.0] * mesh.num_vertices)
    assert back == pytest.approx(lengths, rel=1e-12)


def test_flow_and_embedding_roundtrip():
    mesh = rm.make_subject("smooth", rings=6, seed=11)
    lengths = rm.euclidean_edge_lengths(mesh)
    metric = rm.initial_packing(mesh, lengths)
    target = rm.default_target_curvature(mesh, lengths)
    state = rm.ricci_flow(mesh, metric, target)
    assert state.converged
    assert state.residual <= 1e-6
    embedding = rm.embed_plane(mesh, state.lengths)
    assert embedding.max_length_error <= 1e-6
    fields = rm.extract_features(mesh, lengths, state, metric)
    assert len(fields.area_distortion) == mesh.num_vertices
    assert all(math.isfinite(v) for v in fields.conformal_factor)


def test_entropy_basics():
    assert rm.shannon_entropy([0.25] * 4) == 2.0
    p = rm.histogram_probabilities([0.1, 0.9], 2, 0.0, 1.0)
    assert p == [0.5, 0.5]
    with pytest.raises(rm.StatsError):
        rm.shannon_entropy([0.5, 0.2])


def test_statistics():
    t, dof, p = rm.welch_t_test([1, 2, 3, 4, 5], [2, 3, 4, 5, 6])
    assert t == pytest.approx(-1.0)
    assert dof == pytest.approx(8.0)
    assert 0 < p < 1
    m = rm.confusion_metrics(50, 45, 5, 0)
    assert m["accuracy"] == pytest.approx(0.95)
    assert m["f1"] == pytest.approx(100 / 105)
    assert rm.roc_auc([0.9, 0.8, 0.2, 0.1], [1, 1, 0, 0]) == 1.0


def test_invalid_mesh_raises():
    with pytest.raises(rm.TopologyError):
        rm.build_mesh(
            [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, -1, 0]],
            [[0, 1, 2], [1, 0, 3], [0, 1, 4]],
        )


def test_mini_pipeline(tmp_path):
    out = tmp_path / "run"
    status = rm.run_pipeline(
        str(out), subjects=8, rings=4, repeats=3, seed=5, scales=[4, 16]
    )
    assert status == 0
    report = json.loads((out / "report.json").read_text())
    assert [s["name"] for s in report["scales"]] == ["Scale 1", "Scale 2"]
    for scale in report["scales"]:
        for classifier in scale["classifiers"]:
            assert 0 <= classifier["accuracy"]["mean"] <= 1
