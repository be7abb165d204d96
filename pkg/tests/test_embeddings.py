# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Tests for the embeddings module."""

import numpy as np
import pytest

from epicontrol.core.errors import InvalidReductionError, RejectedInputError, UndefinedStatisticError
from epicontrol.core.types import EmbeddingKind
from epicontrol.embeddings import (
    EmbeddingFunction,
    ObservationFrame,
    ProjectionMatrix,
    euclidean_distance,
    jl_distortion,
    make_projection,
    pairwise_distances,
    project,
    rank_correlation,
)
from epicontrol.vae.model import VaeModel, vae_features


def frame(values, height=1, width=None, channels=1) -> ObservationFrame:
    values = np.asarray(values, dtype=np.float64)
    return ObservationFrame(pixels=values, height=height, width=width or values.size // (height * channels), channels=channels)


class TestObservationFrame:
    """Tests for ObservationFrame validation and conversion."""

    def test_shape_must_match(self):
        with pytest.raises(RejectedInputError):
            ObservationFrame(pixels=np.zeros(5), height=2, width=2)

    def test_values_must_lie_in_unit_interval(self):
        with pytest.raises(RejectedInputError):
            frame([0.0, 1.5])
        with pytest.raises(RejectedInputError):
            frame([-0.1, 0.5])

    def test_planes_layout(self):
        f = ObservationFrame(pixels=np.arange(12) / 12.0, height=2, width=3, channels=2)
        planes = f.planes()
        assert planes.shape == (2, 2, 3)
        assert planes[1, 0, 0] == 6 / 12.0

    def test_grayscale_takes_max_weighted_plane(self):
        pixels = np.zeros((2, 1, 2))
        pixels[0, 0, 0] = 1.0
        pixels[1, 0, 0] = 1.0
        pixels[1, 0, 1] = 0.5
        gray = ObservationFrame(pixels=pixels, height=1, width=2, channels=2).grayscale([0.3, 0.8])
        assert gray.channels == 1
        assert gray.pixels.tolist() == pytest.approx([0.8, 0.4])

    def test_grayscale_needs_one_intensity_per_plane(self):
        with pytest.raises(RejectedInputError):
            frame([0.0, 1.0], channels=2, width=1).grayscale([1.0])


class TestDistance:
    """Tests for distance helpers."""

    def test_euclidean_distance(self):
        assert euclidean_distance([0.0, 0.0], [3.0, 4.0]) == pytest.approx(5.0)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError, match="dimensions don't match"):
            euclidean_distance([1.0, 2.0], [1.0, 2.0, 3.0])

    def test_pairwise_distances_condensed_order(self):
        points = np.array([[0.0], [1.0], [3.0]])
        assert pairwise_distances(points).tolist() == [1.0, 3.0, 2.0]

    def test_rank_correlation_of_monotone_lists(self):
        assert rank_correlation(np.array([1.0, 2.0, 3.0]), np.array([10.0, 20.0, 35.0])) == pytest.approx(1.0)

    def test_rank_correlation_needs_two_values(self):
        assert np.isnan(rank_correlation(np.array([1.0]), np.array([2.0])))


class TestMakeProjection:
    """Tests for seeded projection matrices."""

    def test_same_seed_is_bit_identical(self):
        a = make_projection(50, 8, seed=11)
        b = make_projection(50, 8, seed=11)
        assert a.entries.tobytes() == b.entries.tobytes()

    def test_different_seeds_differ(self):
        a = make_projection(50, 8, seed=11)
        b = make_projection(50, 8, seed=12)
        assert not np.array_equal(a.entries, b.entries)

    def test_full_scale_shape(self):
        m = make_projection(7056, 64, seed=0)
        assert m.entries.shape == (64, 7056)
        assert (m.target_dim, m.source_dim) == (64, 7056)

    def test_entries_come_from_pcg64_standard_normal(self):
        expected = np.random.Generator(np.random.PCG64(5)).standard_normal((3, 10))
        assert np.array_equal(make_projection(10, 3, seed=5).entries, expected)

    @pytest.mark.parametrize("D,F", [(10, 10), (10, 20)])
    def test_non_reducing_projection_rejected(self, D: int, F: int):
        with pytest.raises(InvalidReductionError):
            make_projection(D, F, seed=0)


class TestProject:
    """Tests for applying a projection."""

    def test_zero_maps_to_zero(self):
        m = make_projection(16, 4, seed=1)
        assert np.all(project(m, np.zeros(16)) == 0.0)

    def test_additivity(self):
        rng = np.random.Generator(np.random.PCG64(2))
        m = make_projection(32, 6, seed=2)
        x1, x2 = rng.random(32), rng.random(32)
        np.testing.assert_allclose(project(m, x1 + x2), project(m, x1) + project(m, x2), rtol=1e-9, atol=1e-9)

    def test_matches_double_loop_multiply(self):
        rng = np.random.Generator(np.random.PCG64(3))
        m = make_projection(8, 3, seed=3)
        x = rng.random(8)
        expected = [sum(m.entries[i, j] * x[j] for j in range(8)) for i in range(3)]
        np.testing.assert_allclose(project(m, x), expected, rtol=1e-12)

    def test_accepts_frames(self):
        m = make_projection(4, 2, seed=0)
        f = frame([0.1, 0.2, 0.3, 0.4])
        np.testing.assert_array_equal(project(m, f), m.entries @ f.pixels)

    def test_dimension_mismatch_rejected(self):
        m = make_projection(8, 2, seed=0)
        with pytest.raises(RejectedInputError):
            project(m, np.zeros(7))


class TestJlDistortion:
    """Tests for the distance-distortion checker."""

    def test_identity_matrix_has_zero_distortion(self):
        rng = np.random.Generator(np.random.PCG64(4))
        m = ProjectionMatrix(entries=np.eye(6), seed=0)
        summary = jl_distortion(m, list(rng.random((5, 6))), rescale=False)
        assert summary.median == 0.0
        assert summary.max == 0.0
        assert summary.pair_count == 10

    def test_independent_of_point_order(self):
        rng = np.random.Generator(np.random.PCG64(5))
        points = list(rng.random((8, 40)))
        m = make_projection(40, 10, seed=5)
        forward = jl_distortion(m, points)
        backward = jl_distortion(m, points[::-1])
        assert forward.median == pytest.approx(backward.median, abs=1e-12)
        assert forward.max == pytest.approx(backward.max, abs=1e-12)

    @pytest.mark.parametrize("seed", range(10))
    def test_median_distortion_is_small(self, seed: int):
        """100 random points, D=1024, F=64: median relative distortion below 0.35."""
        rng = np.random.Generator(np.random.PCG64(1000 + seed))
        points = [frame(p) for p in rng.random((100, 1024))]
        summary = jl_distortion(make_projection(1024, 64, seed=seed), points)
        assert summary.median < 0.35

    @pytest.mark.parametrize("seed", range(10))
    def test_distance_ranks_are_preserved(self, seed: int):
        """
        100 random points, D=1024, F=64: rank correlation of original vs
        projected distances exceeds 0.9.

        Each point gets a random overall scale. Plain uniform points all sit
        at nearly the same distance from each other, which leaves no
        ordering for the projection to preserve.
        """
        rng = np.random.Generator(np.random.PCG64(2000 + seed))
        scale = rng.uniform(0.05, 1.0, size=(100, 1))
        points = list(rng.random((100, 1024)) * scale)
        summary = jl_distortion(make_projection(1024, 64, seed=seed), points)
        assert summary.pair_count == 4950
        assert summary.rank_correlation > 0.9

    def test_needs_two_points(self):
        m = make_projection(4, 2, seed=0)
        with pytest.raises(RejectedInputError):
            jl_distortion(m, [np.zeros(4)])

    def test_duplicate_points_are_undefined(self):
        m = make_projection(4, 2, seed=0)
        with pytest.raises(UndefinedStatisticError):
            jl_distortion(m, [np.ones(4) * 0.5, np.ones(4) * 0.5])

    def test_duplicates_among_distinct_points_are_skipped(self):
        m = make_projection(4, 2, seed=0)
        summary = jl_distortion(m, [np.zeros(4), np.zeros(4), np.ones(4)])
        assert summary.pair_count == 2


class TestEmbeddingFunction:
    """Tests for the embedding variants."""

    def test_identity_copies_pixels(self):
        f = frame([0.25, 0.5, 0.75])
        embedding = EmbeddingFunction.identity(3)
        out = embedding.embed(f)
        assert out.tolist() == [0.25, 0.5, 0.75]
        assert embedding.dim == 3
        out[0] = 1.0
        assert f.pixels[0] == 0.25

    def test_identical_frames_embed_bit_identically(self):
        rng = np.random.Generator(np.random.PCG64(6))
        pixels = rng.random(20)
        embedding = EmbeddingFunction.random_projection(20, 5, seed=9)
        assert embedding(frame(pixels)).tobytes() == embedding(frame(pixels.copy())).tobytes()
        assert embedding.kind is EmbeddingKind.RANDOM_PROJECTION
        assert embedding.dim == 5

    def test_vae_features_dimension(self):
        model = VaeModel.init(D=6, H=4, L=3, seed=0)
        embedding = EmbeddingFunction.vae_features(model)
        f = frame(np.linspace(0.0, 1.0, 6))
        out = embedding.embed(f)
        assert embedding.dim == 6
        assert out.shape == (6,)
        np.testing.assert_array_equal(out, vae_features(model, f))

    def test_wrong_frame_dimension_rejected(self):
        with pytest.raises(RejectedInputError):
            EmbeddingFunction.identity(4).embed(frame([0.0, 1.0]))
