import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import lbp_histogram_ref, lbp_label_ref
from texcurate.image import GrayImage, ImageError
from texcurate.lbp import (
    LbpConfig,
    label_from_bits,
    lbp_histogram,
    lbp_label,
    lbp_label_image,
    neighbour_offsets,
    uniformity,
)


def test_default_config():
    cfg = LbpConfig()
    assert (cfg.P, cfg.R, cfg.U_T, cfg.n_labels) == (8, 1, 2, 10)


@pytest.mark.parametrize("kwargs", [{"P": 3}, {"R": 0}, {"U_T": 9}, {"U_T": -1}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        LbpConfig(**kwargs)


def test_worked_example():
    assert lbp_label(5, (6, 7, 8, 9, 1, 2, 3, 4)) == 4
    assert uniformity([1, 1, 1, 1, 0, 0, 0, 0]) == 2


def test_constant_patch():
    assert lbp_label(3, [3] * 8) == 8


def test_alternating_pattern_is_non_uniform():
    bits = [0, 1, 0, 1, 0, 1, 0, 1]
    assert uniformity(bits) == 8
    assert label_from_bits(bits, LbpConfig()) == 9


def test_uniformity_examples():
    assert uniformity([0] * 8) == 0
    assert uniformity([1] * 8) == 0
    # the wrap-around pair (last, first) = (1, 0) adds a fourth transition
    assert uniformity([0, 0, 0, 1, 1, 1, 0, 1]) == 4


def test_all_patterns_match_oracle_and_are_rotation_invariant():
    cfg = LbpConfig()
    for bits in itertools.product([0, 1], repeat=8):
        neigh = [1 if b else 0 for b in bits]
        lab = lbp_label(1, neigh, cfg)
        assert lab == lbp_label_ref(1, neigh)
        for r in range(1, 8):
            assert lbp_label(1, neigh[r:] + neigh[:r], cfg) == lab


def test_offsets_counter_clockwise_from_east():
    off = neighbour_offsets(LbpConfig()).astype(int).tolist()
    assert off == [[0, 1], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1], [1, 0], [1, 1]]


def test_constant_image():
    probs = lbp_histogram(GrayImage(np.full((5, 5), 2), 4))
    assert probs[8] == 1 and probs.sum() == 1


def test_two_band_step():
    px = np.zeros((6, 8), int)
    px[:, 4:] = 3
    probs = lbp_histogram(GrayImage(px, 4))
    np.testing.assert_allclose(probs, lbp_histogram_ref(px), atol=0)
    assert probs[9] == 0
    assert probs.sum() == pytest.approx(1, abs=1e-12)


def test_random_6x6_matches_oracle():
    px = np.random.default_rng(3).integers(0, 4, (6, 6))
    np.testing.assert_allclose(lbp_histogram(GrayImage(px, 4)), lbp_histogram_ref(px), atol=0)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 10), st.integers(3, 10), st.integers(2, 16), st.integers(0, 2**32 - 1))
def test_image_matches_oracle(h, w, G, seed):
    px = np.random.default_rng(seed).integers(0, G, (h, w))
    probs = lbp_histogram(GrayImage(px, G))
    np.testing.assert_allclose(probs, lbp_histogram_ref(px), atol=1e-15)
    assert abs(probs.sum() - 1) < 1e-9


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 50))
def test_constant_shift_keeps_labels(seed, c):
    px = np.random.default_rng(seed).integers(0, 8, (8, 8))
    a = lbp_label_image(GrayImage(px, 8))
    b = lbp_label_image(GrayImage(px + c, 8 + c))
    np.testing.assert_array_equal(a, b)


def test_larger_radius_and_circular_sampling():
    px = np.random.default_rng(5).integers(0, 16, (12, 12))
    probs = lbp_histogram(GrayImage(px, 16), LbpConfig(R=2))
    assert len(probs) == 10 and probs.sum() == pytest.approx(1)
    cfg = LbpConfig(P=16, R=2)
    probs = lbp_histogram(GrayImage(px, 16), cfg)
    assert len(probs) == 18 and probs.sum() == pytest.approx(1)
    # P=4 on the unit circle lands on the 4-connected pixels
    assert neighbour_offsets(LbpConfig(P=4, U_T=1)).tolist() == [[0, 1], [-1, 0], [0, -1], [1, 0]]


def test_too_small():
    with pytest.raises(ImageError):
        lbp_histogram(GrayImage(np.zeros((2, 9), int), 2))
