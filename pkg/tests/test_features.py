"""Key points, finger extension ratios, and pointer classification."""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gesplayer import frames as fr
from gesplayer.errors import DegenerateHand
from gesplayer.features import (
    FingerFlags,
    PointerConfig,
    classify_config,
    extract_keypoints,
    finger_extended,
    finger_flags,
)

import handforge


def make_hand(points):
    return fr.HandObservation(
        handedness=fr.Handedness.RIGHT,
        score=0.9,
        landmarks=tuple(fr.Landmark(x, y, 0.0) for x, y in points),
    )


def flat_hand(**pins):
    """21 landmarks on a default grid, with index -> (x, y) overrides."""
    pts = [(0.05 * i, 0.5) for i in range(21)]
    for idx, p in pins.items():
        pts[int(idx)] = p
    return make_hand(pts)


class TestExtractKeypoints:
    def test_wrist_is_landmark_0(self):
        kp = extract_keypoints(flat_hand(**{"0": (0.3, 0.5)}))
        assert kp.wrist == (0.3, 0.5)

    def test_middle_tip_is_landmark_12(self):
        kp = extract_keypoints(flat_hand(**{"12": (0.7, 0.5)}))
        assert kp.middle_tip == (0.7, 0.5)

    def test_index_tip_is_landmark_8(self):
        kp = extract_keypoints(flat_hand(**{"8": (0.5, 0.45)}))
        assert kp.index_tip == (0.5, 0.45)

    def test_thumb_tip_is_landmark_4(self):
        kp = extract_keypoints(flat_hand(**{"4": (0.2, 0.4)}))
        assert kp.thumb_tip == (0.2, 0.4)


class TestFingerExtended:
    def test_straight_index_extended(self):
        # tip twice as far from the wrist as the PIP: ratio 2.0 > 1.10
        hand = flat_hand(**{"0": (0.0, 0.5), "6": (0.2, 0.5), "8": (0.4, 0.5)})
        assert finger_extended(hand, "index") is True

    def test_curled_index_not_extended(self):
        # tip coincides with the wrist: ratio 0
        hand = flat_hand(**{"0": (0.0, 0.5), "6": (0.2, 0.5), "8": (0.0, 0.5)})
        assert finger_extended(hand, "index") is False

    def test_exact_threshold_is_not_extended(self):
        # strict inequality: ratio exactly 1.10 stays folded
        hand = flat_hand(**{"0": (0.0, 0.5), "6": (0.2, 0.5), "8": (1.10 * 0.2, 0.5)})
        assert finger_extended(hand, "index") is False

    def test_thumb_uses_middle_mcp_reference(self):
        hand = flat_hand(**{"9": (0.5, 0.5), "3": (0.4, 0.5), "4": (0.25, 0.5)})
        # dist(tip, mcp9) = 0.25 > 1.20 * dist(ip, mcp9) = 0.12
        assert finger_extended(hand, "thumb") is True
        hand = flat_hand(**{"9": (0.5, 0.5), "3": (0.4, 0.5), "4": (0.39, 0.5)})
        assert finger_extended(hand, "thumb") is False

    def test_collapsed_reference_raises(self):
        hand = flat_hand(**{"0": (0.3, 0.5), "6": (0.3, 0.5)})
        with pytest.raises(DegenerateHand):
            finger_extended(hand, "index")

    def test_unknown_finger_name(self):
        with pytest.raises(ValueError):
            finger_extended(flat_hand(), "palm")

    def test_custom_ratio_threshold(self):
        hand = flat_hand(**{"0": (0.0, 0.5), "6": (0.2, 0.5), "8": (0.3, 0.5)})
        assert finger_extended(hand, "index", finger_ratio=1.10) is True
        assert finger_extended(hand, "index", finger_ratio=2.0) is False


@given(
    angle=st.floats(0, 2 * math.pi),
    scale=st.floats(0.2, 3.0),
    tx=st.floats(-2, 2),
    ty=st.floats(-2, 2),
    pose=st.sampled_from(sorted(handforge.POSES)),
)
def test_flags_invariant_under_similarity_transform(angle, scale, tx, ty, pose):
    pts = handforge.hand_points((0.5, 0.5), pose=pose)
    c, s = math.cos(angle), math.sin(angle)
    moved = [
        (scale * (x * c - y * s) + tx, scale * (x * s + y * c) + ty) for x, y in pts
    ]
    assert finger_flags(make_hand(moved)) == finger_flags(make_hand(pts))


class TestClassifyConfig:
    def test_seek_pointer(self):
        assert classify_config(FingerFlags(False, True, False, False, False)) is PointerConfig.SEEK_POINTER

    def test_volume_pointer(self):
        assert classify_config(FingerFlags(True, True, True, False, False)) is PointerConfig.VOLUME_POINTER

    def test_brightness_pointer(self):
        assert classify_config(FingerFlags(True, True, False, False, False)) is PointerConfig.BRIGHTNESS_POINTER

    def test_open_palm(self):
        assert classify_config(FingerFlags(True, True, True, True, True)) is PointerConfig.OPEN_PALM

    def test_catch_all(self):
        assert classify_config(FingerFlags(True, False, True, False, False)) is PointerConfig.OTHER

    def test_total_and_disjoint_over_all_combinations(self):
        seen = {}
        for combo in itertools.product([False, True], repeat=5):
            config = classify_config(FingerFlags(*combo))
            assert isinstance(config, PointerConfig)
            seen.setdefault(config, []).append(combo)
        # each named class owns exactly one flag combination
        for config in (
            PointerConfig.OPEN_PALM,
            PointerConfig.SEEK_POINTER,
            PointerConfig.VOLUME_POINTER,
            PointerConfig.BRIGHTNESS_POINTER,
        ):
            assert len(seen[config]) == 1
        assert len(seen[PointerConfig.OTHER]) == 32 - 4

    def test_pointer_classes_pairwise_flag_distance(self):
        combos = {
            PointerConfig.SEEK_POINTER: (False, True, False, False, False),
            PointerConfig.VOLUME_POINTER: (True, True, True, False, False),
            PointerConfig.BRIGHTNESS_POINTER: (True, True, False, False, False),
        }

        def hamming(a, b):
            return sum(x != y for x, y in zip(a, b))

        seek = combos[PointerConfig.SEEK_POINTER]
        volume = combos[PointerConfig.VOLUME_POINTER]
        brightness = combos[PointerConfig.BRIGHTNESS_POINTER]
        assert hamming(seek, volume) == 2
        assert hamming(seek, brightness) == 1
        assert hamming(volume, brightness) == 1
        for a, b in ((seek, volume), (seek, brightness), (volume, brightness)):
            assert hamming(a, b) >= 1
