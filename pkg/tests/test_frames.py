"""Wire parsing, serialization round-trip, and stream ordering rules."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gesplayer import frames as fr
from gesplayer.errors import (
    GesplayerError,
    MalformedRecord,
    NonMonotonicTimestamp,
    SchemaViolation,
    ValueOutOfRange,
)


def hand_dict(handedness="Left", score=0.9, count=21):
    return {
        "handedness": handedness,
        "score": score,
        "landmarks": [[0.1 + 0.01 * i, 0.2, 0.0] for i in range(count)],
    }


def frame_line(t_ms=1000, hands=()):
    return json.dumps({"t_ms": t_ms, "hands": list(hands)})


class TestParseFrame:
    def test_two_hands_well_formed(self):
        line = frame_line(1033, [hand_dict("Left"), hand_dict("Right")])
        frame = fr.parse_frame(line)
        assert frame.t_ms == 1033
        assert len(frame.hands) == 2
        assert frame.hands[0].handedness is fr.Handedness.LEFT
        assert len(frame.hands[0].landmarks) == 21

    def test_accepts_bytes(self):
        frame = fr.parse_frame(frame_line(5, [hand_dict()]).encode())
        assert frame.t_ms == 5

    def test_twenty_landmarks_rejected(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame(frame_line(1000, [hand_dict(count=20)]))

    def test_score_above_one_rejected(self):
        with pytest.raises(ValueOutOfRange):
            fr.parse_frame(frame_line(1000, [hand_dict(score=1.3)]))

    def test_negative_score_rejected(self):
        with pytest.raises(ValueOutOfRange):
            fr.parse_frame(frame_line(1000, [hand_dict(score=-0.1)]))

    def test_not_json(self):
        with pytest.raises(MalformedRecord):
            fr.parse_frame("{not json")

    def test_empty_line(self):
        with pytest.raises(MalformedRecord):
            fr.parse_frame("")

    def test_invalid_utf8(self):
        with pytest.raises(MalformedRecord):
            fr.parse_frame(b"\xff\xfe{}")

    def test_top_level_array_rejected(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame("[1, 2, 3]")

    def test_missing_t_ms(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame(json.dumps({"hands": []}))

    def test_missing_hands(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame(json.dumps({"t_ms": 10}))

    def test_three_hands_rejected(self):
        line = frame_line(1, [hand_dict(), hand_dict(), hand_dict()])
        with pytest.raises(SchemaViolation):
            fr.parse_frame(line)

    def test_non_integer_t_ms_rejected(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame(frame_line(10.5, []))
        with pytest.raises(SchemaViolation):
            fr.parse_frame(frame_line(True, []))

    def test_bad_handedness_spelling(self):
        with pytest.raises(SchemaViolation):
            fr.parse_frame(frame_line(1, [hand_dict(handedness="left")]))

    def test_nan_coordinate_rejected(self):
        hand = hand_dict()
        hand["landmarks"][3][0] = float("nan")
        # json.dumps writes NaN, which json.loads accepts back
        with pytest.raises(ValueOutOfRange):
            fr.parse_frame(frame_line(1, [hand]))

    def test_coordinate_slightly_outside_image_ok(self):
        hand = hand_dict()
        hand["landmarks"][0] = [-0.49, 1.49, 0.0]
        frame = fr.parse_frame(frame_line(1, [hand]))
        assert frame.hands[0].landmarks[0].x == -0.49

    def test_coordinate_far_outside_rejected(self):
        hand = hand_dict()
        hand["landmarks"][0] = [-0.6, 0.5, 0.0]
        with pytest.raises(ValueOutOfRange):
            fr.parse_frame(frame_line(1, [hand]))

    def test_two_element_landmark_rejected(self):
        hand = hand_dict()
        hand["landmarks"][7] = [0.1, 0.2]
        with pytest.raises(SchemaViolation):
            fr.parse_frame(frame_line(1, [hand]))

    def test_unknown_fields_ignored(self):
        hand = hand_dict()
        hand["extra"] = {"nested": True}
        record = {"t_ms": 9, "hands": [hand], "source": "tracker-x"}
        frame = fr.parse_frame(json.dumps(record))
        assert frame.t_ms == 9
        assert len(frame.hands) == 1

    def test_browser_client_compact_json_accepted(self):
        # JSON.stringify output: no whitespace between tokens
        line = json.dumps(
            {"t_ms": 1033, "hands": [hand_dict("Right", 0.97)]},
            separators=(",", ":"),
        )
        frame = fr.parse_frame(line)
        assert frame.hands[0].handedness is fr.Handedness.RIGHT


valid_coord = st.floats(min_value=-0.5, max_value=1.5, allow_nan=False)
landmarks_st = st.lists(
    st.tuples(valid_coord, valid_coord, st.floats(-5, 5, allow_nan=False)),
    min_size=21,
    max_size=21,
)
hand_st = st.builds(
    fr.HandObservation,
    handedness=st.sampled_from(list(fr.Handedness)),
    score=st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    landmarks=landmarks_st.map(lambda pts: tuple(fr.Landmark(*p) for p in pts)),
)
frame_st = st.builds(
    fr.LandmarkFrame,
    t_ms=st.integers(min_value=0, max_value=2**48),
    hands=st.lists(hand_st, max_size=2).map(tuple),
)


@given(frame_st)
def test_roundtrip_serialize_parse(frame):
    assert fr.parse_frame(fr.serialize_frame(frame)) == frame


@settings(max_examples=300)
@given(st.binary(max_size=200))
def test_parse_never_aborts(data):
    try:
        frame = fr.parse_frame(data)
    except GesplayerError:
        return
    assert isinstance(frame, fr.LandmarkFrame)


class TestValidateSequence:
    def test_advancing_timestamp_accepted(self):
        frame = fr.parse_frame(frame_line(1033, [hand_dict()]))
        assert fr.validate_sequence(1000, frame) == frame

    def test_equal_timestamp_rejected(self):
        frame = fr.parse_frame(frame_line(1000, []))
        with pytest.raises(NonMonotonicTimestamp):
            fr.validate_sequence(1000, frame)

    def test_earlier_timestamp_rejected(self):
        frame = fr.parse_frame(frame_line(900, []))
        with pytest.raises(NonMonotonicTimestamp):
            fr.validate_sequence(1000, frame)

    def test_session_start_accepts_any(self):
        frame = fr.parse_frame(frame_line(0, []))
        assert fr.validate_sequence(None, frame) == frame

    def test_duplicate_handedness_keeps_higher_score(self):
        line = frame_line(5, [hand_dict("Left", 0.9), hand_dict("Left", 0.6)])
        out = fr.validate_sequence(None, fr.parse_frame(line))
        assert len(out.hands) == 1
        assert out.hands[0].score == 0.9

    def test_duplicate_handedness_tie_keeps_first(self):
        first = hand_dict("Right", 0.7)
        first["landmarks"][0] = [0.42, 0.2, 0.0]
        line = frame_line(5, [first, hand_dict("Right", 0.7)])
        out = fr.validate_sequence(None, fr.parse_frame(line))
        assert len(out.hands) == 1
        assert out.hands[0].landmarks[0].x == 0.42

    def test_distinct_hands_untouched(self):
        frame = fr.parse_frame(frame_line(5, [hand_dict("Left"), hand_dict("Right")]))
        assert fr.validate_sequence(None, frame) is frame
