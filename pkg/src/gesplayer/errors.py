"""Typed error hierarchy shared across the engine."""


class GesplayerError(Exception):
    """Base class for every error the engine raises on purpose."""


class MalformedRecord(GesplayerError):
    """Input line is not valid JSON text."""


class SchemaViolation(GesplayerError):
    """Record is valid JSON but has missing fields, wrong types, or wrong counts."""


class ValueOutOfRange(GesplayerError):
    """A numeric field is outside its documented bounds."""


class NonMonotonicTimestamp(GesplayerError):
    """Frame timestamp does not advance past the previous accepted frame."""


class DegenerateHand(GesplayerError):
    """Hand landmarks are collapsed; extension ratios are undefined."""


class SegmentTooShort(GesplayerError):
    """Baseline segment is shorter than the configured minimum length."""


class InvalidScenario(GesplayerError):
    """Unknown scenario name passed to the trace generator."""
