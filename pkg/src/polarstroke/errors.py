"""Exception hierarchy shared across the package."""

from __future__ import annotations


class PolarStrokeError(Exception):
    """Base class for all errors raised by this package."""


# --- path ingestion -------------------------------------------------------

class PathError(PolarStrokeError):
    """Base class for path parsing / validation errors."""


class UnknownCommand(PathError):
    """SVG path data contains a command letter outside the supported subset."""


class ArityError(PathError):
    """A command or segment carries the wrong number of coordinates."""


class EmptyPath(PathError):
    """The input describes no drawable segment."""


class SubpathError(PathError):
    """The input does not form exactly one subpath starting with a moveto."""


class SchemaError(PathError):
    """JSON segment list does not match the expected schema."""


class ContiguityError(PathError):
    """Consecutive segments do not share an endpoint."""


class NonPositiveWeight(PathError):
    """Rational segment weight must be a positive finite number."""


# --- differential geometry ------------------------------------------------

class ParameterOutOfRange(PolarStrokeError):
    """Curve parameter outside [0, 1]."""


class DegenerateSegment(PolarStrokeError):
    """Segment collapses to a point; no geometry can be derived."""


class OffsetCuspSingularity(PolarStrokeError):
    """Offset curvature is unbounded: the offset denominator vanished."""


# --- tessellation ---------------------------------------------------------

class InvalidStyle(PolarStrokeError):
    """Stroke width or quality threshold outside the accepted range."""


class RotationTooLarge(PolarStrokeError):
    """Interval rotation reached 180 degrees; splitting failed upstream."""


class TargetOutOfInterval(PolarStrokeError):
    """Requested tangent angle lies outside the interval's angle range."""


# --- auditing -------------------------------------------------------------

class ZeroLengthEdge(PolarStrokeError):
    """Facet angle is undefined for a zero-length boundary edge."""


class MismatchedInputs(PolarStrokeError):
    """Tessellation and cusp report were built from different inputs."""


class ParallelLines(PolarStrokeError):
    """Line intersection does not exist (zero tangent-angle step)."""
