"""Path segments and the two input formats (SVG path-data subset, JSON list).

A path is an ordered, contiguous run of segments: lines, quadratic Beziers,
rational quadratics (conics, the only way to express circular arcs exactly),
and cubic Beziers.  Coordinates are doubles end to end.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    ArityError,
    ContiguityError,
    EmptyPath,
    NonPositiveWeight,
    SchemaError,
    SubpathError,
    UnknownCommand,
)

LINE = "line"
QUAD = "quad"
RQUAD = "rquad"
CUBIC = "cubic"

_ARITY = {LINE: 2, QUAD: 3, RQUAD: 3, CUBIC: 4}

CONTIGUITY_TOL = 1e-9


class Point2(NamedTuple):
    x: float
    y: float

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, s: float) -> Point2:
        return Point2(self.x * s, self.y * s)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def _require_finite(x: float, y: float) -> Point2:
    if not (math.isfinite(x) and math.isfinite(y)):
        raise SchemaError(f"non-finite coordinate ({x}, {y})")
    return Point2(float(x), float(y))


@dataclass(frozen=True)
class PathSegment:
    """One generator curve: kind, control points, optional middle weight."""

    kind: str
    points: tuple[Point2, ...]
    weight: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise SchemaError(f"unknown segment kind {self.kind!r}")
        if len(self.points) != _ARITY[self.kind]:
            raise SchemaError(
                f"{self.kind} needs {_ARITY[self.kind]} points, got {len(self.points)}"
            )
        if self.kind == RQUAD:
            if self.weight is None or not math.isfinite(self.weight):
                raise SchemaError("rquad requires a finite weight")
            if self.weight <= 0:
                raise NonPositiveWeight(f"weight {self.weight} must be > 0")
        elif self.weight is not None:
            raise SchemaError(f"{self.kind} does not take a weight")

    @property
    def start(self) -> Point2:
        return self.points[0]

    @property
    def end(self) -> Point2:
        return self.points[-1]

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def bbox_diag(self) -> float:
        x0, y0, x1, y1 = self.bbox()
        return math.hypot(x1 - x0, y1 - y0)


@dataclass(frozen=True)
class Path:
    """Nonempty contiguous sequence of segments (a single subpath)."""

    segments: tuple[PathSegment, ...]

    def __post_init__(self) -> None:
        if not self.segments:
            raise EmptyPath("path has no segments")
        for i in range(1, len(self.segments)):
            gap = (self.segments[i].start - self.segments[i - 1].end).norm()
            if gap > CONTIGUITY_TOL:
                raise ContiguityError(
                    f"segment {i} starts {gap:g} away from segment {i - 1} end"
                )

    def bbox(self) -> tuple[float, float, float, float]:
        boxes = [s.bbox() for s in self.segments]
        return (
            min(b[0] for b in boxes),
            min(b[1] for b in boxes),
            max(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )


# --- SVG path data (subset) -------------------------------------------------

_NUMBER = re.compile(r"[-+]?(?:\d*\.\d+|\d+\.?)(?:[eE][-+]?\d+)?")
_TOKEN = re.compile(r"([A-Za-z])|" + _NUMBER.pattern)

_SUPPORTED = set("MmLlQqCcZz")
_COORDS_PER = {"M": 2, "L": 2, "Q": 4, "C": 6}


def _tokenize(d: str) -> list[str | float]:
    tokens: list[str | float] = []
    pos = 0
    for m in _TOKEN.finditer(d):
        between = d[pos : m.start()]
        if between.strip(" \t\r\n,"):
            raise UnknownCommand(f"unparseable input near {between.strip()!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(m.group(1))
        else:
            tokens.append(float(m.group(0)))
    if d[pos:].strip(" \t\r\n,"):
        raise UnknownCommand(f"unparseable input near {d[pos:].strip()!r}")
    return tokens


def parse_svg_path(d: str) -> Path:
    """Parse an SVG path-data string using commands M/m, L/l, Q/q, C/c, Z/z.

    One subpath only; Z emits a closing line when the current point differs
    from the subpath start.  Implicit command repetition follows SVG rules
    (extra coordinate pairs after M act as lineto).
    """
    tokens = _tokenize(d)
    segments: list[PathSegment] = []
    i = 0
    current: Point2 | None = None
    start: Point2 | None = None
    seen_move = False
    closed = False

    def take(n: int, cmd: str) -> list[float]:
        nonlocal i
        if i + n > len(tokens) or any(isinstance(t, str) for t in tokens[i : i + n]):
            raise ArityError(f"command {cmd!r} expects {n} numbers")
        vals = [float(tokens[j]) for j in range(i, i + n)]  # type: ignore[arg-type]
        i += n
        return vals

    while i < len(tokens):
        tok = tokens[i]
        if not isinstance(tok, str):
            raise ArityError(f"unexpected number {tok:g} without a command")
        if tok not in _SUPPORTED:
            raise UnknownCommand(f"unsupported path command {tok!r}")
        if closed:
            raise SubpathError("data continues after Z; only one subpath is allowed")
        i += 1
        rel = tok.islower()
        op = tok.upper()

        implicit = False
        if op == "M":
            if seen_move:
                raise SubpathError("second moveto: only one subpath is allowed")
            seen_move = True
            x, y = take(2, tok)
            if rel and current is not None:
                x, y = current.x + x, current.y + y
            current = _require_finite(x, y)
            start = current
            # extra pairs after a moveto are implicit linetos
            op = "L"
            implicit = True
        elif not seen_move:
            raise SubpathError("path data must begin with a moveto")

        if op == "Z":
            assert current is not None and start is not None
            if (current - start).norm() > CONTIGUITY_TOL:
                segments.append(PathSegment(LINE, (current, start)))
            current = start
            closed = True
            continue

        n = _COORDS_PER[op]
        groups = 0
        while i < len(tokens) and not isinstance(tokens[i], str):
            vals = take(n, op)
            assert current is not None
            if rel:
                vals = [
                    vals[j] + (current.x if j % 2 == 0 else current.y)
                    for j in range(n)
                ]
            pts = [_require_finite(vals[j], vals[j + 1]) for j in range(0, n, 2)]
            if op == "L":
                segments.append(PathSegment(LINE, (current, pts[0])))
            elif op == "Q":
                segments.append(PathSegment(QUAD, (current, pts[0], pts[1])))
            elif op == "C":
                segments.append(PathSegment(CUBIC, (current, pts[0], pts[1], pts[2])))
            current = pts[-1]
            groups += 1
        if groups == 0 and not implicit:
            raise ArityError(f"command {tok!r} has no coordinates")

    if not seen_move:
        raise EmptyPath("no path data")
    if not segments:
        raise EmptyPath("path draws nothing")
    return Path(tuple(segments))


# --- JSON segment list ------------------------------------------------------

def _segment_from_obj(obj: object, index: int) -> PathSegment:
    if not isinstance(obj, dict):
        raise SchemaError(f"segment {index}: expected an object, got {type(obj).__name__}")
    extra = set(obj) - {"kind", "points", "weight"}
    if extra:
        raise SchemaError(f"segment {index}: unknown keys {sorted(extra)}")
    kind = obj.get("kind")
    if kind not in _ARITY:
        raise SchemaError(f"segment {index}: bad kind {kind!r}")
    raw_points = obj.get("points")
    if not isinstance(raw_points, list) or len(raw_points) != _ARITY[kind]:
        raise SchemaError(
            f"segment {index}: {kind} needs {_ARITY[kind]} points"
        )
    points = []
    for p in raw_points:
        if (
            not isinstance(p, list)
            or len(p) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in p)
        ):
            raise SchemaError(f"segment {index}: points must be [x, y] numbers")
        points.append(_require_finite(float(p[0]), float(p[1])))
    weight = obj.get("weight")
    if kind == RQUAD:
        if weight is None:
            raise SchemaError(f"segment {index}: rquad requires a weight")
        if not isinstance(weight, (int, float)) or isinstance(weight, bool):
            raise SchemaError(f"segment {index}: weight must be a number")
        if not math.isfinite(weight):
            raise SchemaError(f"segment {index}: weight must be finite")
        if weight <= 0:
            raise NonPositiveWeight(f"segment {index}: weight {weight} must be > 0")
        return PathSegment(RQUAD, tuple(points), float(weight))
    if weight is not None:
        raise SchemaError(f"segment {index}: {kind} does not take a weight")
    return PathSegment(kind, tuple(points))


def parse_json_path(text: str) -> Path:
    """Parse a JSON array of segment objects {kind, points, weight?}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise SchemaError("top level must be an array of segments")
    if not data:
        raise EmptyPath("empty segment list")
    segments = tuple(_segment_from_obj(obj, i) for i, obj in enumerate(data))
    return Path(segments)


def segment_to_obj(seg: PathSegment) -> dict:
    obj: dict = {"kind": seg.kind, "points": [[p.x, p.y] for p in seg.points]}
    if seg.weight is not None:
        obj["weight"] = seg.weight
    return obj


def path_to_json(path: Path, indent: int | None = None) -> str:
    """Serialize a path back to the JSON segment-list format (lossless)."""
    return json.dumps([segment_to_obj(s) for s in path.segments], indent=indent)


def parse_path_text(text: str) -> Path:
    """Dispatch on content: a JSON array or SVG path data."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return parse_json_path(text)
    return parse_svg_path(text)


def iter_points(path: Path) -> Iterable[Point2]:
    for seg in path.segments:
        yield from seg.points
