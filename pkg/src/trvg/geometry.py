"""Exact geometry of axis-aligned rectangle layouts on the plane and the
flat torus, and extraction of their transparent visibility graphs.

Two rectangles are adjacent exactly when some horizontal or vertical line
meets both interiors; nothing blocks sight. That reduces to open overlap
of the projections: a y-overlap gives a horizontal line of sight, an
x-overlap a vertical one. Every coordinate is a `fractions.Fraction`, so
the open-vs-closed distinction at shared endpoints is decided exactly;
floating point is never used in a predicate.

All values here are immutable after construction and safe to share across
threads; extraction is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

from .graphs import Graph

# Exact rational coordinate type (normalized p/q with positive denominator).
Rational = Fraction


class LayoutError(ValueError):
    pass


class Sight(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


def _frac(value) -> Fraction:
    if isinstance(value, float):
        raise LayoutError(f"float coordinate {value!r} rejected; use exact rationals")
    return Fraction(value)


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi) on a line; the projection of a rectangle interior."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if not self.lo < self.hi:
            raise LayoutError(f"degenerate interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class CircularArc:
    """Open arc on a circle of circumference `period`, starting at `start`
    (in [0, period)) and running for `length` (0 < length < period, so an
    arc may wrap but never covers the whole circle)."""

    start: Fraction
    length: Fraction
    period: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", _frac(self.start))
        object.__setattr__(self, "length", _frac(self.length))
        object.__setattr__(self, "period", _frac(self.period))
        if self.period <= 0:
            raise LayoutError(f"arc period must be positive, got {self.period}")
        if not (0 <= self.start < self.period):
            raise LayoutError(f"arc start {self.start} outside [0, {self.period})")
        if not (0 < self.length < self.period):
            raise LayoutError(
                f"arc length {self.length} outside (0, {self.period}); "
                "full-circle strips are rejected"
            )

    @property
    def end(self) -> Fraction:
        """start + length; exceeds the period exactly when the arc wraps."""
        return self.start + self.length

    def wraps(self) -> bool:
        return self.end > self.period

    def pieces(self) -> list[tuple[Fraction, Fraction]]:
        """Linear pieces of the arc inside the fundamental domain [0, period)."""
        if not self.wraps():
            return [(self.start, self.end)]
        return [(self.start, self.period), (Fraction(0), self.end - self.period)]


Span = Union[Interval, CircularArc]


def open_overlap(a: Span, b: Span) -> bool:
    """Do two same-kind spans share an interior point?

    Intervals: max lo < min hi. Arcs (same period): unroll one copy of b
    by -P, 0, +P; since lengths are below P these three shifts cover every
    wraparound case.
    """
    if isinstance(a, Interval) and isinstance(b, Interval):
        return max(a.lo, b.lo) < min(a.hi, b.hi)
    if isinstance(a, CircularArc) and isinstance(b, CircularArc):
        if a.period != b.period:
            raise TypeError(f"mismatched arc periods {a.period} vs {b.period}")
        p = a.period
        for shift in (-p, Fraction(0), p):
            if max(a.start, b.start + shift) < min(a.end, b.end + shift):
                return True
        return False
    raise TypeError(f"cannot overlap {type(a).__name__} with {type(b).__name__}")


@dataclass(frozen=True)
class Rect:
    """Labeled axis-aligned rectangle; both spans are Intervals (plane) or
    both are CircularArcs (torus)."""

    id: object
    xspan: Span
    yspan: Span

    def __post_init__(self):
        if type(self.xspan) is not type(self.yspan):
            raise LayoutError(f"rect {self.id!r} mixes interval and arc spans")

    def is_toroidal(self) -> bool:
        return isinstance(self.xspan, CircularArc)


def rect(id, x0, x1, y0, y1) -> Rect:
    """Plane rectangle from corner coordinates."""
    return Rect(id, Interval(_frac(x0), _frac(x1)), Interval(_frac(y0), _frac(y1)))


def torus_rect(id, x0, x1, y0, y1, width, height) -> Rect:
    """Torus rectangle from unwrapped corner coordinates; x1 > width (resp.
    y1 > height) means the rectangle wraps around that axis."""
    w, h = _frac(width), _frac(height)
    return Rect(
        id,
        CircularArc(_frac(x0), _frac(x1) - _frac(x0), w),
        CircularArc(_frac(y0), _frac(y1) - _frac(y0), h),
    )


@dataclass(frozen=True)
class Plane:
    def __repr__(self):
        return "Plane()"


@dataclass(frozen=True)
class Torus:
    width: Fraction
    height: Fraction

    def __post_init__(self):
        object.__setattr__(self, "width", _frac(self.width))
        object.__setattr__(self, "height", _frac(self.height))
        if self.width <= 0 or self.height <= 0:
            raise LayoutError("torus dimensions must be positive")


PLANE = Plane()
Surface = Union[Plane, Torus]


@dataclass(frozen=True)
class Layout:
    """Interior-disjoint labeled rectangles on a surface.

    Construction checks only per-rect well-formedness; run validate_layout
    (or extract, which does it for you) for the pairwise checks.
    """

    surface: Surface
    rects: tuple[Rect, ...]

    def __init__(self, surface: Surface, rects: Iterable[Rect]):
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "rects", tuple(rects))

    def ids(self) -> list:
        return [r.id for r in self.rects]

    def rect_by_id(self, id) -> Rect:
        for r in self.rects:
            if r.id == id:
                return r
        raise KeyError(id)

    def is_torus(self) -> bool:
        return isinstance(self.surface, Torus)


def sees(a: Rect, b: Rect):
    """How rectangles a and b see each other: Sight.HORIZONTAL when their
    y-projections share an interior point, Sight.VERTICAL for x, else None.
    In a valid (interior-disjoint) layout at most one of the two holds."""
    if open_overlap(a.yspan, b.yspan):
        return Sight.HORIZONTAL
    if open_overlap(a.xspan, b.xspan):
        return Sight.VERTICAL
    return None


def validate_layout(layout: Layout) -> list[str]:
    """All invariant violations, as human-readable strings; empty means valid."""
    violations = []
    seen_ids = set()
    for r in layout.rects:
        if r.id in seen_ids:
            violations.append(f"duplicate id {r.id!r}")
        seen_ids.add(r.id)
    torus = layout.is_torus()
    for r in layout.rects:
        if r.is_toroidal() != torus:
            violations.append(f"rect {r.id!r} span kind does not match surface")
        elif torus:
            if r.xspan.period != layout.surface.width:
                violations.append(
                    f"rect {r.id!r} x-period {r.xspan.period} != torus width"
                )
            if r.yspan.period != layout.surface.height:
                violations.append(
                    f"rect {r.id!r} y-period {r.yspan.period} != torus height"
                )
    clean = [r for r in layout.rects if r.is_toroidal() == torus]
    for i, a in enumerate(clean):
        for b in clean[i + 1 :]:
            try:
                if open_overlap(a.xspan, b.xspan) and open_overlap(a.yspan, b.yspan):
                    violations.append(f"interiors of {a.id!r} and {b.id!r} overlap")
            except TypeError as exc:
                violations.append(f"pair {a.id!r}/{b.id!r}: {exc}")
    return violations


def extract_visibility_graph(layout: Layout) -> Graph:
    """The transparent visibility graph of a valid layout."""
    violations = validate_layout(layout)
    if violations:
        raise LayoutError("invalid layout: " + "; ".join(violations))
    edges = []
    rects = layout.rects
    for i, a in enumerate(rects):
        for b in rects[i + 1 :]:
            if sees(a, b) is not None:
                edges.append((a.id, b.id))
    return Graph([r.id for r in rects], edges)


def canonicalize(layout: Layout) -> Layout:
    """Equivalent plane layout on integer coordinates with all 2n endpoints
    per axis pairwise distinct, occupying ranks 0..2n-1.

    Ties are broken by shrinking, never growing: at a shared coordinate all
    hi endpoints are ranked below all lo endpoints, which is the same as
    nudging each hi down and each lo up by distinct tiny amounts. Shrinking
    keeps every open overlap open (an overlap has positive length, so a
    small enough nudge leaves some of it) and cannot create an overlap
    (max-lo minus min-hi only grows), so the extracted graph is unchanged.
    Idempotent once endpoint orders are distinct.
    """
    if layout.is_torus():
        raise LayoutError("canonicalize is defined for plane layouts only")

    def axis_ranks(get_span):
        events = []
        for idx, r in enumerate(layout.rects):
            span = get_span(r)
            events.append((span.hi, 0, idx))  # hi endpoints shrink downward
            events.append((span.lo, 1, idx))  # lo endpoints shrink upward
        events.sort()
        ranks = {}
        for rank, (_, kind, idx) in enumerate(events):
            ranks[(idx, kind)] = Fraction(rank)
        return ranks

    xr = axis_ranks(lambda r: r.xspan)
    yr = axis_ranks(lambda r: r.yspan)
    new_rects = [
        Rect(
            r.id,
            Interval(xr[(i, 1)], xr[(i, 0)]),
            Interval(yr[(i, 1)], yr[(i, 0)]),
        )
        for i, r in enumerate(layout.rects)
    ]
    return Layout(PLANE, new_rects)


# ---------------------------------------------------------------------------
# Graph-preserving layout transforms
# ---------------------------------------------------------------------------

def rotate_layout_90(layout: Layout) -> Layout:
    """Quarter turn of a plane layout: spans swap axes, one axis negates."""
    if layout.is_torus():
        raise LayoutError("rotation helper is defined for plane layouts only")
    rects = [
        Rect(r.id, r.yspan, Interval(-r.xspan.hi, -r.xspan.lo)) for r in layout.rects
    ]
    return Layout(PLANE, rects)


def scale_layout_x(layout: Layout, factor) -> Layout:
    """Rescale the x axis of a plane layout by a positive rational."""
    f = _frac(factor)
    if f <= 0:
        raise LayoutError("scale factor must be positive")
    if layout.is_torus():
        raise LayoutError("rescale helper is defined for plane layouts only")
    rects = [
        Rect(r.id, Interval(r.xspan.lo * f, r.xspan.hi * f), r.yspan)
        for r in layout.rects
    ]
    return Layout(PLANE, rects)


def translate_layout(layout: Layout, dx, dy) -> Layout:
    if layout.is_torus():
        raise LayoutError("translate helper is defined for plane layouts only")
    dx, dy = _frac(dx), _frac(dy)
    rects = [
        Rect(
            r.id,
            Interval(r.xspan.lo + dx, r.xspan.hi + dx),
            Interval(r.yspan.lo + dy, r.yspan.hi + dy),
        )
        for r in layout.rects
    ]
    return Layout(PLANE, rects)


def shift_torus_layout(layout: Layout, dx, dy) -> Layout:
    """Toroidal translation; wraps rectangles across the seam but never
    changes the visibility graph."""
    if not layout.is_torus():
        raise LayoutError("toroidal shift needs a torus layout")
    w, h = layout.surface.width, layout.surface.height
    dx, dy = _frac(dx) % w, _frac(dy) % h
    rects = [
        Rect(
            r.id,
            CircularArc((r.xspan.start + dx) % w, r.xspan.length, w),
            CircularArc((r.yspan.start + dy) % h, r.yspan.length, h),
        )
        for r in layout.rects
    ]
    return Layout(layout.surface, rects)


def bounding_box(layout: Layout) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(x0, x1, y0, y1) over all rectangles of a nonempty plane layout."""
    if layout.is_torus():
        raise LayoutError("bounding box is defined for plane layouts only")
    if not layout.rects:
        raise LayoutError("bounding box of an empty layout")
    x0 = min(r.xspan.lo for r in layout.rects)
    x1 = max(r.xspan.hi for r in layout.rects)
    y0 = min(r.yspan.lo for r in layout.rects)
    y1 = max(r.yspan.hi for r in layout.rects)
    return x0, x1, y0, y1
