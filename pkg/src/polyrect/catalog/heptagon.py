"""Five-piece dissection of the regular heptagon."""

from __future__ import annotations

from fractions import Fraction

from ..assembly import solve_assembly
from ..dissection import Piece, Placement
from ..geometry import (
    GeometryError,
    Line,
    Point,
    Polygon,
    foot_of_perpendicular,
    intersect,
    midpoint,
)
from ..scalar import cos_pi, rat, sin_pi
from ._util import build_dissection, regular_source, vlabel


def heptagon_points():
    source, spec = regular_source(7)
    P = vlabel(source)
    Q6 = midpoint(P(4), P(5))
    Q2 = intersect(Line(P(3), P(5)), Line(P(4), P(7)))[0]
    Q3 = midpoint(P(4), Q2)
    # line through Q3 parallel to P4-P5
    d = P(5) - P(4)
    Q3b = Point(Q3.x + d.x, Q3.y + d.y)
    Q5 = intersect(Line(Q3, Q3b), Line(P(1), Q6))[0]
    Q4 = intersect(Line(Q3, Q3b), Line(P(5), P(7)))[0]
    return source, spec, P, Q2, Q3, Q4, Q5, Q6


def build_heptagon():
    source, spec, P, Q2, Q3, Q4, Q5, Q6 = heptagon_points()
    pieces = [
        Piece("ear", Polygon([P(5), P(6), P(7)])),
        Piece("cap", Polygon([P(1), Q5, Q4, P(7)])),
        Piece("body", Polygon([P(1), P(2), P(3), Q2, Q3, Q5])),
        Piece("tooth", Polygon([P(3), P(4), Q2])),
        Piece("seat", Polygon([Q3, P(4), P(5), Q4])),
    ]
    th = Fraction(1, 7)
    # the strip's natural window is upright: width 2cos(pi/7), full height
    w = 2 * cos_pi(th)
    h = rat(7) / (8 * sin_pi(th))
    target = Polygon([Point(0, 0), Point(w, rat(0)), Point(w, h), Point(rat(0), h)],
                     trusted=True)
    got = solve_assembly(target, pieces, 7)
    if got is None:
        raise GeometryError("heptagon assembly not found")
    placements = [Placement(p.id, got[p.id]) for p in pieces]
    return build_dissection(
        "heptagon-5", source, pieces, placements, w, h,
        "perpendicular to the far side, three chords, and a parallel line "
        "through the midpoint", source_spec=spec)
