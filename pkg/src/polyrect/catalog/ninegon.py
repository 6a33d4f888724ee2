"""Seven-piece dissection of the regular 9-gon."""

from __future__ import annotations

from fractions import Fraction

from ..assembly import solve_assembly
from ..clipping import arrangement_faces
from ..dissection import Piece, Placement
from ..geometry import (
    Circle,
    GeometryError,
    Line,
    Point,
    Polygon,
    Segment,
    distance,
    foot_of_perpendicular,
    intersect,
    midpoint,
)
from ..scalar import cos_pi, rat, sin_pi
from ._util import build_dissection, regular_source, vlabel


def ninegon_points():
    source, spec = regular_source(9)
    P = vlabel(source)
    Q2 = intersect(Line(P(3), P(7)), Line(P(6), P(9)))[0]
    Q3 = midpoint(Q2, P(9))
    Q7 = midpoint(Q2, P(7))
    # segment Q7-Q6 of length 1/2 parallel to P7-P8, toward the P8 side
    d = P(8) - P(7)
    Q6 = Point(Q7.x + d.x / 2, Q7.y + d.y / 2)
    M34 = midpoint(P(3), P(4))
    Q4 = intersect(Line(Q3, Q6), Line(P(8), M34))[0]
    # Q5 on P1-P2 at distance |Q4 Q6| from P1 (the sides have length 1)
    r46 = distance(Q4, Q6)
    Q5 = Point(P(1).x + r46 * (P(2).x - P(1).x),
               P(1).y + r46 * (P(2).y - P(1).y))
    Q1 = foot_of_perpendicular(Q5, Line(P(5), P(6)))
    Q8 = intersect(Line(Q7, Q6), Line(Q4, P(8)))[0]
    return source, spec, P, Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8


def build_ninegon():
    source, spec, P, Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8 = ninegon_points()
    cuts = [
        (P(2), P(4)),
        (P(3), P(7)),
        (P(6), P(9)),
        (Q7, Q6),
        (Q3, Q6),
        (P(8), Q4),
        (Q5, Q1),
    ]
    faces = arrangement_faces(source, cuts)
    if len(faces) != 7:
        raise GeometryError("expected 7 pieces, got %d" % len(faces))
    pieces = [Piece("p%d" % i, f) for i, f in enumerate(faces)]
    th = Fraction(1, 9)
    w = 2 * cos_pi(th)
    h = rat(9) / (8 * sin_pi(th))
    target = Polygon([Point(0, 0), Point(w, rat(0)), Point(w, h), Point(rat(0), h)],
                     trusted=True)
    got = solve_assembly(target, pieces, 9)
    if got is None:
        raise GeometryError("ninegon assembly not found")
    placements = [Placement(p.id, got[p.id]) for p in pieces]
    return build_dissection(
        "ninegon-7", source, pieces, placements, w, h,
        "three chords, two midpoints, a parallel half-unit segment, and a "
        "perpendicular from the far vertex", source_spec=spec)
