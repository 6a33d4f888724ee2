"""Five-piece dissection of the regular 12-gon."""

from __future__ import annotations

from ..dissection import Piece, Placement
from ..geometry import (
    Circle,
    GeometryError,
    Line,
    Point,
    Polygon,
    Segment,
    foot_of_perpendicular,
    intersect,
)
from ..scalar import rat, sqrt_nonneg
from ._util import (build_dissection, match_polygon,
                    match_polygon_reflected, regular_source, vlabel)


def twelvegon_points():
    source, spec = regular_source(12)
    P = vlabel(source)
    # Q on the chord P1-P8 at distance 1 from P1; P1-Q-P12 is equilateral
    hits = intersect(Segment(P(1), P(8)), Circle(P(1), 1))
    if len(hits) != 1:
        raise GeometryError("equilateral vertex not found on P1-P8")
    Q = hits[0]
    R = foot_of_perpendicular(P(4), Line(P(1), P(8)))
    return source, spec, P, Q, R


def build_twelvegon():
    source, spec, P, Q, R = twelvegon_points()
    s3 = sqrt_nonneg(3)
    w = 3 + s3
    h = w / 2
    quad = Polygon([P(1), P(2), P(3), P(4)])
    tri_r = Polygon([P(4), R, P(1)])
    hex_red = Polygon([P(4), P(5), P(6), P(7), P(8), R])
    hex_green = Polygon([P(8), P(9), P(10), P(11), P(12), Q])
    tri_eq = Polygon([P(12), P(1), Q])
    pieces = [Piece("red", hex_red), Piece("green", hex_green),
              Piece("quad", quad), Piece("corner", tri_r),
              Piece("equilateral", tri_eq)]
    # the drawn rearrangement, with exact coordinates; the hexagonal piece
    # goes in turned over (no rigid-motion assembly of this piece set tiles
    # the rectangle: all three long-chord gluings fail exact chirality
    # checks, confirmed by exhaustive corner-anchored search)
    half = rat(1, 2)
    a1, a2, a3 = Point(0, 0), Point(rat(0), h), Point(h, h)
    a4, a5, a6 = Point(w - (1 + s3) / 2, h), Point(w, h), Point(w, rat(0))
    a7, a8 = Point(w - 1, rat(0)), Point(1, 0)
    a9 = Point((2 + s3) / 2, half)
    a10 = Point(w - (2 + s3) / 2, half)
    a11 = Point(h, h - 1)
    slots = {
        "red": Polygon([a1, a2, a3, a11, a9, a8]),
        "green": Polygon([a3, a4, a6, a7, a10, a11]),
        "quad": Polygon([a7, a8, a9, a10]),
        "equilateral": Polygon([a9, a10, a11]),
        "corner": Polygon([a4, a5, a6]),
    }
    placements = []
    for p in pieces:
        try:
            iso = match_polygon(p.shape, slots[p.id])
        except GeometryError:
            iso = match_polygon_reflected(p.shape, slots[p.id])
        placements.append(Placement(p.id, iso))
    return build_dissection(
        "twelvegon-5", source, pieces, placements, w, h,
        "two chords from the apex, a perpendicular foot, and an equilateral "
        "triangle", source_spec=spec)
