"""The short recipes: square, triangle, hexagon, and the Greek cross."""

from __future__ import annotations

from ..dissection import Piece, Placement
from ..geometry import (
    Isometry,
    Point,
    Polygon,
    iso_from_two_points,
    midpoint,
    regular_polygon,
)
from ..scalar import rat, sqrt_nonneg
from ._util import build_dissection, match_polygon, regular_source, vlabel


def build_square():
    source, spec = regular_source(4)
    P = vlabel(source)
    piece = Piece("square", source)
    iso = iso_from_two_points(P(2), P(3), Point(0, 0), Point(1, 0))
    return build_dissection(
        "square-1", source, [piece], [Placement("square", iso)],
        rat(1), rat(1), "identity dissection of the square",
        source_spec=spec)


def build_triangle():
    source, spec = regular_source(3)
    P = vlabel(source)
    M = midpoint(P(2), P(3))
    left = Polygon([P(2), M, P(1)])
    right = Polygon([M, P(3), P(1)])
    h = P(1).y - M.y  # altitude, sqrt(3)/2
    w = rat(1, 2)
    # right half translates to stand on the origin; left half turns over
    # and caps it, forming a w x h rectangle
    t_right = Isometry.translation(Point(0, 0) - M)
    t_left = iso_from_two_points(P(2), M, Point(rat(0), h), Point(w, h),
                                 reflect=True)
    pieces = [Piece("left", left), Piece("right", right)]
    placements = [Placement("left", t_left), Placement("right", t_right)]
    return build_dissection(
        "triangle-2", source, pieces, placements, w, h,
        "equilateral triangle halved along the altitude; one piece turned over",
        source_spec=spec)


def build_hexagon():
    source, spec = regular_source(6)
    P = vlabel(source)
    B = midpoint(P(4), Point(0, 0))  # on the chord P3-P5
    big = Polygon([P(5), P(6), P(1), P(2), P(3)])
    t_left = Polygon([P(4), P(5), B])
    t_right = Polygon([P(4), B, P(3)])
    s3h = sqrt_nonneg(3) / 2
    TL = Point(-s3h, 1)
    TR = Point(s3h, 1)
    w = 2 * s3h
    h = rat(3, 2)
    gap_left = Polygon([P(2), P(1), TL])
    gap_right = Polygon([P(1), P(6), TR])
    placements = [
        Placement("big", Isometry.identity()),
        Placement("left", match_polygon(t_left, gap_left)),
        Placement("right", match_polygon(t_right, gap_right)),
    ]
    shift = Isometry.translation(Point(s3h, rat(1, 2)))
    placements = [Placement(pl.piece_id, shift.compose(pl.map))
                  for pl in placements]
    pieces = [Piece("big", big), Piece("left", t_left), Piece("right", t_right)]
    return build_dissection(
        "hexagon-3", source, pieces, placements, w, h,
        "two corner triangles of the hexagon moved to the top",
        source_spec=spec)


def build_greek_cross():
    half = rat(1, 2)
    arm = rat(3, 2)
    source = Polygon([
        Point(half, half), Point(half, arm), Point(-half, arm),
        Point(-half, half), Point(-arm, half), Point(-arm, -half),
        Point(-half, -half), Point(-half, -arm), Point(half, -arm),
        Point(half, -half), Point(arm, -half), Point(arm, half)])
    bar = Polygon([Point(-arm, -half), Point(arm, -half),
                   Point(arm, half), Point(-arm, half)])
    top = Polygon([Point(-half, half), Point(half, half),
                   Point(half, arm), Point(-half, arm)])
    bottom = Polygon([Point(-half, -arm), Point(half, -arm),
                      Point(half, -half), Point(-half, -half)])
    pieces = [Piece("bar", bar), Piece("top", top), Piece("bottom", bottom)]
    placements = [
        Placement("bar", Isometry.translation(Point(rat(5, 2), half))),
        Placement("top", Isometry.translation(Point(half, -half))),
        Placement("bottom", Isometry.translation(Point(rat(9, 2), arm))),
    ]
    return build_dissection(
        "greek-cross-3", source, pieces, placements, rat(5), rat(1),
        "two opposite arms of the cross appended to the other two arms")
