"""Shared helpers for catalog construction recipes."""

from __future__ import annotations

from ..dissection import Dissection, Piece, Placement
from ..geometry import (
    GeometryError,
    Isometry,
    Point,
    Polygon,
    iso_from_two_points,
    regular_polygon,
)
from ..scalar import Scalar, rat


def vlabel(poly):
    """1-based vertex accessor P(k) for a regular polygon."""
    def P(k):
        return poly.vertices[k - 1]
    return P


def match_polygon(source, target):
    """Rigid motion (rotation + translation, no flip) mapping the source
    polygon exactly onto the target polygon; vertex correspondence is found
    by trying cyclic offsets.  Raises if none fits."""
    sv = source.vertices
    tv = target.vertices
    if len(sv) != len(tv):
        raise GeometryError("vertex counts differ")
    n = len(sv)
    for off in range(n):
        try:
            iso = iso_from_two_points(sv[0], sv[1], tv[off], tv[(off + 1) % n])
        except GeometryError:
            continue
        if all(iso.apply_point(sv[i]) == tv[(off + i) % n] for i in range(2, n)):
            return iso
    raise GeometryError("polygons are not directly congruent")


def match_polygon_reflected(source, target):
    """Like match_polygon but with the piece turned over."""
    sv = source.vertices
    tv = list(reversed(target.vertices))
    n = len(sv)
    if len(tv) != n:
        raise GeometryError("vertex counts differ")
    for off in range(n):
        try:
            iso = iso_from_two_points(sv[0], sv[1], tv[off], tv[(off + 1) % n],
                                      reflect=True)
        except GeometryError:
            continue
        if all(iso.apply_point(sv[i]) == tv[(off + i) % n] for i in range(2, n)):
            return iso
    raise GeometryError("polygons are not mirror congruent")


def normalizing_map(rect_corners, w, h):
    """Isometry taking the rectangle given by its four ccw corners
    (bottom-left first) onto [0,w] x [0,h]."""
    bl, br, tr, tl = rect_corners
    return iso_from_two_points(bl, br, Point(0, 0), Point(w, rat(0)))


def landscape(w, h, placements_pieces):
    """Swap a portrait rectangle to landscape (w >= h) by rotating the
    target frame a quarter turn; placements are composed accordingly."""
    w = Scalar._lift(w)
    h = Scalar._lift(h)
    if (w - h).sign() >= 0:
        return w, h, placements_pieces
    # (x, y) -> (y, w - x): rotation by -90 degrees plus translation
    turn = Isometry(False, 0, -1, Point(rat(0), w))
    out = [(pid, turn.compose(iso)) for pid, iso in placements_pieces]
    return h, w, out


def build_dissection(name, source, pieces, placements, w, h, provenance,
                     source_spec=None, normalize=True):
    pp = [(pl.piece_id, pl.map) for pl in placements]
    if normalize:
        w, h, pp = landscape(w, h, pp)
    D = Dissection(name, source, w, h, pieces,
                   [Placement(pid, iso) for pid, iso in pp], provenance)
    D.source_spec = source_spec
    return D


def regular_source(n):
    return regular_polygon(n), {"kind": "regular", "n": n, "side": "1"}
