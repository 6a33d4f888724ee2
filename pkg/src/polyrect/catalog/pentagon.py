"""Three four-piece pentagon-to-rectangle dissections."""

from __future__ import annotations

from ..assembly import solve_assembly
from ..clipping import arrangement_faces
from ..dissection import Piece, Placement
from ..geometry import (
    Circle,
    GeometryError,
    Isometry,
    Line,
    Point,
    Polygon,
    Segment,
    distance,
    foot_of_perpendicular,
    intersect,
    iso_from_two_points,
    midpoint,
)
from ..scalar import rat
from ._util import build_dissection, match_polygon, regular_source, vlabel


def _pentagon_one_data():
    source, spec = regular_source(5)
    P = vlabel(source)
    Q1 = midpoint(P(3), P(4))
    Q2 = intersect(Line(P(1), Q1), Line(P(2), P(5)))[0]
    # isosceles triangle Q2-P5-Q3 with apex P5: compass arc of radius |P5 Q2|
    # meets P1-P5 at Q3, giving long sides L_{2,5}/2 and base 1/2
    hits = intersect(Segment(P(1), P(5)), Circle(P(5), distance(Q2, P(5))))
    hits = [q for q in hits if q != P(5)]
    if len(hits) != 1:
        raise GeometryError("isosceles vertex not found on P1-P5")
    Q3 = hits[0]
    Q4 = foot_of_perpendicular(P(3), Line(P(2), P(5)))
    quad = Polygon([P(1), P(2), Q2, Q3])
    tri_iso = Polygon([Q2, P(5), Q3])
    tri_right = Polygon([P(2), P(3), Q4])
    trap = Polygon([Q4, P(5), P(4), P(3)])
    h = P(2).y - P(3).y
    w = source.area() / h
    return source, spec, P, Q1, Q2, Q3, Q4, quad, tri_iso, tri_right, trap, w, h


def pentagon_one_points():
    """Constructed points and derived rectangle of the first dissection,
    for the identity checks."""
    source, spec, P, Q1, Q2, Q3, Q4, quad, tri_iso, tri_right, trap, w, h = \
        _pentagon_one_data()
    rot = iso_from_two_points(P(1), P(2), P(5), P(4))
    Q6 = rot.apply_point(Q2)
    Q5 = rot.apply_point(Q3)
    BL = P(3)
    BR = Point(P(3).x + w, P(3).y)
    Q7 = BR
    Q8 = Point(BR.x, BR.y + h)
    return {"P": P, "Q1": Q1, "Q2": Q2, "Q3": Q3, "Q4": Q4, "Q5": Q5,
            "Q6": Q6, "Q7": Q7, "Q8": Q8, "w": w, "h": h, "area": source.area()}


def build_pentagon_one():
    source, spec, P, Q1, Q2, Q3, Q4, quad, tri_iso, tri_right, trap, w, h = \
        _pentagon_one_data()
    BL = P(3)
    rot = iso_from_two_points(P(1), P(2), P(5), P(4))
    Q6 = rot.apply_point(Q2)
    iso_tri = iso_from_two_points(Q2, P(5), Q6, P(4))
    shift_tri = Isometry.translation(Point(w, rat(0)))
    to_origin = Isometry.translation(Point(-BL.x, -BL.y))
    pieces = [Piece("quad", quad), Piece("isoceles", tri_iso),
              Piece("right", tri_right), Piece("trapezoid", trap)]
    placements = [
        Placement("quad", to_origin.compose(rot)),
        Placement("isoceles", to_origin.compose(iso_tri)),
        Placement("right", to_origin.compose(shift_tri)),
        Placement("trapezoid", to_origin),
    ]
    return build_dissection(
        "pentagon-1", source, pieces, placements, w, h,
        "four convex pieces: rotated quadrilateral plus two moved triangles",
        source_spec=spec)


def build_pentagon_two():
    source, spec, P, Q1, Q2, Q3, Q4, quad, tri_iso, tri_right, trap, w, h = \
        _pentagon_one_data()
    left = Polygon([P(2), P(3), Q1, Q2])
    right = Polygon([Q2, Q1, P(4), P(5)])
    pieces = [Piece("quad", quad), Piece("isoceles", tri_iso),
              Piece("left", left), Piece("right", right)]
    target = Polygon([Point(0, 0), Point(w, rat(0)), Point(w, h), Point(rat(0), h)],
                     trusted=True)
    got = solve_assembly(target, pieces, 5)
    if got is None:
        got = solve_assembly(target, pieces, 5, multi_gap=True)
    if got is None:
        raise GeometryError("pentagon-2 assembly not found")
    placements = [Placement(p.id, got[p.id]) for p in pieces]
    return build_dissection(
        "pentagon-2", source, pieces, placements, w, h,
        "two pieces shared with the first dissection; the rest split into "
        "mirror twins", source_spec=spec)


def build_pentagon_three():
    source, spec = regular_source(5)
    P = vlabel(source)
    Q1 = midpoint(P(3), P(4))
    A = Polygon([P(1), P(2), P(3), Q1])
    B = Polygon([P(1), Q1, P(4), P(5)])
    h = P(1).y - Q1.y
    w = source.area() / h
    TL, BLc = Point(rat(0), h), Point(0, 0)
    TR, BR = Point(w, h), Point(w, rat(0))
    iso_A = iso_from_two_points(P(1), Q1, TL, BLc, reflect=True)
    iso_B = iso_from_two_points(P(1), Q1, BR, TR)
    A_img = iso_A.apply_polygon(A)
    B_img = iso_B.apply_polygon(B)
    # overlap parallelogram (both quads are convex)
    from ..clipping import clip_convex
    par_pts = clip_convex(list(A_img.vertices), B_img)
    par = Polygon(par_pts)
    if len(par.vertices) != 4:
        raise GeometryError("slide overlap is not a parallelogram")
    # split the source-position parallelogram along its short diagonal
    inv_A = iso_A.inverse()
    par_src = inv_A.apply_polygon(par)
    v = par_src.vertices
    s = w - rat(1, 2)
    s2 = s * s
    if ((v[0].x - v[2].x) ** 2 + (v[0].y - v[2].y) ** 2 - s2).sign() == 0:
        tri1 = Polygon([v[0], v[1], v[2]])
        tri2 = Polygon([v[0], v[2], v[3]])
    elif ((v[1].x - v[3].x) ** 2 + (v[1].y - v[3].y) ** 2 - s2).sign() == 0:
        tri1 = Polygon([v[1], v[2], v[3]])
        tri2 = Polygon([v[1], v[3], v[0]])
    else:
        raise GeometryError("no diagonal of length s in the parallelogram")
    # remainder of A once the parallelogram is cut out
    faces = arrangement_faces(A, list(par_src.edges()))
    rest = [f for f in faces
            if (f.area() - par_src.area()).sign() != 0
            or f.contains(par_src.interior_point()) != "inside"]
    rest = [f for f in faces if f.contains(par_src.interior_point()) != "inside"]
    if len(rest) != 1:
        raise GeometryError("unexpected leftover split of piece A")
    A_rest = rest[0]
    # gap triangles at the top and bottom edges of the rectangle
    a5 = iso_A.apply_point(P(2))
    b5 = iso_A.apply_point(P(3))
    b1 = iso_B.apply_point(P(4))
    b3 = iso_B.apply_point(P(5))
    apex_top = intersect(Line(TL, a5), Line(b3, b1))[0]
    gap_top = Polygon([TL, Point(s, h), apex_top])
    apex_bot = intersect(Line(a5, b5), Line(b3, BR))[0]
    gap_bot = Polygon([b5, BR, apex_bot])
    try:
        iso_t1 = match_polygon(tri1, gap_top)
        iso_t2 = match_polygon(tri2, gap_bot)
    except GeometryError:
        tri1, tri2 = tri2, tri1
        iso_t1 = match_polygon(tri1, gap_top)
        iso_t2 = match_polygon(tri2, gap_bot)
    pieces = [Piece("A", A_rest), Piece("B", B),
              Piece("tri-top", tri1), Piece("tri-bottom", tri2)]
    placements = [Placement("A", iso_A), Placement("B", iso_B),
                  Placement("tri-top", iso_t1), Placement("tri-bottom", iso_t2)]
    return build_dissection(
        "pentagon-3", source, pieces, placements, w, h,
        "slide construction: halves overlap in a parallelogram cut into two "
        "isosceles triangles; one piece turned over", source_spec=spec)
