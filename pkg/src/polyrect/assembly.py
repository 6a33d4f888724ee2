"""Backtracking assembly of exact pieces into a container polygon.

Used to reconstruct rearrangements that the source material specifies only
by a drawing: pieces and container are exact, candidate placements are
rotations by multiples of pi/n, and each accepted placement is checked
exactly, so any assembly found is certified by construction (and re-checked
by the dissection verifier afterwards).

The search fills the lexicographically first corner of the uncovered region.
Any valid completion must cover that corner either by a piece vertex whose
wedge starts on the free ray, or by a piece edge running along the free ray
(a T-junction); both placement families are enumerated, the latter anchored
at existing structural points on the backward ray.
"""

from __future__ import annotations

from fractions import Fraction

from . import scalar as sc
from .geometry import (
    Isometry,
    Point,
    Polygon,
    _between_ccw,
    _cmp_from,
    _parallel_same,
    interiors_intersect,
    on_segment,
    orient,
    polygon_inside,
    sign_vec_cross,
    sign_vec_dot,
)
from .scalar import rat


class _Oriented:
    __slots__ = ("piece_id", "reflect", "k", "poly", "starts", "ends")

    def __init__(self, piece_id, reflect, k, poly):
        self.piece_id = piece_id
        self.reflect = reflect
        self.k = k
        self.poly = poly
        vs = poly.vertices
        n = len(vs)
        self.starts = [vs[(i + 1) % n] - vs[i] for i in range(n)]
        self.ends = [vs[(i - 1) % n] - vs[i] for i in range(n)]


def _orientations(piece, n, allow_reflect):
    out = []
    base = piece.shape
    for reflect in ((False, True) if allow_reflect else (False,)):
        for k in range(2 * n):
            iso = Isometry(reflect, sc.cos_pi(Fraction(k, n)),
                           sc.sin_pi(Fraction(k, n)), Point(0, 0))
            out.append(_Oriented(piece.id, reflect, k, iso.apply_polygon(base)))
    return out


def _point_sort_key(p):
    ex = p.x.enclosure()
    ey = p.y.enclosure()
    return ((ey[0] + ey[1]) / 2, (ex[0] + ex[1]) / 2)


def _first_gap(container, placed):
    """Lexicographically first corner of the uncovered region: a point, the
    first free ray, the free sector's end ray, and all structural points."""
    pts = {}
    for v in container.vertices:
        pts.setdefault(v.key(), v)
    for _, _, img in placed:
        for v in img.vertices:
            pts.setdefault(v.key(), v)
    candidates = sorted(pts.values(), key=_point_sort_key)
    for p in candidates:
        W = container.wedge_at(p)
        if W is None:
            continue
        sectors = []
        covered = False
        for _, _, img in placed:
            w = img.wedge_at(p)
            if w is None:
                continue
            if w.full:
                covered = True
                break
            sectors.append(w)
        if covered:
            continue
        if W.full and not sectors:
            continue
        rays = [] if W.full else [W.start]
        rays += [s.end for s in sectors]
        for r in rays:
            if not W.full:
                if _parallel_same(r, W.end):
                    continue
                if not (_parallel_same(r, W.start) or _between_ccw(W.start, r, W.end)):
                    continue
            bad = False
            for s in sectors:
                if _parallel_same(r, s.start) or _between_ccw(s.start, r, s.end):
                    bad = True
                    break
            if bad:
                continue
            end = None
            for s in sectors:
                if _parallel_same(s.start, r):
                    continue
                if end is None or _cmp_from(r, s.start, end) < 0:
                    end = s.start
            if not W.full and not _parallel_same(W.end, r):
                if end is None or _cmp_from(r, W.end, end) < 0:
                    end = W.end
            return p, r, end, list(pts.values())
    return None


def solve_assembly(container, pieces, n, allow_reflect=False, multi_gap=False):
    """Place all pieces to partition `container` using rotations by k*pi/n
    (optionally also reflections).  Returns {piece_id: Isometry} or None."""
    oriented = {}
    for piece in pieces:
        oriented[piece.id] = _orientations(piece, n, allow_reflect)
    area_left = container.area()
    for piece in pieces:
        area_left = area_left - piece.shape.area()
    if area_left.sign() != 0:
        return None

    order = sorted(pieces, key=lambda p: -p.shape.area().to_float())
    remaining = [p.id for p in order]

    def candidate_anchors(p, r, all_points):
        """(anchor_point, require_start_ray) placements: the gap corner
        itself, plus structural points on the ray backwards from p (for
        pieces whose edge runs along r through p)."""
        yield p, True
        back = Point(-r.x, -r.y)
        for q in all_points:
            if q == p:
                continue
            d = q - p
            if sign_vec_cross(d, r) == 0 and sign_vec_dot(d, back) > 0:
                yield q, True

    def attempt(placed, remaining):
        if not remaining:
            return placed
        gap = _first_gap(container, placed)
        if gap is None:
            return None
        p, r, end, all_points = gap
        for anchor, _ in candidate_anchors(p, r, all_points):
            for pid in list(remaining):
                for ori in oriented[pid]:
                    for vi, start in enumerate(ori.starts):
                        if not _parallel_same(start, r):
                            continue
                        if anchor is p:
                            e = ori.ends[vi]
                            if end is not None and not _parallel_same(e, end):
                                if _cmp_from(r, end, e) < 0:
                                    continue
                        else:
                            # edge along the ray must reach past the corner
                            v0 = ori.poly.vertices[vi]
                            v1 = ori.poly.vertices[(vi + 1) % len(ori.poly.vertices)]
                            img_v1 = v1 - v0 + anchor
                            if not on_segment(p, anchor, img_v1) or p == img_v1:
                                continue
                        v = ori.poly.vertices[vi]
                        img = ori.poly.translated(anchor - v)
                        if not polygon_inside(img, container):
                            continue
                        if any(interiors_intersect(img, q) for _, _, q in placed):
                            continue
                        iso = Isometry(ori.reflect,
                                       sc.cos_pi(Fraction(ori.k, n)),
                                       sc.sin_pi(Fraction(ori.k, n)),
                                       anchor - v)
                        rem2 = [x for x in remaining if x != pid]
                        got = attempt(placed + [(pid, iso, img)], rem2)
                        if got is not None:
                            return got
        return None

    got = attempt([], remaining)
    if got is None:
        return None
    return {pid: iso for pid, iso, _ in got}
