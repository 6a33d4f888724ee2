"""Periodic strips, plane tessellations, and monotile verification.

A strip is a 1-periodic row of pieces filling [0,period] x [0,height] per
cell; a tessellation fills the plane under a rank-2 lattice.  Rectangles are
cut out of either by exact clipping; fragments of the same cell piece coming
from different lattice translates are re-identified (merged) when they join
along a shared boundary inside the window, which is exactly how a piece
"continues around" the cut.
"""

from __future__ import annotations

import math

from . import scalar as sc
from .clipping import clip_to_window, glue, unify_points
from .dissection import Dissection, Piece, Placement, VerificationReport, verify_partition
from .geometry import Isometry, Point, Polygon, orient, vec_dot
from .scalar import Scalar, rat


class StripSpec:
    def __init__(self, period, height, cell_pieces):
        self.period = Scalar._lift(period)
        self.height = Scalar._lift(height)
        self.cell_pieces = list(cell_pieces)


class TessSpec:
    def __init__(self, u, v, cell_pieces):
        self.u = u
        self.v = v
        self.cell_pieces = list(cell_pieces)


class TileSpec:
    def __init__(self, tile, placements, lattice):
        self.tile = tile
        self.placements = list(placements)
        self.lattice = lattice


def _rect(x0, y0, w, h):
    x0 = Scalar._lift(x0)
    y0 = Scalar._lift(y0)
    return Polygon([Point(x0, y0), Point(x0 + w, y0),
                    Point(x0 + w, y0 + h), Point(x0, y0 + h)], trusted=True)


def _shift_range(piece_bbox, win_lo, win_hi, step):
    """Conservative integer shift range so piece+k*step can meet [lo,hi]."""
    if step <= 0:
        raise ValueError("non-positive period")
    lo = math.floor((win_lo - piece_bbox[1]) / step) - 1
    hi = math.ceil((win_hi - piece_bbox[0]) / step) + 1
    return range(lo, hi + 1)


def _window_fragments_strip(spec, window):
    """Clip all relevant translates; yields (piece_id, k, fragment)."""
    wb = window.float_bbox()
    ex = Point(spec.period, rat(0))
    out = []
    for piece in spec.cell_pieces:
        b = piece.shape.float_bbox()
        step = (spec.period.enclosure()[0] + spec.period.enclosure()[1]) / 2
        for k in _shift_range((b[0], b[2]), wb[0], wb[2], step):
            shifted = piece.shape.translated(ex.scaled(rat(k)))
            for frag in clip_to_window(shifted, window):
                out.append((piece.id, k, frag))
    return out


def _window_fragments_tess(spec, window):
    wb = window.float_bbox()
    ux, uy = spec.u.x.to_float(), spec.u.y.to_float()
    vx, vy = spec.v.x.to_float(), spec.v.y.to_float()
    det = ux * vy - uy * vx
    if abs(det) < 1e-12:
        raise ValueError("degenerate lattice")
    out = []
    for piece in spec.cell_pieces:
        b = piece.shape.float_bbox()
        # solve i*u + j*v ~ (window corner - piece corner) for the 4x4 corner
        # combinations, take the integer hull, widen
        cands_i, cands_j = [], []
        for wx in (wb[0], wb[2]):
            for wy in (wb[1], wb[3]):
                for px in (b[0], b[2]):
                    for py in (b[1], b[3]):
                        rx, ry = wx - px, wy - py
                        ci = (rx * vy - ry * vx) / det
                        cj = (ry * ux - rx * uy) / det
                        cands_i.append(ci)
                        cands_j.append(cj)
        ilo, ihi = math.floor(min(cands_i)) - 1, math.ceil(max(cands_i)) + 1
        jlo, jhi = math.floor(min(cands_j)) - 1, math.ceil(max(cands_j)) + 1
        for i in range(ilo, ihi + 1):
            for j in range(jlo, jhi + 1):
                shift = Point(spec.u.x * i + spec.v.x * j,
                              spec.u.y * i + spec.v.y * j)
                shifted = piece.shape.translated(shift)
                sb = shifted.float_bbox()
                if sb[0] > wb[2] or sb[2] < wb[0] or sb[1] > wb[3] or sb[3] < wb[1]:
                    continue
                for frag in clip_to_window(shifted, window):
                    out.append((piece.id, (i, j), frag))
    return out


def validate_strip(spec):
    """Check the cell pieces tile the strip, on a 3-period window."""
    window = _rect(rat(0), rat(0), 3 * spec.period, spec.height)
    frags = _window_fragments_strip(spec, window)
    failures = verify_partition(window, [f for _, _, f in frags],
                                labels=["%s@%s" % (pid, k) for pid, k, _ in frags])
    total = rat(0)
    for _, _, f in frags:
        total = total + f.area()
    return VerificationReport(piece_count=len(spec.cell_pieces),
                              area_source=total,
                              area_target=window.area(),
                              failures=failures)


def _edges_overlap_positively(A, B):
    for a1, a2 in A.edges():
        d = a2 - a1
        dd = vec_dot(d, d)
        for b1, b2 in B.edges():
            if orient(a1, a2, b1) != 0 or orient(a1, a2, b2) != 0:
                continue
            t1 = vec_dot(b1 - a1, d)
            t2 = vec_dot(b2 - a1, d)
            lo = t1 if (t1 - t2).sign() < 0 else t2
            hi = t1 if (t1 - t2).sign() >= 0 else t2
            lo = lo if lo.sign() > 0 else rat(0)
            hi = hi if (hi - dd).sign() < 0 else dd
            if (hi - lo).sign() > 0:
                return True
    return False


def _merge_reidentified(frags, piece_areas):
    """Merge fragments of one cell piece from different translates that were
    cut by the window and rejoin along a shared boundary inside it.  Whole
    (uncut) copies never re-identify.  Returns list of (shape, members)
    where members is the list of (piece_id, shift, fragment)."""
    groups = {}
    for pid, k, f in frags:
        groups.setdefault(pid, []).append((pid, k, f))
    merged = []
    for pid, members in groups.items():
        n = len(members)
        parent = list(range(n))
        proper = [(m[2].area() - piece_areas[pid]).sign() < 0 for m in members]

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(n):
            for j in range(i + 1, n):
                if not (proper[i] and proper[j]):
                    continue
                if members[i][1] == members[j][1]:
                    continue  # same translate: genuinely separate fragments
                if _edges_overlap_positively(members[i][2], members[j][2]):
                    parent[find(i)] = find(j)
        comps = {}
        for i in range(n):
            comps.setdefault(find(i), []).append(members[i])
        for comp in comps.values():
            if len(comp) == 1:
                merged.append((comp[0][2], comp))
            else:
                shape = glue([m[2] for m in comp], allow_multiple=False)[0]
                merged.append((shape, comp))
    return merged


def _cut_to_dissection(name, merged, x0, y0, width, height, provenance):
    shift = Point(-Scalar._lift(x0), -Scalar._lift(y0))
    pieces = []
    placements = []
    fragments = []
    used = {}
    for shape, members in merged:
        base = members[0][0]
        used[base] = used.get(base, 0) + 1
        pid = base if used[base] == 1 else "%s.%d" % (base, used[base])
        pieces.append(Piece(pid, shape.translated(shift)))
        placements.append(Placement(pid, Isometry.identity()))
        fragments.append((pid, members))
    D = Dissection(name, _rect(rat(0), rat(0), Scalar._lift(width),
                               Scalar._lift(height)),
                   width, height, pieces, placements, provenance)
    D.fragments = fragments
    return D


def cut_rectangle_from_strip(spec, x0, width, name="strip-cut", provenance=""):
    """Dissection of the window [x0, x0+width] x [0, height] of the strip.

    The returned dissection certifies the window partition: its source is
    the window rectangle itself and every placement is the identity; the
    `fragments` attribute records which cell piece and translate each output
    piece came from.
    """
    x0 = Scalar._lift(x0)
    width = Scalar._lift(width)
    if width.sign() <= 0:
        raise ValueError("width must be positive")
    window = _rect(x0, rat(0), width, spec.height)
    frags = _window_fragments_strip(spec, window)
    areas = {p.id: p.shape.area() for p in spec.cell_pieces}
    merged = _merge_reidentified(frags, areas)
    return _cut_to_dissection(name, merged, x0, rat(0), width, spec.height,
                              provenance)


def cut_rectangle_from_tessellation(spec, corner, w, h,
                                    name="tessellation-cut", provenance=""):
    w = Scalar._lift(w)
    h = Scalar._lift(h)
    if w.sign() <= 0 or h.sign() <= 0:
        raise ValueError("window dimensions must be positive")
    window = Polygon([corner, Point(corner.x + w, corner.y),
                      Point(corner.x + w, corner.y + h),
                      Point(corner.x, corner.y + h)], trusted=True)
    frags = _window_fragments_tess(spec, window)
    areas = {p.id: p.shape.area() for p in spec.cell_pieces}
    merged = _merge_reidentified(frags, areas)
    return _cut_to_dissection(name, merged, corner.x, corner.y, w, h,
                              provenance)


def verify_periodic_tiling(tile_spec):
    """Check the placed tiles fill the plane under the lattice (3x3 window)."""
    u, v = tile_spec.lattice
    cell = [Piece("tile#%d" % i, iso.apply_polygon(tile_spec.tile))
            for i, iso in enumerate(tile_spec.placements)]
    spec = TessSpec(u, v, cell)
    # window: parallelogram spanned by 3u and 3v at the origin
    p0 = Point(rat(0), rat(0))
    p1 = Point(u.x * 3, u.y * 3)
    p2 = Point(u.x * 3 + v.x * 3, u.y * 3 + v.y * 3)
    p3 = Point(v.x * 3, v.y * 3)
    window = Polygon([p0, p1, p2, p3])
    frags = _window_fragments_tess(spec, window)
    failures = verify_partition(window, [f for _, _, f in frags],
                                labels=["%s@%s" % (pid, k) for pid, k, _ in frags])
    return VerificationReport(piece_count=len(tile_spec.placements),
                              area_source=window.area(),
                              area_target=window.area(),
                              failures=failures)


# ---------------------------------------------------------------------------
# serialization (same structured-text format family as dissections)


def _poly_json(poly):
    from .dissection import _point_json
    return [_point_json(p) for p in poly.vertices]


def _poly_from_json(obj):
    from .dissection import _point_from_json
    return Polygon([_point_from_json(v) for v in obj])


def strip_to_dict(spec):
    return {"kind": "strip",
            "period": sc.format_scalar(spec.period),
            "height": sc.format_scalar(spec.height),
            "pieces": [{"id": p.id, "vertices": _poly_json(p.shape)}
                       for p in spec.cell_pieces]}


def strip_from_dict(obj):
    return StripSpec(sc.parse_scalar(obj["period"]),
                     sc.parse_scalar(obj["height"]),
                     [Piece(p["id"], _poly_from_json(p["vertices"]))
                      for p in obj["pieces"]])


def tess_to_dict(spec):
    from .dissection import _point_json
    return {"kind": "tessellation",
            "lattice": [_point_json(spec.u), _point_json(spec.v)],
            "pieces": [{"id": p.id, "vertices": _poly_json(p.shape)}
                       for p in spec.cell_pieces]}


def tess_from_dict(obj):
    from .dissection import _point_from_json
    u = _point_from_json(obj["lattice"][0])
    v = _point_from_json(obj["lattice"][1])
    return TessSpec(u, v, [Piece(p["id"], _poly_from_json(p["vertices"]))
                           for p in obj["pieces"]])
