"""Exact polygon clipping, gluing, and arrangement-face extraction.

Clipping against a convex window goes through an exact triangulation
(ear clipping), per-triangle Sutherland-Hodgman against the window's
half-planes, and an exact re-gluing of the surviving fragments.  Gluing
and face extraction key dictionaries by canonical coordinates, so all
inputs are coerced into a single scalar field first.
"""

from __future__ import annotations

from functools import cmp_to_key

from . import scalar as sc
from .geometry import (
    GeometryError,
    Point,
    Polygon,
    _between_ccw,
    _parallel_same,
    cross,
    on_segment,
    orient,
    vec_dot,
)
from .scalar import rat


def unify_points(points):
    """Coerce a flat list of Points into one scalar field."""
    flat = []
    for p in points:
        flat.append(p.x)
        flat.append(p.y)
    uni = sc.unify_all(flat)
    return [Point(uni[2 * i], uni[2 * i + 1]) for i in range(len(points))]


def unify_polygons(polys):
    counts = [len(p.vertices) for p in polys]
    pts = [v for p in polys for v in p.vertices]
    uni = unify_points(pts)
    out = []
    i = 0
    for n in counts:
        out.append(Polygon(uni[i:i + n], raw=True))
        i += n
    return out


# ---------------------------------------------------------------------------
# triangulation (ear clipping, exact)


def triangulate(poly):
    vs = list(poly.vertices)
    tris = []
    while len(vs) > 3:
        n = len(vs)
        for i in range(n):
            a, b, c = vs[(i - 1) % n], vs[i], vs[(i + 1) % n]
            if orient(a, b, c) <= 0:
                continue
            ear = True
            for q in vs:
                if q is a or q is b or q is c:
                    continue
                if (orient(a, b, q) >= 0 and orient(b, c, q) >= 0
                        and orient(c, a, q) >= 0):
                    ear = False
                    break
            if ear:
                tris.append((a, b, c))
                del vs[i]
                break
        else:
            raise GeometryError("ear clipping failed (polygon not simple?)")
    tris.append((vs[0], vs[1], vs[2]))
    return tris


# ---------------------------------------------------------------------------
# convex clipping


def clip_convex_halfplane(pts, hp_a, hp_b):
    """Clip a convex ccw polygon by the half-plane left of line hp_a->hp_b."""
    out = []
    n = len(pts)
    if n == 0:
        return out
    sides = [orient(hp_a, hp_b, p) for p in pts]
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        sp, sq = sides[i], sides[(i + 1) % n]
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            d1 = hp_b - hp_a
            d2 = q - p
            den = d1.x * d2.y - d1.y * d2.x
            t = (d1.x * (p.y - hp_a.y) - d1.y * (p.x - hp_a.x)) / -den
            out.append(Point(p.x + t * d2.x, p.y + t * d2.y))
    return out


def clip_convex(pts, window):
    """Clip convex ccw point list against convex ccw window polygon."""
    cur = list(pts)
    wv = window.vertices
    for i in range(len(wv)):
        if not cur:
            return []
        cur = clip_convex_halfplane(cur, wv[i], wv[(i + 1) % len(wv)])
    if len(cur) < 3:
        return []
    # drop zero-area output
    area2 = rat(0)
    for i in range(len(cur)):
        a, b = cur[i], cur[(i + 1) % len(cur)]
        area2 = area2 + (a.x * b.y - b.x * a.y)
    if area2.sign() <= 0:
        return []
    return cur


# ---------------------------------------------------------------------------
# gluing fragments along shared edges


def _dir_cmp_ccw_from(u):
    def cmp(d1, d2):
        if _parallel_same(d1, d2):
            return 0
        if _parallel_same(d1, u):
            return -1
        if _parallel_same(d2, u):
            return 1
        return -1 if _between_ccw(u, d1, d2) else 1
    return cmp


def _split_edges_at_vertices(edges, vertex_points):
    """Split each directed edge at the given points lying strictly inside it."""
    out = []
    for a, b in edges:
        inner = [p for p in vertex_points
                 if p != a and p != b and on_segment(p, a, b)]
        if not inner:
            out.append((a, b))
            continue
        d = b - a

        def along(p, q):
            s = (vec_dot(p - a, d) - vec_dot(q - a, d)).sign()
            return s
        inner.sort(key=cmp_to_key(along))
        chain = [a] + inner + [b]
        for i in range(len(chain) - 1):
            out.append((chain[i], chain[i + 1]))
    return out


def glue(polys, allow_multiple=True):
    """Union of interior-disjoint ccw polygons sharing boundary edges.

    Returns the list of connected components as simple polygons.  Raises if
    the union has a hole or duplicated area.
    """
    polys = unify_polygons(polys)
    vert_by_key = {}
    for p in polys:
        for v in p.vertices:
            vert_by_key.setdefault(v.key(), v)
    vertices = list(vert_by_key.values())
    edges = []
    for p in polys:
        vs = p.vertices
        for i in range(len(vs)):
            edges.append((vs[i], vs[(i + 1) % len(vs)]))
    edges = _split_edges_at_vertices(edges, vertices)
    count = {}
    for a, b in edges:
        k = (a.key(), b.key())
        count[k] = count.get(k, 0) + 1
        if count[k] > 1:
            raise GeometryError("duplicate directed edge while gluing (overlap?)")
    boundary = {}
    for a, b in edges:
        k = (a.key(), b.key())
        rk = (b.key(), a.key())
        if count.get(rk, 0):
            continue
        boundary[k] = (a, b)
    # chain boundary edges into cycles; at branch vertices take the most
    # counter-clockwise turn so touching components separate cleanly
    out_by_tail = {}
    for (ka, kb), (a, b) in boundary.items():
        out_by_tail.setdefault(ka, []).append((a, b))
    visited = set()
    cycles = []
    for start_key, (a0, b0) in boundary.items():
        if start_key in visited:
            continue
        cycle = []
        a, b = a0, b0
        while True:
            visited.add((a.key(), b.key()))
            cycle.append(a)
            outs = out_by_tail.get(b.key(), [])
            if not outs:
                raise GeometryError("open boundary while gluing")
            if len(outs) == 1:
                nxt = outs[0]
            else:
                u = a - b  # reversed incoming direction
                cmp = _dir_cmp_ccw_from(u)
                nxt = None
                nxt_d = None
                for cand in outs:
                    d = cand[1] - cand[0]
                    if _parallel_same(d, u):
                        continue
                    if nxt is None or cmp(d, nxt_d) > 0:
                        nxt, nxt_d = cand, d
                if nxt is None:
                    raise GeometryError("open boundary while gluing")
            a, b = nxt
            if (a.key(), b.key()) == start_key:
                break
            if (a.key(), b.key()) in visited:
                raise GeometryError("glue boundary walk revisited an edge")
        cycles.append(cycle)
    result = []
    for cyc in cycles:
        area2 = rat(0)
        for i in range(len(cyc)):
            p, q = cyc[i], cyc[(i + 1) % len(cyc)]
            area2 = area2 + (p.x * q.y - q.x * p.y)
        if area2.sign() < 0:
            raise GeometryError("glued region has a hole")
        if area2.sign() == 0:
            continue
        result.append(Polygon(cyc))
    if not allow_multiple and len(result) != 1:
        raise GeometryError("glued region is not connected")
    return result


# ---------------------------------------------------------------------------
# window clipping of arbitrary simple polygons


def clip_to_window(poly, window):
    """poly intersect window (convex), as a list of simple polygons."""
    b = poly.float_bbox()
    wb = window.float_bbox()
    if b[0] > wb[2] or wb[0] > b[2] or b[1] > wb[3] or wb[1] > b[3]:
        return []
    ps = unify_polygons([poly, window])
    poly, window = ps[0], ps[1]
    frags = []
    for tri in triangulate(poly):
        got = clip_convex(tri, window)
        if got:
            frags.append(Polygon(got, raw=True))
    if not frags:
        return []
    return glue(frags)


# ---------------------------------------------------------------------------
# arrangement of cut segments inside a container polygon


def arrangement_faces(container, segments):
    """Faces of the planar arrangement of cut segments inside a polygon.

    `segments` is a list of (Point, Point) cuts lying inside the container
    (endpoints on the boundary or on other cuts).  Returns the list of faces
    as simple polygons, which exactly partition the container.
    """
    pts = list(container.vertices)
    for a, b in segments:
        pts.append(a)
        pts.append(b)
    uni = unify_points(pts)
    nv = len(container.vertices)
    container = Polygon(uni[:nv], raw=True)
    seg_pts = uni[nv:]
    segments = [(seg_pts[2 * i], seg_pts[2 * i + 1])
                for i in range(len(segments))]

    base_edges = list(container.edges()) + [(a, b) for a, b in segments]
    # nodes: all endpoints plus pairwise intersections
    nodes = {}

    def add_node(p):
        nodes.setdefault(p.key(), p)

    for a, b in base_edges:
        add_node(a)
        add_node(b)
    n = len(base_edges)
    for i in range(n):
        a1, b1 = base_edges[i]
        for j in range(i + 1, n):
            a2, b2 = base_edges[j]
            if orient(a1, b1, a2) == 0 and orient(a1, b1, b2) == 0:
                for p in (a2, b2):
                    if on_segment(p, a1, b1):
                        add_node(p)
                for p in (a1, b1):
                    if on_segment(p, a2, b2):
                        add_node(p)
                continue
            d1 = b1 - a1
            d2 = b2 - a2
            den = d1.x * d2.y - d1.y * d2.x
            if den.sign() == 0:
                continue
            t = ((a2.x - a1.x) * d2.y - (a2.y - a1.y) * d2.x) / den
            p = Point(a1.x + t * d1.x, a1.y + t * d1.y)
            if on_segment(p, a1, b1) and on_segment(p, a2, b2):
                add_node(p)

    node_list = list(nodes.values())
    sub = _split_edges_at_vertices(base_edges, node_list)
    undirected = {}
    for a, b in sub:
        k = frozenset((a.key(), b.key()))
        undirected[k] = (a, b)
    directed = {}
    out_by_tail = {}
    for a, b in undirected.values():
        for p, q in ((a, b), (b, a)):
            directed[(p.key(), q.key())] = (p, q)
            out_by_tail.setdefault(p.key(), []).append((p, q))

    for tail, outs in out_by_tail.items():
        if len(outs) == 1:
            raise GeometryError("dangling cut endpoint in arrangement")

    visited = set()
    faces = []
    for start, (a0, b0) in directed.items():
        if start in visited:
            continue
        cycle = []
        a, b = a0, b0
        while True:
            visited.add((a.key(), b.key()))
            cycle.append(a)
            u = a - b  # reversed incoming direction at b
            cmp = _dir_cmp_ccw_from(u)
            best = None
            best_d = None
            for cand in out_by_tail[b.key()]:
                d = cand[1] - cand[0]
                if _parallel_same(d, u):
                    continue  # never immediately backtrack
                if best is None or cmp(d, best_d) > 0:
                    best, best_d = cand, d
            if best is None:
                raise GeometryError("dead end in arrangement face walk")
            a, b = best
            if (a.key(), b.key()) == start:
                break
            if (a.key(), b.key()) in visited:
                raise GeometryError("arrangement face walk revisited an edge")
        area2 = rat(0)
        for i in range(len(cycle)):
            p, q = cycle[i], cycle[(i + 1) % len(cycle)]
            area2 = area2 + (p.x * q.y - q.x * p.y)
        if area2.sign() > 0:
            faces.append(Polygon(cycle))
    total = rat(0)
    for f in faces:
        total = total + f.area()
    if (total - container.area()).sign() != 0:
        raise GeometryError("arrangement faces do not cover the container")
    return faces
