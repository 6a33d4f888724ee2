"""Exact planar geometry: points, polygons, isometries, predicates.

All coordinates are exact Scalars; every predicate (orientation, containment,
intersection) is decided exactly.  Polygons are simple and counter-clockwise
after canonicalization.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import scalar as sc
from .scalar import Scalar, _imul, _isub, rat, sqrt_nonneg


class GeometryError(ValueError):
    pass


_INF_F = math.inf


class Point:
    __slots__ = ("x", "y")
    __hash__ = None

    def __init__(self, x, y):
        self.x = Scalar._lift(x)
        self.y = Scalar._lift(y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def scaled(self, c):
        return Point(self.x * c, self.y * c)

    def __eq__(self, other):
        return self.x == other.x and self.y == other.y

    def __ne__(self, other):
        return not self.__eq__(other)

    def key(self):
        return (self.x.key(), self.y.key())

    def to_float(self):
        return (self.x.to_float(), self.y.to_float())

    def __repr__(self):
        fx, fy = self.to_float()
        return "Point(%.6g, %.6g)" % (fx, fy)


ORIGIN = Point(0, 0)


def cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o, a, b):
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def orient(a, b, c):
    """Sign of the signed area of triangle abc: +1 ccw, -1 cw, 0 collinear.

    A float-interval fast path decides the generic case without exact
    arithmetic; ties fall back to the exact predicate.
    """
    ax = _isub(b.x.enclosure(), a.x.enclosure())
    ay = _isub(b.y.enclosure(), a.y.enclosure())
    bx = _isub(c.x.enclosure(), a.x.enclosure())
    by = _isub(c.y.enclosure(), a.y.enclosure())
    lo, hi = _isub(_imul(ax, by), _imul(ay, bx))
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    return cross(a, b, c).sign()


def vec_cross(u, v):
    return u.x * v.y - u.y * v.x


def vec_dot(u, v):
    return u.x * v.x + u.y * v.y


def sign_vec_cross(u, v):
    lo, hi = _isub(_imul(u.x.enclosure(), v.y.enclosure()),
                   _imul(u.y.enclosure(), v.x.enclosure()))
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    return vec_cross(u, v).sign()


def sign_vec_dot(u, v):
    a = _imul(u.x.enclosure(), v.x.enclosure())
    b = _imul(u.y.enclosure(), v.y.enclosure())
    lo = a[0] + b[0]
    hi = a[1] + b[1]
    if lo > 0 and math.nextafter(lo, -_INF_F) > 0:
        return 1
    if hi < 0 and math.nextafter(hi, _INF_F) < 0:
        return -1
    return vec_dot(u, v).sign()


def midpoint(a, b):
    half = rat(1, 2)
    return Point((a.x + b.x) * half, (a.y + b.y) * half)


def dist2(a, b):
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def distance(a, b):
    return sqrt_nonneg(dist2(a, b))


def on_segment(p, a, b):
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min_s(a.x, b.x) <= p.x <= max_s(a.x, b.x)
            and min_s(a.y, b.y) <= p.y <= max_s(a.y, b.y))


def min_s(a, b):
    return a if a <= b else b


def max_s(a, b):
    return a if a >= b else b


# ---------------------------------------------------------------------------
# direction (angular) predicates, used by wedge tests


def _parallel_same(u, v):
    return sign_vec_cross(u, v) == 0 and sign_vec_dot(u, v) > 0


def _between_ccw(u, a, v):
    """Is direction a strictly inside the open ccw sector from u to v?

    The sector is the set of directions swept rotating u counter-clockwise
    until reaching v; it may be reflex.  u == v (same direction) denotes the
    empty sector.
    """
    cuv = sign_vec_cross(u, v)
    cua = sign_vec_cross(u, a)
    if cuv > 0:
        return cua > 0 and sign_vec_cross(a, v) > 0
    if cuv < 0:
        return cua > 0 or sign_vec_cross(a, v) > 0
    if sign_vec_dot(u, v) > 0:
        return False  # empty sector
    return cua > 0  # half-turn sector


def _cmp_from(u, a, b):
    """Order of directions a, b by ccw angle measured from u (0 first)."""
    if _parallel_same(a, b):
        return 0
    if _parallel_same(a, u):
        return -1
    if _parallel_same(b, u):
        return 1
    return -1 if _between_ccw(u, a, b) else 1


class Wedge:
    """Open angular sector at a point: directions from `start` ccw to `end`.

    `full` marks the whole circle (point interior to a region).
    """

    __slots__ = ("start", "end", "full")

    def __init__(self, start=None, end=None, full=False):
        self.start = start
        self.end = end
        self.full = full

    def overlaps(self, other):
        if self.full or other.full:
            return True
        u1, v1, u2, v2 = self.start, self.end, other.start, other.end
        if _parallel_same(u1, u2):
            return True
        return _between_ccw(u1, u2, v1) or _between_ccw(u2, u1, v2)

    def contains_wedge(self, other):
        if self.full:
            return True
        if other.full:
            return False
        U, V, u, v = self.start, self.end, other.start, other.end
        if not (_parallel_same(u, U) or _between_ccw(U, u, V)):
            return False
        if not (_parallel_same(v, V) or _between_ccw(U, v, V)):
            return False
        return _cmp_from(U, u, v) <= 0


# ---------------------------------------------------------------------------
# construction objects


class Line:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        if a == b:
            raise GeometryError("line through two equal points")
        self.a = a
        self.b = b


class Segment:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        if a == b:
            raise GeometryError("degenerate segment")
        self.a = a
        self.b = b


class Circle:
    __slots__ = ("center", "radius")

    def __init__(self, center, radius):
        radius = Scalar._lift(radius)
        if radius.sign() <= 0:
            raise GeometryError("circle radius must be positive")
        self.center = center
        self.radius = radius


def _line_line(a1, a2, b1, b2):
    d1 = a2 - a1
    d2 = b2 - b1
    den = vec_cross(d1, d2)
    if den.sign() == 0:
        if orient(a1, a2, b1) == 0:
            raise GeometryError("coincident lines have no unique intersection")
        return []
    t = vec_cross(b1 - a1, d2) / den
    return [Point(a1.x + t * d1.x, a1.y + t * d1.y)]


def _param_in_segment(p, a, b):
    return (min_s(a.x, b.x) <= p.x <= max_s(a.x, b.x)
            and min_s(a.y, b.y) <= p.y <= max_s(a.y, b.y))


def _line_circle(a, b, circle):
    d = b - a
    f = a - circle.center
    A = vec_dot(d, d)
    B = 2 * vec_dot(f, d)
    C = vec_dot(f, f) - circle.radius * circle.radius
    disc = B * B - 4 * A * C
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        t = -B / (2 * A)
        return [Point(a.x + t * d.x, a.y + t * d.y)]
    r = sqrt_nonneg(disc)
    out = []
    for t in ((-B - r) / (2 * A), (-B + r) / (2 * A)):
        out.append(Point(a.x + t * d.x, a.y + t * d.y))
    return out


def intersect(u, v):
    """Exact intersection points of lines/segments/circles (0, 1, or 2).

    Coincident or overlapping inputs are an error, not an empty result.
    """
    if isinstance(u, Circle) and isinstance(v, Circle):
        if u.center == v.center:
            raise GeometryError("concentric circles")
        # radical line: 2(x2-x1)x + 2(y2-y1)y = r1^2 - r2^2 + |c2|^2 - |c1|^2
        c1, c2 = u.center, v.center
        dx = c2.x - c1.x
        dy = c2.y - c1.y
        k = (u.radius ** 2 - v.radius ** 2
             + c2.x ** 2 - c1.x ** 2 + c2.y ** 2 - c1.y ** 2)
        # a point on the radical line and its direction
        if dx.sign() != 0:
            p0 = Point(k / (2 * dx), 0)
        else:
            p0 = Point(0, k / (2 * dy))
        p1 = Point(p0.x - dy, p0.y + dx)
        return _line_circle(p0, p1, u)
    if isinstance(u, Circle):
        u, v = v, u
    if isinstance(v, Circle):
        pts = _line_circle(u.a, u.b, v)
        if isinstance(u, Segment):
            pts = [p for p in pts if _param_in_segment(p, u.a, u.b)]
        return pts
    pts = _line_line(u.a, u.b, v.a, v.b)
    if not pts:
        # parallel; overlapping segments on the same line are degenerate
        if (isinstance(u, Segment) and isinstance(v, Segment)
                and orient(u.a, u.b, v.a) == 0):
            if (_param_in_segment(v.a, u.a, u.b) or _param_in_segment(v.b, u.a, u.b)
                    or _param_in_segment(u.a, v.a, v.b)):
                raise GeometryError("overlapping collinear segments")
        return []
    p = pts[0]
    if isinstance(u, Segment) and not _param_in_segment(p, u.a, u.b):
        return []
    if isinstance(v, Segment) and not _param_in_segment(p, v.a, v.b):
        return []
    return [p]


def foot_of_perpendicular(p, line):
    a, b = line.a, line.b
    d = b - a
    t = vec_dot(p - a, d) / vec_dot(d, d)
    return Point(a.x + t * d.x, a.y + t * d.y)


def perpendicular_bisector(a, b):
    m = midpoint(a, b)
    d = b - a
    return Line(m, Point(m.x - d.y, m.y + d.x))


def segments_properly_cross(a1, a2, b1, b2):
    o1 = orient(a1, a2, b1)
    o2 = orient(a1, a2, b2)
    if o1 * o2 >= 0:
        return False
    o3 = orient(b1, b2, a1)
    o4 = orient(b1, b2, a2)
    return o3 * o4 < 0


def segments_touch(a1, a2, b1, b2):
    """Closed segments share at least one point."""
    if segments_properly_cross(a1, a2, b1, b2):
        return True
    return (on_segment(b1, a1, a2) or on_segment(b2, a1, a2)
            or on_segment(a1, b1, b2) or on_segment(a2, b1, b2))


# ---------------------------------------------------------------------------
# polygons


class Polygon:
    """Simple polygon with exact vertices, canonically counter-clockwise."""

    __slots__ = ("vertices", "_area", "_bbox")

    def __init__(self, vertices, raw=False, trusted=False):
        vertices = tuple(vertices)
        if not raw:
            vertices = _canonical_vertices(vertices)
            if not trusted:
                _check_simple(vertices)
        self.vertices = vertices
        self._area = None
        self._bbox = None

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        n = len(vs)
        return [(vs[i], vs[(i + 1) % n]) for i in range(n)]

    def area(self):
        if self._area is None:
            vs = self.vertices
            acc = rat(0)
            for i in range(len(vs)):
                a, b = vs[i], vs[(i + 1) % len(vs)]
                acc = acc + (a.x * b.y - b.x * a.y)
            self._area = acc * rat(1, 2)
        return self._area

    def float_bbox(self):
        if self._bbox is None:
            xs_lo, xs_hi, ys_lo, ys_hi = [], [], [], []
            for p in self.vertices:
                lo, hi = p.x.enclosure()
                xs_lo.append(lo)
                xs_hi.append(hi)
                lo, hi = p.y.enclosure()
                ys_lo.append(lo)
                ys_hi.append(hi)
            self._bbox = (min(xs_lo), min(ys_lo), max(xs_hi), max(ys_hi))
        return self._bbox

    def translated(self, v):
        return Polygon([p + v for p in self.vertices], trusted=True)

    def contains(self, p):
        """Exact classification: 'inside', 'boundary', or 'outside'."""
        bx0, by0, bx1, by1 = self.float_bbox()
        px = p.x.enclosure()
        py = p.y.enclosure()
        if px[0] > bx1 or px[1] < bx0 or py[0] > by1 or py[1] < by0:
            return "outside"
        for a, b in self.edges():
            if on_segment(p, a, b):
                return "boundary"
        cnt = 0
        for a, b in self.edges():
            ay = (a.y - p.y).sign()
            by = (b.y - p.y).sign()
            if ay <= 0 < by:       # upward edge, half-open
                if orient(a, b, p) > 0:
                    cnt += 1
            elif by <= 0 < ay:     # downward edge
                if orient(a, b, p) < 0:
                    cnt += 1
        return "inside" if cnt % 2 else "outside"

    def wedge_at(self, p):
        """Angular sector of the interior near p, or None if p is exterior."""
        vs = self.vertices
        n = len(vs)
        for i, v in enumerate(vs):
            if v == p:
                nxt = vs[(i + 1) % n]
                prv = vs[(i - 1) % n]
                return Wedge(nxt - v, prv - v)
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if on_segment(p, a, b):
                return Wedge(b - a, a - b)
        c = self.contains(p)
        if c == "inside":
            return Wedge(full=True)
        return None

    def interior_point(self):
        """Some exact point strictly inside (centroid of an ear)."""
        vs = self.vertices
        n = len(vs)
        if n == 3:
            return Point((vs[0].x + vs[1].x + vs[2].x) / 3,
                         (vs[0].y + vs[1].y + vs[2].y) / 3)
        for i in range(n):
            a, b, c = vs[(i - 1) % n], vs[i], vs[(i + 1) % n]
            if orient(a, b, c) <= 0:
                continue
            ok = True
            for q in vs:
                if q is a or q is b or q is c:
                    continue
                if _in_triangle_closed(q, a, b, c):
                    ok = False
                    break
            if ok:
                return Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
        raise GeometryError("no ear found in simple polygon")

    def reversed(self):
        return Polygon(tuple(reversed(self.vertices)), raw=True)

    def __repr__(self):
        return "Polygon(%d vertices, area~%.6g)" % (
            len(self.vertices), self.area().to_float())


def _in_triangle_closed(p, a, b, c):
    return (orient(a, b, p) >= 0 and orient(b, c, p) >= 0
            and orient(c, a, p) >= 0)


def _canonical_vertices(vertices):
    vs = list(vertices)
    if len(vs) < 3:
        raise GeometryError("polygon needs at least 3 vertices")
    # drop exact duplicates, then collinear middles, until stable
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        out = []
        n = len(vs)
        for i in range(n):
            if vs[i] == vs[(i + 1) % n]:
                changed = True
                continue
            out.append(vs[i])
        vs = out
        n = len(vs)
        if n < 3:
            break
        out = []
        for i in range(n):
            if orient(vs[(i - 1) % n], vs[i], vs[(i + 1) % n]) == 0:
                changed = True
                continue
            out.append(vs[i])
        vs = out
    if len(vs) < 3:
        raise GeometryError("polygon degenerates to fewer than 3 vertices")
    area2 = rat(0)
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        area2 = area2 + (a.x * b.y - b.x * a.y)
    s = area2.sign()
    if s == 0:
        raise GeometryError("polygon has zero area")
    if s < 0:
        vs.reverse()
    return tuple(vs)


def _check_simple(vs):
    n = len(vs)
    for i in range(n):
        a1, a2 = vs[i], vs[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent (share an endpoint)
            b1, b2 = vs[j], vs[(j + 1) % n]
            bb1 = (min(a1.x.enclosure()[0], a2.x.enclosure()[0]),
                   min(a1.y.enclosure()[0], a2.y.enclosure()[0]),
                   max(a1.x.enclosure()[1], a2.x.enclosure()[1]),
                   max(a1.y.enclosure()[1], a2.y.enclosure()[1]))
            bb2 = (min(b1.x.enclosure()[0], b2.x.enclosure()[0]),
                   min(b1.y.enclosure()[0], b2.y.enclosure()[0]),
                   max(b1.x.enclosure()[1], b2.x.enclosure()[1]),
                   max(b1.y.enclosure()[1], b2.y.enclosure()[1]))
            if bb1[0] > bb2[2] or bb2[0] > bb1[2] or bb1[1] > bb2[3] or bb2[1] > bb1[3]:
                continue
            if segments_touch(a1, a2, b1, b2):
                raise GeometryError("polygon is not simple")


def interiors_intersect(A, B):
    """Exact test whether the open interiors of two simple polygons meet.

    Shared edges and vertices do not count.
    """
    a0, a1, a2, a3 = A.float_bbox()
    b0, b1, b2, b3 = B.float_bbox()
    if a0 > b2 or b0 > a2 or a1 > b3 or b1 > a3:
        return False
    ea = A.edges()
    eb = B.edges()
    for p1, p2 in ea:
        for q1, q2 in eb:
            if segments_properly_cross(p1, p2, q1, q2):
                return True
    touch = []
    for v in A.vertices:
        c = B.contains(v)
        if c == "inside":
            return True
        if c == "boundary":
            touch.append(v)
    for v in B.vertices:
        c = A.contains(v)
        if c == "inside":
            return True
        if c == "boundary":
            touch.append(v)
    for p in touch:
        wa = A.wedge_at(p)
        wb = B.wedge_at(p)
        if wa is not None and wb is not None and wa.overlaps(wb):
            return True
    return False


def polygon_inside(part, container):
    """Exact test that `part` is contained in `container` (boundaries may touch)."""
    touch = []
    for v in part.vertices:
        c = container.contains(v)
        if c == "outside":
            return False
        if c == "boundary":
            touch.append(v)
    for p1, p2 in part.edges():
        for q1, q2 in container.edges():
            if segments_properly_cross(p1, p2, q1, q2):
                return False
    for v in container.vertices:
        if part.contains(v) == "boundary":
            touch.append(v)
    for p in touch:
        wp = part.wedge_at(p)
        wc = container.wedge_at(p)
        if wp is None:
            continue
        if wc is None or not wc.contains_wedge(wp):
            return False
    return True


# ---------------------------------------------------------------------------
# isometries


class Isometry:
    """p -> Rot(c,s) * Mirror(reflect) * p + t, mirror applied first.

    c, s satisfy c^2 + s^2 = 1 exactly.
    """

    __slots__ = ("reflect", "c", "s", "t")

    def __init__(self, reflect, c, s, t):
        self.reflect = bool(reflect)
        self.c = Scalar._lift(c)
        self.s = Scalar._lift(s)
        self.t = t

    @staticmethod
    def identity():
        return Isometry(False, 1, 0, ORIGIN)

    @staticmethod
    def translation(v):
        return Isometry(False, 1, 0, v)

    @staticmethod
    def rotation_pi(k, n, center=None):
        """Rotation by k*pi/n, optionally about a center point."""
        c = sc.cos_pi(Fraction(k, n))
        s = sc.sin_pi(Fraction(k, n))
        iso = Isometry(False, c, s, ORIGIN)
        if center is not None:
            iso = iso.about(center)
        return iso

    def about(self, center):
        """Same linear part, conjugated to fix `center` before translating by t."""
        moved = self.apply_point(center)
        return Isometry(self.reflect, self.c, self.s,
                        Point(center.x - moved.x + self.t.x,
                              center.y - moved.y + self.t.y))

    def is_valid_rotation(self):
        return (self.c * self.c + self.s * self.s - 1).sign() == 0

    def apply_point(self, p):
        x, y = p.x, p.y
        if self.reflect:
            y = -y
        return Point(self.c * x - self.s * y + self.t.x,
                     self.s * x + self.c * y + self.t.y)

    def apply_polygon(self, poly):
        pts = [self.apply_point(p) for p in poly.vertices]
        if self.reflect:
            pts.reverse()
        return Polygon(pts, trusted=True)

    def compose(self, other):
        """self after other: (self.compose(other))(p) == self(other(p))."""
        r2 = self.reflect != other.reflect
        oc, os = other.c, other.s
        if self.reflect:
            os = -os
        c2 = self.c * oc - self.s * os
        s2 = self.s * oc + self.c * os
        t2 = self.apply_point(other.t)
        return Isometry(r2, c2, s2, t2)

    def inverse(self):
        # (R M)^-1 = M R^-1 = (R M) with mirrored sine when reflect
        if not self.reflect:
            ti = Point(-(self.c * self.t.x + self.s * self.t.y),
                       -(self.c * self.t.y - self.s * self.t.x))
            return Isometry(False, self.c, -self.s, ti)
        inv_lin = Isometry(True, self.c, self.s, ORIGIN)
        q = inv_lin.apply_point(self.t)
        return Isometry(True, self.c, self.s, Point(-q.x, -q.y))

    def __repr__(self):
        return "Isometry(reflect=%s, c~%.4g, s~%.4g, t=%r)" % (
            self.reflect, self.c.to_float(), self.s.to_float(), self.t)


def iso_from_two_points(a1, a2, b1, b2, reflect=False):
    """The isometry taking a1 to b1 and a2 to b2 (segments must be congruent)."""
    u = a2 - a1
    if reflect:
        u = Point(u.x, -u.y)
    v = b2 - b1
    n2 = vec_dot(u, u)
    if (n2 - vec_dot(v, v)).sign() != 0:
        raise GeometryError("segments are not congruent")
    c = vec_dot(u, v) / n2
    s = vec_cross(u, v) / n2
    lin = Isometry(reflect, c, s, ORIGIN)
    img = lin.apply_point(a1)
    return Isometry(reflect, c, s, b1 - img)


# ---------------------------------------------------------------------------
# regular polygons and chords


def regular_polygon(n, side=1):
    """Regular n-gon, side length `side`, centered at the origin with the
    first vertex at the apex (0, R); vertices counter-clockwise."""
    if n < 3:
        raise GeometryError("regular polygon needs n >= 3")
    side = Scalar._lift(side)
    if side.sign() <= 0:
        raise GeometryError("side must be positive")
    R = side / (2 * sc.sin_pi(Fraction(1, n)))
    pts = [None] * n
    pts[0] = Point(rat(0), R)
    for k in range(2, (n + 2) // 2 + 1):
        sa = sc.sin_pi(Fraction(2 * (k - 1), n))
        ca = sc.cos_pi(Fraction(2 * (k - 1), n))
        pts[k - 1] = Point(-R * sa, R * ca)
        if n + 2 - k <= n:
            pts[n + 1 - k] = Point(R * sa, R * ca)
    return Polygon(pts, trusted=True)


def polygon_vertex(poly, k):
    """1-based vertex accessor matching the P_k labels of regular_polygon."""
    return poly.vertices[k - 1]


def chord_length(n, k):
    """Length of the chord joining two vertices of the unit-sided regular
    n-gon that are k edges apart (same semicircle)."""
    if not 0 <= k <= n - 1:
        raise GeometryError("chord index out of range")
    if k == 0:
        return rat(0)
    if k == 1:
        return rat(1)
    if k % 2 == 0:
        t = k // 2
        acc = rat(0)
        for j in range(t):
            acc = acc + sc.cos_pi(Fraction(2 * j + 1, n))
        return 2 * acc
    t = (k - 1) // 2
    acc = rat(0)
    for j in range(1, t + 1):
        acc = acc + sc.cos_pi(Fraction(2 * j, n))
    return 1 + 2 * acc


def polygon_area(poly):
    return poly.area()


def apply_isometry(iso, poly):
    return iso.apply_polygon(poly)
