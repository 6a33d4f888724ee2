"""Dissection data model, exact verifier, and the dissection file format.

A Dissection holds pieces in source position plus one placement per piece
mapping it into the axis-aligned target rectangle [0,w] x [0,h].  The
verifier certifies, with exact arithmetic only, that the pieces partition
the source and their placed images partition the rectangle.
"""

from __future__ import annotations

import json

from . import scalar as sc
from .geometry import (
    Isometry,
    Point,
    Polygon,
    interiors_intersect,
    polygon_inside,
    regular_polygon,
)
from .scalar import Scalar, format_scalar, parse_scalar, rat


class Piece:
    __slots__ = ("id", "shape")

    def __init__(self, id, shape):
        self.id = id
        self.shape = shape

    def __repr__(self):
        return "Piece(%r, %r)" % (self.id, self.shape)


class Placement:
    __slots__ = ("piece_id", "map")

    def __init__(self, piece_id, map):
        self.piece_id = piece_id
        self.map = map

    def __repr__(self):
        return "Placement(%r, %r)" % (self.piece_id, self.map)


class Finding:
    __slots__ = ("kind", "detail")

    def __init__(self, kind, detail):
        self.kind = kind
        self.detail = detail

    def __repr__(self):
        return "[%s] %s" % (self.kind, self.detail)


class VerificationReport:
    def __init__(self, piece_count=0, turned_over_count=0,
                 area_source=None, area_target=None, failures=None):
        self.failures = failures if failures is not None else []
        self.piece_count = piece_count
        self.turned_over_count = turned_over_count
        self.area_source = area_source
        self.area_target = area_target

    @property
    def passed(self):
        return not self.failures

    def pretty(self, digits=6):
        lines = []
        lines.append("pass: %s" % ("yes" if self.passed else "NO"))
        lines.append("pieces: %d" % self.piece_count)
        lines.append("turned over: %d" % self.turned_over_count)
        if self.area_source is not None:
            lines.append("area source: %s" % sc.approx(self.area_source, digits))
        if self.area_target is not None:
            lines.append("area target: %s" % sc.approx(self.area_target, digits))
        for f in self.failures:
            lines.append("failure %r" % f)
        return "\n".join(lines)

    def __repr__(self):
        return "<VerificationReport pass=%s pieces=%d failures=%d>" % (
            self.passed, self.piece_count, len(self.failures))


class Dissection:
    def __init__(self, name, source, target_width, target_height,
                 pieces, placements, provenance=""):
        self.name = name
        self.source = source
        self.target_width = Scalar._lift(target_width)
        self.target_height = Scalar._lift(target_height)
        self.pieces = list(pieces)
        self.placements = list(placements)
        self.provenance = provenance

    def target_polygon(self):
        w, h = self.target_width, self.target_height
        return Polygon([Point(0, 0), Point(w, rat(0)), Point(w, h), Point(rat(0), h)],
                       trusted=True)

    def placement_for(self, piece_id):
        found = [pl for pl in self.placements if pl.piece_id == piece_id]
        if len(found) != 1:
            raise ValueError("piece %r has %d placements" % (piece_id, len(found)))
        return found[0]

    def __repr__(self):
        return "Dissection(%r, %d pieces)" % (self.name, len(self.pieces))


def verify_partition(container, parts, labels=None, early_exit=False):
    """Certify that `parts` exactly partition `container`.

    Checks: (a) each part inside the container, (b) pairwise disjoint
    interiors, (c) exact area sum.  Together these imply exact coverage.
    """
    if labels is None:
        labels = [str(i) for i in range(len(parts))]
    failures = []

    total = rat(0)
    for p in parts:
        total = total + p.area()
    if (total - container.area()).sign() != 0:
        failures.append(Finding(
            "area-mismatch",
            "sum of part areas %s != container area %s"
            % (sc.approx(total, 9), sc.approx(container.area(), 9))))
        if early_exit:
            return failures

    for lab, p in zip(labels, parts):
        if not polygon_inside(p, container):
            failures.append(Finding("out-of-bounds",
                                    "part %s is not inside the container" % lab))
            if early_exit:
                return failures

    n = len(parts)
    for i in range(n):
        bi = parts[i].float_bbox()
        for j in range(i + 1, n):
            bj = parts[j].float_bbox()
            if bi[0] > bj[2] or bj[0] > bi[2] or bi[1] > bj[3] or bj[1] > bi[3]:
                continue
            if interiors_intersect(parts[i], parts[j]):
                failures.append(Finding(
                    "overlap", "parts %s and %s have intersecting interiors"
                    % (labels[i], labels[j])))
                if early_exit:
                    return failures
    return failures


def verify_dissection(D, early_exit=False):
    """Run all proof obligations for a dissection; exact, no epsilon."""
    failures = []
    piece_ids = [p.id for p in D.pieces]
    if len(set(piece_ids)) != len(piece_ids):
        failures.append(Finding("bad-placement", "duplicate piece ids"))
    placed_ids = [pl.piece_id for pl in D.placements]
    if sorted(placed_ids) != sorted(piece_ids):
        failures.append(Finding(
            "bad-placement",
            "placements do not match pieces one-to-one"))
    turned = 0
    images = []
    if not failures:
        by_id = {p.id: p for p in D.pieces}
        for pl in D.placements:
            if not pl.map.is_valid_rotation():
                failures.append(Finding(
                    "bad-isometry",
                    "placement of %r violates c^2+s^2=1" % pl.piece_id))
                if early_exit:
                    break
                continue
            if pl.map.reflect:
                turned += 1
            images.append((pl.piece_id, pl.map.apply_polygon(by_id[pl.piece_id].shape)))

    area_source = D.source.area()
    area_target = D.target_width * D.target_height
    report = VerificationReport(
        piece_count=len(D.pieces), turned_over_count=turned,
        area_source=area_source, area_target=area_target, failures=failures)
    if failures and early_exit:
        return report

    failures.extend(verify_partition(
        D.source, [p.shape for p in D.pieces],
        labels=["source:%s" % p.id for p in D.pieces], early_exit=early_exit))
    if failures and early_exit:
        return report

    if not any(f.kind.startswith("bad") for f in failures):
        failures.extend(verify_partition(
            D.target_polygon(), [img for _, img in images],
            labels=["target:%s" % pid for pid, _ in images],
            early_exit=early_exit))
    return report


# ---------------------------------------------------------------------------
# file format (JSON; all scalars are expression-grammar strings)


def _point_json(p):
    return [format_scalar(p.x), format_scalar(p.y)]


def _point_from_json(obj):
    return Point(parse_scalar(obj[0]), parse_scalar(obj[1]))


def dissection_to_dict(D):
    if getattr(D, "source_spec", None):
        source = D.source_spec
    else:
        source = {"kind": "polygon",
                  "vertices": [_point_json(p) for p in D.source.vertices]}
    return {
        "name": D.name,
        "provenance": D.provenance,
        "source": source,
        "target": {"width": format_scalar(D.target_width),
                   "height": format_scalar(D.target_height)},
        "pieces": [{"id": p.id,
                    "vertices": [_point_json(v) for v in p.shape.vertices]}
                   for p in D.pieces],
        "placements": [{"piece": pl.piece_id,
                        "reflect": pl.map.reflect,
                        "cos": format_scalar(pl.map.c),
                        "sin": format_scalar(pl.map.s),
                        "tx": format_scalar(pl.map.t.x),
                        "ty": format_scalar(pl.map.t.y)}
                       for pl in D.placements],
    }


def dissection_from_dict(obj):
    src = obj["source"]
    if src["kind"] == "regular":
        side = parse_scalar(src.get("side", "1"))
        source = regular_polygon(int(src["n"]), side)
        source_spec = {"kind": "regular", "n": int(src["n"]),
                       "side": src.get("side", "1")}
    elif src["kind"] == "polygon":
        source = Polygon([_point_from_json(v) for v in src["vertices"]])
        source_spec = None
    else:
        raise ValueError("unknown source kind %r" % (src["kind"],))
    pieces = [Piece(p["id"], Polygon([_point_from_json(v) for v in p["vertices"]]))
              for p in obj["pieces"]]
    placements = [Placement(pl["piece"],
                            Isometry(bool(pl["reflect"]),
                                     parse_scalar(pl["cos"]),
                                     parse_scalar(pl["sin"]),
                                     Point(parse_scalar(pl["tx"]),
                                           parse_scalar(pl["ty"]))))
                  for pl in obj["placements"]]
    D = Dissection(obj["name"], source,
                   parse_scalar(obj["target"]["width"]),
                   parse_scalar(obj["target"]["height"]),
                   pieces, placements, obj.get("provenance", ""))
    D.source_spec = source_spec
    return D


def save_dissection(D, path):
    with open(path, "w") as fh:
        json.dump(dissection_to_dict(D), fh, indent=1)
        fh.write("\n")


def load_dissection(path):
    with open(path) as fh:
        return dissection_from_dict(json.load(fh))
