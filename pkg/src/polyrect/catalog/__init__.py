"""Catalog of certified polygon-to-rectangle dissections."""

from __future__ import annotations


class CatalogEntry:
    def __init__(self, id, n_or_shape, expected_pieces, builder, provenance):
        self.id = id
        self.n_or_shape = n_or_shape
        self.expected_pieces = expected_pieces
        self.builder = builder
        self.provenance = provenance


def _registry():
    from . import simple, pentagon
    entries = [
        CatalogEntry("square-1", 4, 1, simple.build_square,
                     "trivial identity"),
        CatalogEntry("triangle-2", 3, 2, simple.build_triangle,
                     "altitude cut, one piece turned over"),
        CatalogEntry("hexagon-3", 6, 3, simple.build_hexagon,
                     "two corner triangles moved"),
        CatalogEntry("pentagon-1", 5, 4, pentagon.build_pentagon_one,
                     "four convex pieces"),
        CatalogEntry("pentagon-2", 5, 4, pentagon.build_pentagon_two,
                     "mirror-twin variant (reconstructed)"),
        CatalogEntry("pentagon-3", 5, 4, pentagon.build_pentagon_three,
                     "slide construction"),
        CatalogEntry("greek-cross-3", "greek-cross", 3, simple.build_greek_cross,
                     "arms moved to form a 1 x 5 rectangle"),
    ]
    try:
        from . import heptagon
        entries.append(CatalogEntry("heptagon-5", 7, 5, heptagon.build_heptagon,
                                    "five pieces from the heptagon strip"))
    except ImportError:
        pass
    try:
        from . import octagon
        entries.append(CatalogEntry("octagon-4", 8, 4, octagon.build_octagon,
                                    "classic four-piece (reconstructed)"))
    except ImportError:
        pass
    try:
        from . import ninegon
        entries.append(CatalogEntry("ninegon-7", 9, 7, ninegon.build_ninegon,
                                    "seven pieces from the 9-gon strip"))
    except ImportError:
        pass
    try:
        from . import tengon
        entries.append(CatalogEntry("tengon-4", 10, 4, tengon.build_tengon,
                                    "modified Lindgren strip with shifted cut"))
    except ImportError:
        pass
    try:
        from . import elevengon
        entries.append(CatalogEntry("elevengon-9", 11, 9, elevengon.build_elevengon,
                                    "tessellation cut (reconstructed layout)"))
    except ImportError:
        pass
    try:
        from . import twelvegon
        entries.append(CatalogEntry("twelvegon-5", 12, 5, twelvegon.build_twelvegon,
                                    "chords, foot of perpendicular, equilateral "
                                    "triangle"))
    except ImportError:
        pass
    return {e.id: e for e in entries}


_ENTRIES = None
_CACHE = {}


def entries():
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _registry()
    return _ENTRIES


def entry_ids():
    return list(entries().keys())


def build(entry_id, cached=True):
    """Build a catalog entry; the result passes verify_dissection."""
    reg = entries()
    if entry_id not in reg:
        raise KeyError("unknown catalog entry %r" % (entry_id,))
    if cached and entry_id in _CACHE:
        return _CACHE[entry_id]
    D = reg[entry_id].builder()
    if cached:
        _CACHE[entry_id] = D
    return D


def expected_piece_counts():
    return {e.id: e.expected_pieces for e in entries().values()}


def table_rows():
    """(n, expected piece count) for the regular n-gon entries, ordered by n."""
    rows = {}
    for e in entries().values():
        if isinstance(e.n_or_shape, int):
            rows.setdefault(e.n_or_shape, e.expected_pieces)
    return sorted(rows.items())


def check_identities():
    from .identities import run_identity_checks
    return run_identity_checks()
