"""
Perfect matchings and the characteristic lattice polygon of a dimer model.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ..toric import ConeData, ConeError, validate_cone
from .model import DimerError, DimerModel

DEFAULT_MAX_EDGES = 64
DEFAULT_MAX_MATCHINGS = 1_000_000

Point = tuple[int, int]


@dataclass(frozen=True)
class PerfectMatching:
    edges: frozenset  # edge ids
    hclass: Point


def perfect_matchings(model: DimerModel, max_edges: int = DEFAULT_MAX_EDGES,
                      max_matchings: int = DEFAULT_MAX_MATCHINGS) -> list[PerfectMatching]:
    """All perfect matchings, in a fixed order.

    Backtracks over white vertices in model order, trying incident edges in
    edge order.  The first matching found is the reference for homology
    classes: ``hclass(M) = sum shift(M) - sum shift(M0)``.
    """
    if model.E > max_edges:
        raise DimerError("bound", f"{model.E} edges exceeds the matching bound {max_edges}")
    whites = model.whites()
    if len(whites) != len(model.blacks()):
        raise DimerError("matching", "no perfect matching: colour classes have different sizes")
    incident = {w: sorted(e for e in range(model.E) if model.edge_white[e] == w) for w in whites}
    # most constrained first keeps the search tree narrow
    whites.sort(key=lambda w: (len(incident[w]), w))

    found: list[tuple[int, ...]] = []
    used_black = set()
    chosen: list[int] = []

    def search(k: int) -> None:
        if k == len(whites):
            if len(found) >= max_matchings:
                raise DimerError("bound", f"more than {max_matchings} perfect matchings")
            found.append(tuple(sorted(chosen)))
            return
        for e in incident[whites[k]]:
            b = model.edge_black[e]
            if b in used_black:
                continue
            used_black.add(b)
            chosen.append(e)
            search(k + 1)
            chosen.pop()
            used_black.discard(b)

    search(0)
    if not found:
        raise DimerError("matching", "the model has no perfect matching")

    def total(m):
        return (sum(model.shift[e][0] for e in m), sum(model.shift[e][1] for e in m))

    x0, y0 = total(found[0])
    out = []
    for m in found:
        x, y = total(m)
        out.append(PerfectMatching(frozenset(model.edges[e].id for e in m), (x - x0, y - y0)))
    return out


# --- polygons ----------------------------------------------------------------

def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Point, ...]:
    """Hull vertices counterclockwise from the lexicographically least point,
    collinear points dropped (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def polygon_area(hull: Sequence[Point]) -> Fraction:
    """Euclidean area by the shoelace formula."""
    s = 0
    for (x1, y1), (x2, y2) in zip(hull, list(hull[1:]) + list(hull[:1])):
        s += x1 * y2 - x2 * y1
    return Fraction(abs(s), 2)


def edge_normals(hull: Sequence[Point]) -> Counter:
    """Primitive outward normals of the hull edges, counted with lattice length."""
    out = Counter()
    if len(hull) < 3:
        return out
    for (x1, y1), (x2, y2) in zip(hull, list(hull[1:]) + list(hull[:1])):
        dx, dy = x2 - x1, y2 - y1
        g = gcd(dx, dy)
        out[(dy // g, -dx // g)] += g
    return out


@dataclass(frozen=True)
class LatticePolygon:
    points: tuple[tuple[Point, int], ...]  # sorted (point, multiplicity)
    hull: tuple[Point, ...]

    @property
    def area(self) -> Fraction:
        return polygon_area(self.hull)

    def normals(self) -> Counter:
        return edge_normals(self.hull)

    def translated(self) -> LatticePolygon:
        """Same polygon moved so the first hull vertex is the origin."""
        ox, oy = self.hull[0]
        pts = tuple(sorted(((x - ox, y - oy), m) for (x, y), m in self.points))
        return LatticePolygon(pts, tuple((x - ox, y - oy) for x, y in self.hull))


def polygon_from_points(points) -> LatticePolygon:
    counts = Counter(points)
    return LatticePolygon(tuple(sorted(counts.items())), convex_hull(counts))


def toric_polygon(model: DimerModel, matchings: Sequence[PerfectMatching] | None = None,
                  **bounds) -> LatticePolygon:
    if matchings is None:
        matchings = perfect_matchings(model, **bounds)
    return polygon_from_points(m.hclass for m in matchings)


def polygon_to_cone(P: LatticePolygon) -> ConeData:
    """The cone over the polygon placed at height one: rays ``(p, 1)``."""
    if len(P.hull) < 3:
        raise ConeError("degenerate", f"polygon hull {list(P.hull)} is not two-dimensional")
    return validate_cone([(x, y, 1) for x, y in P.hull], 3)


def describe_polygon(P: LatticePolygon) -> str:
    """Short name of the hull shape, up to lattice equivalence where it is
    easy to recognise."""
    hull = P.hull
    area = P.area
    if len(hull) < 3:
        return "degenerate"
    if len(hull) == 3:
        return "unit triangle" if area == Fraction(1, 2) else f"triangle of area {area}"
    if len(hull) == 4:
        sides = [(hull[(i + 1) % 4][0] - hull[i][0], hull[(i + 1) % 4][1] - hull[i][1]) for i in range(4)]
        a, b = sides[0], sides[1]
        if sides[2] == (-a[0], -a[1]) and sides[3] == (-b[0], -b[1]):
            ka, kb = gcd(*a), gcd(*b)
            if ka == kb and abs(a[0] * b[1] - a[1] * b[0]) == ka * kb:
                return "unit square" if ka == 1 else f"{ka}×{ka} square"
        return f"quadrilateral of area {area}"
    return f"{len(hull)}-gon of area {area}"
