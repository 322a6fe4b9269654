"""
Dimer models on the two-torus.

A model is a bipartite graph drawn on the torus, recorded combinatorially:

* ``vertices``: ``(id, color)`` with color ``"black"`` or ``"white"``;
* ``edges``: ``(id, black, white, shift)`` where ``shift`` in Z^2 is the deck
  translation from the black endpoint's fundamental-domain copy to the
  white endpoint's copy;
* ``rotations``: for each vertex, its incident edges in counterclockwise
  order.

Internally a *dart* is ``(edge_index, +1)`` for black -> white and
``(edge_index, -1)`` for white -> black.  Faces are traced by always turning
to the clockwise neighbour of the edge just arrived on, which keeps the
face on the left of every dart.
"""
from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from ..intlat import row_lattice_basis

BLACK, WHITE = "black", "white"

Dart = tuple  # (edge index, +1 | -1)


class DimerError(ValueError):
    """Invalid dimer data; ``kind`` names the violated condition."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class Edge:
    id: Any
    black: Any
    white: Any
    shift: tuple[int, int]


class DimerModel:
    """A validated dimer model.  Build one with :func:`validate_dimer`."""

    def __init__(self, vertices, edges, rotations, _token=None):
        if _token is not _VALIDATED:
            raise TypeError("use validate_dimer() to construct a DimerModel")
        self.vertices: tuple[tuple[Any, str], ...] = vertices
        self.edges: tuple[Edge, ...] = edges
        self.rotations: dict[Any, tuple[Any, ...]] = rotations
        self.vindex = {vid: i for i, (vid, _) in enumerate(vertices)}
        self.eindex = {e.id: i for i, e in enumerate(edges)}
        self.color = [c for _, c in vertices]
        self.edge_black = [self.vindex[e.black] for e in edges]
        self.edge_white = [self.vindex[e.white] for e in edges]
        self.shift = [e.shift for e in edges]
        self.rot = [[self.eindex[eid] for eid in rotations[vid]] for vid, _ in vertices]
        self._rot_pos = {}
        for v, lst in enumerate(self.rot):
            for k, e in enumerate(lst):
                self._rot_pos[v, e] = k
        self.faces: tuple[tuple[Dart, ...], ...] = ()
        self.dart_face: dict[Dart, int] = {}

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    def blacks(self) -> list[int]:
        return [i for i, c in enumerate(self.color) if c == BLACK]

    def whites(self) -> list[int]:
        return [i for i, c in enumerate(self.color) if c == WHITE]

    def head(self, dart: Dart) -> int:
        e, s = dart
        return self.edge_white[e] if s > 0 else self.edge_black[e]

    def tail(self, dart: Dart) -> int:
        e, s = dart
        return self.edge_black[e] if s > 0 else self.edge_white[e]

    def dart_shift(self, dart: Dart) -> tuple[int, int]:
        e, s = dart
        a, b = self.shift[e]
        return (a, b) if s > 0 else (-a, -b)

    def neighbour(self, v: int, e: int, step: int) -> int:
        """Edge ``step`` places counterclockwise from ``e`` around ``v``."""
        lst = self.rot[v]
        return lst[(self._rot_pos[v, e] + step) % len(lst)]

    def outgoing(self, v: int, e: int) -> Dart:
        return (e, 1 if self.color[v] == BLACK else -1)

    def face_next(self, dart: Dart) -> Dart:
        v = self.head(dart)
        return self.outgoing(v, self.neighbour(v, dart[0], -1))

    def face_sides(self, f: int) -> int:
        return len(self.faces[f])

    def to_raw(self) -> dict:
        return {
            "vertices": [{"id": vid, "color": c} for vid, c in self.vertices],
            "edges": [{"id": e.id, "black": e.black, "white": e.white, "shift": list(e.shift)}
                      for e in self.edges],
            "rotations": {str(vid): list(self.rotations[vid]) for vid, _ in self.vertices},
        }


_VALIDATED = object()


def _trace(model: DimerModel, step) -> list[tuple[Dart, ...]]:
    seen = set()
    cycles = []
    for e in range(model.E):
        for s in (1, -1):
            start = (e, s)
            if start in seen:
                continue
            cyc = []
            d = start
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = step(d)
            if d != start:
                raise DimerError("rotation", "dart successor map is not a permutation")
            cycles.append(tuple(cyc))
    return cycles


def _fields(obj, keys, where):
    if not isinstance(obj, Mapping):
        raise DimerError("schema", f"{where}: expected an object")
    for key in keys:
        if key not in obj:
            raise DimerError("schema", f"{where}: missing field {key!r}")
        if isinstance(obj[key], (list, dict)):
            raise DimerError("schema", f"{where}.{key}: ids must be strings or integers")
    return tuple(obj[key] for key in keys)


def validate_dimer(raw: Mapping) -> DimerModel:
    """Check raw dimer data and return a :class:`DimerModel` with traced faces.

    Error kinds: ``schema``, ``duplicate_id``, ``unknown_vertex``,
    ``non_bipartite``, ``degree``, ``disconnected``, ``rotation``, ``euler``,
    ``homology``.
    """
    try:
        raw_vertices = list(raw["vertices"])
        raw_edges = list(raw["edges"])
        raw_rot = dict(raw["rotations"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DimerError("schema", f"dimer data needs vertices, edges and rotations: {exc}") from None

    vertices = []
    colors = {}
    for k, v in enumerate(raw_vertices):
        vid, color = _fields(v, ("id", "color"), f"vertices[{k}]")
        if color not in (BLACK, WHITE):
            raise DimerError("schema", f"vertices[{k}]: color must be black or white, got {color!r}")
        if vid in colors or str(vid) in {str(x) for x in colors}:
            raise DimerError("duplicate_id", f"vertex id {vid!r} appears twice")
        colors[vid] = color
        vertices.append((vid, color))
    if not vertices:
        raise DimerError("schema", "no vertices")

    edges = []
    seen_edges = set()
    for k, e in enumerate(raw_edges):
        eid, b, w = _fields(e, ("id", "black", "white"), f"edges[{k}]")
        shift = e.get("shift", (0, 0))
        if not isinstance(shift, (list, tuple)) or len(shift) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in shift):
            raise DimerError("schema", f"edges[{k}]: shift must be two integers")
        if eid in seen_edges:
            raise DimerError("duplicate_id", f"edge id {eid!r} appears twice")
        seen_edges.add(eid)
        for end in (b, w):
            if end not in colors:
                raise DimerError("unknown_vertex", f"edge {eid!r} references unknown vertex {end!r}")
        if colors[b] != BLACK or colors[w] != WHITE:
            raise DimerError("non_bipartite",
                             f"edge {eid!r} must join a black vertex to a white vertex "
                             f"({b!r} is {colors[b]}, {w!r} is {colors[w]})")
        edges.append(Edge(eid, b, w, (int(shift[0]), int(shift[1]))))

    rot_by_str = {str(k): v for k, v in raw_rot.items()}
    incident = {vid: [] for vid, _ in vertices}
    for e in edges:
        incident[e.black].append(e.id)
        incident[e.white].append(e.id)
    rotations = {}
    for vid, _ in vertices:
        if str(vid) not in rot_by_str:
            raise DimerError("rotation", f"no rotation given for vertex {vid!r}")
        order = rot_by_str[str(vid)]
        if not isinstance(order, (list, tuple)):
            raise DimerError("schema", f"rotations.{vid}: expected a list of edge ids")
        order = list(order)
        if len(incident[vid]) < 2:
            raise DimerError("degree", f"vertex {vid!r} has degree {len(incident[vid])} < 2")
        if sorted(map(repr, order)) != sorted(map(repr, incident[vid])) or len(set(map(repr, order))) != len(order):
            raise DimerError("rotation",
                             f"rotation at {vid!r} lists {order} but the incident edges are {incident[vid]}")
        by_repr = {repr(x): x for x in incident[vid]}
        rotations[vid] = tuple(by_repr[repr(x)] for x in order)
    extra = set(rot_by_str) - {str(vid) for vid, _ in vertices}
    if extra:
        raise DimerError("rotation", f"rotations given for unknown vertices {sorted(extra)}")

    model = DimerModel(tuple(vertices), tuple(edges), rotations, _token=_VALIDATED)

    # connectivity
    adj = [[] for _ in range(model.V)]
    for e in range(model.E):
        adj[model.edge_black[e]].append(model.edge_white[e])
        adj[model.edge_white[e]].append(model.edge_black[e])
    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for x in adj[u]:
            if x not in reached:
                reached.add(x)
                queue.append(x)
    if len(reached) != model.V:
        missing = [model.vertices[i][0] for i in range(model.V) if i not in reached]
        raise DimerError("disconnected", f"graph is disconnected; unreachable vertices {missing}")

    faces = _trace(model, model.face_next)
    chi = model.V - model.E + len(faces)
    if chi != 0:
        raise DimerError("euler", f"V - E + F = {model.V} - {model.E} + {len(faces)} = {chi}, expected 0")
    for k, face in enumerate(faces):
        sx = sum(model.dart_shift(d)[0] for d in face)
        sy = sum(model.dart_shift(d)[1] for d in face)
        if (sx, sy) != (0, 0):
            edges_on = [model.edges[d[0]].id for d in face]
            raise DimerError("euler",
                             f"face {k} (edges {edges_on}) does not close up on the torus: "
                             f"boundary shift ({sx}, {sy}); the faces are not discs")
    _check_homology(model)
    model.faces = tuple(faces)
    model.dart_face = {d: k for k, face in enumerate(faces) for d in face}
    _check_orientation(model)
    return model


def _check_orientation(model: DimerModel) -> None:
    """Rotations must be counterclockwise in the frame the shifts live in.

    Each edge is a transverse crossing of the two zigzag strands through it,
    counted +1 for the strand running black to white.  On a correctly
    oriented model these counts add up to ``det(h_a, h_b)`` for every pair of
    zigzags; a mirrored rotation system gives ``-det`` instead.
    """
    from .zigzag import zigzag_paths

    zs = zigzag_paths(model)
    where = {d: k for k, z in enumerate(zs) for d in z.darts}
    meet = {}
    for e in model.edges:
        a, b = where[e.id, 1], where[e.id, -1]
        if a != b:
            meet[a, b] = meet.get((a, b), 0) + 1
            meet[b, a] = meet.get((b, a), 0) - 1
    signs = set()
    for (a, b), n in meet.items():
        (x1, y1), (x2, y2) = zs[a].hclass, zs[b].hclass
        det = x1 * y2 - y1 * x2
        if det == n == 0:
            continue
        signs.add(1 if det == n else -1 if det == -n else 0)
    if signs == {-1}:
        raise DimerError("orientation", "rotations run clockwise relative to the edge shifts; "
                         "list each vertex's edges counterclockwise")
    if len(signs) > 1 or 0 in signs:
        raise DimerError("orientation", "zigzag intersection numbers do not match their classes; "
                         "rotations and shifts describe no torus embedding")


def _check_homology(model: DimerModel) -> None:
    """Cycle shifts must generate Z^2, i.e. the graph wraps both directions."""
    pos = {0: (0, 0)}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in model.rot[u]:
            d = model.outgoing(u, e)
            v = model.head(d)
            if v not in pos:
                dx, dy = model.dart_shift(d)
                pos[v] = (pos[u][0] + dx, pos[u][1] + dy)
                queue.append(v)
    cycles = []
    for e in range(model.E):
        b, w = model.edge_black[e], model.edge_white[e]
        sx, sy = model.shift[e]
        c = (pos[b][0] + sx - pos[w][0], pos[b][1] + sy - pos[w][1])
        if any(c):
            cycles.append(c)
    basis = row_lattice_basis(cycles, 2)
    if basis.rows != 2 or abs(basis.det()) != 1:
        raise DimerError("homology",
                         "edge shifts do not generate the torus homology Z^2 "
                         f"(cycle lattice basis {basis.tolist()})")


# --- building models from a drawing -----------------------------------------

def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def from_embedding(black_pos: Mapping, white_pos: Mapping, edges: Sequence,
                   periods=((1, 0), (0, 1))) -> dict:
    """Raw dimer data from a straight-line drawing in a fundamental domain.

    ``edges`` holds ``(id, black, white, shift)``; the white end of an edge is
    drawn at ``white_pos[w] + shift[0]*periods[0] + shift[1]*periods[1]``.
    Rotations are read off by exact angular sorting, so coordinates may be
    ints or Fractions.
    """
    p1, p2 = periods
    if p1[0] * p2[1] - p1[1] * p2[0] <= 0:
        raise ValueError("periods must be positively oriented")
    around = {v: [] for v in list(black_pos) + list(white_pos)}
    for eid, b, w, (s1, s2) in edges:
        bx, by = black_pos[b]
        wx, wy = white_pos[w]
        dx = Fraction(wx) + s1 * p1[0] + s2 * p2[0] - bx
        dy = Fraction(wy) + s1 * p1[1] + s2 * p2[1] - by
        around[b].append(((dx, dy), eid))
        around[w].append(((-dx, -dy), eid))
    rotations = {}
    for v, lst in around.items():
        lst.sort(key=functools.cmp_to_key(lambda a, c: _angle_cmp(a[0], c[0])))
        for (a, _), (c, _) in zip(lst, lst[1:]):
            if _angle_cmp(a, c) == 0:
                raise ValueError(f"two edges leave {v!r} in the same direction")
        rotations[str(v)] = [eid for _, eid in lst]
    return {
        "vertices": [{"id": v, "color": BLACK} for v in black_pos]
                    + [{"id": v, "color": WHITE} for v in white_pos],
        "edges": [{"id": eid, "black": b, "white": w, "shift": list(s)} for eid, b, w, s in edges],
        "rotations": rotations,
    }
