"""
Quivers: the dual quiver with potential of a dimer model, McKay quivers of
abelian groups, and a small isomorphism checker for multi-digraphs.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..abgroup import (
    FinAbGroup, GroupElement, GroupError, elem_add, elem_sum, enumerate_elements,
    format_element, generates,
)
from .model import WHITE, DimerModel

MAX_ISO_VERTICES = 40


@dataclass(frozen=True)
class Arrow:
    id: Any
    tail: Any
    head: Any
    dual_edge: Any = None


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]

    def multiplicities(self) -> Counter:
        return Counter((a.tail, a.head) for a in self.arrows)


@dataclass(frozen=True)
class QuiverWithPotential(Quiver):
    """Dual quiver of a dimer model.  ``positive`` holds the arrow cycles
    around white vertices, ``negative`` those around black vertices."""

    positive: tuple[tuple[Any, ...], ...] = field(default=())
    negative: tuple[tuple[Any, ...], ...] = field(default=())


def dual_quiver(model: DimerModel) -> QuiverWithPotential:
    """One vertex per face and one arrow per edge, crossing it with the white
    endpoint on the arrow's left.

    Arrows circulate counterclockwise around white vertices and clockwise
    around black ones; the potential is the white cycles minus the black
    cycles.
    """
    arrows = []
    for e, edge in enumerate(model.edges):
        # the dart black -> white has the arrow's tail face on its left
        arrows.append(Arrow(e, model.dart_face[(e, 1)], model.dart_face[(e, -1)], edge.id))
    positive, negative = [], []
    for v in range(model.V):
        cyc = list(model.rot[v])
        if model.color[v] == WHITE:
            positive.append(tuple(cyc))
        else:
            negative.append(tuple(reversed(cyc)))
    return QuiverWithPotential(
        vertices=tuple(range(model.F)), arrows=tuple(arrows),
        positive=tuple(positive), negative=tuple(negative),
    )


def mckay_quiver(G: FinAbGroup, weights: Sequence[GroupElement], require_sl: bool = True) -> Quiver:
    """McKay quiver of the diagonal action with the given weights: a vertex
    per group element, an arrow ``g -> g + w`` for each weight ``w``."""
    weights = tuple(weights)
    if not G.is_finite:
        raise GroupError(f"McKay quiver needs a finite group, got {G}")
    if require_sl and elem_sum(G, weights) != G.zero():
        raise GroupError("weights do not sum to zero: the action is not in SL")
    if not generates(G, weights):
        raise GroupError("weights are not jointly faithful")
    elems = enumerate_elements(G)
    arrows = []
    for g in elems:
        for j, w in enumerate(weights):
            arrows.append(Arrow(len(arrows), g, elem_add(G, g, w), j))
    return Quiver(tuple(elems), tuple(arrows))


# --- isomorphism ------------------------------------------------------------

def _refine(quivers: Sequence[Quiver]) -> list[dict]:
    """Joint colour refinement over several quivers so colours are comparable."""
    data = []
    for Q in quivers:
        mult = Q.multiplicities()
        out = {v: [] for v in Q.vertices}
        inc = {v: [] for v in Q.vertices}
        for (t, h), m in mult.items():
            if t != h:
                out[t].append((h, m))
                inc[h].append((t, m))
        loops = {v: mult.get((v, v), 0) for v in Q.vertices}
        data.append((out, inc, loops))
    colours = [{v: (loops[v],) for v in Q.vertices} for Q, (_, _, loops) in zip(quivers, data)]
    n_classes = None
    while True:
        sigs = []
        for col, (out, inc, _) in zip(colours, data):
            sigs.append({
                v: (col[v],
                    tuple(sorted((m, col[h]) for h, m in out[v])),
                    tuple(sorted((m, col[t]) for t, m in inc[v])))
                for v in col
            })
        table = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig.values()}))}
        new = [{v: table[s] for v, s in sig.items()} for sig in sigs]
        if len(table) == n_classes:
            return new
        n_classes = len(table)
        colours = new


def find_quiver_isomorphism(Q1: Quiver, Q2: Quiver) -> dict | None:
    """A vertex bijection preserving all arrow multiplicities, or None."""
    if max(len(Q1.vertices), len(Q2.vertices)) > MAX_ISO_VERTICES:
        raise ValueError(f"quiver isomorphism is limited to {MAX_ISO_VERTICES} vertices")
    if len(Q1.vertices) != len(Q2.vertices) or len(Q1.arrows) != len(Q2.arrows):
        return None
    m1, m2 = Q1.multiplicities(), Q2.multiplicities()
    c1, c2 = _refine([Q1, Q2])
    if Counter(c1.values()) != Counter(c2.values()):
        return None
    if not Q1.vertices:
        return {}

    nbrs = {v: set() for v in Q1.vertices}
    for t, h in m1:
        nbrs[t].add(h)
        nbrs[h].add(t)
    # BFS order from the rarest colour keeps every new vertex adjacent to a mapped one
    freq = Counter(c1.values())
    order = []
    placed = set()
    for start in sorted(Q1.vertices, key=lambda v: (freq[c1[v]], Q1.vertices.index(v))):
        if start in placed:
            continue
        queue = deque([start])
        placed.add(start)
        while queue:
            u = queue.popleft()
            order.append(u)
            for x in sorted(nbrs[u], key=Q1.vertices.index):
                if x not in placed:
                    placed.add(x)
                    queue.append(x)
    by_colour = {}
    for v in Q2.vertices:
        by_colour.setdefault(c2[v], []).append(v)

    mapping: dict = {}
    used = set()

    def consistent(u, v) -> bool:
        if m1.get((u, u), 0) != m2.get((v, v), 0):
            return False
        for u2, v2 in mapping.items():
            if m1.get((u, u2), 0) != m2.get((v, v2), 0) or m1.get((u2, u), 0) != m2.get((v2, v), 0):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for v in by_colour[c1[u]]:
            if v in used or not consistent(u, v):
                continue
            mapping[u] = v
            used.add(v)
            if search(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    return dict(mapping) if search(0) else None


def quiver_isomorphic(Q1: Quiver, Q2: Quiver) -> bool:
    return find_quiver_isomorphism(Q1, Q2) is not None


# --- export -----------------------------------------------------------------

def _label(v) -> str:
    if isinstance(v, GroupElement):
        return format_element(v)
    return str(v)


def to_dot(Q: Quiver, name: str = "Q") -> str:
    """Graphviz text, one arrow per line in arrow order."""
    lines = [f"digraph {name} {{"]
    for v in Q.vertices:
        lines.append(f'  "{_label(v)}";')
    for a in Q.arrows:
        lines.append(f'  "{_label(a.tail)}" -> "{_label(a.head)}" [label="a{a.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
