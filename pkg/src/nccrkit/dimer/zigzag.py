"""
Zigzag paths and zigzag consistency.

A zigzag turns maximally right at white vertices and maximally left at
black ones: arriving at a white vertex it leaves along the next edge
clockwise, at a black vertex along the next edge counterclockwise.  Every
dart lies on exactly one zigzag, so every edge is met by exactly two
zigzag darts (one in each direction).

Consistency is decided exactly on the universal cover instead of on a
finite window.  Walking a zigzag once from translate 0 records, for each
dart, the translate ``p`` of the black endpoint of its edge; the lifts of
the zigzag are indexed by translates modulo ``Z h``, and a point on a lift
by an integer parameter (dart index plus period count times length).  For
an edge lying on ``z_a`` at ``p`` and on ``z_b`` at ``q``, the lifts
``z_a + s`` and ``z_b`` share it exactly when ``s = q - p`` modulo
``Z h_a + Z h_b``.  Two lifts cross "in the same direction twice" when two
shared edges come in the same order along both; antiparallel lifts may
weave through each other, parallel ones may not meet at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..intlat import row_lattice_basis, xgcd
from .model import WHITE, DimerModel

CONSISTENCY_METHOD = "zigzag criterion, exact crossing order on the universal cover"


@dataclass(frozen=True)
class ZigzagPath:
    darts: tuple[tuple[Any, int], ...]  # (edge id, +1 black->white | -1 white->black)
    hclass: tuple[int, int]
    lifts: tuple[tuple[int, int], ...] = ()  # black-endpoint translate per dart

    def __len__(self) -> int:
        return len(self.darts)


def zigzag_next(model: DimerModel, dart):
    v = model.head(dart)
    step = -1 if model.color[v] == WHITE else 1
    return model.outgoing(v, model.neighbour(v, dart[0], step))


def _zigzag_cycles(model: DimerModel):
    seen = set()
    cycles = []
    for e in range(model.E):
        for s in (1, -1):
            if (e, s) in seen:
                continue
            cyc = []
            d = (e, s)
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = zigzag_next(model, d)
            cycles.append(cyc)
    return cycles


def zigzag_paths(model: DimerModel) -> list[ZigzagPath]:
    out = []
    for cyc in _zigzag_cycles(model):
        t = (0, 0)
        lifts = []
        for e, s in cyc:
            sx, sy = model.shift[e]
            if s > 0:
                lifts.append(t)
                t = (t[0] + sx, t[1] + sy)
            else:
                t = (t[0] - sx, t[1] - sy)
                lifts.append(t)
        out.append(ZigzagPath(
            darts=tuple((model.edges[e].id, s) for e, s in cyc),
            hclass=t,
            lifts=tuple(lifts),
        ))
    return out


def _in_span(vec, h) -> bool:
    """Whether ``vec`` lies in ``Z h`` (``h`` nonzero)."""
    if vec[0] * h[1] - vec[1] * h[0] != 0:
        return False
    k = vec[0] // h[0] if h[0] else vec[1] // h[1]
    return (k * h[0], k * h[1]) == tuple(vec)


def _same_order(c1, c2) -> bool:
    return (c1[0] - c2[0]) * (c1[1] - c2[1]) > 0


def _same_direction_pair(crossings):
    """Two crossings met in the same order along both lifts, if any."""
    for x in range(len(crossings)):
        for y in range(x):
            if _same_order(crossings[x][1], crossings[y][1]):
                return crossings[y][0], crossings[x][0]
    return None


def _check_transverse(za, zb, shared):
    """Lifts with independent classes: each congruence class of offsets mod
    ``Z h_a + Z h_b`` is one pair of lifts, met once per listed edge."""
    (a1, a2), (b1, b2) = za.hclass, zb.hclass
    det = a1 * b2 - a2 * b1
    basis = row_lattice_basis([za.hclass, zb.hclass], 2).tolist()
    groups = {}
    for eid, i, j, d in shared:
        groups.setdefault(_reduce_mod(d, basis), []).append((eid, i, j, d))
    for members in groups.values():
        s = members[0][3]
        crossings = []
        for eid, i, j, d in members:
            # k h_a - l h_b = d - s, solved by Cramer's rule
            rx, ry = d[0] - s[0], d[1] - s[1]
            k = (rx * b2 - ry * b1) // det
            l = (rx * a2 - ry * a1) // det
            crossings.append((eid, (i + k * len(za), j + l * len(zb))))
        bad = _same_direction_pair(crossings)
        if bad:
            return bad
    return None


def _check_parallel(za, zb, shared):
    """Lifts with dependent classes share a period; if they point the same
    way any crossing repeats in the same order, otherwise compare each
    crossing against the translates of the others."""
    g = row_lattice_basis([za.hclass, zb.hclass], 2).row(0)
    alpha = next(x // y for x, y in zip(za.hclass, g) if y)
    beta = next(x // y for x, y in zip(zb.hclass, g) if y)
    if alpha * beta > 0:
        return (shared[0][0], shared[0][0])
    _, x, y = xgcd(alpha, beta)  # x*alpha + y*beta == 1
    # translating both lifts by the common period moves the parameters by
    # (beta * |z_a|, alpha * |z_b|), which have opposite signs
    step_a, step_b = beta * len(za), alpha * len(zb)
    groups = {}
    for eid, i, j, d in shared:
        groups.setdefault(_reduce_line(d, g), []).append((eid, i, j, d))
    for members in groups.values():
        s = members[0][3]
        base = []
        for eid, i, j, d in members:
            m = next((p - q) // c for p, q, c in zip(d, s, g) if c)
            k, l = x * m, -y * m  # k*alpha - l*beta == m
            base.append((eid, (i + k * len(za), j + l * len(zb))))
        for e1, c1 in base:
            for e2, c2 in base:
                da, db = c1[0] - c2[0], c1[1] - c2[1]
                # da + t*step_a and db + t*step_b share a sign only between
                # their roots, both within reach
                reach = abs(da) + abs(db) + 1
                for t in range(-reach, reach + 1):
                    if (da + t * step_a) * (db + t * step_b) > 0:
                        return (e2, e1)
    return None


def _reduce_line(vec, g) -> tuple[int, int]:
    """Canonical representative of ``vec`` modulo ``Z g``, ``g`` in HNF."""
    if g[0]:
        k = vec[0] // g[0]
    else:
        k = vec[1] // g[1]
    return vec[0] - k * g[0], vec[1] - k * g[1]


def _reduce_mod(vec, basis) -> tuple[int, int]:
    """Canonical representative of ``vec`` modulo a full-rank 2D lattice in
    row HNF ``[[a, b], [0, c]]``."""
    (a, b), (_, c) = basis
    x, y = vec
    k = x // a
    x, y = x - k * a, y - k * b
    return x, y % c


def is_consistent(model: DimerModel, zigzags: list[ZigzagPath] | None = None):
    """Return ``(True, None)`` or ``(False, certificate)``.

    Fails when a zigzag has class (0, 0), when a lift of a zigzag meets
    itself or another lift of the same zigzag, or when two lifts cross
    twice in the same direction (both passing the two crossings in the same
    order).  The certificate is a dict with ``condition`` (``trivial_class``,
    ``self_intersection`` or ``multiple_crossing``), the offending zigzag
    indices and the edge ids involved.
    """
    if zigzags is None:
        zigzags = zigzag_paths(model)
    for k, z in enumerate(zigzags):
        if z.hclass == (0, 0):
            return False, {
                "condition": "trivial_class",
                "message": f"zigzag {k} has homology class (0, 0)",
                "zigzags": [k],
                "edges": sorted({e for e, _ in z.darts}, key=repr),
            }

    where = {}  # (edge id, sign) -> (zigzag, index along it)
    for k, z in enumerate(zigzags):
        for i, dart in enumerate(z.darts):
            where[dart] = (k, i)

    pairs: dict[tuple[int, int], list] = {}
    for eid in sorted({e for e, _ in where}, key=repr):
        a, i = where[eid, 1]
        b, j = where[eid, -1]
        p, q = zigzags[a].lifts[i], zigzags[b].lifts[j]
        if a == b:
            same_lift = _in_span((q[0] - p[0], q[1] - p[1]), zigzags[a].hclass)
            return False, {
                "condition": "self_intersection" if same_lift else "multiple_crossing",
                "message": (f"zigzag {a} meets itself at edge {eid!r}" if same_lift else
                            f"two parallel lifts of zigzag {a} cross at edge {eid!r} and "
                            f"again at every translate along their common period"),
                "zigzags": [a],
                "edges": [eid],
            }
        if a > b:
            a, b, i, j, p, q = b, a, j, i, q, p
        pairs.setdefault((a, b), []).append((eid, i, j, (q[0] - p[0], q[1] - p[1])))

    for (a, b), shared in sorted(pairs.items()):
        za, zb = zigzags[a], zigzags[b]
        ha, hb = za.hclass, zb.hclass
        if ha[0] * hb[1] - ha[1] * hb[0]:
            bad = _check_transverse(za, zb, shared)
        else:
            bad = _check_parallel(za, zb, shared)
        if bad:
            return False, {
                "condition": "multiple_crossing",
                "message": (f"lifts of zigzags {a} and {b} cross twice in the same direction "
                            f"(at edges {bad[0]!r} and {bad[1]!r})"),
                "zigzags": [a, b],
                "edges": list(bad),
            }
    return True, None
