"""
Hexagonal dimer models.

The honeycomb tiling has a hexagonal face for each ``a`` in Z^2, adjacent to
``a +- e1``, ``a +- e2`` and ``a +- (e1 + e2)``.  Its vertices are the
triangles of the dual triangulation: the white vertex ``W_a`` sits in
``{a, a+e1, a+e1+e2}`` and the black vertex ``B_a`` in ``{a, a+e2, a+e1+e2}``.

Labelling faces by ``phi(a) = a1*w1 + a2*w2`` in ``G`` and dividing by
``ker phi`` gives a dimer model with one face per group element, whose
dual quiver is the McKay quiver of the weights ``(w1, w2, -w1-w2)``.
"""
from __future__ import annotations

from typing import Sequence

from ..abgroup import FinAbGroup, GroupElement, GroupError, elem_sum, generates
from ..intlat import IntMatrix, kernel_basis, row_lattice_basis
from .model import DimerModel, from_embedding, validate_dimer


def all_faces_hexagonal(model: DimerModel) -> bool:
    return all(len(face) == 6 for face in model.faces)


def _kernel_lattice(G: FinAbGroup, w1: GroupElement, w2: GroupElement) -> list[list[int]]:
    """Row HNF basis ``[[p, q], [0, r]]`` of ``ker(Z^2 -> G)``."""
    t = len(G.torsion)
    if t == 0:
        return [[1, 0], [0, 1]]
    rows = []
    for k, d in enumerate(G.torsion):
        rows.append([w1.torsion_part[k], w2.torsion_part[k]] + [d if j == k else 0 for j in range(t)])
    K = kernel_basis(IntMatrix(rows, cols=2 + t))
    vecs = [K.column(j)[:2] for j in range(K.cols)]
    return row_lattice_basis(vecs, 2).tolist()


def hexagonal_raw(G: FinAbGroup, weights: Sequence[GroupElement]) -> dict:
    """Raw dimer data for :func:`generate_hexagonal_dimer`."""
    if not G.is_finite:
        raise GroupError(f"hexagonal dimers need a finite group, got {G}")
    weights = tuple(weights)
    if len(weights) != 3:
        raise GroupError(f"expected 3 weights, got {len(weights)}")
    if elem_sum(G, weights) != G.zero():
        raise GroupError("weights do not sum to zero: the action is not in SL(3)")
    w1, w2 = weights[0], weights[1]
    if not generates(G, [w1, w2]):
        raise GroupError("the first two weights do not generate the group, so the "
                         "face labelling Z^2 -> G is not surjective")
    (p, q), (zero, r) = _kernel_lattice(G, w1, w2)
    assert zero == 0 and p * r == G.order
    k1, k2 = (p, q), (0, r)

    def reduce(a):
        # a = rep + m1*k1 + m2*k2 with rep in [0, p) x [0, r)
        m1 = a[0] // p
        x, y = a[0] - m1 * p, a[1] - m1 * q
        m2 = y // r
        return (x, y - m2 * r), (m1, m2)

    reps = [(x, y) for x in range(p) for y in range(r)]
    black_pos = {f"B{x}_{y}": (3 * x + 1, 3 * y + 2) for x, y in reps}
    white_pos = {f"W{x}_{y}": (3 * x + 2, 3 * y + 1) for x, y in reps}
    edges = []
    for x, y in reps:
        for tag, c in (("a", (x, y)), ("b", (x - 1, y)), ("c", (x, y + 1))):
            (cx, cy), shift = reduce(c)
            edges.append((f"e{x}_{y}{tag}", f"B{x}_{y}", f"W{cx}_{cy}", shift))
    return from_embedding(black_pos, white_pos, edges,
                          periods=((3 * k1[0], 3 * k1[1]), (3 * k2[0], 3 * k2[1])))


def generate_hexagonal_dimer(G: FinAbGroup, weights: Sequence[GroupElement]) -> DimerModel:
    """The honeycomb tiling divided by the kernel of ``e1 -> w1, e2 -> w2``.

    Needs ``w1 + w2 + w3 = 0`` and ``w1, w2`` generating ``G``.
    """
    return validate_dimer(hexagonal_raw(G, weights))
