"""
Affine toric data: cones, class groups, and abelian quotient presentations.

A cone is given by the primitive generators ``v_1..v_n`` of its rays in
``N = Z^d``.  The class group of the toric singularity is the cokernel of
the pairing map ``M -> Z^n, m -> (<m, v_i>)_i`` and the class of the i-th
torus-invariant divisor is the image of ``e_i``.

For a simplicial cone the singularity is ``k[[x_1..x_d]]^G`` with
``G = N / (Z v_1 + ... + Z v_d)``, the element ``n + L`` acting on ``x_i``
through the character ``<m_i, n> mod 1``, where ``m_i`` is the rational
dual basis.  :func:`quotient_presentation` and :func:`group_to_cone`
translate between the two descriptions.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .abgroup import (
    FinAbGroup, GroupElement, GroupError, apply_hom, automorphisms, elem_sum,
    generates,
)
from .intlat import (
    IntMatrix, cokernel, cokernel_coordinates, kernel_basis, rational_inverse,
    row_lattice_basis, solve_rational,
)

log = logging.getLogger(__name__)


class ConeError(ValueError):
    """Invalid cone data.  ``kind`` names the violated condition and
    ``index`` the offending ray, when there is one."""

    def __init__(self, kind: str, message: str, index: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.index = index


class InternalFault(RuntimeError):
    """Two independent computations that must agree did not."""


@dataclass(frozen=True)
class ConeData:
    dim: int
    rays: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """d x n matrix whose columns are the rays."""
        return IntMatrix.from_columns(self.rays, rows=self.dim)

    def pairing_matrix(self) -> IntMatrix:
        """n x d matrix of ``m -> (<m, v_i>)_i``."""
        return IntMatrix(self.rays, cols=self.dim)


@dataclass(frozen=True)
class ClassGroup:
    group: FinAbGroup
    ray_classes: tuple[GroupElement, ...]


@dataclass(frozen=True)
class QuotientPresentation:
    group: FinAbGroup
    weights: tuple[GroupElement, ...]


# --- validation ------------------------------------------------------------

def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def facet_normals(rays: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Primitive inward normals of the facets of a full-dimensional cone.

    Every facet hyperplane is spanned by ``dim - 1`` independent rays lying
    on it, so trying all such subsets finds them all.  Exact integer
    arithmetic throughout.
    """
    normals = set()
    if dim == 1:
        candidates = [((1,),), ((-1,),)]
        for (nrm,) in candidates:
            if all(_dot(nrm, v) >= 0 for v in rays):
                normals.add(nrm)
        return sorted(normals)
    for subset in itertools.combinations(range(len(rays)), dim - 1):
        K = kernel_basis(IntMatrix([rays[i] for i in subset], cols=dim))
        if K.cols != 1:
            continue
        nrm = K.column(0)
        vals = [_dot(nrm, v) for v in rays]
        if all(x >= 0 for x in vals):
            normals.add(nrm)
        elif all(x <= 0 for x in vals):
            normals.add(tuple(-x for x in nrm))
    return sorted(normals)


def validate_cone(rays, dim: int) -> ConeData:
    """Check ray data and return a :class:`ConeData`.

    Raises :class:`ConeError` with kind one of ``shape``, ``zero``,
    ``non_primitive``, ``duplicate``, ``not_full_dimensional``,
    ``not_strongly_convex``, ``not_extreme``.
    """
    if dim < 1:
        raise ConeError("shape", f"dimension must be positive, got {dim}")
    vecs = []
    for i, v in enumerate(rays):
        v = tuple(v)
        if len(v) != dim:
            raise ConeError("shape", f"ray {i} has length {len(v)}, expected {dim}", i)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise ConeError("shape", f"ray {i} has non-integer entries", i)
        if not any(v):
            raise ConeError("zero", f"ray {i} is the zero vector", i)
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            raise ConeError("non_primitive", f"ray {i} = {v} is not primitive (gcd {g})", i)
        vecs.append(v)
    seen = {}
    for i, v in enumerate(vecs):
        if v in seen:
            raise ConeError("duplicate", f"ray {i} duplicates ray {seen[v]}", i)
        seen[v] = i
    if not vecs or IntMatrix(vecs, cols=dim).rank() < dim:
        raise ConeError("not_full_dimensional", f"rays do not span R^{dim}")
    normals = facet_normals(vecs, dim)
    if not normals or IntMatrix(normals, cols=dim).rank() < dim:
        raise ConeError("not_strongly_convex", "the cone contains a line")
    for i, v in enumerate(vecs):
        tight = [nrm for nrm in normals if _dot(nrm, v) == 0]
        if not tight or IntMatrix(tight, cols=dim).rank() < dim - 1:
            raise ConeError("not_extreme", f"ray {i} = {v} is not an extreme ray", i)
    return ConeData(dim, tuple(vecs))


def extreme_rays(rays: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Primitive extreme rays of the (pointed, full-dimensional) cone
    generated by ``rays``, deduplicated, in input order."""
    from .intlat import primitive

    vecs = []
    for v in rays:
        p = primitive(v)
        if p not in vecs:
            vecs.append(p)
    normals = facet_normals(vecs, dim)
    out = []
    for v in vecs:
        tight = [nrm for nrm in normals if _dot(nrm, v) == 0]
        if tight and IntMatrix(tight, cols=dim).rank() == dim - 1:
            out.append(v)
    return out


# --- class group -----------------------------------------------------------

def class_group(C: ConeData) -> ClassGroup:
    group, images = cokernel(C.pairing_matrix())
    if group.free_rank != C.n - C.dim:
        raise InternalFault(f"class group free rank {group.free_rank} != n - d = {C.n - C.dim}")
    return ClassGroup(group, tuple(images))


def is_simplicial(C: ConeData) -> bool:
    return C.n == C.dim


def cl_is_finite(C: ConeData) -> bool:
    finite = class_group(C).group.free_rank == 0
    if finite != is_simplicial(C):
        raise InternalFault(
            f"class group finiteness ({finite}) disagrees with simpliciality ({is_simplicial(C)})")
    return finite


def is_gorenstein(C: ConeData) -> tuple[int, ...] | None:
    """The integral ``m`` with ``<m, v_i> = 1`` for all rays, if there is one."""
    sol = solve_rational(C.pairing_matrix(), [1] * C.n)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


# --- quotient presentations ------------------------------------------------

def quotient_presentation(C: ConeData) -> QuotientPresentation:
    if not is_simplicial(C):
        raise ConeError("not_simplicial",
                        f"quotient presentation needs a simplicial cone; {C.n} rays in dimension {C.dim}")
    B = C.ray_matrix()
    group, _, torsion_lifts, _ = cokernel_coordinates(B)
    dual = rational_inverse(B)  # rows m_i with <m_i, v_j> = delta_ij
    weights = []
    for m in dual:
        coords = []
        for lift, d in zip(torsion_lifts, group.torsion):
            val = sum((x * y for x, y in zip(m, lift)), Fraction(0)) * d
            if val.denominator != 1:
                raise InternalFault("character value not in (1/d)Z")
            coords.append(int(val) % d)
        weights.append(GroupElement((), tuple(coords)))
    det = abs(B.det())
    if group.order != det:
        raise InternalFault(f"|G| = {group.order} but |det| = {det}")
    return QuotientPresentation(group, tuple(weights))


def weights_faithful(G: FinAbGroup, weights: Sequence[GroupElement]) -> bool:
    """Only the identity pairs trivially with every weight.

    Under the self-duality of a finite group this is the same as the weights
    generating the group.
    """
    return generates(G, weights)


def group_to_cone(G: FinAbGroup, weights: Sequence[GroupElement]) -> ConeData:
    """Simplicial cone whose singularity is ``k[[x_1..x_d]]^G`` for the given
    diagonal action.

    The lattice is ``N = Z^d + sum_k Z u_k`` with ``u_k`` the vector of
    character values of the k-th generator; rays are ``e_1..e_d`` written in
    an HNF basis of ``N`` and made primitive.
    """
    weights = tuple(weights)
    d = len(weights)
    if d < 2:
        raise GroupError(f"need at least 2 coordinates, got {d}")
    if not G.is_finite:
        raise GroupError(f"group must be finite, got {G}")
    if not weights_faithful(G, weights):
        raise GroupError("weights are not jointly faithful: some nonidentity element acts trivially")
    D = G.exponent
    gens = [[D if i == j else 0 for j in range(d)] for i in range(d)]
    for k, dk in enumerate(G.torsion):
        gens.append([w.torsion_part[k] * (D // dk) for w in weights])
    basis = row_lattice_basis(gens, d)  # rows span D*N
    inv = rational_inverse(basis)
    rays = []
    warnings = []
    for i in range(d):
        coords = [D * x for x in inv[i]]
        if any(x.denominator != 1 for x in coords):
            raise InternalFault("e_i is not in the overlattice")
        v = [int(x) for x in coords]
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            warnings.append(f"coordinate {i + 1} is fixed by a pseudo-reflection subgroup of order {g}")
            v = [x // g for x in v]
        rays.append(tuple(v))
    for w in warnings:
        log.warning("group_to_cone: %s", w)
    return validate_cone(rays, d)


def pseudo_reflection_warnings(G: FinAbGroup, weights: Sequence[GroupElement]) -> list[str]:
    """Nonidentity elements that act trivially on all but one coordinate."""
    from .abgroup import enumerate_elements, pairing

    out = []
    if G.order > 10**5:
        return ["pseudo-reflection check skipped: group too large"]
    for g in enumerate_elements(G):
        if g == G.zero():
            continue
        moved = [i for i, w in enumerate(weights) if pairing(G, g, w) != 0]
        if len(moved) == 1:
            out.append(f"element {g.torsion_part} is a pseudo-reflection on coordinate {moved[0] + 1}")
    return out


# --- equivalences used by round-trip checks ---------------------------------

def presentations_equivalent(P: QuotientPresentation, Q: QuotientPresentation,
                             bound: int = 200) -> bool | None:
    """Same group and the same weight multiset up to an automorphism of the
    character group.  None ("unverified") when the group exceeds ``bound``."""
    if P.group != Q.group or len(P.weights) != len(Q.weights):
        return False
    G = P.group
    autos = automorphisms(G, bound)
    if autos is None:
        return None
    target = sorted(Q.weights)
    for images in autos:
        if sorted(apply_hom(G, images, w) for w in P.weights) == target:
            return True
    return False


def cones_equivalent(C1: ConeData, C2: ConeData) -> bool:
    """Whether some ``U`` in GL(d, Z) maps the ray set of C1 onto that of C2.

    Fix ``d`` independent rays of C1; any equivalence sends them to some
    ordered ``d`` rays of C2, which pins down ``U``.  Exhaustive, exact.
    """
    if C1.dim != C2.dim or C1.n != C2.n:
        return False
    d = C1.dim
    basis_idx = None
    for subset in itertools.combinations(range(C1.n), d):
        if IntMatrix.from_columns([C1.rays[i] for i in subset], rows=d).det() != 0:
            basis_idx = subset
            break
    if basis_idx is None:
        return False
    B1 = IntMatrix.from_columns([C1.rays[i] for i in basis_idx], rows=d)
    B1inv = rational_inverse(B1)
    target = set(C2.rays)
    for images in itertools.permutations(range(C2.n), d):
        B2 = [C2.rays[j] for j in images]
        # U = B2 @ B1^{-1}
        U = [[sum((B2[k][r] * B1inv[k][c] for k in range(d)), Fraction(0)) for c in range(d)]
             for r in range(d)]
        if any(x.denominator != 1 for row in U for x in row):
            continue
        Ui = IntMatrix([[int(x) for x in row] for row in U])
        if abs(Ui.det()) != 1:
            continue
        if {Ui.apply(v) for v in C1.rays} == target:
            return True
    return False


def weight_sum_is_zero(G: FinAbGroup, weights: Sequence[GroupElement]) -> bool:
    return elem_sum(G, weights) == G.zero()

