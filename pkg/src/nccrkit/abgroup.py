"""
Finitely generated abelian groups in invariant-factor form.

A group is ``Z^r + Z/d1 + ... + Z/dk`` with ``1 < d1 | d2 | ... | dk``.
Elements are plain data (free coordinates, reduced torsion residues) and
carry no reference to their group, so every operation takes the group
explicitly and checks the element's shape against it.

For a finite group the character group is identified with the group itself
through the pairing ``<g, h> = sum_k g_k h_k / d_k  (mod 1)``.  Weights of
diagonal actions are therefore written as ordinary group elements.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

DEFAULT_ENUMERATION_BOUND = 10**6


class GroupError(ValueError):
    """Raised for shape mismatches and requests a group cannot satisfy."""


class EmptyClassSetError(GroupError):
    """A module is a nonzero direct sum, so its class set cannot be empty."""


@dataclass(frozen=True)
class FinAbGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise GroupError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise GroupError(f"invariant factor {d} < 2; use iso_invariants to canonicalize")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise GroupError(f"invariant factors {self.torsion} do not form a divisibility chain")

    @classmethod
    def cyclic(cls, n: int) -> FinAbGroup:
        return iso_invariants(0, (n,))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.torsion) if self.is_finite else None

    @property
    def exponent(self) -> int:
        return self.torsion[-1] if self.torsion else 1

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.free_rank, (0,) * len(self.torsion))

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> GroupElement:
        if len(free) != self.free_rank or len(torsion) != len(self.torsion):
            raise GroupError(f"element shape does not match {self}")
        return GroupElement(tuple(free), tuple(t % d for t, d in zip(torsion, self.torsion)))

    def generators(self) -> list[GroupElement]:
        gens = []
        for i in range(self.free_rank):
            gens.append(GroupElement(tuple(int(i == j) for j in range(self.free_rank)),
                                     (0,) * len(self.torsion)))
        for k in range(len(self.torsion)):
            gens.append(GroupElement((0,) * self.free_rank,
                                     tuple(int(k == j) for j in range(len(self.torsion)))))
        return gens

    def __str__(self) -> str:
        return format_group(self)


@dataclass(frozen=True, order=True)
class GroupElement:
    free_part: tuple[int, ...] = ()
    torsion_part: tuple[int, ...] = ()

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free_part + self.torsion_part


def _check(G: FinAbGroup, *elems: GroupElement) -> None:
    for a in elems:
        if len(a.free_part) != G.free_rank or len(a.torsion_part) != len(G.torsion):
            raise GroupError(f"element {a} does not belong to {G}")
        for r, d in zip(a.torsion_part, G.torsion):
            if not 0 <= r < d:
                raise GroupError(f"element {a} has unreduced torsion residues for {G}")


def elem_add(G: FinAbGroup, a: GroupElement, b: GroupElement) -> GroupElement:
    _check(G, a, b)
    return GroupElement(
        tuple(x + y for x, y in zip(a.free_part, b.free_part)),
        tuple((x + y) % d for x, y, d in zip(a.torsion_part, b.torsion_part, G.torsion)),
    )


def elem_neg(G: FinAbGroup, a: GroupElement) -> GroupElement:
    _check(G, a)
    return GroupElement(tuple(-x for x in a.free_part),
                        tuple(-x % d for x, d in zip(a.torsion_part, G.torsion)))


def elem_sub(G: FinAbGroup, a: GroupElement, b: GroupElement) -> GroupElement:
    return elem_add(G, a, elem_neg(G, b))


def elem_scale(G: FinAbGroup, k: int, a: GroupElement) -> GroupElement:
    _check(G, a)
    return GroupElement(tuple(k * x for x in a.free_part),
                        tuple(k * x % d for x, d in zip(a.torsion_part, G.torsion)))


def elem_sum(G: FinAbGroup, elems: Iterable[GroupElement]) -> GroupElement:
    total = G.zero()
    for a in elems:
        total = elem_add(G, total, a)
    return total


def element_order(G: FinAbGroup, a: GroupElement) -> int | None:
    """Order of ``a``; None when it has infinite order."""
    _check(G, a)
    if any(a.free_part):
        return None
    n = 1
    for r, d in zip(a.torsion_part, G.torsion):
        n = n * (d // _gcd(r, d)) // _gcd(n, d // _gcd(r, d))
    return n


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def pairing(G: FinAbGroup, g: GroupElement, chi: GroupElement) -> Fraction:
    """Value of the character ``chi`` on ``g`` as a fraction in [0, 1)."""
    if not G.is_finite:
        raise GroupError("characters are only identified with elements for finite groups")
    _check(G, g, chi)
    return sum((Fraction(a * b, d) for a, b, d in zip(g.torsion_part, chi.torsion_part, G.torsion)),
               Fraction(0)) % 1


def enumerate_elements(G: FinAbGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[GroupElement]:
    """All elements of a finite group in lexicographic order."""
    if not G.is_finite:
        raise GroupError(f"cannot enumerate the infinite group {G}")
    if G.order > bound:
        raise GroupError(f"group order {G.order} exceeds the enumeration bound {bound}")
    return [GroupElement((), t) for t in itertools.product(*(range(d) for d in G.torsion))]


def subgroup_generated(G: FinAbGroup, S: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """Closure of ``S`` under addition and negation (finite groups only)."""
    if not G.is_finite:
        raise GroupError(f"subgroup closure needs a finite group, got {G}")
    gens = list(S)
    _check(G, *gens)
    seen = {G.zero()}
    frontier = [G.zero()]
    # in a finite group closure under + alone already gives negatives
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = elem_add(G, a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def is_subgroup(G: FinAbGroup, M: Iterable[GroupElement]) -> bool:
    """True iff ``M`` contains zero and is closed under subtraction.

    ``M`` must be a finite, nonempty set; the group itself may be infinite.
    """
    M = set(M)
    if not M:
        raise EmptyClassSetError("empty class set: a module giving an NCCR is nonzero")
    _check(G, *M)
    if G.zero() not in M:
        return False
    for a in M:
        for b in M:
            if elem_sub(G, a, b) not in M:
                return False
    return True


def generates(G: FinAbGroup, S: Iterable[GroupElement]) -> bool:
    """Whether ``S`` generates ``G``, decided by a lattice index computation."""
    from .intlat import IntMatrix, snf

    S = list(S)
    _check(G, *S)
    n = G.free_rank + len(G.torsion)
    if n == 0:
        return True
    cols = [a.coords for a in S]
    for k, d in enumerate(G.torsion):
        cols.append(tuple(d if i == G.free_rank + k else 0 for i in range(n)))
    if not cols:
        return False
    dec = snf(IntMatrix.from_columns(cols, rows=n))
    return dec.rank == n and all(f == 1 for f in dec.invariant_factors)


def iso_invariants(free_rank: int, torsion: Sequence[int]) -> FinAbGroup:
    """Canonical invariant-factor form of ``Z^free_rank + sum Z/t``."""
    from .intlat import IntMatrix, snf

    torsion = [int(t) for t in torsion]
    if any(t < 1 for t in torsion):
        raise GroupError(f"torsion orders must be >= 1, got {torsion}")
    if not torsion:
        return FinAbGroup(free_rank, ())
    k = len(torsion)
    diag = IntMatrix([[torsion[i] if i == j else 0 for j in range(k)] for i in range(k)])
    factors = snf(diag).invariant_factors
    return FinAbGroup(free_rank, tuple(f for f in factors if f > 1))


def automorphisms(G: FinAbGroup, bound: int = 200):
    """Every automorphism of a finite group, each as the tuple of images of
    the standard torsion generators.  Returns None when ``|G|`` exceeds
    ``bound`` (the search is brute force).
    """
    if not G.is_finite:
        raise GroupError("automorphisms are enumerated for finite groups only")
    if G.order > bound:
        return None
    elems = enumerate_elements(G)
    candidates = [[e for e in elems if elem_scale(G, d, e) == G.zero()] for d in G.torsion]
    out = []
    for images in itertools.product(*candidates):
        if len(subgroup_generated(G, images)) == G.order:
            out.append(tuple(images))
    return out


def apply_hom(G: FinAbGroup, images: Sequence[GroupElement], a: GroupElement) -> GroupElement:
    """Image of ``a`` under the endomorphism sending generator k to images[k]."""
    total = G.zero()
    for r, img in zip(a.torsion_part, images):
        total = elem_add(G, total, elem_scale(G, r, img))
    return total


# --- textual notation ------------------------------------------------------

def format_group(G: FinAbGroup) -> str:
    """``Z^r + Z/d1 + ...``; the trivial group prints as ``trivial``."""
    parts = []
    if G.free_rank == 1:
        parts.append("Z")
    elif G.free_rank > 1:
        parts.append(f"Z^{G.free_rank}")
    parts.extend(f"Z/{d}" for d in G.torsion)
    return " + ".join(parts) if parts else "trivial"


_TERM = re.compile(r"^(?:Z(?:\^(\d+))?|Z/(\d+))$")


def parse_group(text: str) -> FinAbGroup:
    """Parse ``Z^r + Z/d + ...`` or a bare comma list of orders like ``2,2``."""
    s = text.strip()
    if s in ("trivial", "0", "1", ""):
        return FinAbGroup(0, ())
    if re.fullmatch(r"\d+(\s*,\s*\d+)*", s):
        return iso_invariants(0, [int(x) for x in s.split(",")])
    free = 0
    torsion = []
    for term in s.split("+"):
        term = term.replace(" ", "")
        m = _TERM.match(term)
        if not m:
            raise GroupError(f"cannot parse group term {term!r} in {text!r}")
        if m.group(2) is not None:
            torsion.append(int(m.group(2)))
        else:
            free += int(m.group(1)) if m.group(1) else 1
    if any(t < 1 for t in torsion):
        raise GroupError(f"cyclic factor order must be positive in {text!r}")
    return iso_invariants(free, torsion)


def format_element(a: GroupElement) -> str:
    c = a.coords
    if not c:
        return "0"
    return str(c[0]) if len(c) == 1 else "(" + ",".join(map(str, c)) + ")"


def parse_elements(text: str, G: FinAbGroup) -> list[GroupElement]:
    """Parse ``0,2,4`` (one-coordinate groups) or ``(0,1),(1,1)``."""
    s = text.strip()
    n = G.free_rank + len(G.torsion)
    if not s:
        return []
    if n == 0:
        # the trivial group has one element, written 0 or ()
        items = [x for x in re.split(r"[,;\s]+", s.replace("()", "0")) if x]
        if any(x != "0" for x in items):
            raise GroupError(f"the trivial group only contains 0, got {text!r}")
        return [G.zero() for _ in items]
    if "(" in s:
        tuples = re.findall(r"\(([^()]*)\)", s)
        rest = re.sub(r"\(([^()]*)\)", "", s)
        if rest.replace(",", "").replace(";", "").strip():
            raise GroupError(f"stray text in element list {text!r}")
        coords = [[int(x) for x in t.split(",") if x.strip()] for t in tuples]
    else:
        coords = [[int(x)] for x in re.split(r"[,;\s]+", s) if x]
    out = []
    for c in coords:
        if len(c) != n:
            raise GroupError(f"element {tuple(c)} has {len(c)} coordinates; {format_group(G)} needs {n}")
        out.append(G.element(c[:G.free_rank], c[G.free_rank:]))
    return out
