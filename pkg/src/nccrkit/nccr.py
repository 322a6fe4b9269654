"""
Verdicts on steady and splitting NCCRs of toric singularities.

A splitting module is a sum of rank one reflexive modules, so up to
multiplicity it is a finite set of divisor classes.  It is steady exactly
when that set is a subgroup of Cl(R), and a steady splitting NCCR exists
exactly when Cl(R) is finite, which for a toric singularity means the cone
is simplicial.  Each verdict in a :class:`DecisionReport` records which of
these computations certified it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .abgroup import (
    FinAbGroup, GroupElement, GroupError, _check, enumerate_elements, format_element,
    format_group, generates, is_subgroup, subgroup_generated,
)
from .toric import (
    ClassGroup, ConeData, InternalFault, QuotientPresentation, class_group, is_gorenstein,
    is_simplicial, quotient_presentation,
)

ENTAILED = "entailed by the equivalence of all conditions, not independently certified here"

# (key, statement, certified?)
CONDITIONS = (
    ("abelian_quotient",
     "R is a quotient singularity k[[x_1..x_d]]^G for a finite small abelian G in GL(d)", True),
    ("strongly_graded_cover",
     "R = S_0 for a complete regular local ring S strongly graded by a finite abelian group", False),
    ("unique_basic_splitting_nccr", "R has a unique basic module giving a splitting NCCR", True),
    ("steady_splitting_nccr", "R has a steady splitting NCCR", True),
    ("steady_splitting_ncr", "R has a steady splitting NCR", False),
    ("subgroup_sum_nccr", "the sum over some finite subgroup of Cl(R) gives an NCCR", True),
    ("subgroup_sum_ncr", "the sum over some finite subgroup of Cl(R) gives an NCR", True),
    ("full_cl_sum_nccr", "Cl(R) is finite and the sum over all of Cl(R) gives an NCCR", True),
    ("full_cl_sum_ncr", "Cl(R) is finite and the sum over all of Cl(R) gives an NCR", True),
)

SPLITTING_NOTE = "splitting NCCR may exist while steady does not"


@dataclass(frozen=True)
class ClassSet:
    """The summand classes of a splitting module."""

    ambient: FinAbGroup
    classes: frozenset

    def __post_init__(self):
        object.__setattr__(self, "classes", frozenset(self.classes))
        _check(self.ambient, *self.classes)


def is_steady_class_set(S: ClassSet) -> bool:
    """Whether the classes form a subgroup of the ambient class group.

    A class set containing an element of infinite order is never a subgroup,
    since it is finite.
    """
    return is_subgroup(S.ambient, S.classes)


def generates_class_group(S: ClassSet) -> bool:
    if not S.ambient.is_finite:
        raise GroupError(f"generation is only decided for finite class groups, got {S.ambient}")
    return generates(S.ambient, S.classes)


def closure(S: ClassSet) -> frozenset:
    """Subgroup generated by the classes (finite ambient groups only)."""
    return subgroup_generated(S.ambient, S.classes)


@dataclass(frozen=True)
class ConditionVerdict:
    key: str
    statement: str
    verdict: bool
    certified: bool
    provenance: str


@dataclass
class DecisionReport:
    cone: ConeData
    class_group: ClassGroup
    simplicial: bool
    gorenstein: tuple[int, ...] | None
    verdicts: dict[str, ConditionVerdict]
    quotient: QuotientPresentation | None = None
    witness: ClassSet | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def steady(self) -> bool:
        return self.verdicts["steady_splitting_nccr"].verdict

    def check_agreement(self) -> None:
        seen = {v.verdict for v in self.verdicts.values() if v.certified}
        if len(seen) > 1:
            detail = ", ".join(f"{k}={v.verdict}" for k, v in self.verdicts.items() if v.certified)
            raise InternalFault(f"certified verdicts disagree: {detail}")


def steady_splitting_decision_toric(C: ConeData) -> DecisionReport:
    cl = class_group(C)
    G = cl.group
    simplicial = is_simplicial(C)
    finite = G.free_rank == 0
    report = DecisionReport(
        cone=C, class_group=cl, simplicial=simplicial, gorenstein=is_gorenstein(C), verdicts={},
    )
    snf_note = f"SNF invariant factors of the ray pairing give Cl = {format_group(G)}"

    if finite:
        report.quotient = quotient_presentation(C)
        report.witness = ClassSet(G, frozenset(enumerate_elements(G)))
        steady = is_steady_class_set(report.witness)
        gen = generates_class_group(report.witness)
        if report.quotient.group != G:
            raise InternalFault(f"quotient group {report.quotient.group} is not Cl = {G}")
        provenance = {
            "abelian_quotient": (simplicial, f"certified by: simpliciality n = d = {C.dim}; "
                                 f"G = {format_group(report.quotient.group)} with |G| = |det| = {G.order}"),
            "unique_basic_splitting_nccr": (finite, f"certified by: {snf_note}; the basic module is "
                                            "the sum over all of Cl(R)"),
            "steady_splitting_nccr": (steady, f"certified by: {snf_note}; the witness class set "
                                      "passes the subgroup test"),
            "subgroup_sum_nccr": (steady and gen, "certified by: witness subgroup = Cl(R), "
                                  "which it generates"),
            "subgroup_sum_ncr": (steady and gen, "certified by: the NCCR witness is also an NCR"),
            "full_cl_sum_nccr": (finite, f"certified by: {snf_note} (free rank 0)"),
            "full_cl_sum_ncr": (finite, f"certified by: {snf_note} (free rank 0)"),
        }
    else:
        cert = f"certified by: {snf_note}, free rank {G.free_rank} > 0"
        provenance = {
            "abelian_quotient": (simplicial, f"certified by: non-simplicial cone, {C.n} rays in "
                                 f"dimension {C.dim}"),
            "unique_basic_splitting_nccr": (False, cert),
            "steady_splitting_nccr": (False, cert + "; a finite class set cannot be an infinite subgroup"),
            "subgroup_sum_nccr": (False, cert),
            "subgroup_sum_ncr": (False, cert),
            "full_cl_sum_nccr": (False, cert),
            "full_cl_sum_ncr": (False, cert),
        }

    for key, statement, certified in CONDITIONS:
        if certified:
            verdict, prov = provenance[key]
        else:
            verdict, prov = finite, ENTAILED
        report.verdicts[key] = ConditionVerdict(key, statement, verdict, certified, prov)
    report.check_agreement()
    if finite != simplicial:
        raise InternalFault(f"Cl finite = {finite} but simplicial = {simplicial}")
    if not finite and C.dim == 3 and report.gorenstein is not None:
        report.notes.append(SPLITTING_NOTE)
    return report


def condition_report(C: ConeData) -> DecisionReport:
    """Condition-by-condition report; see :func:`format_report` for text."""
    return steady_splitting_decision_toric(C)


def _yes(flag: bool) -> str:
    return "YES" if flag else "NO"


def format_report(report: DecisionReport) -> str:
    lines = []
    for v in report.verdicts.values():
        lines.append(f"  [{_yes(v.verdict)}] {v.key}: {v.statement}")
        lines.append(f"        {v.provenance}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def format_class_set(classes: Iterable[GroupElement]) -> str:
    return "{" + ",".join(format_element(a) for a in sorted(classes)) + "}"
