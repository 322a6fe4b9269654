"""Steady-NCCR verdict for a dimer model."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..toric import (
    ClassGroup, ConeData, InternalFault, QuotientPresentation, class_group,
    is_gorenstein, is_simplicial, quotient_presentation,
)
from .hexagonal import all_faces_hexagonal
from .matchings import DEFAULT_MAX_MATCHINGS, LatticePolygon, polygon_to_cone, toric_polygon
from .model import DimerModel
from .zigzag import CONSISTENCY_METHOD, ZigzagPath, is_consistent, zigzag_paths

HEXAGONALITY_NOTE = ("hexagonality is read as: consistent and every face six-sided; "
                     "metric regularity is not checked")


@dataclass
class DimerReport:
    consistent: bool
    certificate: dict | None
    hexagonal: bool
    steady: bool
    zigzags: list[ZigzagPath]
    polygon: LatticePolygon
    cone: ConeData
    class_group: ClassGroup
    quotient: QuotientPresentation | None = None
    statements: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    consistency_method: str = CONSISTENCY_METHOD


def steady_decision_dimer(model: DimerModel, max_matchings: int = DEFAULT_MAX_MATCHINGS) -> DimerReport:
    zigzags = zigzag_paths(model)
    consistent, cert = is_consistent(model, zigzags)
    hexagonal = all_faces_hexagonal(model)
    steady = consistent and hexagonal
    polygon = toric_polygon(model, max_matchings=max_matchings)
    cone = polygon_to_cone(polygon)
    report = DimerReport(
        consistent=consistent, certificate=cert, hexagonal=hexagonal, steady=steady,
        zigzags=zigzags, polygon=polygon, cone=cone, class_group=class_group(cone),
    )
    report.notes.append(HEXAGONALITY_NOTE)
    if steady:
        if len(polygon.hull) != 3 or not is_simplicial(cone) or is_gorenstein(cone) != (0, 0, 1):
            raise InternalFault(
                f"hexagonal consistent model gave hull {list(polygon.hull)}, "
                "which is not a Gorenstein simplex at height one")
        report.quotient = quotient_presentation(cone)
        report.statements.append("abelian SL(3) quotient")
    elif consistent:
        report.statements.append("splitting NCCR exists, steady does not")
    else:
        report.notes.append("model is not consistent; no NCCR statement is made")
    return report
