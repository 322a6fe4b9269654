"""
Command-line front end.

    nccrkit toric CONE.json
    nccrkit dimer DIMER.json [--emit-dot Q.dot] [--emit-polygon P.txt]
    nccrkit generate GROUP WEIGHTS -o DIMER.json
    nccrkit mckay GROUP WEIGHTS [--emit-dot Q.dot]
    nccrkit steady GROUP CLASSES

GROUP is written ``Z^r + Z/d1 + Z/d2`` or as a list of cyclic orders
(``14``, ``2,2``); elements are residues (``1,5,8``) or tuples
(``(1,0),(0,1)``).  Every command takes ``--format text|json``.  Exit
status: 0 on success, 2 for bad input, 1 when an internal consistency
check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .abgroup import (
    FinAbGroup, GroupElement, GroupError, format_element, format_group, parse_elements,
    parse_group,
)
from .dimer import (
    all_faces_hexagonal, describe_polygon, dual_quiver, generate_hexagonal_dimer,
    hexagonal_raw, is_consistent, mckay_quiver, quiver_isomorphic, steady_decision_dimer, to_dot,
)
from .dimer.matchings import DEFAULT_MAX_MATCHINGS
from .intlat import snf
from .nccr import (
    ClassSet, closure, condition_report, format_class_set, format_report,
    generates_class_group, is_steady_class_set,
)
from .toric import InternalFault, pseudo_reflection_warnings

SCHEMA = 1
EMPTY_CLASS_NOTE = "a module giving an NCCR is nonzero (0 ≠ M), so the class list cannot be empty"


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str]
    format: str = "text"
    emit_dot: str | None = None
    emit_polygon: str | None = None
    max_matchings: int = DEFAULT_MAX_MATCHINGS
    output: str | None = None
    extra: dict = field(default_factory=dict)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _elems(elems) -> list[str]:
    return [format_element(a) for a in elems]


def _emit(config: RunConfig, text_lines: list[str], payload: dict) -> None:
    if config.format == "json":
        payload = {"schema": SCHEMA, "command": config.subcommand, **payload}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _report_payload(report) -> dict:
    G = report.class_group.group
    out = {
        "class_group": format_group(G),
        "ray_classes": _elems(report.class_group.ray_classes),
        "simplicial": report.simplicial,
        "gorenstein": list(report.gorenstein) if report.gorenstein else None,
        "steady_splitting_nccr": report.steady,
        "conditions": {
            v.key: {"statement": v.statement, "verdict": v.verdict, "certified": v.certified,
                    "provenance": v.provenance}
            for v in report.verdicts.values()
        },
        "notes": list(report.notes),
    }
    if report.quotient is not None:
        out["quotient"] = {"group": format_group(report.quotient.group),
                           "weights": _elems(report.quotient.weights)}
        out["witness_size"] = len(report.witness.classes)
    return out


# --- toric ------------------------------------------------------------------

def cmd_toric(config: RunConfig) -> int:
    C = formats.read_cone(config.inputs[0])
    report = condition_report(C)
    G = report.class_group.group
    factors = snf(C.pairing_matrix()).invariant_factors
    lines = [
        f"cone: {C.n} rays in dimension {C.dim}, valid",
        f"Cl = {format_group(G)}",
        f"invariant factors: {', '.join(map(str, factors)) or 'none'}; free rank {G.free_rank}",
        f"ray classes: {', '.join(_elems(report.class_group.ray_classes))}",
        f"simplicial: {_yn(report.simplicial)}",
        "gorenstein: " + (f"yes, m = {report.gorenstein}" if report.gorenstein else "no"),
    ]
    if report.quotient is not None:
        Q = report.quotient
        lines.append(f"quotient group: {format_group(Q.group)}")
        lines.append(f"weights: {', '.join(_elems(Q.weights))}")
        lines.extend(f"warning: {w}" for w in pseudo_reflection_warnings(Q.group, Q.weights))
    lines.append(f"steady splitting NCCR: {'YES' if report.steady else 'NO'}")
    lines.append("conditions:")
    lines.append(format_report(report))
    payload = {"cone": formats.cone_to_json(C), "invariant_factors": list(factors),
               **_report_payload(report)}
    _emit(config, lines, payload)
    return 0


# --- dimer ------------------------------------------------------------------

def _write_polygon(path, polygon) -> None:
    lines = [f"{x} {y} {m}" for (x, y), m in polygon.points]
    Path(path).write_text("\n".join(lines) + "\n")


def cmd_dimer(config: RunConfig) -> int:
    model = formats.read_dimer(config.inputs[0])
    report = steady_decision_dimer(model, max_matchings=config.max_matchings)
    P = report.polygon
    G = report.class_group.group
    lines = [
        f"V = {model.V}, E = {model.E}, F = {model.F} (V - E + F = {model.V - model.E + model.F})",
        f"consistent: {_yn(report.consistent)} ({report.consistency_method})",
    ]
    if report.certificate:
        lines.append(f"certificate: {report.certificate['condition']}: {report.certificate['message']}")
    lines += [
        f"hexagonal: {_yn(report.hexagonal)}",
        f"zigzag classes: {' '.join(str(z.hclass) for z in report.zigzags)}",
        f"polygon points: {' '.join(f'{p}x{m}' for p, m in P.points)}",
        f"polygon hull: {describe_polygon(P)} {list(P.hull)}",
        f"polygon area: {P.area}; faces = 2 x area: {_yn(model.F == 2 * P.area)}",
        f"cone rays: {list(report.cone.rays)}",
        f"Cl = {format_group(G)}",
        f"steady: {_yn(report.steady)}",
    ]
    if report.quotient is not None:
        lines.append(f"group: {format_group(report.quotient.group)}")
        lines.append(f"weights: {', '.join(_elems(report.quotient.weights))}")
    lines.extend(f"statement: {s}" for s in report.statements)
    lines.extend(f"note: {n}" for n in report.notes)
    summary = [f"consistent: {_yn(report.consistent)}", f"hexagonal: {_yn(report.hexagonal)}",
               f"steady: {_yn(report.steady)}"]
    if report.quotient is not None:
        summary.append(f"group: {format_group(report.quotient.group)}")
    summary += [f"Cl = {format_group(G)}", f"polygon hull: {describe_polygon(P)}"]
    lines.append("summary: " + "; ".join(summary))
    if config.emit_dot:
        Path(config.emit_dot).write_text(to_dot(dual_quiver(model)))
    if config.emit_polygon:
        _write_polygon(config.emit_polygon, P)
    payload = {
        "counts": {"V": model.V, "E": model.E, "F": model.F},
        "consistent": report.consistent,
        "consistency_method": report.consistency_method,
        "certificate": report.certificate,
        "hexagonal": report.hexagonal,
        "steady": report.steady,
        "zigzag_classes": [list(z.hclass) for z in report.zigzags],
        "polygon": {"points": [[list(p), m] for p, m in P.points], "hull": [list(p) for p in P.hull],
                    "area": str(P.area), "shape": describe_polygon(P)},
        "cone": formats.cone_to_json(report.cone),
        "class_group": format_group(G),
        "statements": list(report.statements),
        "notes": list(report.notes),
    }
    if report.quotient is not None:
        payload["quotient"] = {"group": format_group(report.quotient.group),
                               "weights": _elems(report.quotient.weights)}
    _emit(config, lines, payload)
    return 0


# --- generate / mckay -------------------------------------------------------

def _group_and_weights(config: RunConfig) -> tuple[FinAbGroup, list[GroupElement]]:
    G = parse_group(config.inputs[0])
    if not G.is_finite:
        raise GroupError(f"the group must be finite, got {format_group(G)}")
    weights = parse_elements(config.inputs[1], G)
    if len(weights) != 3:
        raise GroupError(f"expected 3 weights, got {len(weights)}")
    return G, weights


def cmd_generate(config: RunConfig) -> int:
    G, weights = _group_and_weights(config)
    raw = hexagonal_raw(G, weights)
    model = generate_hexagonal_dimer(G, weights)
    iso = quiver_isomorphic(dual_quiver(model), mckay_quiver(G, weights))
    consistent, _ = is_consistent(model)
    hexagonal = all_faces_hexagonal(model)
    if not (iso and consistent and hexagonal):
        raise InternalFault(f"generated model failed its checks: consistent={consistent}, "
                            f"hexagonal={hexagonal}, McKay isomorphism={iso}")
    formats.write_json(config.output, raw)
    if config.emit_dot:
        Path(config.emit_dot).write_text(to_dot(dual_quiver(model)))
    lines = [
        f"group: {format_group(G)}; weights: {', '.join(_elems(weights))}",
        f"wrote {config.output}",
        f"V = {model.V}, E = {model.E}, F = {model.F}",
        f"consistent: {_yn(consistent)}; hexagonal: {_yn(hexagonal)}",
        f"dual quiver ≅ McKay quiver: {_yn(iso)}",
    ]
    payload = {"group": format_group(G), "weights": _elems(weights), "output": config.output,
               "counts": {"V": model.V, "E": model.E, "F": model.F},
               "consistent": consistent, "hexagonal": hexagonal, "mckay_isomorphic": iso}
    _emit(config, lines, payload)
    return 0


def cmd_mckay(config: RunConfig) -> int:
    G, weights = _group_and_weights(config)
    Q = mckay_quiver(G, weights)
    dot = to_dot(Q, name="McKay")
    if config.emit_dot:
        Path(config.emit_dot).write_text(dot)
    payload = {"group": format_group(G), "weights": _elems(weights),
               "vertices": _elems(Q.vertices),
               "arrows": [[format_element(a.tail), format_element(a.head), a.dual_edge]
                          for a in Q.arrows]}
    if config.format == "json":
        _emit(config, [], payload)
    elif not config.emit_dot:
        sys.stdout.write(dot)
    else:
        _emit(config, [f"McKay quiver: {len(Q.vertices)} vertices, {len(Q.arrows)} arrows",
                       f"wrote {config.emit_dot}"], payload)
    return 0


# --- steady -----------------------------------------------------------------

def cmd_steady(config: RunConfig) -> int:
    G = parse_group(config.inputs[0])
    classes = parse_elements(config.inputs[1], G)
    if not classes:
        raise GroupError("empty class list: " + EMPTY_CLASS_NOTE)
    S = ClassSet(G, frozenset(classes))
    steady = is_steady_class_set(S)
    parts = [f"steady: {_yn(steady)}"]
    payload = {"group": format_group(G), "classes": _elems(sorted(S.classes)), "steady": steady}
    if G.is_finite:
        if not steady:
            cl = closure(S)
            parts.append(f"closure = {format_class_set(cl)}")
            payload["closure"] = _elems(sorted(cl))
        gen = generates_class_group(S)
        parts.append(f"generates Cl: {_yn(gen)}")
        payload["generates"] = gen
    else:
        parts.append("generates Cl: undecided (infinite class group)")
        payload["generates"] = None
    _emit(config, [f"group: {format_group(G)}", "; ".join(parts)], payload)
    return 0


# --- entry point ------------------------------------------------------------

COMMANDS = {"toric": cmd_toric, "dimer": cmd_dimer, "generate": cmd_generate,
            "mckay": cmd_mckay, "steady": cmd_steady}


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    parser = argparse.ArgumentParser(
        prog="nccrkit",
        description="Decide steady splitting NCCRs for toric cones, divisor class sets and dimer models.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("toric", parents=[common], help="analyse a cone file")
    p.add_argument("cone", help="cone JSON file")

    p = sub.add_parser("dimer", parents=[common], help="analyse a dimer model file")
    p.add_argument("dimer", help="dimer JSON file")
    p.add_argument("--emit-dot", metavar="PATH", help="write the dual quiver as DOT")
    p.add_argument("--emit-polygon", metavar="PATH", help="write matching classes as 'x y multiplicity' lines")
    p.add_argument("--max-matchings", type=_positive, default=DEFAULT_MAX_MATCHINGS, metavar="N")

    p = sub.add_parser("generate", parents=[common], help="write the hexagonal dimer of (G, weights)")
    p.add_argument("group")
    p.add_argument("weights")
    p.add_argument("-o", "--output", required=True, metavar="PATH")
    p.add_argument("--emit-dot", metavar="PATH")

    p = sub.add_parser("mckay", parents=[common], help="print the McKay quiver of (G, weights) as DOT")
    p.add_argument("group")
    p.add_argument("weights")
    p.add_argument("--emit-dot", metavar="PATH")

    p = sub.add_parser("steady", parents=[common], help="test whether a class set is steady")
    p.add_argument("group")
    p.add_argument("classes")
    return parser


def parse_config(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    inputs = {
        "toric": lambda: [args.cone],
        "dimer": lambda: [args.dimer],
        "generate": lambda: [args.group, args.weights],
        "mckay": lambda: [args.group, args.weights],
        "steady": lambda: [args.group, args.classes],
    }[args.subcommand]()
    return RunConfig(
        subcommand=args.subcommand, inputs=inputs, format=args.format,
        emit_dot=getattr(args, "emit_dot", None), emit_polygon=getattr(args, "emit_polygon", None),
        max_matchings=getattr(args, "max_matchings", DEFAULT_MAX_MATCHINGS),
        output=getattr(args, "output", None),
    )


def main(argv=None) -> int:
    config = parse_config(argv)
    try:
        return COMMANDS[config.subcommand](config)
    except InternalFault as exc:
        print(f"nccrkit: internal fault: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        kind = getattr(exc, "kind", None)
        prefix = f"{kind}: " if kind else ""
        print(f"nccrkit: error: {prefix}{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
