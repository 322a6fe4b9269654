"""Regenerate the fixture files under src/nccrkit/fixtures.

The two larger dimer models are transcribed from drawings: vertex
coordinates are read off by hand and only the rotation systems derived from
them end up in the JSON files.  Run from the repository root:

    python3 scripts/make_fixtures.py
"""
import json
from fractions import Fraction
from pathlib import Path

from nccrkit.dimer import from_embedding, validate_dimer

OUT = Path(__file__).resolve().parent.parent / "src" / "nccrkit" / "fixtures"


def pts(text):
    out = {}
    for item in text.split():
        name, xy = item.split("=")
        x, y = xy.split(",")
        out[name] = (Fraction(x), Fraction(y))
    return out


def cycle_edges(path):
    names = path.split("-")
    out = []
    for a, b in zip(names, names[1:] + names[:1]):
        out.append((a, b) if a.startswith("B") else (b, a))
    return out


# 8-face model: four squares and four octagons in a 6x6 domain
SIGMA_BLACK = pts("B1=0.5,1.5 B2=2.5,1.5 B3=4.5,0.5 B4=4.5,2.5 "
                  "B5=1.5,3.5 B6=1.5,5.5 B7=3.5,4.5 B8=5.5,4.5")
SIGMA_WHITE = pts("W1=1.5,0.5 W2=1.5,2.5 W3=3.5,1.5 W4=5.5,1.5 "
                  "W5=0.5,4.5 W6=2.5,4.5 W7=4.5,3.5 W8=4.5,5.5")
SIGMA_INNER = ("B1W1 B1W2 B2W1 B2W2 B2W3 B3W3 B3W4 B4W3 B4W4 B4W7 "
               "B5W2 B5W5 B5W6 B6W5 B6W6 B7W6 B7W7 B7W8 B8W7 B8W8").split()
SIGMA_CROSSING = [("B1", "W4", (-1, 0)), ("B6", "W1", (0, 1)),
                  ("B3", "W8", (0, -1)), ("B8", "W5", (1, 0))]

# 14-face hexagonal model in a 7x7 domain
HEX_BLACK = pts("B1=3,0 B2=5,0.5 B3=0,1 B4=2,1.5 B5=4,2 B6=6,2.5 B7=1,3 "
                "B8=3,3.5 B9=5,4 B10=0,4.5 B11=2,5 B12=4,5.5 B13=6,6 B14=1,6.5")
HEX_WHITE = pts("W1=6,0 W2=1,0.5 W3=3,1 W4=5,1.5 W5=0,2 W6=2,2.5 W7=4,3 "
                "W8=6,3.5 W9=1,4 W10=3,4.5 W11=5,5 W12=0,5.5 W13=2,6 W14=4,6.5")
HEX_CYCLES = ["W2-B4-W6-B7-W5-B3", "W3-B5-W7-B8-W6-B4", "W4-B6-W8-B9-W7-B5",
              "W6-B8-W10-B11-W9-B7", "W7-B9-W11-B12-W10-B8", "W9-B11-W13-B14-W12-B10"]
HEX_EXTRA = [("B1", "W3"), ("B2", "W4"), ("B2", "W1"), ("B12", "W14"), ("B13", "W11")]
HEX_CROSSING = [("B14", "W2", (0, 1)), ("B13", "W1", (0, 1)), ("B3", "W1", (-1, 0)),
                ("B10", "W8", (-1, 0)), ("B6", "W5", (1, 0)), ("B13", "W12", (1, 0)),
                ("B1", "W13", (0, -1)), ("B1", "W14", (0, -1)), ("B2", "W14", (0, -1))]


def build(black, white, inner, crossing, period):
    edges = []
    seen = set()
    for b, w in inner:
        if (b, w) not in seen:
            seen.add((b, w))
            edges.append((f"{b}{w}", b, w, (0, 0)))
    for b, w, s in crossing:
        edges.append((f"{b}{w}", b, w, s))
    raw = from_embedding(black, white, edges, periods=((period, 0), (0, period)))
    validate_dimer(raw)
    return raw


def desk_models():
    one_hexagon = from_embedding(
        {"b": (1, 1)}, {"w": (0, 0)},
        [("e0", "b", "w", (0, 0)), ("e1", "b", "w", (1, 0)), ("e2", "b", "w", (0, 1))],
        periods=((3, 0), (0, 3)))
    conifold = from_embedding(
        {"b": (1, 1)}, {"w": (0, 0)},
        [("e0", "b", "w", (0, 0)), ("e1", "b", "w", (1, 0)),
         ("e2", "b", "w", (0, 1)), ("e3", "b", "w", (1, 1))],
        periods=((2, 0), (0, 2)))
    # found by search: the only valid two-vertex rotation systems on these
    # edges fail through a doubled crossing rather than a trivial zigzag
    parallel_pair = {
        "vertices": [{"id": "b", "color": "black"}, {"id": "w", "color": "white"}],
        "edges": [{"id": "p", "black": "b", "white": "w", "shift": [0, 0]},
                  {"id": "q", "black": "b", "white": "w", "shift": [0, 0]},
                  {"id": "x", "black": "b", "white": "w", "shift": [1, 0]},
                  {"id": "y", "black": "b", "white": "w", "shift": [0, 1]}],
        "rotations": {"b": ["p", "q", "x", "y"], "w": ["p", "x", "y", "q"]},
    }
    # a bigon between b1 and w1 hanging off a model with a null-homologous zigzag
    bigon = {
        "vertices": [{"id": v, "color": "black" if v[0] == "b" else "white"}
                     for v in ("b1", "b2", "w1", "w2")],
        "edges": [{"id": "e0", "black": "b1", "white": "w1", "shift": [0, 0]},
                  {"id": "e1", "black": "b1", "white": "w1", "shift": [0, 0]},
                  {"id": "e2", "black": "b2", "white": "w2", "shift": [0, 1]},
                  {"id": "e3", "black": "b2", "white": "w1", "shift": [0, 1]},
                  {"id": "e4", "black": "b2", "white": "w2", "shift": [1, 0]},
                  {"id": "e5", "black": "b2", "white": "w2", "shift": [1, 1]}],
        "rotations": {"b1": ["e1", "e0"], "b2": ["e3", "e5", "e2", "e4"],
                      "w1": ["e3", "e0", "e1"], "w2": ["e2", "e4", "e5"]},
    }
    return {"one_hexagon.json": one_hexagon, "conifold.json": conifold,
            "parallel_pair.json": parallel_pair, "bigon.json": bigon}


CONES = {
    "sigma_cone.json": {"dim": 3, "rays": [[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]},
    "octant_cone.json": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
    "unit_square_cone.json": {"dim": 3, "rays": [[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]]},
    "z14_cone.json": {"dim": 3, "rays": [[14, -5, -8], [0, 1, 0], [0, 0, 1]]},
    "malformed_cone.json": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [2, 2, 2]]},
}


def main():
    sigma_inner = [(e[:2], e[2:]) for e in SIGMA_INNER]
    sigma = build(SIGMA_BLACK, SIGMA_WHITE, sigma_inner, SIGMA_CROSSING, 6)
    hex_inner = [e for c in HEX_CYCLES for e in cycle_edges(c)] + HEX_EXTRA
    hex14 = build(HEX_BLACK, HEX_WHITE, hex_inner, HEX_CROSSING, 7)
    files = {"sigma_dimer.json": sigma, "hex14_dimer.json": hex14}
    desk = desk_models()
    for raw in desk.values():
        validate_dimer(raw)
    files.update(desk)
    files.update(CONES)
    for name, data in files.items():
        (OUT / name).write_text(json.dumps(data, indent=1) + "\n")
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
