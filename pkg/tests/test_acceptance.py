"""Acceptance suite: one test per criterion.

Time limits are wall-clock bounds on the work named in each criterion and
are pinned here: 1 s for the cone and desk-fixture checks, 5 s for the two
dimer models (matching enumeration included).  Criterion 6 runs six
property suites and asserts each one saw at least 500 cases.
"""
import itertools
import random
import time
from collections import Counter
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from nccrkit import cli
from nccrkit.abgroup import (
    FinAbGroup, elem_add, elem_neg, elem_sub, enumerate_elements, generates, is_subgroup,
    iso_invariants, parse_elements,
)
from nccrkit.dimer import (
    all_faces_hexagonal, describe_polygon, dual_quiver, generate_hexagonal_dimer, is_consistent,
    mckay_quiver, polygon_from_points, polygon_to_cone, quiver_isomorphic,
    steady_decision_dimer, toric_polygon, validate_dimer, zigzag_paths,
)
from nccrkit.fixtures import fixture_path, load_fixture
from nccrkit.intlat import IntMatrix, snf
from nccrkit.toric import (
    QuotientPresentation, class_group, cl_is_finite, cones_equivalent, extreme_rays,
    group_to_cone, is_gorenstein, is_simplicial, presentations_equivalent, quotient_presentation,
    validate_cone,
)
from oracles import invariant_factors_by_minors, random_torus_dimer

FAST = 1.0   # seconds
DIMER = 5.0  # seconds, matching enumeration included
MIN_CASES = 500
Z14 = FinAbGroup.cyclic(14)


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def turned(normals):
    return Counter({(-b, a): k for (a, b), k in normals.items()})


@pytest.mark.criterion(1)
def test_criterion_1_sigma_cone(capsys):
    with Clock() as clock:
        code = cli.main(["toric", str(fixture_path("sigma_cone"))])
    out = capsys.readouterr().out
    assert code == 0
    assert "simplicial: no" in out
    assert "Cl = Z + Z/2 + Z/2" in out
    assert "invariant factors: 1, 2, 2; free rank 1" in out
    assert "steady splitting NCCR: NO" in out
    assert clock.elapsed < FAST


@pytest.mark.criterion(2)
def test_criterion_2_z14_cone_round_trip():
    with Clock() as clock:
        w = parse_elements("1,5,8", Z14)
        C = group_to_cone(Z14, w)
        simplicial = is_simplicial(C)
        gor = is_gorenstein(C)
        cl = class_group(C).group
        Q = quotient_presentation(C)
        same = presentations_equivalent(Q, QuotientPresentation(Z14, tuple(w)))
    assert simplicial and gor is not None
    assert cl == Z14 and Q.group == Z14
    assert same is True
    assert clock.elapsed < FAST


@pytest.mark.criterion(3)
def test_criterion_3_generated_hexagonal_dimer():
    with Clock() as clock:
        w = parse_elements("1,5,8", Z14)
        m = generate_hexagonal_dimer(Z14, w)
        ok, _ = is_consistent(m)
        report = steady_decision_dimer(m)
        D, M = dual_quiver(m), mckay_quiver(Z14, w)
        iso = quiver_isomorphic(D, M)
    assert m.F == 14
    assert ok and all_faces_hexagonal(m) and report.steady
    # McKay arrows run i -> i+1, i+5, i+8
    rule = Counter((i, (i + s) % 14) for i in range(14) for s in (1, 5, 8))
    assert Counter((a.tail.torsion_part[0], a.head.torsion_part[0]) for a in M.arrows) == rule
    assert iso
    P = report.polygon
    assert len(P.hull) == 3 and P.area == 7 and m.F == 2 * P.area
    assert clock.elapsed < DIMER


@pytest.mark.criterion(4)
def test_criterion_4_sigma_dimer_fixture():
    with Clock() as clock:
        m = validate_dimer(load_fixture("sigma_dimer"))
        ok, _ = is_consistent(m)
        report = steady_decision_dimer(m)
    assert m.V - m.E + m.F == 0 and m.F == 8
    assert ok and not report.hexagonal and not report.steady
    square = polygon_from_points([(1, 1), (-1, 1), (-1, -1), (1, -1)])
    P = report.polygon
    assert cones_equivalent(polygon_to_cone(P), polygon_to_cone(square))
    assert describe_polygon(P) == "2×2 square"
    assert P.area == 4 and m.F == 2 * P.area
    assert clock.elapsed < DIMER


@pytest.mark.criterion(5)
def test_criterion_5_desk_fixtures():
    with Clock() as clock:
        hexa = steady_decision_dimer(validate_dimer(load_fixture("one_hexagon")))
        coni = steady_decision_dimer(validate_dimer(load_fixture("conifold")))
    assert hexa.steady and hexa.quotient.group.is_trivial
    assert describe_polygon(hexa.polygon) == "unit triangle"
    assert sorted(hexa.polygon.translated().hull) == [(0, 0), (0, 1), (1, 0)]
    assert coni.consistent and not coni.hexagonal and not coni.steady
    assert coni.class_group.group == FinAbGroup(1, ())
    assert "splitting NCCR exists, steady does not" in coni.statements
    assert clock.elapsed < FAST


# --- criterion 6: property suites --------------------------------------------------

def suite_snf():
    seen = []

    @settings(max_examples=MIN_CASES)
    @given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                           min_size=m, max_size=m))))
    def prop(rows):
        seen.append(1)
        A = IntMatrix(rows)
        dec = snf(A)
        assert dec.U @ A @ dec.V == dec.D
        assert abs(dec.U.det()) == 1 and abs(dec.V.det()) == 1
        D = dec.D
        assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
        f = dec.invariant_factors
        assert all(x > 0 for x in f) and all(b % a == 0 for a, b in zip(f, f[1:]))
        assert f == invariant_factors_by_minors(rows)

    prop()
    return len(seen)


def all_groups(max_order):
    out = []
    for fs in itertools.product(range(1, max_order + 1), repeat=4):
        if all(b % a == 0 for a, b in zip(fs, fs[1:])):
            G = iso_invariants(0, fs)
            if G.order <= max_order and G not in out:
                out.append(G)
    return out


def suite_subgroups():
    cases = 0
    for G in all_groups(16):
        E = enumerate_elements(G)
        idx = {e: i for i, e in enumerate(E)}
        diff = [[idx[elem_sub(G, a, b)] for b in E] for a in E]
        for mask in range(1, 1 << len(E)):
            S = [i for i in range(len(E)) if mask >> i & 1]
            members = set(S)
            closed = all(diff[a][b] in members for a in S for b in S)
            assert is_subgroup(G, [E[i] for i in S]) == closed
            cases += 1
    return cases


@st.composite
def pointed_cones(draw):
    d = draw(st.integers(2, 4))
    n = draw(st.integers(d, 6))
    vecs = [tuple(draw(st.integers(-3, 3)) for _ in range(d - 1)) + (draw(st.integers(1, 3)),)
            for _ in range(n)]
    rays = extreme_rays(vecs, d)
    assume(len(rays) >= d and IntMatrix(rays, cols=d).rank() == d)
    return validate_cone(rays, d)


def suite_finite_iff_simplicial():
    seen = []

    @settings(max_examples=MIN_CASES)
    @given(pointed_cones())
    def prop(C):
        seen.append(is_simplicial(C))
        assert cl_is_finite(C) == is_simplicial(C)

    prop()
    assert any(seen) and not all(seen)
    return len(seen)


@st.composite
def simplicial_cones(draw):
    d = draw(st.integers(2, 4))
    rows = [tuple(draw(st.integers(-4, 4)) for _ in range(d)) for _ in range(d)]
    det = IntMatrix(rows).det()
    assume(det != 0 and abs(det) <= 100)
    assume(all(gcd(*r) == 1 for r in rows))
    return validate_cone(rows, d)


def suite_quotient_iso():
    seen = []

    @settings(max_examples=MIN_CASES)
    @given(simplicial_cones())
    def prop(C):
        seen.append(1)
        cl = class_group(C).group
        Q = quotient_presentation(C)
        assert Q.group.torsion == cl.torsion and cl.free_rank == 0
        assert Q.group.order == abs(C.ray_matrix().det())
        assert cones_equivalent(group_to_cone(Q.group, Q.weights), C)

    prop()
    return len(seen)


def _zigzag_checks(m):
    zs = zigzag_paths(m)
    total = (sum(z.hclass[0] for z in zs), sum(z.hclass[1] for z in zs))
    assert total == (0, 0)
    P = toric_polygon(m)
    assert Counter(z.hclass for z in zs) == turned(P.normals())


def suite_zigzags():
    for name in ("one_hexagon", "conifold", "sigma_dimer", "hex14_dimer"):
        _zigzag_checks(validate_dimer(load_fixture(name)))
    seen = []

    @settings(max_examples=MIN_CASES)
    @given(st.integers(0, 10**9))
    def prop(seed):
        m = random_torus_dimer(random.Random(seed))
        assume(m is not None and is_consistent(m)[0])
        seen.append(1)
        _zigzag_checks(m)

    prop()
    return len(seen)


def suite_generator():
    cases = 0
    for G in all_groups(20):
        if len(G.torsion) > 2:
            continue  # two weights cannot generate
        E = enumerate_elements(G)
        for w1, w2 in itertools.product(E, repeat=2):
            if not generates(G, [w1, w2]):
                continue
            w = [w1, w2, elem_neg(G, elem_add(G, w1, w2))]
            m = generate_hexagonal_dimer(G, w)
            assert is_consistent(m)[0], (G, w)
            assert all_faces_hexagonal(m), (G, w)
            assert quiver_isomorphic(dual_quiver(m), mckay_quiver(G, w)), (G, w)
            cases += 1
    return cases


@pytest.mark.criterion(6)
def test_criterion_6_property_suites():
    counts = {
        "snf": suite_snf(),
        "subgroup": suite_subgroups(),
        "finite_iff_simplicial": suite_finite_iff_simplicial(),
        "quotient_iso": suite_quotient_iso(),
        "zigzag": suite_zigzags(),
        "generator": suite_generator(),
    }
    short = {k: v for k, v in counts.items() if v < MIN_CASES}
    assert not short, f"suites below {MIN_CASES} cases: {short}"
