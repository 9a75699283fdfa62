"""Exit criteria. Each test prints one PASS/FAIL line; all comparisons are exact."""

import random

import pytest

from doublecover.checkerboard import build_white_graph, color_faces, vertex_star
from doublecover.coset import Agreement, cross_check, enumerate_cosets
from doublecover.diagram import (
    DiagramError,
    PdCode,
    build_diagram,
    check_alternating,
    mirror_pd,
    parse_pd,
    split_components,
)
from doublecover.homology import IntegerMatrix, diagram_homology, diagram_presentation, smith_normal_form
from doublecover.orderability import Status, decide
from doublecover.presentation import abelianization_matrix, build_presentation

from .corpus import (
    FIGURE_EIGHT,
    HOPF,
    KINK,
    TREFOIL,
    alternating_corpus,
    permute_crossings,
    random_pd,
    relabel_arcs,
)
from .oracles import invariant_factors_by_minors

MAX_COSETS = 10_000


@pytest.fixture
def report(capsys):
    def emit(number, title, failures):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            print(f"\n[{status}] criterion {number}: {title}")
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures, failures

    return emit


def diagram(code):
    return build_diagram(parse_pd(code))


def coset_order(d):
    (part,) = split_components(d)
    return enumerate_cosets(diagram_presentation(part), MAX_COSETS).order


def test_worked_examples(report):
    failures = []

    def expect(label, got, want):
        if got != want:
            failures.append(f"{label}: got {got!r}, expected {want!r}")

    t = diagram(TREFOIL)
    h = diagram_homology(t)
    expect("trefoil det", h.order, 3)
    expect("trefoil H1", (h.torsion, h.betti), ((3,), 0))
    expect("trefoil verdict", decide(t).status, Status.NOT_LEFT_ORDERABLE)
    expect("trefoil coset order", coset_order(t), 3)

    f = diagram(FIGURE_EIGHT)
    expect("figure-eight det", diagram_homology(f).order, 5)
    expect("figure-eight verdict", decide(f).status, Status.NOT_LEFT_ORDERABLE)
    expect("figure-eight coset order", coset_order(f), 5)

    hopf = diagram(HOPF)
    expect("hopf det", diagram_homology(hopf).order, 2)
    expect("hopf verdict", decide(hopf).status, Status.NOT_LEFT_ORDERABLE)

    for name, d in [("0-crossing unknot", build_diagram(PdCode((), 1))), ("1-crossing unknot", diagram(KINK))]:
        expect(f"{name} det", diagram_homology(d).order, 1)
        expect(f"{name} verdict", decide(d).status, Status.LEFT_ORDERABLE)
        expect(f"{name} coset order", coset_order(d), 1)

    expect("trefoil + unknot verdict", decide(diagram(TREFOIL + " U(1)")).status, Status.NOT_LEFT_ORDERABLE)
    report(1, "worked examples (trefoil, figure-eight, Hopf, unknots, trefoil + unknot)", failures)


def test_biconditional_on_corpus(report):
    corpus = alternating_corpus()
    failures = []
    connected_alternating = [e for e in corpus if len(e.pieces) == 1]
    if len(connected_alternating) < 20:
        failures.append(f"only {len(connected_alternating)} connected alternating diagrams")
    names = {e.name for e in corpus}
    if not any(n.startswith("twist") for n in names) or not any(n.startswith("T(2,") for n in names):
        failures.append("corpus lacks twist knots or (2,n) torus links")
    for e in corpus:
        d = build_diagram(e.pd)
        if not check_alternating(d).alternating:
            failures.append(f"{e.name}: not alternating")
            continue
        v = decide(d)
        dets = tuple(c.determinant for c in v.components)
        if dets != e.pieces:
            failures.append(f"{e.name}: determinants {dets}, spanning-tree oracle {e.pieces}")
        if (v.status is Status.LEFT_ORDERABLE) != all(x == 1 for x in dets):
            failures.append(f"{e.name}: verdict {v.status.value} with determinants {dets}")
    report(2, f"LeftOrderable <=> every component has det 1 ({len(corpus)} diagrams)", failures)


def test_invariance_suite(report):
    failures = []
    for e in alternating_corpus():
        base = decide(build_diagram(e.pd))
        base_dets = sorted(c.determinant for c in base.components)
        rng = random.Random(e.name)
        variants = {
            "coloring swap": decide(build_diagram(e.pd), "b"),
            "mirror": decide(build_diagram(mirror_pd(e.pd))),
            "relabel": decide(build_diagram(relabel_arcs(e.pd, rng))),
            "reorder": decide(build_diagram(permute_crossings(e.pd, rng))),
        }
        for label, v in variants.items():
            dets = sorted(c.determinant for c in v.components)
            if v.status != base.status or dets != base_dets:
                failures.append(f"{e.name}: {label} changed {base.status.value}/{base_dets} to {v.status.value}/{dets}")

        for part in split_components(build_diagram(e.pd)):
            if part.n_crossings == 0:
                continue
            h = diagram_homology(part)
            key = (h.torsion, h.betti)
            for choice in "ab":
                coloring = color_faces(part, choice)
                for root in sorted(coloring.white):
                    g = diagram_homology(part, choice, root)
                    if (g.torsion, g.betti) != key:
                        failures.append(f"{e.name}: root {root} ({choice}) gives {g.torsion}")
                w = build_white_graph(part, coloring)
                base_snf = smith_normal_form(abelianization_matrix(build_presentation(w, part)))
                for _ in range(3):
                    rotations = {v: rng.randrange(8) for v in w.vertices}
                    rotated = smith_normal_form(abelianization_matrix(build_presentation(w, part, rotations)))
                    if rotated != base_snf:
                        failures.append(f"{e.name}: star rotation {rotations} changed SNF")
    report(3, "det and verdict invariant under swap, mirror, root, relabel, reorder, star rotation", failures)


def structural_failures(name, d):
    out = []
    for g in d.components:
        faces = sum(1 for f in d.faces if f[0].crossing in g)
        if faces != len(g) + 2:
            out.append(f"{name}: component {g} has {faces} faces")
    alternating = check_alternating(d).alternating
    for part in split_components(d):
        n = part.n_crossings
        if n == 0:
            continue
        for choice in "ab":
            w = build_white_graph(part, color_faces(part, choice))
            p = build_presentation(w, part)
            if len(w.edges) != n:
                out.append(f"{name}: {len(w.edges)} white edges for {n} crossings")
            if len(p.relators) != len(w.vertices) + 1:
                out.append(f"{name}: {len(p.relators)} relators for {len(w.vertices)} vertices")
            for v in w.vertices:
                if len(p.relator_for(v)) != 2 * w.degree(v):
                    out.append(f"{name}: relator of {v} has length {len(p.relator_for(v))}")
                if len(vertex_star(w, part, v).incidences) != w.degree(v):
                    out.append(f"{name}: star of {v} has wrong length")
            if alternating and len(w.signs()) != 1:
                out.append(f"{name}: alternating but signs {sorted(w.signs())}")
    return out


def test_structural_invariants(report):
    failures = []
    for e in alternating_corpus():
        failures += structural_failures(e.name, build_diagram(e.pd))
    rng = random.Random(1234)
    accepted = alternating = 0
    while accepted < 300:
        pd = random_pd(rng, rng.randint(1, 4))
        try:
            d = build_diagram(pd)
        except DiagramError:
            continue
        accepted += 1
        alternating += check_alternating(d).alternating
        failures += structural_failures(str(pd), d)
    if alternating == 0:
        failures.append("random sample contained no alternating diagram")
    report(4, f"structural invariants on corpus + {accepted} random codes ({alternating} alternating)", failures)


def test_snf_oracle(report):
    rng = random.Random(99)
    failures = []
    for _ in range(1500):
        rows, cols = rng.randint(1, 3), rng.randint(1, 3)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        got = smith_normal_form(IntegerMatrix.from_rows(m)).diagonal
        want = invariant_factors_by_minors(m)
        if got != want:
            failures.append(f"{m}: SNF {got}, minors {want}")
    report(5, "SNF matches minor-gcd invariant factors on 1500 random matrices", failures)


def test_coset_consistency(report):
    failures = []
    closed = 0
    for e in alternating_corpus():
        d = build_diagram(e.pd)
        result = cross_check(d, MAX_COSETS)
        if result.status is Agreement.INCONSISTENT:
            failures.append(f"{e.name}: {result.details}")
        for part, order in zip(split_components(d), result.orders):
            if order is None:
                continue
            closed += 1
            h = diagram_homology(part)
            if order % h.order:
                failures.append(f"{e.name}: coset order {order} not divisible by |H1| {h.order}")
        if all(o is not None for o in result.orders) and result.status is not Agreement.CONSISTENT:
            failures.append(f"{e.name}: closed but {result.status.value}")
    if closed < 20:
        failures.append(f"only {closed} enumerations closed")
    report(6, f"coset enumeration consistent with verdict ({closed} closed enumerations)", failures)
