import random

import pytest

from doublecover.coset import (
    Agreement,
    Status,
    cross_check,
    enumerate_cosets,
    table_is_consistent,
    todd_coxeter,
)
from doublecover.diagram import PdCode, build_diagram, parse_pd, split_components
from doublecover.homology import diagram_homology, diagram_presentation
from doublecover.presentation import GroupPresentation, Word

from .corpus import FIGURE_EIGHT, KINK, TREFOIL, alternating_corpus, twist_knot


def columns(p):
    col = {g: j for j, g in enumerate(p.generators)}
    return [[2 * col[g] + (e < 0) for g, e in r.syllables] for r in p.relators]


def pres(code, choice="a"):
    return diagram_presentation(build_diagram(parse_pd(code)), choice)


def test_trefoil_closes_at_three():
    p = pres(TREFOIL)
    table = enumerate_cosets(p, 100)
    assert table.status is Status.CLOSED
    assert table.order == 3
    assert table_is_consistent(table, columns(p))
    assert table.to_json() == {"status": "Closed", "order": 3}


def test_unknot_closes_at_one():
    p = diagram_presentation(build_diagram(PdCode((), 1)))
    assert enumerate_cosets(p, 10).order == 1


def test_figure_eight_closes_at_five():
    for choice in "ab":
        assert enumerate_cosets(pres(FIGURE_EIGHT, choice)).order == 5


def test_small_groups():
    # <a, b | a^2, b^3, (ab)^2> is S3; <a, b | a^3, b^2, (ab)^5> has order 60
    s3 = todd_coxeter(2, [[0, 0], [2, 2, 2], [0, 2, 0, 2]])
    assert s3.order == 6
    a5 = todd_coxeter(2, [[0] * 3, [2] * 2, [0, 2] * 5])
    assert a5.order == 60
    assert table_is_consistent(a5, [[0] * 3, [2] * 2, [0, 2] * 5])
    q8 = todd_coxeter(2, [[0] * 4, [0, 0, 3, 3], [2, 0, 3, 0]])  # a^4, a^2 b^-2, b a b^-1 a
    assert q8.order == 8


def test_infinite_group_exceeds():
    table = todd_coxeter(2, [[0, 2, 1, 3]], max_cosets=200)  # Z^2
    assert table.status is Status.EXCEEDED
    assert table.order is None
    assert table.to_json() == {"status": "Exceeded", "limit": 200}


def test_no_relators_exceeds():
    assert todd_coxeter(1, [], max_cosets=50).status is Status.EXCEEDED


def test_budget_errors():
    with pytest.raises(ValueError):
        todd_coxeter(1, [[0]], max_cosets=0)
    with pytest.raises(ValueError):
        todd_coxeter(1, [[4]])
    bad = GroupPresentation((0,), (Word(((7, 1),)),), (None,), 0)
    with pytest.raises(ValueError):
        enumerate_cosets(bad)


def test_row_zero_is_trivial_coset():
    table = enumerate_cosets(pres(TREFOIL))
    # the root generator is killed, so it fixes the trivial coset
    assert table.rows[0][0] == 0
    assert all(x is not None for row in table.rows for x in row)


def test_deterministic():
    p = pres(FIGURE_EIGHT)
    assert enumerate_cosets(p).rows == enumerate_cosets(p).rows


@pytest.mark.parametrize("code", [TREFOIL, FIGURE_EIGHT])
def test_order_independent_of_relator_and_column_order(code):
    p = pres(code)
    expected = enumerate_cosets(p).order
    rng = random.Random(3)
    for _ in range(5):
        gens = list(p.generators)
        rels = list(p.relators)
        rng.shuffle(gens)
        rng.shuffle(rels)
        q = GroupPresentation(tuple(gens), tuple(rels), (None,) * len(rels), p.root)
        assert enumerate_cosets(q).order == expected


@pytest.mark.parametrize("entry", alternating_corpus(), ids=lambda e: e.name)
def test_closed_order_divisible_by_h1(entry):
    for part in split_components(build_diagram(entry.pd)):
        table = enumerate_cosets(diagram_presentation(part), 2000)
        if table.order is not None:
            assert table.order % diagram_homology(part).order == 0


def test_cross_check_examples():
    assert cross_check(build_diagram(parse_pd(TREFOIL)), 100).status is Agreement.CONSISTENT
    assert cross_check(build_diagram(parse_pd(KINK)), 10).status is Agreement.CONSISTENT
    big = build_diagram(twist_knot(8).pd)
    assert cross_check(big, 5).status is Agreement.INCONCLUSIVE
    assert cross_check(build_diagram(parse_pd(TREFOIL)), 100).orders == (3,)
