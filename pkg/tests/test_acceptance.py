"""Acceptance suite: one test per criterion, each with its own time budget.

A summary line per criterion is printed at the end of the pytest run.
"""

import time
from contextlib import contextmanager
from itertools import combinations
from math import gcd
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from friezes import (ExplicitPolicy, embed, extend_step, is_embeddable,
                     make_choice, restrict, verify_ptolemy)
from friezes.cli import main
from friezes.core import (glide_holds, is_conway_coxeter, local_rule_holds,
                          pattern_rows, scale, tame_check, triangle_frieze)
from friezes.criterion import check_triangle_criterion, check_valuation_condition
from friezes.extender import ExtensionChoice, _Relabelled, admissible_choices
from friezes.numtheory import primes_below
from friezes.oracle import cross_validate, occurs_in_cc
from friezes.triangulation import (Triangulation, enumerate_triangulations, fan,
                                   frieze_of, triangulation_of)

from conftest import DECAGON_CORNER_DIAGONALS

DATA = Path(__file__).resolve().parent.parent / "data"


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, "took %.1fs, budget %ss" % (elapsed, seconds)


def cc_restrictions(n_max):
    seen = set()
    for n in range(3, n_max + 1):
        for t in enumerate_triangulations(n):
            cc = frieze_of(t)
            for k in range(3, n + 1):
                for s in combinations(range(n), k):
                    r = restrict(cc, s)
                    if r not in seen and not is_conway_coxeter(r):
                        seen.add(r)
                        yield r


@pytest.mark.criterion(1, "worked example: golden y vectors")
def test_criterion_1_golden_steps(fig7, worked_steps):
    with budget(1):
        expected = [(5, 1, 3), (3, 1, 7, 3), (1, 1, 11, 5, 2)]
        cur, got = fig7, []
        for step in worked_steps:
            cur, trace = extend_step(cur, make_choice(cur, step["edge"], step["primes"]))
            got.append(trace.y)
        assert got == expected


@pytest.mark.criterion(2, "end-to-end embedding of the (2,26,12,4,2;2) square")
def test_criterion_2_embedding(fig7, worked_steps):
    with budget(1):
        e = embed(fig7)
        assert is_conway_coxeter(e.cc)
        assert restrict(e.cc, e.vertex_map) == fig7
        e = embed(fig7, ExplicitPolicy(worked_steps))
        assert e.cc.n == 10 and restrict(e.cc, e.vertex_map) == fig7
        expected = {tuple(sorted(((a + 7) % 10, (b + 7) % 10)))
                    for a, b in DECAGON_CORNER_DIAGONALS}
        assert set(triangulation_of(e.cc).diagonals) == expected


@pytest.mark.criterion(3, "square (3,3,3,3;3,6) rejected by check and oracle")
def test_criterion_3_rejected_square(capsys):
    with budget(60):
        assert main(["check", str(DATA / "fig5.fwc")]) == 1
        out = capsys.readouterr().out
        assert "valuation_condition\tfail\tp=3" in out
        assert main(["oracle", str(DATA / "fig5.fwc"), "--max-n", "9"]) == 1
        assert capsys.readouterr().out.startswith("not-found")


@pytest.mark.criterion(4, "scaled fans fail the valuation condition exactly at p")
def test_criterion_4_scaled_fans():
    with budget(5):
        for p in (3, 5, 7):
            f = scale(frieze_of(fan(p + 1, 0)), p)
            ok, w = check_valuation_condition(f, [p])
            assert not ok and w.p == p
            for q in primes_below(p):
                assert check_valuation_condition(f, [q])[0]
            report = is_embeddable(f)
            assert report.gcd_ok and report.valuation_witness.p == p


@pytest.mark.criterion(5, "necessity sweep over CC restrictions, N <= 8")
def test_criterion_5_necessity():
    with budget(120):
        assert cross_validate(8, 4) == []
        for n in range(3, 9):
            for t in enumerate_triangulations(n):
                cc = frieze_of(t)
                for i, j, k in combinations(range(n), 3):
                    x, y, z = cc.label(i, j), cc.label(j, k), cc.label(i, k)
                    assert z % gcd(x, y) == 0
                    assert x % gcd(y, z) == 0
                    assert y % gcd(x, z) == 0


@pytest.mark.criterion(6, "triangle criterion agrees with the general one and the oracle")
def test_criterion_6_triangles():
    with budget(120):
        for a in range(1, 13):
            for b in range(1, 13):
                for c in range(1, 13):
                    f = triangle_frieze(a, b, c)
                    assert check_triangle_criterion(a, b, c) == is_embeddable(f).verdict
        for abc in [(1, 1, 1), (2, 2, 2), (3, 3, 6), (2, 3, 4), (4, 4, 8)]:
            found = occurs_in_cc(triangle_frieze(*abc), 9) is not None
            assert found == check_triangle_criterion(*abc), abc


@pytest.mark.criterion(7, "triangulation / CC frieze bijection, N <= 9")
def test_criterion_7_bijection():
    with budget(30):
        counts = []
        for n in range(3, 10):
            ts = list(enumerate_triangulations(n))
            counts.append(len(ts))
            for t in ts:
                f = frieze_of(t)
                assert verify_ptolemy(f).ok and is_conway_coxeter(f)
                assert triangulation_of(f) == t
        assert counts == [1, 2, 5, 14, 42, 132, 429]


def check_step(f, edge, choice):
    g, trace = extend_step(f, choice)
    c0, y0 = f.label(*edge), trace.y0_mod_c0
    assert verify_ptolemy(g).ok
    report = is_embeddable(g)
    assert report.gcd_ok and report.valuation_ok
    assert 0 < y0 < c0 and gcd(y0, c0) == 1
    ctx = _Relabelled(f, edge)
    c, y = ctx.c, trace.y
    for i, j in combinations(range(f.n - 1), 2):
        assert c[i] * y[j] == c[j] * y[i] + ctx.label(i, j)
    v = trace.new_vertex
    assert restrict(g, [u for u in range(g.n) if u != v]) == f


CORPUS_7 = list(cc_restrictions(7))


@st.composite
def random_step(draw):
    f = draw(st.sampled_from(CORPUS_7))
    edges = [e for e in f.edges() if f.label(*e) > 1]
    edge = draw(st.sampled_from(edges))
    per_prime = []
    for lc in admissible_choices(f, edge):
        ip = draw(st.sampled_from(lc.ip_candidates))
        options = lc.lifts(ip)
        per_prime.append(lc.choose(ip, draw(st.sampled_from(options))))
    return f, edge, ExtensionChoice(edge, tuple(per_prime))



@settings(max_examples=400, deadline=None, derandomize=True)
@given(random_step())
def _random_steps(args):
    check_step(*args)


@pytest.mark.criterion(8, "extension-step invariants on all CC restrictions, N <= 7")
def test_criterion_8_step_properties():
    with budget(120):
        for f in CORPUS_7:
            for edge in f.edges():
                if f.label(*edge) > 1:
                    check_step(f, edge, make_choice(f, edge))
        _random_steps()


@pytest.mark.criterion(9, "glide symmetry, local rule and tameness, N <= 7")
def test_criterion_9_pattern():
    with budget(10):
        for n in range(3, 8):
            for t in enumerate_triangulations(n):
                f = frieze_of(t)
                for first in (-n, 0, 1):
                    w = pattern_rows(f, first, 2 * n + 1)
                    assert glide_holds(w)
                    assert local_rule_holds(w)
                    assert tame_check(w)
