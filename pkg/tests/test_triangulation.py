import pytest

from friezes import (Frieze, Triangulation, enumerate_triangulations, fan, frieze_of,
                     is_conway_coxeter, make_frieze, quiddity,
                     triangulation_of, verify_ptolemy)
from friezes.errors import (BadApex, BadTriangulation, CapExceeded,
                            NotATriangulation, NotConwayCoxeter)
from friezes.triangulation import crosses


def catalan(k):
    c = [1]
    for m in range(k):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[k]


def test_catalan_oracle():
    assert [catalan(k) for k in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@pytest.mark.parametrize("n", range(3, 13))
def test_enumeration_counts(n):
    ts = list(enumerate_triangulations(n))
    assert len(ts) == catalan(n - 2)
    keys = [t.diagonals for t in ts]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_enumeration_small():
    assert [t.diagonals for t in enumerate_triangulations(3)] == [()]
    assert [t.diagonals for t in enumerate_triangulations(4)] == [((0, 2),), ((1, 3),)]


def test_enumerated_are_valid():
    for t in enumerate_triangulations(9):
        Triangulation(t.n, t.diagonals)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_triangulations(15))
    with pytest.raises(CapExceeded):
        next(enumerate_triangulations(8, cap=7))


def test_enumeration_cap_env(monkeypatch):
    monkeypatch.setenv("FRIEZES_ENUM_CAP", "6")
    with pytest.raises(CapExceeded):
        next(enumerate_triangulations(7))


@pytest.mark.parametrize("diags", [
    [(0, 2), (1, 3)],        # crossing
    [(0, 1)],                # an edge
    [(0, 2), (0, 2)],        # repeated
    [],                      # too few
])
def test_triangulation_invariants(diags):
    with pytest.raises(BadTriangulation):
        Triangulation(4, diags)


def test_fan():
    assert fan(12, 0).diagonals == tuple((0, j) for j in range(2, 11))
    assert fan(4, 1).diagonals == ((1, 3),)
    assert fan(6, 1).diagonals == ((1, 3), (1, 4), (1, 5))
    with pytest.raises(BadApex):
        fan(5, 5)


def test_quiddity():
    assert quiddity(fan(6, 1)) == (1, 4, 1, 2, 2, 2)
    assert quiddity(Triangulation(4, [(0, 2)])) == (2, 1, 2, 1)
    for n in range(3, 10):
        for t in enumerate_triangulations(n):
            q = quiddity(t)
            assert sum(q) == 3 * (n - 2) and min(q) >= 1
            # triangles through each vertex, counted directly
            tri = t.triangles()
            assert len(tri) == n - 2
            assert q == tuple(sum(v in x for x in tri) for v in range(n))


def test_frieze_of_examples():
    f = frieze_of(fan(6, 1))
    assert (f.label(2, 4), f.label(2, 5), f.label(0, 2)) == (2, 3, 4)
    sq = frieze_of(Triangulation(4, [(0, 2)]))
    assert (sq.label(0, 2), sq.label(1, 3)) == (1, 2)
    assert set(frieze_of(Triangulation(3, [])).labels().values()) == {1}


def test_triangulation_of_examples():
    assert triangulation_of(frieze_of(fan(6, 1))) == fan(6, 1)
    assert triangulation_of(frieze_of(Triangulation(4, [(0, 2)]))).diagonals == ((0, 2),)


def test_triangulation_of_errors(fig7):
    with pytest.raises(NotConwayCoxeter):
        triangulation_of(fig7)
    # all-ones pentagon table: not a frieze, its label-1 diagonals cross
    corrupt = Frieze(5, [[1, 1, 1, 1], [1, 1, 1], [1, 1], [1]])
    with pytest.raises(NotATriangulation):
        triangulation_of(corrupt)


@pytest.mark.parametrize("n", range(3, 10))
def test_bijection_round_trip(n):
    for t in enumerate_triangulations(n):
        f = frieze_of(t)
        assert verify_ptolemy(f).ok and is_conway_coxeter(f)
        assert triangulation_of(f) == t


@pytest.mark.parametrize("n", range(4, 13))
def test_fan_label_law(n):
    for apex in range(n):
        t = fan(n, apex)
        f = frieze_of(t)
        for i, j in f.pairs():
            crossed = sum(crosses((i, j), d) for d in t.diagonals)
            assert f.label(i, j) == 1 + crossed


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_fan_max_label(p):
    for apex in (0, p // 2):
        assert max(frieze_of(fan(p + 1, apex)).labels().values()) == p - 1
