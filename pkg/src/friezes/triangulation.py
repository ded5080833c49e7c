"""Triangulations of convex polygons and the Conway-Coxeter bijection."""

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .core import Frieze, is_conway_coxeter, verify_ptolemy
from .errors import (BadApex, BadTriangulation, CapExceeded,
                     InternalInconsistency, NotATriangulation,
                     NotConwayCoxeter)

DEFAULT_CAP = 14


def enumeration_cap() -> int:
    return int(os.environ.get("FRIEZES_ENUM_CAP", DEFAULT_CAP))


def is_diagonal(n: int, i: int, j: int) -> bool:
    return 0 <= i < n and 0 <= j < n and (j - i) % n not in (0, 1, n - 1)


def crosses(d, e) -> bool:
    """Whether two chords ``d = (a, b)`` and ``e = (c, d)`` cross in the interior."""
    a, b = sorted(d)
    c, x = sorted(e)
    return a < c < b < x or c < a < x < b


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: tuple

    def __post_init__(self):
        diags = tuple(sorted(tuple(sorted(d)) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        n = self.n
        if n < 3:
            raise BadTriangulation("polygon needs at least 3 vertices")
        if len(set(diags)) != len(diags):
            raise BadTriangulation("repeated diagonal")
        for i, j in diags:
            if not is_diagonal(n, i, j):
                raise BadTriangulation("(%d, %d) is not a diagonal" % (i, j))
        if len(diags) != n - 3:
            raise BadTriangulation("expected %d diagonals, got %d"
                                   % (n - 3, len(diags)))
        for d, e in combinations(diags, 2):
            if crosses(d, e):
                raise BadTriangulation("diagonals %s and %s cross" % (d, e))

    @classmethod
    def _trusted(cls, n, diagonals):
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "diagonals", diagonals)
        return t

    def triangles(self) -> list:
        """The ``n - 2`` triangles as sorted vertex triples."""
        n = self.n
        adj = {v: {(v - 1) % n, (v + 1) % n} for v in range(n)}
        for i, j in self.diagonals:
            adj[i].add(j)
            adj[j].add(i)
        return [(a, b, c) for a, b, c in combinations(range(n), 3)
                if b in adj[a] and c in adj[b] and c in adj[a]]


@lru_cache(maxsize=None)
def _interval(a: int, b: int) -> tuple:
    """All triangulations of the sub-polygon ``a, a+1, ..., b`` with the
    chord ``(a, b)`` as an outer side, each as an unsorted diagonal tuple."""
    if b - a < 2:
        return ((),)
    out = []
    for k in range(a + 1, b):
        own = []
        if k - a >= 2:
            own.append((a, k))
        if b - k >= 2:
            own.append((k, b))
        for left in _interval(a, k):
            for right in _interval(k, b):
                out.append(tuple(own) + left + right)
    return tuple(out)


def enumerate_triangulations(n: int, cap=None):
    """Yield every triangulation of the ``n``-gon once, ordered
    lexicographically by sorted diagonal list."""
    cap = enumeration_cap() if cap is None else cap
    if n < 3:
        raise BadTriangulation("polygon needs at least 3 vertices")
    if n > cap:
        raise CapExceeded("n = %d exceeds the enumeration cap %d" % (n, cap))
    keys = sorted(tuple(sorted(d)) for d in _interval(0, n - 1))
    for diags in keys:
        yield Triangulation._trusted(n, diags)


def fan(n: int, apex: int) -> Triangulation:
    if n < 3:
        raise BadTriangulation("polygon needs at least 3 vertices")
    if not 0 <= apex < n:
        raise BadApex("apex %d is not a vertex of the %d-gon" % (apex, n))
    return Triangulation(n, [(apex, j) for j in range(n)
                             if is_diagonal(n, apex, j)])


def quiddity(t: Triangulation) -> tuple:
    q = [1] * t.n
    for i, j in t.diagonals:
        q[i] += 1
        q[j] += 1
    return tuple(q)


def frieze_of(t: Triangulation) -> Frieze:
    """Conway-Coxeter frieze of a triangulation, via the quiddity recurrence
    ``c[i,j+1] = q[j] c[i,j] - c[i,j-1]``."""
    n = t.n
    q = quiddity(t)
    labels = {}
    for i in range(n):
        prev, cur = 0, 1
        for k in range(1, n):
            j = (i + k) % n
            labels[(i, j)] = cur
            prev, cur = cur, q[j] * cur - prev
        if cur != 0:
            raise InternalInconsistency("row %d does not close with 0" % i)
    for i, j in combinations(range(n), 2):
        if labels[(i, j)] != labels[(j, i)] or labels[(i, j)] < 1:
            raise InternalInconsistency("bad label at (%d, %d)" % (i, j))
    f = Frieze.from_labels(n, {(i, j): labels[(i, j)]
                               for i, j in combinations(range(n), 2)})
    if not verify_ptolemy(f).ok:
        raise InternalInconsistency("quiddity frieze breaks a Ptolemy relation")
    ones = {(i, j) for i, j in f.pairs()
            if f.label(i, j) == 1 and is_diagonal(n, i, j)}
    if ones != set(t.diagonals):
        raise InternalInconsistency("label-1 diagonals differ from the triangulation")
    return f


def triangulation_of(f: Frieze) -> Triangulation:
    if not is_conway_coxeter(f):
        raise NotConwayCoxeter("boundary edges are not all labelled 1")
    diags = [(i, j) for i, j in f.pairs()
             if is_diagonal(f.n, i, j) and f.label(i, j) == 1]
    try:
        return Triangulation(f.n, diags)
    except BadTriangulation as exc:
        raise NotATriangulation(str(exc)) from exc
