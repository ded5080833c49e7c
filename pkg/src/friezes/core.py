"""Friezes with coefficients on convex polygons.

A frieze on an ``n``-gon is a positive integer label on every edge and
diagonal ``{i, j}`` (vertices ``0..n-1`` in cyclic order) such that every
Ptolemy relation

    c[i,k] * c[j,l] == c[i,l] * c[j,k] + c[i,j] * c[k,l]    (i < j < k < l)

holds.  Labels are stored once per unordered pair as a triangular table:
row ``i`` holds ``c[i,i+1], ..., c[i,n-1]``.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import (BadShape, BadSubset, NonPositiveLabel, NonPositiveScalar,
                     PtolemyViolation, WindowTooSmall)


@dataclass(frozen=True)
class Frieze:
    """Labelled polygon.  Construct through :func:`make_frieze` to validate."""

    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        check_shape(self.n, rows)

    def label(self, i: int, j: int) -> int:
        if i == j:
            return 0
        if i > j:
            i, j = j, i
        return self.rows[i][j - i - 1]

    def pairs(self):
        return combinations(range(self.n), 2)

    def labels(self) -> dict:
        return {(i, j): self.label(i, j) for i, j in self.pairs()}

    def edges(self) -> list:
        """Boundary edges ``(a, a+1 mod n)`` in order of ``a``."""
        return [(a, (a + 1) % self.n) for a in range(self.n)]

    def edge_labels(self) -> list:
        return [self.label(a, b) for a, b in self.edges()]

    @classmethod
    def from_labels(cls, n: int, labels) -> "Frieze":
        """Build from a mapping ``{(i, j): value}`` over unordered pairs."""
        def get(i, j):
            return labels[(i, j)] if (i, j) in labels else labels[(j, i)]
        return cls(n, [[get(i, j) for j in range(i + 1, n)]
                       for i in range(n - 1)])


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()


def check_shape(n, rows):
    if not isinstance(n, int) or n < 3:
        raise BadShape("polygon needs at least 3 vertices, got %r" % (n,))
    if len(rows) != n - 1:
        raise BadShape("expected %d rows, got %d" % (n - 1, len(rows)))
    for i, row in enumerate(rows):
        if len(row) != n - 1 - i:
            raise BadShape("row %d has length %d, expected %d"
                           % (i, len(row), n - 1 - i))
        for j, x in enumerate(row):
            if x < 1:
                raise NonPositiveLabel("label c[%d,%d] = %d is not positive"
                                       % (i, i + 1 + j, x))


def verify_ptolemy(f) -> ValidationReport:
    """Check every Ptolemy quadruple exactly; ``f`` may be a Frieze or a
    ``(n, rows)`` pair that has not been validated yet."""
    if not isinstance(f, Frieze):
        f = Frieze(*f)
    c = f.label
    bad = []
    for i, j, k, l in combinations(range(f.n), 4):
        lhs = c(i, k) * c(j, l)
        rhs = c(i, l) * c(j, k) + c(i, j) * c(k, l)
        if lhs != rhs:
            bad.append((i, j, k, l, lhs, rhs))
    return ValidationReport(not bad, tuple(bad))


def make_frieze(n: int, rows) -> Frieze:
    f = Frieze(n, rows)
    report = verify_ptolemy(f)
    if not report.ok:
        i, j, k, l, lhs, rhs = report.violations[0]
        raise PtolemyViolation((i, j, k, l), lhs, rhs)
    return f


def restrict(f: Frieze, vertices) -> Frieze:
    s = list(vertices)
    if len(s) < 3:
        raise BadSubset("a subpolygon needs at least 3 vertices")
    if any(v < 0 or v >= f.n for v in s):
        raise BadSubset("vertex out of range in %s" % (s,))
    if any(a >= b for a, b in zip(s, s[1:])):
        raise BadSubset("vertices must be strictly increasing: %s" % (s,))
    k = len(s)
    return Frieze(k, [[f.label(s[a], s[b]) for b in range(a + 1, k)]
                      for a in range(k - 1)])


def scale(f: Frieze, k: int) -> Frieze:
    if k < 1:
        raise NonPositiveScalar("scalar must be a positive integer")
    return Frieze(f.n, [[k * x for x in row] for row in f.rows])


def is_conway_coxeter(f: Frieze) -> bool:
    return all(x == 1 for x in f.edge_labels())


def rotate(f: Frieze, shift: int) -> Frieze:
    """Relabel so that old vertex ``v`` becomes ``(v - shift) mod n``."""
    n = f.n
    return Frieze.from_labels(
        n, {(i, j): f.label((i + shift) % n, (j + shift) % n)
            for i, j in f.pairs()})


def reflect(f: Frieze) -> Frieze:
    """Reverse the cyclic order: old vertex ``v`` becomes ``n-1-v``."""
    n = f.n
    return Frieze.from_labels(
        n, {(i, j): f.label(n - 1 - i, n - 1 - j) for i, j in f.pairs()})


# -- infinite pattern ---------------------------------------------------------

@dataclass(frozen=True)
class PatternWindow:
    """Rows ``first_row .. first_row + len(rows) - 1`` of the frieze pattern.

    Row ``i`` holds ``c[i,i], c[i,i+1], ..., c[i,i+N]`` where ``N`` is the
    polygon size; the two outer entries are the boundary zeros.
    """

    polygon_size: int
    first_row: int
    rows: tuple

    def has(self, i: int, j: int) -> bool:
        r = i - self.first_row
        return 0 <= r < len(self.rows) and i <= j <= i + self.polygon_size

    def entry(self, i: int, j: int) -> int:
        if not self.has(i, j):
            raise IndexError("entry (%d, %d) lies outside the window" % (i, j))
        return self.rows[i - self.first_row][j - i]

    def row_indices(self):
        return range(self.first_row, self.first_row + len(self.rows))


def pattern_entry(f: Frieze, i: int, j: int) -> int:
    """Entry ``c[i,j]`` of the infinite pattern, for ``i <= j <= i + n``."""
    n = f.n
    if not i <= j <= i + n:
        raise IndexError("(%d, %d) is outside the pattern band" % (i, j))
    if j == i or j == i + n:
        return 0
    # repeated use of c[i,j] = c[j,i+n] reduces every index pair to a polygon pair
    return f.label(i % n, j % n)


def pattern_rows(f: Frieze, first_row: int, row_count: int) -> PatternWindow:
    if row_count < 1:
        raise ValueError("row_count must be at least 1")
    n = f.n
    rows = tuple(tuple(pattern_entry(f, i, j) for j in range(i, i + n + 1))
                 for i in range(first_row, first_row + row_count))
    return PatternWindow(n, first_row, rows)


def det3(m) -> int:
    (a, b, c), (d, e, g), (h, k, l) = m
    return a * (e * l - g * k) - b * (d * l - g * h) + c * (d * k - e * h)


def adjacent_minors(w: PatternWindow, size: int):
    """Yield ``(i, j, matrix)`` for every complete adjacent square submatrix."""
    for i in w.row_indices():
        if not w.has(i + size - 1, i + size - 1):
            continue
        for j in range(i, i + w.polygon_size + 1):
            cells = [(i + r, j + s) for r in range(size) for s in range(size)]
            if all(w.has(a, b) for a, b in cells):
                yield i, j, [[w.entry(i + r, j + s) for s in range(size)]
                             for r in range(size)]


def tame_check(w: PatternWindow) -> bool:
    """True iff every complete adjacent 3x3 determinant of ``w`` vanishes.

    Windows of a triangle hold no complete 3x3 block and are vacuously tame.
    """
    if len(w.rows) < 3:
        raise WindowTooSmall("need at least 3 rows to test tameness")
    return all(det3(m) == 0 for _, _, m in adjacent_minors(w, 3))


def _edge_entry(w: PatternWindow, j: int):
    """``c[j,j+1]`` recovered from the window through the glide symmetry and
    the translation by ``N`` it generates; ``None`` if no row carries it."""
    N = w.polygon_size
    for i in w.row_indices():
        if (i - j) % N == 0:
            return w.entry(i, i + 1)
        if (i - j - 1) % N == 0:
            return w.entry(i, i + N - 1)
    return None


def local_rule_holds(w: PatternWindow) -> bool:
    """Check rule (E) on every complete adjacent 2x2 block of ``w``::

        c[i,j] c[i+1,j+1] - c[i,j+1] c[i+1,j] == c[i+1,i+N] c[j,j+1]

    Blocks whose right-hand side is not recoverable from ``w`` are skipped.
    """
    N = w.polygon_size
    for i, j, ((a, b), (c, d)) in adjacent_minors(w, 2):
        edge = _edge_entry(w, j)
        if edge is None:
            continue
        if a * d - b * c != w.entry(i + 1, i + N) * edge:
            return False
    return True


def glide_holds(w: PatternWindow) -> bool:
    """Check ``c[i,j] == c[j,i+N]`` for every pair materialised in ``w``."""
    N = w.polygon_size
    for i in w.row_indices():
        for j in range(i, i + N + 1):
            if w.has(j, i + N) and w.entry(i, j) != w.entry(j, i + N):
                return False
    return True


def triangle_frieze(a: int, b: int, c: int) -> Frieze:
    """Triangle with edge labels ``c[0,1] = a``, ``c[1,2] = b``, ``c[0,2] = c``."""
    return Frieze(3, [[a, c], [b]])
