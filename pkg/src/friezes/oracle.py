"""Brute-force search for a frieze inside Conway-Coxeter friezes.

Used as ground truth against the arithmetic criterion: every triangulation of
every polygon up to a size cap is turned into its Conway-Coxeter frieze and
every vertex subset is compared with the query under all dihedral placements.
"""

import os
from dataclasses import dataclass
from itertools import combinations

from .core import Frieze, restrict
from .criterion import is_embeddable
from .errors import CapExceeded
from .triangulation import Triangulation, enumerate_triangulations, frieze_of

DEFAULT_ORACLE_CAP = 12
CROSS_VALIDATE_CAP = 9


def oracle_cap() -> int:
    return int(os.environ.get("FRIEZES_ORACLE_CAP", DEFAULT_ORACLE_CAP))


@dataclass(frozen=True)
class OccurrenceWitness:
    """``vertex_subset[placement(v)]`` is where query vertex ``v`` lands, with
    ``placement(v) = (offset + v) mod k``, or ``(offset - v) mod k`` when
    ``reflected``."""

    n_cc: int
    tri: Triangulation
    vertex_subset: tuple
    offset: int
    reflected: bool

    def place(self, v: int) -> int:
        k = len(self.vertex_subset)
        pos = (self.offset - v) % k if self.reflected else (self.offset + v) % k
        return self.vertex_subset[pos]


def _placements(k: int):
    for reflected in (False, True):
        for offset in range(k):
            yield offset, reflected


def matches(cc: Frieze, subset, f: Frieze, offset: int, reflected: bool) -> bool:
    k = f.n
    sign = -1 if reflected else 1
    pos = [subset[(offset + sign * v) % k] for v in range(k)]
    return all(cc.label(pos[u], pos[v]) == f.label(u, v) for u, v in f.pairs())


def verify_witness(f: Frieze, w: OccurrenceWitness) -> bool:
    cc = frieze_of(w.tri)
    sub = restrict(cc, w.vertex_subset)
    return matches(sub, list(range(f.n)), f, w.offset, w.reflected)


def occurs_in_cc(f: Frieze, n_max: int, cap=None):
    """First occurrence of ``f`` in a Conway-Coxeter frieze on at most
    ``n_max`` vertices, in canonical search order, or ``None``."""
    cap = oracle_cap() if cap is None else cap
    if n_max > cap:
        raise CapExceeded("n_max = %d exceeds the oracle cap %d" % (n_max, cap))
    k = f.n
    target = sorted(f.label(i, j) for i, j in f.pairs())
    top = target[-1]
    for N in range(k, n_max + 1):
        for t in enumerate_triangulations(N, cap=max(cap, N)):
            cc = frieze_of(t)
            for subset in combinations(range(N), k):
                labels = sorted(cc.label(i, j) for i, j in combinations(subset, 2))
                if labels[-1] != top or labels != target:
                    continue
                for offset, reflected in _placements(k):
                    if matches(cc, subset, f, offset, reflected):
                        return OccurrenceWitness(N, t, subset, offset, reflected)
    return None


def cross_validate(n_max: int, k_max: int, corpus=()) -> list:
    """Compare the criterion with exhaustion; returns the mismatches found.

    Every restriction of every Conway-Coxeter frieze with at most ``n_max``
    vertices onto 3..``k_max`` vertices must pass the criterion, and no
    frieze of ``corpus`` (all expected to fail it) may occur up to ``n_max``.
    """
    if n_max > CROSS_VALIDATE_CAP:
        raise CapExceeded("cross validation is capped at n_max = %d"
                          % CROSS_VALIDATE_CAP)
    k_max = min(k_max, n_max)
    mismatches = []
    for N in range(3, n_max + 1):
        for t in enumerate_triangulations(N):
            cc = frieze_of(t)
            for k in range(3, k_max + 1):
                for s in combinations(range(N), k):
                    if not is_embeddable(restrict(cc, s)).verdict:
                        mismatches.append(("rejected", t, s))
    for f in corpus:
        if is_embeddable(f).verdict:
            mismatches.append(("corpus frieze passes the criterion", f))
        w = occurs_in_cc(f, n_max)
        if w is not None:
            mismatches.append(("found", f, w))
    return mismatches
