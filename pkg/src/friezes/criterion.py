"""Arithmetic criterion for a frieze to sit inside a Conway-Coxeter frieze.

Two conditions are checked:

* gcd condition -- on every triangle ``(a, b, c)`` the three pairwise gcds
  coincide;
* valuation condition -- for every prime ``p < n`` no ``(p+1)``-subpolygon
  has all of its labels sharing one p-valuation ``m >= 1``.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional

from .core import Frieze
from .errors import PreconditionUnmet
from .numtheory import is_prime, primes_below, valuation


@dataclass(frozen=True)
class GcdWitness:
    vertices: tuple
    gcds: tuple


@dataclass(frozen=True)
class ValuationWitness:
    p: int
    vertices: tuple
    m: int


@dataclass(frozen=True)
class CriterionReport:
    gcd_ok: bool
    valuation_ok: bool
    gcd_witness: Optional[GcdWitness] = None
    valuation_witness: Optional[ValuationWitness] = None

    @property
    def verdict(self) -> bool:
        return self.gcd_ok and self.valuation_ok


def triangle_gcds(a: int, b: int, c: int) -> tuple:
    return gcd(a, b), gcd(b, c), gcd(a, c)


def check_gcd_condition(f: Frieze):
    c = f.label
    for i, j, k in combinations(range(f.n), 3):
        g = triangle_gcds(c(i, j), c(j, k), c(i, k))
        if not g[0] == g[1] == g[2]:
            return False, GcdWitness((i, j, k), g)
    return True, None


def _uniform_clique(f: Frieze, p: int, size: int):
    """Lexicographically first vertex set of ``size`` whose pairwise labels all
    have the same positive p-valuation, or ``None``."""
    n = f.n
    nu = {}
    for i, j in f.pairs():
        x = f.label(i, j)
        if x % p == 0:
            nu[(i, j)] = nu[(j, i)] = valuation(x, p)
    # a violating set is a clique in the p-divisibility graph
    candidates = [v for v in range(n)
                  if sum(1 for w in range(n) if (v, w) in nu) >= size - 1]

    def extend(chosen, m, start):
        if len(chosen) == size:
            return tuple(chosen), m
        for idx in range(start, len(candidates)):
            if len(chosen) + len(candidates) - idx < size:
                break
            v = candidates[idx]
            if chosen:
                vals = {nu.get((u, v)) for u in chosen}
                if None in vals or len(vals) != 1 or (m is not None and m not in vals):
                    continue
                m_next = vals.pop()
            else:
                m_next = None
            found = extend(chosen + [v], m_next, idx + 1)
            if found:
                return found
        return None

    return extend([], None, 0)


def check_valuation_condition(f: Frieze, primes=None):
    """Returns ``(ok, witness)``; ``primes`` restricts the primes examined
    (default: every prime below ``f.n``)."""
    labels = [f.label(i, j) for i, j in f.pairs()]
    for p in (primes_below(f.n) if primes is None else sorted(primes)):
        if p >= f.n or not any(x % p == 0 for x in labels):
            continue
        found = _uniform_clique(f, p, p + 1)
        if found:
            vertices, m = found
            return False, ValuationWitness(p, vertices, m)
    return True, None


def is_embeddable(f: Frieze) -> CriterionReport:
    gcd_ok, gw = check_gcd_condition(f)
    val_ok, vw = check_valuation_condition(f)
    return CriterionReport(gcd_ok, val_ok, gw, vw)


def check_triangle_criterion(a: int, b: int, c: int) -> bool:
    """Closed-form test for a single triangle with labels ``a, b, c``."""
    if min(a, b, c) < 1:
        raise ValueError("labels must be positive")
    g = triangle_gcds(a, b, c)
    if not g[0] == g[1] == g[2]:
        return False
    nus = {valuation(a, 2), valuation(b, 2), valuation(c, 2)}
    return nus == {0} or len(nus) > 1


def pm_divisibility(f: Frieze, p: int, s) -> tuple:
    """Return ``(m, ok)`` where ``m`` is the common p-valuation of the labels
    inside ``s`` and ``ok`` says whether ``p**m`` divides every label of ``f``.

    On inputs meeting the preconditions ``ok`` is always true; ``False`` would
    be a counterexample.
    """
    s = sorted(set(s))
    if not is_prime(p):
        raise PreconditionUnmet("%d is not prime" % p)
    if len(s) != p + 1 or any(not 0 <= v < f.n for v in s):
        raise PreconditionUnmet("need p + 1 = %d distinct vertices" % (p + 1))
    if not check_gcd_condition(f)[0]:
        raise PreconditionUnmet("gcd condition fails")
    vals = {valuation(f.label(u, v), p) for u, v in combinations(s, 2)}
    if len(vals) != 1:
        raise PreconditionUnmet("labels in %s have p-valuations %s"
                                % (s, sorted(vals)))
    m = vals.pop()
    q = p ** m
    return m, all(f.label(i, j) % q == 0 for i, j in f.pairs())
