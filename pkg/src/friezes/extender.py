"""Constructive embedding of a frieze into a Conway-Coxeter frieze.

One extension step inserts a new vertex into a boundary edge with label
``c0 > 1``.  Internally the polygon is relabelled so that this edge joins
vertex ``n-1`` to vertex ``0``; with ``c[j] = label(j, n-1)`` the new labels
``y[j] = label(j, new)`` are

    y[j] = (c[j] * y[0] + label(0, j)) / c0        (j = 1 .. n-2)

where ``y[0]`` is pinned down modulo ``c0`` one prime power at a time:

* for each prime ``p | c0`` (``ell = v_p(c0)``, ``m = min_j v_p(c[j])``) a
  vertex ``ip`` with ``v_p(c[ip]) = m`` is picked and ``y[ip] mod p`` is
  chosen outside a set of forbidden residues (the sieve);
* this yields ``y[0] mod p**ell``; the residues are combined with the CRT
  and ``y[0]`` is the representative in ``(0, c0)``.

The new boundary edges carry labels ``1`` (towards ``n-1``) and ``y[0]``
(towards ``0``), so the sum of ``label - 1`` over boundary edges strictly
drops and iteration ends with all boundary labels equal to 1.
"""

from dataclasses import dataclass, field, replace
from itertools import product
from math import gcd
from typing import Optional

from .core import Frieze, is_conway_coxeter, restrict, rotate, verify_ptolemy
from .criterion import is_embeddable
from .errors import (EdgeLabelOne, InvalidChoice, NoAdmissibleResidue,
                     NonIntegralY, NotBoundaryEdge, NotEmbeddable,
                     PostconditionFailed, PreconditionUnmet,
                     StepLimitExceeded)
from .numtheory import crt, inverse_mod, prime_factors, valuation
from .triangulation import Triangulation, triangulation_of


@dataclass(frozen=True)
class PrimeLocal:
    """Sieve data for one prime divisor ``p`` of the edge label.

    Vertex indices are those of the input frieze.  ``forbidden`` maps each
    candidate ``ip`` to the residues mod ``p`` ruled out for ``y[ip]``
    (always containing 0).  ``chosen_residue`` is a residue mod ``p**ell``.
    """

    p: int
    ell: int
    m: int
    ip_candidates: tuple
    forbidden: dict = field(compare=True)
    chosen_ip: Optional[int] = None
    chosen_residue: Optional[int] = None

    def admissible(self, ip: Optional[int] = None) -> tuple:
        """Nonzero residues mod p left by the sieve for ``y[ip]``.

        With ``m == 0`` the residue of ``y[0]`` mod ``p**ell`` does not depend
        on ``y[ip]`` at all, so a sieve that leaves nothing is dropped and
        every nonzero residue is admitted.
        """
        ip = self.chosen_ip if ip is None else ip
        out = tuple(r for r in range(1, self.p) if r not in self.forbidden[ip])
        if not out and self.m == 0:
            return tuple(range(1, self.p))
        return out

    def choose(self, ip: int, residue: int) -> "PrimeLocal":
        if ip not in self.ip_candidates:
            raise InvalidChoice("vertex %d is not a candidate for p=%d (candidates %s)"
                                % (ip, self.p, self.ip_candidates))
        residue %= self.p ** self.ell
        if residue % self.p not in self.admissible(ip):
            raise InvalidChoice("residue %d is ruled out for p=%d, ip=%d"
                                % (residue, self.p, ip))
        return replace(self, chosen_ip=ip, chosen_residue=residue)

    def lifts(self, ip: int) -> list:
        """Every admissible residue of ``y[ip]`` modulo ``p**ell``."""
        return [r + k * self.p for r in self.admissible(ip)
                for k in range(self.p ** (self.ell - 1))]


@dataclass(frozen=True)
class ExtensionChoice:
    edge: tuple
    per_prime: tuple


@dataclass(frozen=True)
class ExtensionTrace:
    choice: ExtensionChoice
    y0_mod_c0: int
    y: tuple
    new_vertex: int
    y0_residues: tuple = ()     # (p, ell, y0 mod p**ell) per prime
    order: tuple = ()           # input vertex sitting at each relabelled position


@dataclass(frozen=True)
class Embedding:
    cc: Frieze
    tri: Triangulation
    vertex_map: tuple
    traces: tuple


class _Relabelled:
    """The input frieze seen with the chosen edge as ``(n-1, 0)``."""

    def __init__(self, f: Frieze, edge):
        self.f = f
        self.n = n = f.n
        self.a = edge_start(f, edge)
        self.shift = self.a + 1
        self.g = rotate(f, self.shift)
        self.c0 = self.g.label(0, n - 1)
        self.c = [self.g.label(j, n - 1) for j in range(n - 1)]
        self.order = tuple((r + self.shift) % n for r in range(n))

    def rel(self, v: int) -> int:
        return (v - self.shift) % self.n

    def orig(self, r: int) -> int:
        return self.order[r]

    def label(self, i: int, j: int) -> int:
        return self.g.label(i, j)


def edge_start(f: Frieze, edge) -> int:
    """Return ``a`` such that ``edge`` is the boundary edge ``{a, a+1 mod n}``."""
    u, v = edge
    n = f.n
    if not (0 <= u < n and 0 <= v < n):
        raise NotBoundaryEdge("%s has a vertex outside the %d-gon" % (edge, n))
    if (u + 1) % n == v:
        return u
    if (v + 1) % n == u:
        return v
    raise NotBoundaryEdge("%s is not a boundary edge" % (edge,))


def _exact(x: int, q: int) -> int:
    if x % q:
        raise PreconditionUnmet("%d is not divisible by %d; the gcd condition "
                                "must fail" % (x, q))
    return x // q


def _sieve(ctx: _Relabelled, p: int, m: int, ip: int) -> frozenset:
    """Residues mod p ruled out for ``y[ip]`` (``ip`` relabelled)."""
    q = p ** m
    out = {0}
    for j in range(ctx.n - 1):
        if j == ip:
            continue
        cij = _exact(ctx.label(ip, j), q)
        cj = _exact(ctx.c[j], q)
        if cij % p == 0 or cj % p == 0:
            continue
        r = inverse_mod(cj, p) * cij % p
        out.add(r if j < ip else -r % p)
    return frozenset(out)


def _locals(ctx: _Relabelled) -> list:
    if ctx.c0 == 1:
        raise EdgeLabelOne("edge %s already has label 1" % ((ctx.a, (ctx.a + 1) % ctx.n),))
    out = []
    for p, ell in sorted(prime_factors(ctx.c0).items()):
        m = min(valuation(x, p) for x in ctx.c)
        cands = [i for i, x in enumerate(ctx.c) if valuation(x, p) == m]
        forbidden = {ctx.orig(i): _sieve(ctx, p, m, i) for i in cands}
        local = PrimeLocal(p, ell, m, tuple(sorted(forbidden)), forbidden)
        if not any(local.admissible(ip) for ip in local.ip_candidates):
            raise NoAdmissibleResidue(
                "every nonzero residue mod %d is ruled out; the valuation "
                "condition must fail" % p)
        out.append(local)
    return out


def admissible_choices(f: Frieze, edge) -> list:
    """Per-prime sieve data for extending ``f`` across ``edge``."""
    return _locals(_Relabelled(f, edge))


def y_residue(ctx: _Relabelled, local: PrimeLocal, j: int) -> int:
    """Residue of ``y[j]`` mod ``p**ell`` forced by the choice in ``local``
    (``j`` relabelled).  At ``j == ip`` this returns the chosen residue."""
    p, P, q = local.p, local.p ** local.ell, local.p ** local.m
    ip = ctx.rel(local.chosen_ip)
    y_ip = local.chosen_residue
    if j == ip:
        return y_ip % P
    inv = inverse_mod(ctx.c[ip] // q, P)
    cij = ctx.label(ip, j) // q
    sign = -1 if j < ip else 1
    return inv * (ctx.c[j] // q * y_ip + sign * cij) % P


def _solve_y0(ctx: _Relabelled, choice_locals) -> tuple:
    residues = tuple((lc.p, lc.ell, y_residue(ctx, lc, 0)) for lc in choice_locals)
    y0, mod = crt([r for _, _, r in residues], [p ** e for p, e, _ in residues])
    assert mod == ctx.c0
    return y0, residues


def _check_choice(ctx: _Relabelled, choice: ExtensionChoice) -> tuple:
    fresh = {lc.p: lc for lc in _locals(ctx)}
    given = {lc.p: lc for lc in choice.per_prime}
    if set(given) != set(fresh):
        raise InvalidChoice("choice covers primes %s, edge label needs %s"
                            % (sorted(given), sorted(fresh)))
    return tuple(fresh[p].choose(given[p].chosen_ip, given[p].chosen_residue)
                 for p in sorted(fresh))


def _build(ctx: _Relabelled, y0: int) -> tuple:
    n, c0 = ctx.n, ctx.c0
    if not 0 < y0 < c0 or gcd(y0, c0) != 1:
        raise PostconditionFailed("y0 = %d is not a unit in (0, %d)" % (y0, c0))
    ys = [y0]
    for j in range(1, n - 1):
        num = ctx.c[j] * y0 + ctx.label(0, j)
        if num % c0:
            raise NonIntegralY("y[%d] = %d / %d is not an integer" % (j, num, c0))
        ys.append(num // c0)
    labels = {(i, j): ctx.label(i, j) for i, j in ctx.g.pairs()}
    for j, y in enumerate(ys):
        labels[(j, n)] = y
    labels[(n - 1, n)] = 1
    # relabelled r sits at (r + a + 2) mod (n + 1): old vertices keep their
    # order and the new vertex lands at a + 1
    N = n + 1
    pos = [(r + ctx.a + 2) % N for r in range(N)]
    out = Frieze.from_labels(N, {(pos[i], pos[j]): x for (i, j), x in labels.items()})
    return out, tuple(ys)


def extend_step(f: Frieze, choice: ExtensionChoice) -> tuple:
    """Insert one vertex into ``choice.edge``; returns ``(frieze, trace)``."""
    ctx = _Relabelled(f, choice.edge)
    chosen = _check_choice(ctx, choice)
    y0, residues = _solve_y0(ctx, chosen)
    out, ys = _build(ctx, y0)
    if not verify_ptolemy(out).ok:
        raise PostconditionFailed("extension breaks a Ptolemy relation")
    new_vertex = ctx.a + 1
    keep = [v for v in range(out.n) if v != new_vertex]
    if restrict(out, keep) != f:
        raise PostconditionFailed("extension does not restrict to its input")
    trace = ExtensionTrace(ExtensionChoice(choice.edge, chosen), y0, ys,
                           new_vertex, residues, ctx.order)
    return out, trace


def make_choice(f: Frieze, edge, picks=None) -> ExtensionChoice:
    """Build a choice for ``edge``; ``picks`` maps ``p -> (ip, residue)``.

    Primes missing from ``picks`` get the default: the smallest candidate
    with an admissible residue, and its smallest admissible residue mod p.
    """
    picks = picks or {}
    chosen = []
    for lc in admissible_choices(f, edge):
        if lc.p in picks:
            ip, residue = picks[lc.p]
        else:
            ip = next(i for i in lc.ip_candidates if lc.admissible(i))
            residue = lc.admissible(ip)[0]
        chosen.append(lc.choose(ip, residue))
    return ExtensionChoice(tuple(edge), tuple(chosen))


class DefaultPolicy:
    """Extend the boundary edge ``(a, a+1)`` with label > 1 and smallest ``a``;
    take the smallest candidate vertex and smallest admissible residue."""

    def select_edge(self, f: Frieze, step: int) -> tuple:
        for a, b in f.edges():
            if f.label(a, b) > 1:
                return (a, b)
        return None

    def choose(self, f: Frieze, edge, step: int) -> ExtensionChoice:
        return make_choice(f, edge)


class ExplicitPolicy(DefaultPolicy):
    """Replays explicit steps, then falls back to the default policy.

    Each step is a dict with optional ``"edge"`` and ``"primes"`` (a mapping
    ``p -> (ip, residue)``).
    """

    def __init__(self, steps):
        self.steps = list(steps)

    def select_edge(self, f, step):
        if step < len(self.steps) and self.steps[step].get("edge") is not None:
            return tuple(self.steps[step]["edge"])
        return super().select_edge(f, step)

    def choose(self, f, edge, step):
        picks = self.steps[step].get("primes") if step < len(self.steps) else None
        return make_choice(f, edge, picks)


def step_bound(f: Frieze) -> int:
    return sum(x - 1 for x in f.edge_labels())


def _shift_map(vertex_map, new_vertex):
    return [v if v < new_vertex else v + 1 for v in vertex_map]


def embed(f: Frieze, policy=None) -> Embedding:
    report = is_embeddable(f)
    if not report.verdict:
        raise NotEmbeddable(report)
    policy = policy or DefaultPolicy()
    bound = step_bound(f)
    cur, vmap, traces = f, list(range(f.n)), []
    while not is_conway_coxeter(cur):
        if len(traces) >= bound:
            raise StepLimitExceeded("no Conway-Coxeter frieze after %d steps" % bound)
        step = len(traces)
        edge = policy.select_edge(cur, step)
        cur, trace = extend_step(cur, policy.choose(cur, edge, step))
        vmap = _shift_map(vmap, trace.new_vertex)
        traces.append(trace)
    return Embedding(cur, triangulation_of(cur), tuple(vmap), tuple(traces))


def check_embedding(f: Frieze, e: Embedding) -> bool:
    return (is_conway_coxeter(e.cc)
            and list(e.vertex_map) == sorted(set(e.vertex_map))
            and restrict(e.cc, e.vertex_map) == f)


def enumerate_embeddings(f: Frieze, limit: int, policy=None) -> list:
    """Depth-first search over every choice the construction allows.

    Choices leading to the same new edge label ``y[0]`` produce identical
    extensions and are explored once; results are distinct CC friezes.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    report = is_embeddable(f)
    if not report.verdict:
        raise NotEmbeddable(report)
    policy = policy or DefaultPolicy()
    found, seen = [], set()

    def dfs(cur, vmap, traces):
        if len(found) >= limit:
            return
        if is_conway_coxeter(cur):
            if cur not in seen:
                seen.add(cur)
                found.append(Embedding(cur, triangulation_of(cur),
                                       tuple(vmap), tuple(traces)))
            return
        edge = policy.select_edge(cur, len(traces))
        ctx = _Relabelled(cur, edge)
        locals_ = _locals(ctx)
        options = [[lc.choose(ip, r) for ip in lc.ip_candidates for r in lc.lifts(ip)]
                   for lc in locals_]
        tried = set()
        for combo in product(*options):
            y0, _ = _solve_y0(ctx, combo)
            if y0 in tried:
                continue
            tried.add(y0)
            nxt, trace = extend_step(cur, ExtensionChoice(tuple(edge), combo))
            dfs(nxt, _shift_map(vmap, trace.new_vertex), traces + [trace])
            if len(found) >= limit:
                return

    dfs(f, list(range(f.n)), [])
    return found
