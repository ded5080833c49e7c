"""JSON documents: fwc-v1 (friezes), tri-v1 (triangulations), embedding-v1,
and choices-v1 (explicit extension choices).

Labels and other unbounded integers travel as decimal strings.  Serialisation
is canonical: fixed key order, ``", "`` / ``": "`` separators, no other
whitespace, one trailing newline.
"""

import json
import re

from .core import Frieze, make_frieze, restrict
from .errors import (BadShape, BadTriangulation, FriezeError, NonPositiveLabel,
                     ParseError, PtolemyViolation, ValidationError)
from .extender import Embedding, ExtensionTrace
from .triangulation import Triangulation

FWC = "fwc-v1"
TRI = "tri-v1"
EMBEDDING = "embedding-v1"
EMBEDDINGS = "embeddings-v1"
CHOICES = "choices-v1"

_DECIMAL = re.compile(r"[1-9][0-9]*\Z")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=True) + "\n"


def _load(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, "line %d column %d" % (exc.lineno, exc.colno))


def _expect(cond, reason, where):
    if not cond:
        raise ParseError(reason, where)


def _decimal(s, where) -> int:
    _expect(isinstance(s, str) and _DECIMAL.match(s) is not None,
            "expected a positive decimal string, got %r" % (s,), where)
    return int(s)


def _int(x, where) -> int:
    _expect(isinstance(x, int) and not isinstance(x, bool),
            "expected an integer, got %r" % (x,), where)
    return x


def _tag(doc, tag):
    _expect(isinstance(doc, dict), "expected a JSON object", "$")
    _expect(doc.get("format") == tag,
            "format tag must be %r, got %r" % (tag, doc.get("format")), "$.format")


# -- friezes ------------------------------------------------------------------

def frieze_doc(f: Frieze) -> dict:
    return {"format": FWC, "n": f.n,
            "rows": [[str(x) for x in row] for row in f.rows]}


def frieze_from_doc(doc, validate=True, where="$") -> Frieze:
    _tag(doc, FWC)
    n = _int(doc.get("n"), where + ".n")
    rows = doc.get("rows")
    _expect(isinstance(rows, list), "rows must be a list", where + ".rows")
    parsed = []
    for i, row in enumerate(rows):
        _expect(isinstance(row, list), "row must be a list", "%s.rows[%d]" % (where, i))
        parsed.append([_decimal(s, "%s.rows[%d][%d]" % (where, i, j))
                       for j, s in enumerate(row)])
    try:
        return make_frieze(n, parsed) if validate else Frieze(n, parsed)
    except PtolemyViolation as exc:
        raise ValidationError("Ptolemy relation fails at quadruple %s: %d != %d"
                              % (exc.quad, exc.lhs, exc.rhs)) from exc
    except (BadShape, NonPositiveLabel) as exc:
        raise ValidationError(str(exc)) from exc


def parse_frieze(text, validate=True) -> Frieze:
    return frieze_from_doc(_load(text), validate)


def serialize_frieze(f: Frieze) -> str:
    return dumps(frieze_doc(f))


# -- triangulations -----------------------------------------------------------

def triangulation_doc(t: Triangulation) -> dict:
    return {"format": TRI, "n": t.n, "diagonals": [list(d) for d in t.diagonals]}


def triangulation_from_doc(doc, where="$") -> Triangulation:
    _tag(doc, TRI)
    n = _int(doc.get("n"), where + ".n")
    diags = doc.get("diagonals")
    _expect(isinstance(diags, list), "diagonals must be a list", where + ".diagonals")
    pairs = []
    for k, d in enumerate(diags):
        at = "%s.diagonals[%d]" % (where, k)
        _expect(isinstance(d, list) and len(d) == 2, "expected [i, j]", at)
        i, j = _int(d[0], at), _int(d[1], at)
        _expect(i < j, "expected i < j", at)
        pairs.append((i, j))
    _expect(pairs == sorted(pairs), "diagonals must be sorted", where + ".diagonals")
    try:
        return Triangulation(n, pairs)
    except BadTriangulation as exc:
        raise ValidationError(str(exc)) from exc


def parse_triangulation(text) -> Triangulation:
    return triangulation_from_doc(_load(text))


def serialize_triangulation(t: Triangulation) -> str:
    return dumps(triangulation_doc(t))


def parse_any(text):
    """Parse either a frieze or a triangulation document."""
    doc = _load(text)
    if isinstance(doc, dict) and doc.get("format") == TRI:
        return triangulation_from_doc(doc)
    return frieze_from_doc(doc)


# -- embeddings ---------------------------------------------------------------

def trace_doc(t: ExtensionTrace) -> dict:
    return {
        "edge": list(t.choice.edge),
        "primes": [{"p": str(lc.p), "ell": lc.ell, "m": lc.m,
                    "ip": lc.chosen_ip, "residue": str(lc.chosen_residue),
                    "y0_residue": str(r)}
                   for lc, (_, _, r) in zip(t.choice.per_prime, t.y0_residues)],
        "y0": str(t.y0_mod_c0),
        "y": [str(y) for y in t.y],
        "new_vertex": t.new_vertex,
    }


def embedding_doc(f: Frieze, e: Embedding) -> dict:
    return {
        "format": EMBEDDING,
        "input": frieze_doc(f),
        "cc": frieze_doc(e.cc),
        "triangulation": triangulation_doc(e.tri),
        "vertex_map": list(e.vertex_map),
        "traces": [trace_doc(t) for t in e.traces],
    }


def serialize_embedding(f: Frieze, e: Embedding) -> str:
    return dumps(embedding_doc(f, e))


def serialize_embeddings(f: Frieze, es) -> str:
    return dumps({"format": EMBEDDINGS,
                  "embeddings": [embedding_doc(f, e) for e in es]})


def load_embedding(text) -> dict:
    """Parse and re-validate an embedding document.

    Returns a dict with the input frieze, the CC frieze, the triangulation,
    the vertex map and the raw traces.
    """
    doc = _load(text)
    _tag(doc, EMBEDDING)
    f = frieze_from_doc(doc.get("input"), where="$.input")
    cc = frieze_from_doc(doc.get("cc"), where="$.cc")
    tri = triangulation_from_doc(doc.get("triangulation"), where="$.triangulation")
    vmap = doc.get("vertex_map")
    _expect(isinstance(vmap, list), "vertex_map must be a list", "$.vertex_map")
    vmap = [_int(v, "$.vertex_map[%d]" % k) for k, v in enumerate(vmap)]
    if tri.n != cc.n or any(cc.label(i, j) != 1 for i, j in tri.diagonals):
        raise ValidationError("triangulation does not belong to the CC frieze")
    try:
        ok = len(vmap) == f.n and restrict(cc, vmap) == f
    except FriezeError:
        ok = False
    if not ok or any(x != 1 for x in cc.edge_labels()):
        raise ValidationError("embedded restriction does not reproduce the input")
    return {"input": f, "cc": cc, "triangulation": tri,
            "vertex_map": tuple(vmap), "traces": doc.get("traces", [])}


# -- choices ------------------------------------------------------------------

def parse_choices(text) -> list:
    """Parse a choices-v1 document into steps for ``ExplicitPolicy``.

    ``{"format": "choices-v1", "steps": [{"edge": [3, 0], "primes":
    {"2": {"ip": 2, "residue": "1"}}}, ...]}``
    """
    doc = _load(text)
    _tag(doc, CHOICES)
    steps = doc.get("steps")
    _expect(isinstance(steps, list), "steps must be a list", "$.steps")
    out = []
    for k, step in enumerate(steps):
        at = "$.steps[%d]" % k
        _expect(isinstance(step, dict), "step must be an object", at)
        edge = step.get("edge")
        if edge is not None:
            _expect(isinstance(edge, list) and len(edge) == 2, "edge must be [a, b]",
                    at + ".edge")
            edge = (_int(edge[0], at + ".edge"), _int(edge[1], at + ".edge"))
        primes = {}
        for p, pick in (step.get("primes") or {}).items():
            pat = "%s.primes.%s" % (at, p)
            _expect(isinstance(pick, dict), "expected {ip, residue}", pat)
            residue = pick.get("residue")
            if isinstance(residue, int) and not isinstance(residue, bool):
                residue = str(residue)
            _expect(isinstance(residue, str) and residue.isdigit(),
                    "residue must be a decimal", pat + ".residue")
            primes[_decimal(p, pat)] = (_int(pick.get("ip"), pat + ".ip"), int(residue))
        out.append({"edge": edge, "primes": primes})
    return out
