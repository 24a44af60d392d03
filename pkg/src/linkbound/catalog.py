"""
Built-in link diagrams with independently derived invariant values, and
ingestion of user diagram files.

PD codes below are frozen.  Crossing signs follow the Knot Atlas
convention (see :mod:`linkbound.diagram`); the atlas PD codes for 3_1 and
5_1 coincide with the closures of the negative braids s1^-3 and s1^-5,
which is how the chirality was calibrated.

Every expected value carries a note naming how it was obtained without
the Fox-matrix pipeline.
"""

from dataclasses import dataclass, field
import os
import re

from .diagram import parse_pd
from .errors import CatalogLookupError, IngestError, LinkboundError

__all__ = ["CatalogEntry", "Expected", "CATALOG", "REQUIRED", "lookup", "names", "split_line",
           "ingest", "resolve"]


@dataclass(frozen=True)
class Expected:
    alexander: str
    determinant: int
    r: int
    m_q: int
    linking: tuple
    provenance: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    diagram: object
    alt_diagrams: tuple = ()
    expected: Expected = None
    description: str = ""


SNF_NOTE = "sympy smith_normal_form over QQ[t] of the Fox matrix (tests/test_catalog.py)"

_RAW = [
    ("unknot", "U1", ["X(1,2,2,1)", "X(2,2,1,1)"],
     ("1", 1, 0, 0, ((0,),)),
     {"alexander": "trivial: no relators, the 0x1 Fox matrix has the single minor 1",
      "r": "trivial: one generator, no relators",
      "m_q": "trivial: cokernel free of rank 1, minus the base-point summand"},
     "crossingless unknot; alternates are one-crossing curls"),
    ("unlink2", "U2", ["X(1,3,2,4) X(2,3,1,4)"],
     ("0", 0, 1, 1, ((0, 0), (0, 0))),
     {"alexander": "free group of rank 2: 0x2 matrix has no 1x1 minors, empty gcd 0",
      "r": "free presentation: n - 1 - 0 = 1",
      "m_q": "cokernel free of rank 2, minus 1"},
     "2-component unlink; alternate is the closure of s1 s1^-1"),
    ("unlink3", "U3", ["X(1,5,2,6) X(2,5,3,6) X(7,4,8,3) X(8,4,7,1)"],
     ("0", 0, 2, 2, ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
     {"alexander": "free group of rank 3",
      "r": "free presentation: 3 - 1 - 0 = 2",
      "m_q": "cokernel free of rank 3, minus 1"},
     "3-component unlink; alternate is the closure of s1 s1^-1 s2 s2^-1"),
    ("hopf", "X(1,3,2,4) X(3,1,4,2)", ["X(1,5,2,6) X(2,4,3,3) X(5,1,6,4)"],
     ("t - 1", 2, 0, 1, ((0, 1), (1, 0))),
     {"alexander": "hand Fox calculus on the commutator relator: row [1 - t, t - 1]; "
                   "Seifert matrix [[-1]] gives det(V - tV^T) = t - 1",
      "linking": "two positive crossings between the components (closure of s1^2)",
      "m_q": "module Q[t^±1]/(t - 1) is cyclic"},
     "positive Hopf link, closure of s1^2"),
    ("hopf_neg", "X(1,4,2,3) X(3,2,4,1)", ["X(1,6,2,3) X(4,3,5,4) X(5,2,6,1)"],
     ("t - 1", 2, 0, 1, ((0, -1), (-1, 0))),
     {"alexander": "mirror of the positive Hopf link; Delta(t^-1) ≐ Delta(t)",
      "linking": "two negative crossings between the components",
      "m_q": "module Q[t^±1]/(t - 1) is cyclic"},
     "negative Hopf link"),
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", ["X(1,2,2,3) X(3,6,4,7) X(5,8,6,1) X(7,4,8,5)"],
     ("t^2 - t + 1", 3, 0, 1, ((0,),)),
     {"alexander": "Seifert matrix V = [[-1,1],[0,-1]]: det(V - tV^T) = t^2 - t + 1",
      "determinant": "|Delta(-1)| = 3, atlas value for 3_1",
      "m_q": "Delta is squarefree, so the module is cyclic"},
     "left-handed trefoil (Knot Atlas 3_1, writhe -3); alternate adds one R1 curl"),
    ("trefoil_right", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", ["X(1,7,2,6) X(3,1,4,8) X(5,5,6,4) X(7,3,8,2)"],
     ("t^2 - t + 1", 3, 0, 1, ((0,),)),
     {"alexander": "mirror of the left-handed trefoil; same Seifert-matrix oracle",
      "m_q": "Delta is squarefree, so the module is cyclic"},
     "right-handed trefoil, closure of s1^3"),
    ("figure8", "X(2,7,3,8) X(4,2,5,1) X(6,3,7,4) X(8,6,1,5)", ["X(1,7,2,6) X(3,8,4,1) X(5,3,6,2) X(7,4,8,5)"],
     ("t^2 - 3*t + 1", 5, 0, 1, ((0,),)),
     {"alexander": "Seifert matrix V = [[-1,1],[0,1]]: det(V - tV^T) ≐ t^2 - 3t + 1",
      "determinant": "atlas value 5 for 4_1",
      "m_q": "Delta is squarefree, so the module is cyclic"},
     "figure-eight knot (Knot Atlas 4_1); alternate is the closure of (s1 s2^-1)^2"),
    ("whitehead", "X(2,10,3,9) X(4,5,1,6) X(6,1,7,2) X(8,4,9,3) X(10,7,5,8)",
     ["X(2,12,3,11) X(4,7,1,8) X(5,7,6,6) X(8,1,9,2) X(10,4,11,3) X(12,9,5,10)"],
     ("t^3 - 3*t^2 + 3*t - 1", 8, 0, 1, ((0, 0), (0, 0))),
     {"alexander": "hand-derived Wirtinger relators evaluated with sympy "
                   "(tests/test_acceptance.py); agrees with Conway polynomial z^3",
      "linking": "signed inter-component crossings, in PD order: +1 -1 -1 +1",
      "m_q": SNF_NOTE},
     "Whitehead link (Knot Atlas L5a1)"),
    ("torus_2_4", "X(1,5,2,8) X(3,7,4,6) X(5,3,6,2) X(7,1,8,4)", ["X(1,7,2,10) X(3,4,4,5) X(5,9,6,8) X(7,3,8,2) X(9,1,10,6)"],
     ("t^3 - t^2 + t - 1", 4, 0, 1, ((0, 2), (2, 0))),
     {"alexander": "Seifert matrix of the closure of s1^4 (3x3, -1 diagonal, 1 superdiagonal): "
                   "det(V - tV^T) = (t - 1)(t^2 + 1)",
      "linking": "four positive crossings between the components",
      "m_q": SNF_NOTE},
     "(2,4)-torus link with parallel strands, closure of s1^4"),
    ("torus_2_4_anti", "X(2,5,3,6) X(4,7,1,8) X(6,1,7,2) X(8,3,5,4)", ["X(3,3,4,2) X(4,7,5,8) X(6,9,1,10) X(8,1,9,2) X(10,5,7,6)"],
     ("2*t - 2", 4, 0, 1, ((0, -2), (-2, 0))),
     {"alexander": "Seifert surface is an annulus with two full twists, V = [[-2]]: "
                   "det(V - tV^T) = 2t - 2 (integer content kept)",
      "m_q": "module Q[t^±1]/(t - 1) is cyclic"},
     "(2,4)-torus link with antiparallel strands (Knot Atlas L4a1)"),
    ("cinquefoil", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)", [],
     ("t^4 - t^3 + t^2 - t + 1", 5, 0, 1, ((0,),)),
     {"alexander": "Seifert matrix of the closure of s1^-5 (4x4 bidiagonal)",
      "m_q": "Delta is squarefree, so the module is cyclic"},
     "(2,5)-torus knot (Knot Atlas 5_1)"),
    ("borromean", "X(1,5,2,8) X(3,6,4,7) X(5,9,6,10) X(7,12,8,11) X(10,3,11,2) X(12,4,9,1)",
     ["X(2,1,3,2) X(3,7,4,10) X(5,8,6,9) X(7,11,8,12) X(9,14,10,13) X(12,5,13,4) X(14,6,11,1)"],
     ("t^4 - 4*t^3 + 6*t^2 - 4*t + 1", 16, 0, 2, ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
     {"alexander": "Torres formula from the multivariable polynomial (t1-1)(t2-1)(t3-1): "
                   "Delta(t,t,t)(t - 1) = (t - 1)^4",
      "m_q": SNF_NOTE},
     "Borromean rings, closure of (s1 s2^-1)^3"),
]

REQUIRED = ("unknot", "unlink2", "unlink3", "hopf", "hopf_neg", "trefoil",
            "trefoil_right", "figure8", "whitehead", "torus_2_4")


def _build():
    out = {}
    for name, pd, alts, exp, prov, desc in _RAW:
        delta, det, r, mq, lk = exp
        out[name] = CatalogEntry(
            name=name,
            diagram=parse_pd(pd),
            alt_diagrams=tuple(parse_pd(a) for a in alts),
            expected=Expected(delta, det, r, mq, lk, prov),
            description=desc,
        )
    return out


CATALOG = _build()


def names():
    return sorted(CATALOG) + sorted(n for n in _extra() if n not in CATALOG)


def _extra():
    path = os.environ.get("LINKBOUND_CATALOG")
    if not path:
        return {}
    return {name: CatalogEntry(name, d, description=f"from {path}") for name, d in ingest(path)}


def lookup(name):
    """Catalog entry by name; built-ins first, then ``$LINKBOUND_CATALOG``."""
    if name in CATALOG:
        return CATALOG[name]
    extra = _extra()
    if name in extra:
        return extra[name]
    raise CatalogLookupError(f"unknown link {name!r}; available: {', '.join(names())}")


_PD_START = re.compile(r"^(X\(|U\d)")


def split_line(text):
    """``(name, pd)`` from ``[name] <pd>``; name is None when absent."""
    text = text.split("#", 1)[0].strip()
    if not text:
        return None
    if _PD_START.match(text):
        return None, text
    head, _, rest = text.partition(" ")
    return head, rest.strip()


def ingest(path):
    """
    Read a diagram file: one diagram per line, optionally preceded by a
    name, ``#`` starts a comment.  Unnamed diagrams are called
    ``<file>:<line>``.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IngestError(path, 0, exc) from exc
    out = []
    base = os.path.basename(path)
    for lineno, line in enumerate(lines, 1):
        parsed = split_line(line)
        if parsed is None:
            continue
        name, pd = parsed
        if not pd:
            raise IngestError(path, lineno, "missing PD code")
        try:
            d = parse_pd(pd)
        except LinkboundError as exc:
            raise IngestError(path, lineno, exc) from exc
        out.append((name or f"{base}:{lineno}", d))
    return out


def resolve(ref):
    """
    A link reference: catalog name, ``@file:line`` or an inline PD code.
    Returns ``(label, diagram)``.
    """
    ref = ref.strip()
    if ref.startswith("@"):
        path, sep, line = ref[1:].rpartition(":")
        if not sep or not line.isdigit():
            raise IngestError(ref[1:], 0, "expected @file:line")
        try:
            with open(path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise IngestError(path, 0, exc) from exc
        n = int(line)
        if not 1 <= n <= len(lines):
            raise IngestError(path, n, "no such line")
        parsed = split_line(lines[n - 1])
        if parsed is None or not parsed[1]:
            raise IngestError(path, n, "no diagram on this line")
        try:
            return parsed[0] or f"{os.path.basename(path)}:{n}", parse_pd(parsed[1])
        except LinkboundError as exc:
            raise IngestError(path, n, exc) from exc
    if _PD_START.match(ref):
        return ref, parse_pd(ref)
    return ref, lookup(ref).diagram
