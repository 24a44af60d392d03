"""
Oriented link diagrams in planar-diagram (PD) notation.

A crossing ``X(a,b,c,d)`` lists its four edges counterclockwise, starting
from the incoming under-edge ``a``; the under-strand leaves along ``c``.
Edges are numbered 1..2n (n crossings) so that the edges of each component
form one consecutive block, and the successor of edge e is e+1, except for
the last edge of a block whose successor is the first.

Sign convention (the one used by the Knot Atlas): a crossing is positive
when the over-strand runs from ``d`` to ``b`` and negative when it runs
from ``b`` to ``d``.  Under it the atlas trefoil
``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` has writhe -3.

Components are ordered by their smallest edge label; crossingless unknots,
written with a trailing ``U<n>`` token, come last.
"""

from dataclasses import dataclass
from functools import cached_property
import re

from .errors import DiagramError, PDSyntaxError

__all__ = [
    "Crossing",
    "LinkDiagram",
    "Violation",
    "parse_pd",
    "format_pd",
    "validate",
    "crossing_sign",
    "linking_matrix",
    "writhe",
    "split_union",
    "mirror",
    "crossing_change",
    "add_kink",
    "from_braid",
    "EMPTY",
]


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int

    @property
    def edges(self):
        return (self.a, self.b, self.c, self.d)

    def shifted(self, k):
        return Crossing(self.a + k, self.b + k, self.c + k, self.d + k)

    def __str__(self):
        return f"X({self.a},{self.b},{self.c},{self.d})"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: tuple = ()

    def __str__(self):
        if not self.detail:
            return self.kind
        return f"{self.kind}({','.join(str(x) for x in self.detail)})"


@dataclass(frozen=True)
class LinkDiagram:
    """
    A PD-coded diagram plus a count of crossingless split unknots.

    Instances may be invalid; :func:`validate` lists what is wrong and the
    derived attributes (components, orientation, signs) raise
    :class:`DiagramError` on an invalid diagram.
    """

    crossings: tuple = ()
    free_unknots: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @property
    def edge_count(self):
        return 2 * len(self.crossings)

    @cached_property
    def _structure(self):
        return _analyze(self)

    def _checked(self):
        s = self._structure
        if s["violations"]:
            raise DiagramError(s["violations"])
        return s

    @property
    def blocks(self):
        """Edge ranges ``(lo, hi)`` of the PD components, ordered by ``lo``."""
        return self._checked()["blocks"]

    @property
    def pd_components(self):
        return len(self.blocks)

    @property
    def k(self):
        return self.pd_components + self.free_unknots

    @property
    def component_of(self):
        """Map edge -> component index (0-based)."""
        return self._checked()["component_of"]

    def successor(self, e):
        return self._checked()["succ"][e]

    def over_strand(self, i):
        """``(incoming, outgoing)`` edges of the over-strand at crossing i."""
        return self._checked()["over"][i]

    def sign(self, i):
        x = self.crossings[i]
        return 1 if self.over_strand(i)[0] == x.d else -1

    def __str__(self):
        return format_pd(self)


EMPTY = LinkDiagram()


# parsing and printing

_TOKEN = re.compile(
    r"\s*(?:(?P<x>X\(\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*,\s*(?P<c>\d+)\s*,\s*(?P<d>\d+)\s*\))"
    r"|(?P<u>U(?P<n>\d+)))")


def parse_pd(text):
    """
    Parse ``X(a,b,c,d) ... [U<n>]`` into a validated :class:`LinkDiagram`.

    Raises :class:`PDSyntaxError` (with the offending position) on bad
    syntax and :class:`DiagramError` when the diagram is not valid.
    """
    crossings = []
    unknots = 0
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            skip = len(text) - len(text[pos:].lstrip())
            raise PDSyntaxError(f"unexpected input {text[skip:skip + 12]!r}", skip)
        if m.group("x"):
            if unknots:
                raise PDSyntaxError("crossings must precede the U<n> token", m.start("x"))
            vals = [int(m.group(g)) for g in "abcd"]
            if min(vals) < 1:
                raise PDSyntaxError("edge labels must be positive", m.start("x"))
            crossings.append(Crossing(*vals))
        else:
            unknots += int(m.group("n"))
        pos = m.end()
    d = LinkDiagram(tuple(crossings), unknots)
    problems = validate(d)
    if problems:
        raise DiagramError(problems)
    return d


def format_pd(d):
    """Canonical text: crossings sorted by their first edge, then ``U<n>``."""
    parts = [str(x) for x in sorted(d.crossings, key=lambda x: x.edges)]
    if d.free_unknots:
        parts.append(f"U{d.free_unknots}")
    return " ".join(parts)


# structure

def _analyze(d):
    violations = []
    n_edges = d.edge_count
    counts = {}
    for x in d.crossings:
        for e in x.edges:
            counts[e] = counts.get(e, 0) + 1
    for e in range(1, n_edges + 1):
        if counts.get(e, 0) != 2:
            violations.append(Violation("edge-multiplicity", (e,)))
    for e in sorted(counts):
        if not 1 <= e <= n_edges:
            violations.append(Violation("edge-out-of-range", (e,)))
    if not d.crossings and not d.free_unknots:
        violations.append(Violation("empty-diagram"))
    if d.free_unknots < 0:
        violations.append(Violation("negative-unknot-count", (d.free_unknots,)))
    if violations:
        # component structure is meaningless once edges are miscounted
        return {"violations": violations}

    parent = list(range(n_edges + 1))

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in d.crossings:
        for u, v in ((x.a, x.c), (x.b, x.d)):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for e in range(1, n_edges + 1):
        groups.setdefault(find(e), []).append(e)
    blocks = []
    for edges in sorted(groups.values()):
        if edges[-1] - edges[0] + 1 != len(edges):
            violations.append(Violation("non-consecutive-component", tuple(edges)))
        blocks.append((edges[0], edges[-1]))
    if violations:
        return {"violations": violations}

    succ = {}
    component_of = {}
    for idx, (lo, hi) in enumerate(blocks):
        for e in range(lo, hi + 1):
            succ[e] = e + 1 if e < hi else lo
            component_of[e] = idx

    for i, x in enumerate(d.crossings):
        if succ[x.a] != x.c:
            violations.append(Violation("under-strand", (i,)))
        if succ[x.b] != x.d and succ[x.d] != x.b:
            violations.append(Violation("over-strand", (i,)))
    if violations:
        return {"violations": violations}

    over, bad = _orient(d.crossings, succ)
    violations.extend(Violation("orientation", (e,)) for e in bad)
    return {
        "violations": violations,
        "blocks": tuple(blocks),
        "succ": succ,
        "component_of": component_of,
        "over": tuple(over),
    }


def _orient(crossings, succ):
    """
    Direction of every over-strand.

    For components of three or more edges the successor relation decides.
    A two-edge component {e, e+1} is read both ways by successors, so the
    direction comes from the other occurrence of an edge: each edge has
    exactly one incoming slot.  A two-edge component that never passes
    under is genuinely ambiguous in PD; it is taken to run from the smaller
    label to the larger at whichever of its two crossings has the smaller
    edge tuple, so the choice survives reordering and mirroring.
    """
    over = [None] * len(crossings)
    incoming = {}
    for i, x in enumerate(crossings):
        incoming.setdefault(x.a, []).append((i, "a"))
    pending = []
    for i, x in enumerate(crossings):
        fwd, back = succ[x.b] == x.d, succ[x.d] == x.b
        if fwd and not back:
            over[i] = (x.b, x.d)
        elif back and not fwd:
            over[i] = (x.d, x.b)
        else:
            pending.append(i)
    for i in pending:
        x = crossings[i]
        # an edge already incoming elsewhere is outgoing here
        if x.b in incoming:
            over[i] = (x.d, x.b)
        elif x.d in incoming:
            over[i] = (x.b, x.d)
    for i in pending:
        if over[i] is None:
            x = crossings[i]
            lo, hi = min(x.b, x.d), max(x.b, x.d)
            pair = [j for j in pending if {crossings[j].b, crossings[j].d} == {lo, hi}]
            anchor = min(pair, key=lambda j: crossings[j].edges)
            over[i] = (lo, hi) if i == anchor else (hi, lo)
    for i, (e_in, _) in enumerate(over):
        incoming.setdefault(e_in, []).append((i, "over"))
    bad = sorted(e for e, slots in incoming.items() if len(slots) != 1)
    return over, bad


def validate(d):
    """All violated diagram invariants, in a deterministic order."""
    return list(d._structure["violations"])


def crossing_sign(d, x):
    """Sign (+1 or -1) of crossing ``x`` (a :class:`Crossing` or an index)."""
    i = x if isinstance(x, int) else d.crossings.index(x)
    return d.sign(i)


def writhe(d):
    return sum(d.sign(i) for i in range(len(d.crossings)))


def linking_matrix(d):
    """
    Symmetric k x k integer matrix of pairwise linking numbers: half the
    signed count of crossings between two different components.
    """
    k = d.k
    comp = d.component_of
    twice = [[0] * k for _ in range(k)]
    for i, x in enumerate(d.crossings):
        p, q = comp[x.a], comp[x.b]
        if p != q:
            s = d.sign(i)
            twice[p][q] += s
            twice[q][p] += s
    for row in twice:
        for v in row:
            if v % 2:
                raise DiagramError([Violation("odd-linking-count")])
    return tuple(tuple(v // 2 for v in row) for row in twice)


# constructors

def _checked(d):
    problems = validate(d)
    if problems:
        raise DiagramError(problems)
    return d


def split_union(d1, d2):
    """Disjoint union with d2 placed far from d1 (edges of d2 shifted)."""
    shift = d1.edge_count
    return _checked(LinkDiagram(
        d1.crossings + tuple(x.shifted(shift) for x in d2.crossings),
        d1.free_unknots + d2.free_unknots))


def mirror(d):
    """Mirror image: swap the roles of b and d in every crossing."""
    return _checked(LinkDiagram(tuple(Crossing(x.a, x.d, x.c, x.b) for x in d.crossings),
                                d.free_unknots))


def crossing_change(d, i):
    """Switch over and under at crossing i."""
    x = d.crossings[i]
    e_in, _ = d.over_strand(i)
    new = Crossing(x.d, x.a, x.b, x.c) if e_in == x.d else Crossing(x.b, x.c, x.d, x.a)
    crossings = list(d.crossings)
    crossings[i] = new
    return _checked(LinkDiagram(tuple(crossings), d.free_unknots))


def _incoming_slot(d, e):
    for i, x in enumerate(d.crossings):
        if x.a == e:
            return i, 0
    for i, x in enumerate(d.crossings):
        if d.over_strand(i)[0] == e:
            return i, (1 if x.b == e else 3)
    raise DiagramError([Violation("orientation", (e,))])


def add_kink(d, edge=None, kind=0):
    """
    Reidemeister I: put a curl on ``edge``.

    ``kind`` picks one of the four curls: 0 and 1 pass under first, 2 and
    3 pass over first; kinds 1 and 2 add a positive crossing, 0 and 3 a
    negative one.  With ``edge=None`` one crossingless unknot is replaced by
    a one-crossing curl.
    """
    if edge is None:
        if d.free_unknots < 1:
            raise ValueError("no crossingless unknot to curl")
        e1, e2 = d.edge_count + 1, d.edge_count + 2
        curl = _curl(kind, e1, e2, e1)
        return _checked(LinkDiagram(d.crossings + (curl,), d.free_unknots - 1))
    if not 1 <= edge <= d.edge_count:
        raise ValueError(f"edge {edge} not in diagram")
    head = _incoming_slot(d, edge)

    def bump(i, s, v):
        if v > edge:
            return v + 2
        if v == edge and (i, s) == head:
            return edge + 2
        return v

    crossings = tuple(Crossing(*(bump(i, s, v) for s, v in enumerate(x.edges)))
                      for i, x in enumerate(d.crossings))
    curl = _curl(kind, edge, edge + 1, edge + 2)
    return _checked(LinkDiagram(crossings + (curl,), d.free_unknots))


def _curl(kind, e0, e1, e2):
    # e0 enters the curl, e1 is the loop, e2 leaves
    if kind == 0:
        return Crossing(e0, e1, e1, e2)
    if kind == 1:
        return Crossing(e0, e2, e1, e1)
    if kind == 2:
        return Crossing(e1, e1, e2, e0)
    if kind == 3:
        return Crossing(e1, e0, e2, e1)
    raise ValueError(f"kink kind must be 0..3, got {kind}")


def from_braid(word, strands=None):
    """
    Closure of a braid word; generator i > 0 is a positive crossing between
    strands i and i+1, -i its inverse.  Strands untouched by the word become
    crossingless unknots.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    nxt = strands
    cur = list(range(strands))
    raw = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        el, er = cur[i], cur[i + 1]
        out_l, out_r = nxt, nxt + 1
        nxt += 2
        if g > 0:
            # left strand passes over, moving right
            raw.append(((er, out_r, out_l, el), (er, out_l), (el, out_r)))
        else:
            raw.append(((el, er, out_r, out_l), (el, out_r), (er, out_l)))
        cur[i], cur[i + 1] = out_l, out_r
    alias = {cur[p]: p for p in range(strands)}

    def canon(e):
        return alias.get(e, e)

    step = {}
    for _, under, over_ in raw:
        step[canon(under[0])] = canon(under[1])
        step[canon(over_[0])] = canon(over_[1])
    label = {}
    nlab = 0
    free = sum(1 for p in range(strands) if cur[p] == p)
    order = [canon(v) for r in raw for v in r[0]]
    for e in order:
        if e in label:
            continue
        while e not in label:
            nlab += 1
            label[e] = nlab
            e = step[e]
    crossings = tuple(Crossing(*(label[canon(v)] for v in r[0])) for r in raw)
    return _checked(LinkDiagram(crossings, free))
