"""
Cobordism existence and lower bounds on cobordism genus.

For k-component links L and J a cobordism exists iff their linking
matrices agree.  When it does, every admissible phi gives

    g_top(L, J) >= |r(J, phi) - r(L, phi)| / 2,

and for a link L with Delta_L != 0 any cobordism to a weakly m-split link
has genus at least floor(m / 2).  Gordian distance is bounded below by the
difference of minimal generator counts of the Alexander modules, here
taken over Q[t^{+-1}].
"""

from dataclasses import dataclass, field
from functools import reduce
from fractions import Fraction
from math import ceil, inf, isinf

from .diagram import EMPTY, linking_matrix, split_union
from .errors import InconsistencyError
from .invariants import (alexander_polynomial, default_maps,
                         diagonal_map, min_generators_q, rank_r)

__all__ = [
    "CobordismReport",
    "WeaklySplitReport",
    "BoundChain",
    "cobordism_exists",
    "genus_lower_bound",
    "weakly_split_bound",
    "split_rank_check",
    "gordian_bound",
    "bound_chain_report",
    "M_Q_CAVEAT",
    "CEILING_NOTE",
]

M_Q_CAVEAT = ("m_Q counts generators of the Alexander module over Q[t^±1], a PID; "
              "m_Q(L) <= m(L) over Z[t^±1], and the Gordian bound |m_Q(L) - m_Q(J)| "
              "uses m_Q")
CEILING_NOTE = ("integer bound is the ceiling of the rational bound under the "
                "connected-components convention (each cobordism component connected)")


def _fmt_bound(x):
    if isinf(x):
        return "inf"
    return str(Fraction(x))


@dataclass(frozen=True)
class CobordismReport:
    k_match: bool
    exists: bool
    per_map: tuple = ()
    rational_bound: object = inf
    integer_bound: object = inf
    gordian_q: int = 0
    notes: tuple = ()

    def __post_init__(self):
        if not self.exists and not (isinf(self.rational_bound) and isinf(self.integer_bound)):
            raise InconsistencyError("bounds must be infinite when no cobordism exists")
        if self.exists and self.integer_bound != ceil(self.rational_bound):
            raise InconsistencyError("integer bound is not the ceiling of the rational bound")

    def to_json(self):
        return {
            "exists": self.exists,
            "rational_bound": _fmt_bound(self.rational_bound),
            "integer_bound": "inf" if isinf(self.integer_bound) else int(self.integer_bound),
            "per_map": [
                {"map": str(phi), "label": phi.label, "r_L": rl, "r_J": rj,
                 "bound": _fmt_bound(b)}
                for phi, rl, rj, b in self.per_map
            ],
            "gordian_q": self.gordian_q,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class WeaklySplitReport:
    delta_nonzero: bool
    m: int
    bound: object = None
    r_via_lemma: int = 0

    def to_json(self):
        return {
            "delta_nonzero": self.delta_nonzero,
            "m": self.m,
            "bound": self.bound,
            "r_via_lemma": self.r_via_lemma,
        }


def cobordism_exists(L, J):
    """True iff the links have equally many components and equal linking matrices."""
    return L.k == J.k and linking_matrix(L) == linking_matrix(J)


def genus_lower_bound(L, J, maps=()):
    """
    Lower bounds on the genus of a cobordism from L to J, one per map in the
    default set plus ``maps``; the best is the maximum.
    """
    k_match = L.k == J.k
    exists = cobordism_exists(L, J)
    gq = gordian_bound(L, J)
    notes = [M_Q_CAVEAT]
    if not exists:
        if k_match:
            notes.insert(0, "linking matrices differ: no cobordism, genus is infinite")
        else:
            notes.insert(0, f"component counts differ ({L.k} vs {J.k}): no cobordism")
        # still validate user maps against L
        for phi in maps:
            default_maps(L.k, [phi])
        return CobordismReport(k_match, False, (), inf, inf, gq, tuple(notes))
    per_map = []
    for phi in default_maps(L.k, maps):
        rl, rj = rank_r(L, phi), rank_r(J, phi)
        per_map.append((phi, rl, rj, Fraction(abs(rj - rl), 2)))
    best = max(b for *_, b in per_map)
    notes.append(CEILING_NOTE)
    return CobordismReport(True, True, tuple(per_map), best, ceil(best), gq, tuple(notes))


def weakly_split_bound(L, m):
    """
    Genus bound floor(m/2) for a cobordism from L to a hypothetical weakly
    m-split link; only available when Delta_L != 0.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    nonzero = bool(alexander_polynomial(L))
    if not nonzero:
        return WeaklySplitReport(False, m, None, m - 1)
    return WeaklySplitReport(True, m, m // 2, m - 1)


def split_rank_check(parts):
    """
    Split union J of ``parts`` and its rank r(J): returns ``(m, r, holds)``
    with ``holds = r >= m - 1``.  A failure is an internal error.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    j = reduce(split_union, parts, EMPTY)
    m = len(parts)
    r = rank_r(j, diagonal_map(j.k))
    holds = r >= m - 1
    if not holds:
        raise InconsistencyError(f"split union of {m} parts has r = {r} < {m - 1}")
    return m, r, holds


def gordian_bound(L, J):
    """|m_Q(L) - m_Q(J)|."""
    return abs(min_generators_q(L) - min_generators_q(J))


@dataclass(frozen=True)
class BoundChain:
    """
    Lower bounds along the chain d_comp >= g_smooth >= g_top >= |r(L)-r(J)|/2
    and d_comp >= d >= |m_Q(L) - m_Q(J)|.  Every slot holds the best lower
    bound known for that quantity; ``computed`` marks the slots whose value
    is the quantity itself rather than a bound on it.
    """

    slots: tuple
    report: CobordismReport
    notes: tuple = field(default=())

    def to_json(self):
        return {
            "chain": [
                {"quantity": name, "lower_bound": _fmt_bound(v), "status": status}
                for name, v, status in self.slots
            ],
            "cobordism": self.report.to_json(),
            "notes": list(self.notes),
        }


def bound_chain_report(L, J, maps=()):
    rep = genus_lower_bound(L, J, maps)
    if rep.exists:
        diag = next(b for phi, _, _, b in rep.per_map if phi == diagonal_map(L.k))
    else:
        diag = inf
    genus = rep.integer_bound
    d_comp = inf if not rep.exists else max(genus, rep.gordian_q)
    slots = (
        ("d_comp(L,J)", d_comp, "bounded: crossing changes within components"),
        ("g_smooth(L,J)", genus, "bounded: g_smooth >= g_top"),
        ("g_top(L,J)", genus, "bounded: best admissible map, ceiling"),
        ("|r(L)-r(J)|/2", diag, "computed: diagonal map"),
        ("d(L,J)", rep.gordian_q, "bounded: Gordian distance >= |m_Q(L)-m_Q(J)|"),
        ("|m_Q(L)-m_Q(J)|", rep.gordian_q, "computed"),
    )
    return BoundChain(slots, rep, (M_Q_CAVEAT,))
