"""
Alexander-module invariants of a link diagram.

An admissible map phi: Z^k -> H = Z^m (every meridian has a nonzero image)
turns the Wirtinger presentation into a matrix over Z[H] whose entries are
abelianized Fox derivatives.  From it we read off

* ``r(L, phi)``: the dimension of H_1 of the exterior with Q(H)
  coefficients, ``(n - 1) - rank`` of the Alexander matrix;
* ``Delta_L``: the gcd of the maximal minors of the one-variable matrix
  (diagonal map), i.e. the order of the Alexander module;
* ``det(L) = |Delta_L(-1)|``;
* ``m_Q(L)``: the minimal number of generators of the Alexander module
  after tensoring with Q, read from the Smith form over Q[t^{+-1}].
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import linking_matrix
from .errors import InadmissibleMapError, InconsistencyError
from .laurent import MultiLaurent, gcd_list
from .linalg import (LaurentMatrix, maximal_minors, rank_over_fraction_field,
                     snf_invariant_factors)
from .wirtinger import fox_derivative, wirtinger

__all__ = [
    "AdmissibleMap",
    "AlexanderMatrix",
    "LinkInvariants",
    "diagonal_map",
    "identity_map",
    "is_admissible",
    "default_maps",
    "alexander_matrix",
    "rank_r",
    "alexander_polynomial",
    "link_determinant",
    "min_generators_q",
    "full_report",
]


def is_admissible(matrix):
    """True iff no column of the m x k integer matrix is zero."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return False
    return all(any(r[j] for r in rows) for j in range(len(rows[0])))


@dataclass(frozen=True)
class AdmissibleMap:
    """phi: Z^k -> Z^m as an m x k integer matrix; column i is phi(e_i)."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.matrix)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise InadmissibleMapError(f"not a nonempty rectangular matrix: {self.matrix!r}")
        if not is_admissible(rows):
            bad = [j + 1 for j in range(len(rows[0])) if not any(r[j] for r in rows)]
            raise InadmissibleMapError(
                f"map {_fmt(rows)} is not admissible: meridian(s) {bad} map to 0")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def parse(cls, text):
        """Row-major text such as ``"1,1;0,2"``."""
        try:
            rows = [[int(v) for v in row.split(",")] for row in text.strip().split(";")]
        except ValueError:
            raise InadmissibleMapError(f"cannot read map {text!r}") from None
        return cls(rows)

    @property
    def m(self):
        return len(self.matrix)

    @property
    def k(self):
        return len(self.matrix[0])

    def image(self, i):
        return tuple(r[i] for r in self.matrix)

    @property
    def label(self):
        if self.m == 1 and all(v == 1 for v in self.matrix[0]):
            return "δ"
        if self.m == self.k and all(v == (i == j) for i, r in enumerate(self.matrix)
                                    for j, v in enumerate(r)):
            return "id"
        return _fmt(self.matrix)

    def __str__(self):
        return _fmt(self.matrix)


def _fmt(rows):
    return ";".join(",".join(str(v) for v in r) for r in rows)


def diagonal_map(k):
    if k < 1:
        raise ValueError("the diagonal map needs k >= 1")
    return AdmissibleMap(((1,) * k,))


def identity_map(k):
    if k < 1:
        raise ValueError("the identity map needs k >= 1")
    return AdmissibleMap(tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def default_maps(k, extra=()):
    """The diagonal map, the identity when k >= 2, then ``extra``, deduplicated."""
    maps = [diagonal_map(k)]
    if k >= 2:
        maps.append(identity_map(k))
    for phi in extra:
        if phi.k != k:
            raise InadmissibleMapError(f"map {phi} has domain Z^{phi.k}, link has {k} components")
        if phi not in maps:
            maps.append(phi)
    return maps


@dataclass(frozen=True)
class AlexanderMatrix:
    matrix: LaurentMatrix
    presentation: object
    phi: AdmissibleMap

    def row_identity_holds(self):
        """Each row R satisfies sum_j R_j (phi(x_j) - 1) = 0."""
        images = self.generator_images()
        for row in self.matrix.rows:
            total = MultiLaurent.zero(self.matrix.nvars)
            for entry, img in zip(row, images):
                total = total + entry * (img - 1)
            if total:
                return False
        return True

    def generator_images(self):
        p, phi = self.presentation, self.phi
        return [MultiLaurent.monomial(phi.image(c)) for c in p.component_of_generator]


def alexander_matrix(p, phi):
    """Matrix of abelianized Fox derivatives of the relators of ``p`` under phi."""
    if phi.k != p.k:
        raise ValueError(f"map has domain Z^{phi.k} but the link has {p.k} components")
    monomial_of = [phi.image(c) for c in p.component_of_generator]
    rows = tuple(tuple(fox_derivative(r, g, monomial_of) for g in range(p.n))
                 for r in p.relators)
    return AlexanderMatrix(LaurentMatrix(rows, p.n, phi.m), p, phi)


@lru_cache(maxsize=4096)
def _alexander_matrix(d, phi, drop):
    return alexander_matrix(wirtinger(d, drop), phi)


@lru_cache(maxsize=4096)
def rank_r(d, phi, drop=None):
    """r(L, phi) = dim over Q(H) of H_1 of the exterior, twisted by phi."""
    if not isinstance(phi, AdmissibleMap):
        phi = AdmissibleMap(phi)
    if phi.k != d.k:
        raise InadmissibleMapError(f"map has domain Z^{phi.k} but the link has {d.k} components")
    am = _alexander_matrix(d, phi, drop)
    # the degree-1 boundary x_j -> phi(x_j) - 1 must have rank exactly 1
    if not any(img != 1 for img in am.generator_images()):
        raise InconsistencyError("admissible map sends every generator to 1")
    n = am.presentation.n
    return (n - 1) - rank_over_fraction_field(am.matrix)


@lru_cache(maxsize=4096)
def alexander_polynomial(d, drop=None):
    """
    Unit-normalized one-variable Alexander polynomial: the gcd of the
    maximal minors of the Fox matrix.  It is 0 exactly when all of them
    vanish (in particular when there are too few relators to form one).
    """
    am = _alexander_matrix(d, diagonal_map(d.k), drop)
    m = am.matrix
    if m.nrows != m.ncols - 1:
        return MultiLaurent.zero(1)
    return gcd_list(maximal_minors(m))


def link_determinant(d):
    """|Delta_L(-1)|, which is 0 when Delta_L = 0."""
    delta = alexander_polynomial(d)
    if not delta:
        return 0
    return abs(delta.evaluate([-1]))


@lru_cache(maxsize=4096)
def min_generators_q(d):
    """
    m_Q(L): minimal number of generators of the Alexander module over
    Q[t^{+-1}].  The Fox matrix presents the module relative to a base
    point, which splits off one free summand; hence the -1.
    """
    am = _alexander_matrix(d, diagonal_map(d.k), None)
    factors, free = snf_invariant_factors(am.matrix)
    nonunit = sum(1 for f in factors if f != 1)
    return nonunit + free - 1


@dataclass(frozen=True)
class LinkInvariants:
    k: int
    linking_matrix: tuple
    alexander_polynomial: MultiLaurent
    determinant: int
    r_diagonal: int
    r_per_map: tuple = field(default=())
    min_generators_q: int = 0

    def __post_init__(self):
        if (self.r_diagonal == 0) != bool(self.alexander_polynomial):
            raise InconsistencyError(
                f"r(L) = {self.r_diagonal} but Delta_L = {self.alexander_polynomial}")
        expected = abs(self.alexander_polynomial.evaluate([-1])) if self.alexander_polynomial else 0
        if self.determinant != expected:
            raise InconsistencyError(f"det = {self.determinant} but |Delta(-1)| = {expected}")

    def to_json(self):
        return {
            "k": self.k,
            "linking_matrix": [list(r) for r in self.linking_matrix],
            "alexander_polynomial": str(self.alexander_polynomial),
            "determinant": self.determinant,
            "r_diagonal": self.r_diagonal,
            "r_per_map": [{"map": str(phi), "label": phi.label, "r": r}
                          for phi, r in self.r_per_map],
            "min_generators_q": self.min_generators_q,
        }


def full_report(d, maps=()):
    """Every invariant of the diagram, for the default maps plus ``maps``."""
    all_maps = default_maps(d.k, maps)
    delta = alexander_polynomial(d)
    return LinkInvariants(
        k=d.k,
        linking_matrix=linking_matrix(d),
        alexander_polynomial=delta,
        determinant=link_determinant(d),
        r_diagonal=rank_r(d, all_maps[0]),
        r_per_map=tuple((phi, rank_r(d, phi)) for phi in all_maps),
        min_generators_q=min_generators_q(d),
    )
