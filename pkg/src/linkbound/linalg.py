"""
Exact linear algebra over Laurent polynomial rings.

Determinants and ranks are computed over the fraction field Q(H) with
Bareiss fraction-free elimination, so every intermediate entry stays in
Z[H] and each division is exact.  Invariant factors are computed over the
principal ideal domain Q[t^{+-1}] in the one-variable case.
"""

from dataclasses import dataclass
from fractions import Fraction

from .laurent import MultiLaurent, _qpoly_divmod, _qpoly_trim

__all__ = [
    "LaurentMatrix",
    "det_fraction_free",
    "rank_over_fraction_field",
    "maximal_minors",
    "snf_invariant_factors",
]


@dataclass(frozen=True)
class LaurentMatrix:
    """Rectangular matrix of :class:`MultiLaurent` entries over a common ring."""

    rows: tuple
    ncols: int
    nvars: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")
            for x in r:
                if x.nvars != self.nvars:
                    raise ValueError("entries live in different rings")

    @classmethod
    def from_rows(cls, rows, nvars, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        conv = [[x if isinstance(x, MultiLaurent) else MultiLaurent.constant(x, nvars)
                 for x in r] for r in rows]
        return cls(tuple(tuple(r) for r in conv), ncols, nvars)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def delete_column(self, j):
        return LaurentMatrix(tuple(r[:j] + r[j + 1:] for r in self.rows),
                             self.ncols - 1, self.nvars)

    def submatrix(self, rows, cols):
        return LaurentMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows),
                             len(cols), self.nvars)

    def transpose(self):
        return LaurentMatrix(tuple(tuple(self.rows[i][j] for i in range(self.nrows))
                                   for j in range(self.ncols)),
                             self.nrows, self.nvars)

    def __str__(self):
        if not self.rows:
            return f"<empty {self.nrows}x{self.ncols} matrix>"
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def det_fraction_free(m):
    """Determinant by Bareiss elimination; the 0x0 determinant is 1."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError(f"determinant of a non-square {m.shape} matrix")
    one = MultiLaurent.one(m.nvars)
    if n == 0:
        return one
    a = [list(r) for r in m.rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MultiLaurent.zero(m.nvars)
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            lead = ri[k]
            for j in range(k + 1, n):
                x = piv * ri[j]
                if lead:
                    x = x - lead * rk[j]
                ri[j] = x.exact_div(prev) if k else x
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _blocks(a, nrows, ncols):
    """Connected components of the row/column incidence graph of nonzeros."""
    parent = list(range(nrows + ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(nrows):
        for j in range(ncols):
            if a[i][j]:
                ri, cj = find(i), find(nrows + j)
                if ri != cj:
                    parent[max(ri, cj)] = min(ri, cj)
    groups = {}
    for i in range(nrows):
        if any(a[i]):
            groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(ncols):
        root = find(nrows + j)
        if root in groups:
            groups[root][1].append(j)
    return [groups[r] for r in sorted(groups)]


def _rank_dense(a, nvars):
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    prev = MultiLaurent.one(nvars)
    for col in range(ncols):
        if rank == nrows:
            break
        for i in range(rank, nrows):
            if a[i][col]:
                a[rank], a[i] = a[i], a[rank]
                break
        else:
            continue
        rp = a[rank]
        piv = rp[col]
        for i in range(rank + 1, nrows):
            ri = a[i]
            lead = ri[col]
            for j in range(col + 1, ncols):
                x = piv * ri[j]
                if lead:
                    x = x - lead * rp[j]
                ri[j] = x.exact_div(prev)
            ri[col] = MultiLaurent.zero(nvars)
        prev = piv
        rank += 1
    return rank


def rank_over_fraction_field(m):
    """
    Rank of ``m`` over the quotient field of Z[H].

    The matrix is first split into independent blocks (connected
    components of its nonzero pattern); each block is reduced with
    fraction-free row echelon elimination, taking the first nonzero
    entry of the leftmost remaining column as pivot.
    """
    a = [list(r) for r in m.rows]
    total = 0
    for rows, cols in _blocks(a, m.nrows, m.ncols):
        total += _rank_dense([[a[i][j] for j in cols] for i in rows], m.nvars)
    return total


def maximal_minors(m):
    """
    The n maximal minors of an (n-1) x n matrix, in column order: the i-th
    is the determinant after deleting column i.  A 0x1 matrix gives [1].
    """
    if m.nrows != m.ncols - 1:
        raise ValueError(f"expected an (n-1) x n matrix, got {m.shape}")
    if rank_over_fraction_field(m) < m.nrows:
        return [MultiLaurent.zero(m.nvars)] * m.ncols
    return [det_fraction_free(m.delete_column(j)) for j in range(m.ncols)]


# invariant factors over Q[t^{+-1}]

def _row_to_qpolys(row):
    # multiply the row by a power of t (a unit) so all exponents are >= 0
    nonzero = [x for x in row if x]
    lo = min(x.min_exponents()[0] for x in nonzero) if nonzero else 0
    out = []
    for x in row:
        if not x:
            out.append([])
            continue
        hi = x.max_exponents()[0]
        out.append(_qpoly_trim([Fraction(x.coefficient((lo + i,))) for i in range(hi - lo + 1)]))
    return out


def _qsub_mul(a, f, b):
    """a - f*b for coefficient lists."""
    out = list(a) + [Fraction(0)] * max(0, len(f) + len(b) - 1 - len(a))
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _qpoly_trim(out)


def _qpoly_to_laurent(a):
    # strip powers of t, which are units in the Laurent ring, then make monic
    k = 0
    while a[k] == 0:
        k += 1
    a = a[k:]
    lead = a[-1]
    return MultiLaurent.from_coeffs([c / lead for c in a])


def snf_invariant_factors(m):
    """
    Invariant factors of a one-variable matrix over Q[t^{+-1}].

    Returns ``(factors, free_rank)``: the nonzero diagonal entries
    d1 | d2 | ... of the Smith form, each monic with no power of t, and the
    free rank ``ncols - rank`` of the cokernel of the row space.
    """
    if m.nvars != 1:
        raise ValueError("invariant factors are only computed in one variable")
    a = [_row_to_qpolys(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    diag = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or len(a[i][j]) < len(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q, rem = _qpoly_divmod(a[i][t], piv)
                    for j in range(t, ncols):
                        a[i][j] = _qsub_mul(a[i][j], q, a[t][j])
                    if rem:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q, rem = _qpoly_divmod(a[t][j], piv)
                    for i in range(t, nrows):
                        a[i][j] = _qsub_mul(a[i][j], q, a[i][t])
                    if rem:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in the pivot row/column
                best = min(((i, t) for i in range(t, nrows) if a[i][t]),
                           key=lambda ij: len(a[ij[0]][ij[1]]))
                best2 = min(((t, j) for j in range(t, ncols) if a[t][j]),
                            key=lambda ij: len(a[ij[0]][ij[1]]))
                if len(a[best2[0]][best2[1]]) < len(a[best[0]][best[1]]):
                    best = best2
                i, j = best
                a[t], a[i] = a[i], a[t]
                for r in a:
                    r[t], r[j] = r[j], r[t]
                continue
            # divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] and _qpoly_divmod(a[i][j], piv)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for j in range(t, ncols):
                a[t][j] = _qsub_mul(a[t][j], [Fraction(-1)], a[bad][j])
        diag.append(a[t][t])
        t += 1
    return [_qpoly_to_laurent(d) for d in diag], ncols - len(diag)
