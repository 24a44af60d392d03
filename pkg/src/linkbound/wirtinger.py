"""
Wirtinger presentations of link groups and abelianized Fox calculus.

Generators are the arcs of a diagram (maximal over-passing strands), each
standing for a meridian of its component.  At a crossing of sign s with
incoming under-arc ``u_in``, outgoing under-arc ``u_out`` and over-arc
``w`` the relator is ``u_out^-1 w^s u_in w^-s``.  One relator is redundant
for a connected diagram and is dropped.  Crossingless unknots contribute a
generator and no relator.
"""

from dataclasses import dataclass

from .laurent import MultiLaurent

__all__ = [
    "FreeWord",
    "WirtingerPresentation",
    "arcs",
    "wirtinger",
    "abelianization_vector",
    "fox_derivative",
]


@dataclass(frozen=True)
class FreeWord:
    """A word in a free group: a tuple of ``(generator, +1 | -1)`` letters."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(g), int(e)) for g, e in self.letters))
        for _, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {e}")

    @classmethod
    def gen(cls, g, e=1):
        return cls(((g, e),))

    def __mul__(self, other):
        return FreeWord(self.letters + other.letters)

    def inverse(self):
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduced(self):
        out = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return FreeWord(tuple(out))

    def generators(self):
        return {g for g, _ in self.letters}

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{g + 1}" if e == 1 else f"x{g + 1}^-1" for g, e in self.letters)


@dataclass(frozen=True)
class WirtingerPresentation:
    n: int
    relators: tuple
    component_of_generator: tuple
    k: int
    dropped: int = -1

    def __str__(self):
        gens = ", ".join(f"x{i + 1}" for i in range(self.n))
        rels = "; ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def arcs(d):
    """
    Partition the edges into arcs, ordered by smallest edge; edges are joined
    when they are the two halves of an over-strand.  Every crossingless
    unknot is an arc with no edges, listed last.
    """
    parent = {e: e for e in range(1, d.edge_count + 1)}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for x in d.crossings:
        rb, rd = find(x.b), find(x.d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    groups = {}
    for e in parent:
        groups.setdefault(find(e), []).append(e)
    out = [tuple(sorted(g)) for g in groups.values()]
    out.sort()
    return out + [()] * d.free_unknots


def wirtinger(d, drop=None):
    """
    Wirtinger presentation of the diagram's link group.

    ``drop`` is the index of the crossing whose relator is omitted; the
    default is the last crossing.  Pass ``drop=False`` to keep every
    relator.
    """
    arc_list = arcs(d)
    arc_of = {}
    for g, edges in enumerate(arc_list):
        for e in edges:
            arc_of[e] = g
    comp = d.component_of
    n_pd = d.pd_components
    gen_comp = []
    free_seen = 0
    for edges in arc_list:
        if edges:
            gen_comp.append(comp[edges[0]])
        else:
            gen_comp.append(n_pd + free_seen)
            free_seen += 1
    nc = len(d.crossings)
    if drop is None:
        drop = nc - 1
    relators = []
    for i, x in enumerate(d.crossings):
        if drop is not False and i == drop:
            continue
        s = d.sign(i)
        w = arc_of[x.b]
        u_in, u_out = arc_of[x.a], arc_of[x.c]
        relators.append(FreeWord(((u_out, -1), (w, s), (u_in, 1), (w, -s))))
    return WirtingerPresentation(
        n=len(arc_list),
        relators=tuple(relators),
        component_of_generator=tuple(gen_comp),
        k=d.k,
        dropped=-1 if drop is False or nc == 0 else drop,
    )


def abelianization_vector(w, p):
    """Image of a word in H_1 = Z^k: each letter contributes +-e_(component)."""
    v = [0] * p.k
    for g, e in w.letters:
        if not 0 <= g < p.n:
            raise ValueError(f"generator {g} out of range")
        v[p.component_of_generator[g]] += e
    return tuple(v)


def fox_derivative(w, g, monomial_of):
    """
    Abelianized Fox derivative of ``w`` with respect to generator ``g``.

    ``monomial_of`` maps every generator occurring in ``w`` to its image
    monomial in Z[H], given either as a :class:`MultiLaurent` monomial or as
    an exponent vector.
    """
    def image(h):
        try:
            img = monomial_of[h]
        except (KeyError, IndexError):
            raise KeyError(f"generator {h} has no image") from None
        if isinstance(img, MultiLaurent):
            if not img.is_monomial() or img.leading_term()[1] != 1:
                raise ValueError(f"image of generator {h} is not a monomial")
            return img.leading_term()[0]
        return tuple(img)

    exps = {h: image(h) for h in w.generators()}
    nvars = len(next(iter(exps.values()))) if exps else len(image(g))
    prefix = [0] * nvars
    acc = {}
    for h, e in w.letters:
        if e == 1:
            if h == g:
                key = tuple(prefix)
                acc[key] = acc.get(key, 0) + 1
            prefix = [a + b for a, b in zip(prefix, exps[h])]
        else:
            prefix = [a - b for a, b in zip(prefix, exps[h])]
            if h == g:
                key = tuple(prefix)
                acc[key] = acc.get(key, 0) - 1
    return MultiLaurent(nvars, acc)
