"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Under pytest the lines are repeated in the terminal summary; the module
also runs on its own with ``python3 tests/test_acceptance.py``.
"""

import random
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import isinf

import sympy

from linkbound.bounds import (cobordism_exists, genus_lower_bound, split_rank_check,
                              weakly_split_bound)
from linkbound.catalog import CATALOG, REQUIRED
from linkbound.diagram import (add_kink, crossing_change, from_braid, linking_matrix,
                               mirror, validate)
from linkbound.invariants import (AdmissibleMap, alexander_matrix, alexander_polynomial,
                                  default_maps, diagonal_map, identity_map, link_determinant,
                                  min_generators_q, rank_r)
from linkbound.laurent import MultiLaurent
from linkbound.linalg import LaurentMatrix, det_fraction_free, rank_over_fraction_field
from linkbound.wirtinger import wirtinger

import oracles

SEED = 20240601
RESULTS = []


def report(n, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n} [{title}]: {status}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failures: {failures[:3]}"
    RESULTS.append(line)
    print("\n" + line, flush=True)
    return not failures


def _all_diagrams():
    for name, e in sorted(CATALOG.items()):
        for d in (e.diagram,) + e.alt_diagrams:
            yield name, d


# 1

def check_catalog_regression():
    failures = []
    for name in sorted(CATALOG):
        e = CATALOG[name]
        d, x = e.diagram, e.expected
        got = (str(alexander_polynomial(d)), link_determinant(d),
               rank_r(d, diagonal_map(d.k)), min_generators_q(d), linking_matrix(d))
        want = (x.alexander, x.determinant, x.r, x.m_q, x.linking)
        if got != want:
            failures.append((name, got, want))
    missing = [n for n in REQUIRED if n not in CATALOG]
    failures += [("missing", n) for n in missing]
    return report(1, "catalog regression", failures, f"{len(CATALOG)} entries")


def test_criterion_1_catalog_regression():
    assert check_catalog_regression()


# 2

def fuzzed_diagrams(count, seed=SEED):
    rng = random.Random(seed)
    bases = [e.diagram for e in CATALOG.values()]
    out = []
    while len(out) < count:
        if rng.random() < 0.6:
            n = rng.randint(2, 4)
            word = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 8))]
            d = from_braid(word, n)
        else:
            d = rng.choice(bases)
        for _ in range(rng.randint(1, 3)):
            move = rng.choice(["change", "kink", "mirror"])
            if move == "change" and d.crossings:
                d = crossing_change(d, rng.randrange(len(d.crossings)))
            elif move == "kink" and d.edge_count:
                d = add_kink(d, rng.randint(1, d.edge_count), rng.randint(0, 3))
            elif move == "kink" and d.free_unknots:
                d = add_kink(d, None, rng.randint(0, 3))
            elif move == "mirror":
                d = mirror(d)
        if len(d.crossings) <= 14:
            out.append(d)
    return out


def check_equivalence():
    failures = []
    pool = [d for _, d in _all_diagrams()] + fuzzed_diagrams(220)
    for d in pool:
        if validate(d):
            failures.append(("invalid", str(d)))
            continue
        r = rank_r(d, diagonal_map(d.k))
        if (r == 0) != bool(alexander_polynomial(d)):
            failures.append((str(d), r, str(alexander_polynomial(d))))
    return report(2, "r(L, δ) = 0 iff Δ ≠ 0", failures, f"{len(pool)} diagrams, 220 fuzzed")


def test_criterion_2_equivalence():
    assert check_equivalence()


# 3

def check_split_rank():
    failures = []
    names = sorted(CATALOG)
    r_of = {n: rank_r(CATALOG[n].diagram, diagonal_map(CATALOG[n].diagram.k)) for n in names}
    count = 0
    for m in range(1, 5):
        for combo in combinations_with_replacement(names, m):
            parts = [CATALOG[n].diagram for n in combo]
            m_, r, holds = split_rank_check(parts)
            count += 1
            expected = sum(r_of[n] for n in combo) + (m - 1)
            if not holds or r != expected or m_ != m:
                failures.append((combo, r, expected))
    return report(3, "split unions: r ≥ m - 1 and additivity", failures, f"{count} unions")


def test_criterion_3_split_rank():
    assert check_split_rank()


# 4

T = oracles.T
# Whitehead PD X(2,10,3,9) X(4,5,1,6) X(6,1,7,2) X(8,4,9,3) X(10,7,5,8), traced by hand:
# arcs x1={1,2} x2={3,4} x3={5,6} x4={7,8} x5={9,10}; signs + - - + -.
# Each relation u_out = w^s u_in w^-s is written as the word u_out^-1 w^s u_in w^-s.
WHITEHEAD_RELATIONS = [
    (2, 5, +1, 1),
    (1, 3, -1, 2),
    (4, 1, -1, 3),
    (5, 2, +1, 4),
    (3, 4, -1, 5),
]


def _sympy_fox(word, g):
    # abelianized Fox derivative with every generator sent to t
    total, prefix = 0, 0
    for h, e in word:
        if e == 1:
            if h == g:
                total += T ** prefix
            prefix += 1
        else:
            prefix -= 1
            if h == g:
                total -= T ** prefix
    return total


def hand_whitehead_alexander():
    words = [[(o, -1), (w, s), (i, 1), (w, -s)] for o, w, s, i in WHITEHEAD_RELATIONS[:-1]]
    rows = [[_sympy_fox(wd, g) for g in range(1, 6)] for wd in words]
    M = sympy.Matrix(rows)
    minors = [sympy.factor((M[:, [c for c in range(5) if c != j]]).det()) for j in range(5)]
    return reduce(sympy.gcd, minors)


def check_whitehead_bound():
    failures = []
    wh, un = CATALOG["whitehead"].diagram, CATALOG["unlink2"].diagram
    hand = hand_whitehead_alexander()
    delta = alexander_polynomial(wh)
    if hand == 0 or not oracles.associate(delta, hand):
        failures.append(("hand Fox oracle", str(hand), str(delta)))
    if not oracles.associate(delta, (T - 1) ** 3):
        failures.append(("expected (t-1)^3", str(delta)))
    if linking_matrix(wh) != ((0, 0), (0, 0)) or linking_matrix(un) != ((0, 0), (0, 0)):
        failures.append("linking matrices are not both zero")
    rep = genus_lower_bound(wh, un)
    if not rep.exists or rep.rational_bound != Fraction(1, 2) or rep.integer_bound != 1:
        failures.append(("compare", rep.exists, rep.rational_bound, rep.integer_bound))
    ws = weakly_split_bound(wh, 2)
    if not ws.delta_nonzero or ws.bound != 1 or ws.bound != rep.integer_bound:
        failures.append(("floor(m/2) route", ws))
    return report(4, "Whitehead vs 2-unlink", failures,
                  f"exists, bound 1/2, integer 1 = ⌊2/2⌋, hand Δ ≐ {sympy.factor(sympy.fraction(sympy.together(hand))[0])}")


def test_criterion_4_whitehead_bound():
    assert check_whitehead_bound()


# 5

def _random_laurent(rng, nvars, bound=3, max_terms=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(-bound, bound) for _ in range(nvars))
        terms[e] = rng.randint(-bound, bound)
    return MultiLaurent(nvars, terms)


def _random_matrix(rng, r, c, nvars, max_terms=3):
    rows = [[_random_laurent(rng, nvars, max_terms=max_terms) for _ in range(c)] for _ in range(r)]
    if r >= 2 and rng.random() < 0.4:
        i, j = rng.sample(range(r), 2)
        s = _random_laurent(rng, nvars, max_terms=2)
        rows[i] = [s * x for x in rows[j]]
    return LaurentMatrix.from_rows(rows, nvars, ncols=c)


def check_linear_algebra():
    rng = random.Random(SEED)
    failures = []
    for _ in range(100):
        n = rng.randint(0, 4)
        m = _random_matrix(rng, n, n, rng.randint(1, 2))
        if det_fraction_free(m) != oracles.cofactor_det([list(r) for r in m.rows], m.nvars):
            failures.append(("det", str(m)))
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 6)
        m = _random_matrix(rng, r, c, 2, max_terms=2)
        if rank_over_fraction_field(m) != oracles.sympy_rank(m):
            failures.append(("rank", str(m)))
    return report(5, "linear algebra vs oracles", failures, "100 determinants, 100 ranks")


def test_criterion_5_linear_algebra():
    assert check_linear_algebra()


# 6

def check_conventions():
    failures = []
    for name, e in sorted(CATALOG.items()):
        base = e.diagram
        delta0 = alexander_polynomial(base)
        maps = default_maps(base.k)
        r0 = [rank_r(base, phi) for phi in maps]
        for d in (base,) + e.alt_diagrams:
            for drop in range(len(d.crossings)):
                if [rank_r(d, phi, drop) for phi in maps] != r0:
                    failures.append((name, "rank", drop))
                if not alexander_polynomial(d, drop).is_associate(delta0):
                    failures.append((name, "Δ", drop))
        if not alexander_polynomial(mirror(base)).is_associate(delta0):
            failures.append((name, "mirror"))
    return report(6, "drop choice, alternates, mirror", failures)


def test_criterion_6_conventions():
    assert check_conventions()


# 7

def random_maps(count, seed=SEED):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k, m = rng.randint(1, 3), rng.randint(1, 2)
        rows = [[rng.randint(-2, 2) for _ in range(k)] for _ in range(m)]
        try:
            out.append(AdmissibleMap(rows))
        except ValueError:
            continue
    return out


def _numbers(rep, swap=False):
    per_map = [(phi, rj, rl, b) if swap else (phi, rl, rj, b) for phi, rl, rj, b in rep.per_map]
    return rep.exists, rep.rational_bound, rep.integer_bound, rep.gordian_q, per_map


def check_bounds_algebra():
    failures = []
    names = sorted(CATALOG)
    maps = random_maps(50)
    for a in names:
        L = CATALOG[a].diagram
        if genus_lower_bound(L, L).rational_bound != 0 or not cobordism_exists(L, L):
            failures.append(("reflexive", a))
        for b in names:
            J = CATALOG[b].diagram
            fwd, back = genus_lower_bound(L, J), genus_lower_bound(J, L)
            if _numbers(fwd) != _numbers(back, swap=True):
                failures.append(("symmetry", a, b))
            differ = L.k != J.k or linking_matrix(L) != linking_matrix(J)
            if isinf(fwd.rational_bound) != differ:
                failures.append(("infinite iff linking differs", a, b))
            if differ:
                continue
            for phi in maps:
                if phi.k != L.k:
                    continue
                more = genus_lower_bound(L, J, [phi])
                if more.rational_bound < fwd.rational_bound:
                    failures.append(("monotone", a, b, str(phi)))
                back_more = genus_lower_bound(J, L, [phi])
                if back_more.rational_bound != more.rational_bound:
                    failures.append(("symmetry with map", a, b, str(phi)))
    used = sum(1 for phi in maps if any(CATALOG[n].diagram.k == phi.k for n in names))
    return report(7, "bounds algebra", failures,
                  f"{len(names) ** 2} pairs, 50 random maps ({used} matching some k)")


def test_criterion_7_bounds_algebra():
    assert check_bounds_algebra()


# 8

def check_fox_identity():
    failures = []
    count = 0
    for name, d in _all_diagrams():
        p = wirtinger(d, drop=False)
        maps = [diagonal_map(d.k)] + ([identity_map(d.k)] if d.k >= 2 else [])
        for phi in maps:
            am = alexander_matrix(p, phi)
            count += len(p.relators)
            if not am.row_identity_holds():
                failures.append((name, phi.label))
    return report(8, "Fox identity", failures, f"{count} relator rows")


def test_criterion_8_fox_identity():
    assert check_fox_identity()


if __name__ == "__main__":
    import sys
    checks = [check_catalog_regression, check_equivalence, check_split_rank, check_whitehead_bound,
              check_linear_algebra, check_conventions, check_bounds_algebra, check_fox_identity]
    sys.exit(0 if all([c() for c in checks]) else 1)
