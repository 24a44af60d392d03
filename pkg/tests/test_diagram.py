import pytest
from hypothesis import given, settings

from linkbound.catalog import CATALOG
from linkbound.diagram import (EMPTY, Crossing, LinkDiagram, add_kink, crossing_change,
                               crossing_sign, format_pd, from_braid, linking_matrix,
                               mirror, parse_pd, split_union, validate, writhe)
from linkbound.errors import DiagramError, PDSyntaxError

from strategies import diagrams

HOPF_NEG = "X(1,4,2,3) X(3,2,4,1)"
TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_parse_hopf_form():
    d = parse_pd(HOPF_NEG)
    assert len(d.crossings) == 2 and d.k == 2
    assert d.component_of == {1: 0, 2: 0, 3: 1, 4: 1}


def test_parse_unknot_token():
    d = parse_pd("U1")
    assert d.crossings == () and d.k == 1


def test_parse_several_unknot_tokens():
    assert parse_pd("X(1,2,2,1) U1 U2").k == 4


@pytest.mark.parametrize("text, pos", [("X(1,4,2,3", 0), ("X(1,4,2,3) Y", 11), ("U1 X(1,2,2,1)", 3)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PDSyntaxError) as info:
        parse_pd(text)
    assert info.value.position == pos


def test_parse_without_spaces():
    assert parse_pd("X(1,4,2,3)X(3,2,4,1)") == parse_pd(HOPF_NEG)


def test_validate_examples():
    assert validate(parse_pd(HOPF_NEG)) == []
    once = validate(LinkDiagram((Crossing(1, 4, 2, 5), Crossing(3, 2, 4, 1))))
    # every other edge is then miscounted too, so only the first is pinned
    assert str(once[0]) == "edge-multiplicity(3)"
    split = validate(LinkDiagram((Crossing(1, 2, 3, 4), Crossing(2, 1, 4, 3))))
    assert [v.kind for v in split] == ["non-consecutive-component", "non-consecutive-component"]


def test_invalid_diagrams_raise():
    with pytest.raises(DiagramError) as info:
        parse_pd("X(1,2,3,4)")
    assert info.value.violations
    with pytest.raises(DiagramError):
        parse_pd("X(1,3,2,4) X(1,3,2,4)")
    assert [v.kind for v in validate(EMPTY)] == ["empty-diagram"]


def test_under_strand_must_follow_successor():
    t = parse_pd(TREFOIL)
    turned = LinkDiagram((Crossing(2, 5, 1, 4),) + t.crossings[1:])
    assert [str(v) for v in validate(turned)] == ["under-strand(0)"]


def test_hopf_signs_equal():
    d = parse_pd(HOPF_NEG)
    assert crossing_sign(d, 0) == crossing_sign(d, 1)
    assert crossing_sign(d, d.crossings[0]) == crossing_sign(d, 0)


def test_trefoil_signs_pin_the_convention():
    d = parse_pd(TREFOIL)
    signs = {crossing_sign(d, i) for i in range(3)}
    assert len(signs) == 1
    # the atlas 3_1 is the left-handed trefoil
    assert writhe(d) == -3
    assert writhe(from_braid([1, 1, 1])) == 3


def test_linking_matrices():
    assert linking_matrix(CATALOG["hopf"].diagram) == ((0, 1), (1, 0))
    assert linking_matrix(parse_pd(HOPF_NEG)) == ((0, -1), (-1, 0))
    assert linking_matrix(parse_pd("U2")) == ((0, 0), (0, 0))
    assert linking_matrix(parse_pd(TREFOIL)) == ((0,),)


def test_split_union_examples():
    u = parse_pd("U1")
    assert split_union(u, u).k == 2 and not split_union(u, u).crossings
    t, h = parse_pd(TREFOIL), CATALOG["hopf"].diagram
    j = split_union(t, h)
    assert j.k == 3 and len(j.crossings) == 5
    assert linking_matrix(j) == ((0, 0, 0), (0, 0, 1), (0, 1, 0))
    assert split_union(t, EMPTY) == t and split_union(EMPTY, t) == t


def test_mirror_examples():
    t = parse_pd(TREFOIL)
    assert mirror(mirror(t)) == t
    assert linking_matrix(mirror(CATALOG["hopf"].diagram)) == ((0, -1), (-1, 0))
    assert mirror(parse_pd("U1")) == parse_pd("U1")


def test_crossing_change_negates_one_sign():
    t = parse_pd(TREFOIL)
    c = crossing_change(t, 1)
    assert [c.sign(i) for i in range(3)] == [-1, 1, -1]
    assert crossing_change(c, 1) == t


def test_kinks_add_one_signed_crossing():
    t = parse_pd(TREFOIL)
    for kind, s in [(0, -1), (1, 1), (2, 1), (3, -1)]:
        for e in range(1, 7):
            k = add_kink(t, e, kind)
            assert len(k.crossings) == 4 and writhe(k) == -3 + s
    assert add_kink(parse_pd("U1")).k == 1


def test_braid_closure():
    d = from_braid([1, -2, 1, -2])
    assert format_pd(d) == format_pd(CATALOG["figure8"].alt_diagrams[0])
    assert from_braid([1, -1], 3).k == 3
    with pytest.raises(ValueError):
        from_braid([3], 3)


def test_all_over_two_edge_component_orientation():
    # one component lies entirely over the other
    d = parse_pd("X(1,3,2,4) X(2,3,1,4)")
    assert d.k == 2 and linking_matrix(d) == ((0, 0), (0, 0))
    assert d.over_strand(0) == (3, 4) and d.over_strand(1) == (4, 3)


def test_format_round_trip_on_catalog():
    for entry in CATALOG.values():
        for d in (entry.diagram,) + entry.alt_diagrams:
            assert parse_pd(format_pd(d)) == LinkDiagram(
                tuple(sorted(d.crossings, key=lambda x: x.edges)), d.free_unknots)


@settings(max_examples=80, deadline=None)
@given(diagrams())
def test_constructors_keep_diagrams_valid(d):
    assert validate(d) == []
    counts = {}
    for x in d.crossings:
        for e in x.edges:
            counts[e] = counts.get(e, 0) + 1
    assert set(counts.values()) <= {2} and len(counts) == d.edge_count
    assert parse_pd(format_pd(d)).k == d.k


@settings(max_examples=60, deadline=None)
@given(diagrams(), diagrams())
def test_split_union_linking_is_block_diagonal(d1, d2):
    l1, l2, j = linking_matrix(d1), linking_matrix(d2), linking_matrix(split_union(d1, d2))
    k1 = d1.k
    # free unknots of d1 move behind the PD components of d2
    order = list(range(d1.pd_components)) + list(range(k1, k1 + d2.pd_components)) \
        + list(range(d1.pd_components, k1)) + list(range(k1 + d2.pd_components, k1 + d2.k))
    expected = [[0] * (k1 + d2.k) for _ in range(k1 + d2.k)]
    for i in range(k1):
        for j2 in range(k1):
            expected[i][j2] = l1[i][j2]
    for i in range(d2.k):
        for j2 in range(d2.k):
            expected[k1 + i][k1 + j2] = l2[i][j2]
    inv = {old: new for new, old in enumerate(order)}
    for a in range(len(order)):
        for b in range(len(order)):
            assert j[inv[a]][inv[b]] == expected[a][b]


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_mirror_negates_linking_and_signs(d):
    m = mirror(d)
    assert linking_matrix(m) == tuple(tuple(-v for v in r) for r in linking_matrix(d))
    assert [m.sign(i) for i in range(len(d.crossings))] == [-d.sign(i) for i in range(len(d.crossings))]


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_sign_invariant_under_reparse(d):
    again = parse_pd(format_pd(d))
    by_edges = {x.edges: d.sign(i) for i, x in enumerate(d.crossings)}
    assert all(again.sign(i) == by_edges[x.edges] for i, x in enumerate(again.crossings))
