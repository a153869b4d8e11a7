"""Tests for Coxeter graphs, the Tits representation, and group enumeration."""

import random

import pytest

from vartin import corpus
from vartin.coxeter import (
    SimpleGraph,
    WElement,
    centralizer,
    doubled_graph,
    enumerate_w,
    graph_from_dict,
    parse_graph,
    prod_r,
    right_angled_presentation,
    simple_reflection,
    word_element,
)
from vartin.errors import CapExceededError, InputError


def test_parse_single_vertex():
    g = parse_graph('{"vertices": ["s"], "edges": []}')
    assert g.vertices == ("s",)
    assert g.label("s", "s") == 1


def test_parse_a2():
    g = parse_graph('{"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 3}]}')
    assert g.label("s", "t") == 3
    assert g.label("t", "s") == 3


def test_parse_rejects_m_below_two():
    with pytest.raises(InputError):
        parse_graph('{"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 1}]}')


def test_parse_rejects_duplicates_and_loops():
    with pytest.raises(InputError):
        graph_from_dict({"vertices": ["s", "s"], "edges": []})
    with pytest.raises(InputError):
        graph_from_dict({"vertices": ["s", "t"],
                         "edges": [{"u": "s", "v": "t", "m": 3},
                                   {"u": "t", "v": "s", "m": 4}]})
    with pytest.raises(InputError):
        graph_from_dict({"vertices": ["s"], "edges": [{"u": "s", "v": "s", "m": 3}]})


def test_infinite_label_gives_minus_two():
    g = graph_from_dict({"vertices": ["s", "t"],
                         "edges": [{"u": "s", "v": "t", "m": "inf"}]})
    assert g.form.matrix[0][1] == g.ring.from_int(-2)
    assert g.ring.level == 1


def test_reflection_rank_one():
    g = corpus.graph("a1")
    r = simple_reflection(g, "s")
    assert r.matrix == ((g.ring.from_int(-1),),)


def test_reflection_a2_on_other_root():
    g = corpus.graph("a2")
    r = simple_reflection(g, "s")
    alpha_t = g.simple_root("t")
    image = r.apply(alpha_t)
    assert image == (g.ring.one, g.ring.one)  # alpha_s + alpha_t


def test_reflections_are_involutions():
    for name in corpus.names():
        g = corpus.graph(name)
        for s in g.vertices:
            r = simple_reflection(g, s)
            assert (r * r).is_identity()


def test_product_orders():
    a2 = corpus.graph("a2")
    st = word_element(a2, ["s", "t"])
    assert st.order() == 3
    assert WElement.identity(a2).order() == 1
    b2 = corpus.graph("b2")
    assert word_element(b2, ["s", "t"]).order() == 4


@pytest.mark.parametrize("name,size", [
    ("a1", 2), ("a2", 6), ("b2", 8), ("i2_5", 10),
    ("i2_6", 12), ("a1xa1", 4), ("a3", 24),
])
def test_group_sizes(name, size):
    table = enumerate_w(corpus.graph(name))
    assert table.order == size


def test_affine_group_exceeds_cap():
    with pytest.raises(CapExceededError):
        enumerate_w(corpus.graph("affine_a2"), cap=1000)


def test_braid_relations_hold_exactly():
    for name in corpus.names():
        g = corpus.graph(name)
        refl = g.reflections()
        for i, j in g.finite_pairs():
            m = g.label(i, j)
            lhs = word_element(g, [v for v in prod_r(i, j, m)])
            rhs = word_element(g, [v for v in prod_r(j, i, m)])
            assert lhs == rhs, (name, i, j)


def test_form_preserved_by_random_words():
    rng = random.Random(7)
    for name in ("a2", "b2", "i2_5", "affine_a2"):
        g = corpus.graph(name)
        n = len(g.vertices)
        for _ in range(50):
            word = [rng.randrange(n) for _ in range(rng.randint(0, 8))]
            w = word_element(g, word)
            for i in range(n):
                for j in range(n):
                    u = w.apply(g.simple_root(i))
                    v = w.apply(g.simple_root(j))
                    assert g.form.pairing(u, v) == g.form.matrix[i][j]


def test_inverse_with_and_without_word():
    g = corpus.graph("b2")
    w = word_element(g, ["s", "t", "s"])
    assert (w * w.inverse()).is_identity()
    bare = WElement(g, w.matrix)  # no word: exercises Gauss-Jordan
    assert (bare.inverse() * w).is_identity()


def test_centralizer_sizes_in_a2():
    g = corpus.graph("a2")
    table = enumerate_w(g)
    assert len(centralizer(table, WElement.identity(g))) == table.order
    assert len(centralizer(table, word_element(g, ["s"]))) == 2
    assert len(centralizer(table, word_element(g, ["s", "t"]))) == 3


def test_doubled_graph_single_vertex():
    d = doubled_graph(SimpleGraph(["s"], []))
    assert d.vertices == (("s", 0), ("s", 1))
    assert d.labels[("s", 0)] == "Z"
    assert d.labels[("s", 1)] == "Z2"
    assert not d.edges


def test_doubled_graph_single_edge():
    # One base edge spawns the four cross pairs and never the (v,0)-(v,1) pair.
    d = doubled_graph(SimpleGraph(["s", "t"], [("s", "t")]))
    assert len(d.vertices) == 4
    expected = {(("s", 0), ("t", 0)), (("s", 1), ("t", 1)),
                (("s", 0), ("t", 1)), (("t", 0), ("s", 1))}
    assert set(map(frozenset, d.edges)) == set(map(frozenset, expected))


def test_doubled_graph_path():
    d = doubled_graph(SimpleGraph(["s", "t", "u"], [("s", "t"), ("t", "u")]))
    assert len(d.vertices) == 6
    assert len(d.edges) == 8
    assert sorted(d.labels.values()) == ["Z", "Z", "Z", "Z2", "Z2", "Z2"]


def test_right_angled_presentation_single_vertex():
    p = right_angled_presentation(SimpleGraph(["s"], []))
    assert p.generators == ("S:s", "T:s")
    assert p.relations == ((("T:s", "T:s"), ()),)  # Z * Z/2


def test_right_angled_presentation_matches_doubling():
    base = SimpleGraph(["s", "t", "u"], [("s", "t"), ("t", "u")])
    p = right_angled_presentation(base)
    d = doubled_graph(base)
    torsion = [rel for rel in p.relations if rel[1] == ()]
    commutations = [rel for rel in p.relations if rel[1] != ()]
    # tau_s^2 = 1 per order-2 vertex group; one commutation per doubled edge.
    assert len(torsion) == sum(1 for lab in d.labels.values() if lab == "Z2")
    assert len(commutations) == len(d.edges)
    for lhs, rhs in commutations:
        assert lhs == (rhs[1], rhs[0])


def test_prod_r_convention():
    assert prod_r("x", "y", 1) == ["y"]
    assert prod_r("x", "y", 2) == ["x", "y"]
    assert prod_r("x", "y", 3) == ["y", "x", "y"]
    assert prod_r("x", "y", 4) == ["x", "y", "x", "y"]
