import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfquiver.errors import CriteriaDisagree, DualChevalleyRequired
from hopfquiver.builders import build_dual_hopf
from hopfquiver.quiver import (COSEMISIMPLE, FINITE, INFINITE, LinkQuiver, basic_cycle, build_link_quiver,
                               classify_graph, components, degree_report, evaluate_criteria, h1_component,
                               is_basic_cycle, is_dynkin_union, quiver_verdict, separated_quiver, to_dot, verdict)
from dynkin_corpus import dynkin, euclidean, wild
from helpers import cdn, coalgebra_fixtures, dual_s3, h16, h32, hopf_fixtures, sweedler, taft


def relabel(n, edges, seed):
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return [perm[v] for v in range(n)], [(perm[a], perm[b]) for a, b in edges]


@pytest.mark.parametrize("name,n,edges", dynkin())
def test_dynkin_diagrams(name, n, edges):
    for seed in range(3):
        verts, e = relabel(n, edges, seed)
        g = classify_graph(verts, e)
        assert (g.name, g.dynkin, g.euclidean) == (name, True, False)


@pytest.mark.parametrize("name,n,edges", euclidean())
def test_euclidean_diagrams_are_labelled_and_rejected(name, n, edges):
    for seed in range(3):
        verts, e = relabel(n, edges, seed)
        g = classify_graph(verts, e)
        assert (g.name, g.dynkin, g.euclidean) == (name, False, True)


@pytest.mark.parametrize("name,n,edges", wild())
def test_other_shapes_are_rejected(name, n, edges):
    g = classify_graph(list(range(n)), edges)
    assert (g.name, g.dynkin, g.euclidean) == ("NOT_DYNKIN", False, False)


def tits_form(n, edges):
    m = sympy.eye(n) * 2
    for a, b in edges:
        m[a, b] -= 1
        m[b, a] -= 1
    return m


@st.composite
def connected_multigraphs(draw):
    n = draw(st.integers(1, 9))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]  # spanning tree
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2))
    return n, edges + extra


@settings(max_examples=300, derandomize=True, deadline=None)
@given(connected_multigraphs())
def test_classifier_matches_quadratic_form(graph):
    n, edges = graph
    g = classify_graph(list(range(n)), edges)
    form = tits_form(n, edges)
    assert g.dynkin == form.is_positive_definite
    semidef_corank_one = form.is_positive_semidefinite and form.rank() == n - 1
    assert g.euclidean == semidef_corank_one


def test_separated_quiver_examples():
    loop = LinkQuiver(("v",), (1,), ((1,),))
    assert separated_quiver(loop).edges == ((0, 1),)
    ok, comps = is_dynkin_union(separated_quiver(basic_cycle(3)))
    assert ok and sorted(c.name for c in comps) == ["A2"] * 3
    kron = LinkQuiver(("a", "b"), (1, 1), ((0, 0), (2, 0)))
    ok, comps = is_dynkin_union(separated_quiver(kron))
    assert not ok and any(c.name == "~A1" for c in comps)


def test_verdicts_of_examples():
    v = verdict(h16())
    assert v.kind == FINITE and v.conakayama and v.separated_all_dynkin
    v = verdict(h32())
    assert v.kind == INFINITE and not v.conakayama
    assert v.criteria.arrows_into_unit == [("E", 2, 1)]
    assert ("E", 4, 4) in v.criteria.offending_vertices
    assert verdict(dual_s3()).kind == COSEMISIMPLE
    with pytest.raises(DualChevalleyRequired):
        verdict(build_dual_hopf(h32()))


@pytest.mark.parametrize("name,make", hopf_fixtures())
def test_criteria_agree_on_every_fixture(name, make):
    h = make()
    q = build_link_quiver(h)
    crit = evaluate_criteria(q)
    assert crit.agree()
    v = quiver_verdict(q, h.is_cosemisimple())
    if v.kind == FINITE:
        assert all(c.name == "A2" for c in v.separated_components)


@pytest.mark.parametrize("name,make", coalgebra_fixtures())
def test_criteria_agree_on_path_coalgebras(name, make):
    q = build_link_quiver(make())
    assert evaluate_criteria(q).agree()
    assert is_basic_cycle(q)


def test_disagreeing_criteria_raise():
    # k1 on a 2-cycle with a second vertex of in-degree two: (3) and (4) hold, (2) fails
    q = LinkQuiver(("k1", "a", "b"), (1, 1, 1), ((0, 1, 0), (1, 0, 1), (0, 1, 0)))
    with pytest.raises(CriteriaDisagree):
        quiver_verdict(q, False)


def test_components():
    q = build_link_quiver(h16())
    named = sorted(sorted(q.labels[v] for v in c) for c in components(q))
    assert named == [["E"], ["k1", "kc"], ["kb", "kcb"]]
    assert len(components(build_link_quiver(h32()))) == 1
    assert all(len(c) == 1 for c in components(build_link_quiver(dual_s3())))


def test_unit_component():
    h = h16()
    comp = h1_component(h)
    names = ("1", "c", "y", "cy")
    expected = h.span([h.basis_vector(h.basis_names.index(n)) for n in names])
    assert comp.space == expected and comp.pointed
    assert h.is_subcoalgebra(comp.space)
    assert not h1_component(h32()).pointed
    c = h1_component(dual_s3())
    assert c.space.dim == 1 and c.pointed


def test_degree_report():
    r = degree_report(build_link_quiver(h16()))
    assert all(v["in"] == v["out"] == 1 for v in r["vertices"])
    r = degree_report(build_link_quiver(h32()))
    assert [v["in"] for v in r["vertices"]] == [1, 1, 1, 1, 4]
    assert r["in_equals_out_everywhere"] and r["k1_in_degree_divides_all"]
    r = degree_report(build_link_quiver(taft(5, 5, 2)))
    assert all(v["in"] == v["out"] == 1 for v in r["vertices"])


def test_pointed_neighbours_give_equal_degrees():
    # every simple directly linked to k1 is one-dimensional: in = out = in-degree of k1
    for h in (h16(), sweedler(), taft(6, 3, 1, 1)):
        q = build_link_quiver(h)
        unit_in = q.in_degree(0)
        assert all(q.in_degree(v) == q.out_degree(v) == unit_in for v in range(q.n))


def test_dot_export():
    dot = to_dot(build_link_quiver(h16()), name="h16")
    assert dot.count("->") == 5
    assert 'label="E (r=2)"' in dot and "subgraph cluster_k1" in dot
    assert "n4 -> n4;" in dot


def test_verdict_does_not_depend_on_lambda():
    quivers = [build_link_quiver(h32(lam)) for lam in (1, 2)]
    assert quivers[0] == quivers[1]
    assert verdict(h32(2)).kind == INFINITE
