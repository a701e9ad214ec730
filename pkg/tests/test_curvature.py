import math
import random

import pytest

from cat0kit.complex import build_complex, full_subcomplex, link
from cat0kit.curvature import (
    certify_cat0_necessary,
    check_edge_links,
    check_systolic,
    find_empty_ngon,
    is_empty_cycle,
    is_flag,
    iter_simple_cycles,
    shortest_cycle,
)
from cat0kit.errors import DimensionTooHigh, UnsupportedN
from cat0kit.fixtures import declared_cat0_fixtures, default_fixtures, pentagon_join, wheel

from conftest import ids


def test_flag_examples(tet, hollow, octa):
    assert is_flag(tet) == (True, None)
    ok, witness = is_flag(hollow)
    assert not ok and sorted(hollow.path_names(witness)) == ["a", "b", "c"]
    assert is_flag(octa)[0]


def test_empty_ngon_examples(tet, hollow):
    assert find_empty_ngon(tet, 3) is None
    assert sorted(hollow.path_names(find_empty_ngon(hollow, 3))) == ["a", "b", "c"]
    K = pentagon_join(4)
    assert K.path_names(find_empty_ngon(K, 5)) == ["v0", "v1", "v2", "v3", "v4"]
    with pytest.raises(UnsupportedN):
        find_empty_ngon(tet, 6)


def test_square_filled_by_either_diagonal():
    K = build_complex([["a", "b", "c"], ["a", "c", "d"]])
    assert not is_empty_cycle(K, ids(K, "a", "b", "c", "d"))
    assert not is_empty_cycle(K, ids(K, "b", "c", "d", "a"))
    assert find_empty_ngon(K, 4) is None
    bare = build_complex([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])
    assert find_empty_ngon(bare, 4) is not None


def test_octahedron_equator_is_an_empty_square(octa):
    # the octahedron is flag but each equator bounds only through a pole
    cycle = find_empty_ngon(octa, 4)
    assert cycle is not None and len(set(cycle)) == 4


def test_systolic_examples(tet):
    assert check_systolic(tet) == (True, [])
    ok, failures = check_systolic(pentagon_join(3))
    assert not ok
    K = pentagon_join(3)
    edge = ids(K, "x1", "x2")
    assert any(f.simplex == edge and f.reason == "empty-5-gon" for f in failures)


def test_edge_links():
    res = check_edge_links(wheel(3))
    assert not res.ok
    assert res.worst_girth == 3
    assert res.worst_length == pytest.approx(3 * math.acos(1 / 3), abs=1e-12)
    six = check_edge_links(wheel(6))
    assert six.ok
    assert 6 * math.acos(1 / 3) == pytest.approx(7.38576, abs=1e-5)
    assert check_edge_links(build_complex([list("abcd")])).ok
    with pytest.raises(DimensionTooHigh):
        check_edge_links(build_complex([list("abcde")]))


def test_certify_examples(tet, hollow):
    assert certify_cat0_necessary(tet).passes
    assert not certify_cat0_necessary(pentagon_join(4)).passes
    rep = certify_cat0_necessary(hollow)
    assert not rep.flag and rep.empty_ngon_witnesses[3] is not None and not rep.passes


@pytest.mark.parametrize("f", declared_cat0_fixtures(), ids=lambda f: f.name)
def test_declared_fixtures_pass_the_battery(f):
    assert certify_cat0_necessary(f.complex).passes


@pytest.mark.parametrize("f", default_fixtures(), ids=lambda f: f.name)
def test_systolic_implies_flag_and_no_small_empty_cycles(f):
    K = f.complex
    ok, _ = check_systolic(K)
    if ok:
        assert is_flag(K)[0]
        assert all(find_empty_ngon(K, n) is None for n in (3, 4, 5))


@pytest.mark.parametrize("f", declared_cat0_fixtures(), ids=lambda f: f.name)
def test_full_subcomplexes_inherit_no_empty_cycles(f):
    K = f.complex
    rng = random.Random(7)
    for _ in range(20):
        W = rng.sample(K.vertices, rng.randint(1, len(K.vertices)))
        sub = full_subcomplex(K, W, allow_disconnected=True)
        assert all(find_empty_ngon(sub, n) is None for n in (3, 4, 5))


def test_simple_cycles_of_complete_graph_on_five(tet):
    K = build_complex([[a, b] for a in range(5) for b in range(a + 1, 5)])
    # (n-1)!/2 distinct undirected Hamiltonian cycles on n vertices
    assert len(list(iter_simple_cycles(K, 5))) == 12
    assert len(list(iter_simple_cycles(K, 3))) == 10


def test_shortest_cycle():
    assert shortest_cycle({0: {1}, 1: {0, 2}, 2: {1}}) is None
    adj = {i: {(i + 1) % 5, (i - 1) % 5} for i in range(5)}
    adj[0].add(2)
    adj[2].add(0)
    assert len(shortest_cycle(adj)) == 3


def test_link_witness_is_a_link_cycle():
    K = pentagon_join(3)
    for fail in check_systolic(K)[1]:
        lk = link(K, fail.simplex)
        cyc = fail.cycle
        assert all(lk.is_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
