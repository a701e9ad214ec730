import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cat0kit.disks import make_disk, minimal_spanning_disk, validate_disk
from cat0kit.errors import EndpointMismatch, MoveMismatch, TargetNotGeodesic
from cat0kit.fixtures import default_fixtures, fixture
from cat0kit.moves import (
    LENGTH_CHANGE,
    TRI_TRI,
    TRIANGLE,
    TRIVIAL,
    Move,
    apply_move,
    enumerate_moves,
    find_chain_shortening,
    move_graph_component,
    reduce_to_geodesic,
    replay,
    shorter_fellow,
    straighten,
)
from cat0kit.paths import enumerate_geodesics, is_geodesic, iter_paths, path_distance

from conftest import ids

FIXTURES = {f.name: f.complex for f in default_fixtures()}


def test_enumerate_moves_tetrahedron(tet):
    a, b, c, d = ids(tet, "a b c d")
    moves = enumerate_moves(tet, (a, b, c))
    assert [(m.kind, m.new) for m in moves] == [(TRIANGLE, (a, c)), (TRI_TRI, (a, d, c))]


def test_enumerate_moves_backtrack(tet):
    a, b = ids(tet, "a b")
    (m,) = enumerate_moves(tet, (a, b, a))
    assert m.kind == TRIVIAL and apply_move((a, b, a), m) == (a,)


def test_enumerate_moves_hex_rim(hexd):
    v0, v1, v2, o = ids(hexd, "v0 v1 v2 o")
    (m,) = enumerate_moves(hexd, (v0, v1, v2))
    assert m.kind == TRI_TRI and m.new == (v0, o, v2)
    assert apply_move((v0, v1, v2), m) == (v0, o, v2)


def test_apply_triangle_move(tet):
    a, b, c = ids(tet, "a b c")
    m = next(m for m in enumerate_moves(tet, (a, b, c)) if m.kind == TRIANGLE)
    assert apply_move((a, b, c), m) == (a, c)
    with pytest.raises(MoveMismatch):
        apply_move((a, c, b), m)


def test_move_format_and_inverse(hexd):
    m = enumerate_moves(hexd, ids(hexd, "v0 v1 v2"))[0]
    assert m.format(hexd) == "triangle_triangle@1: v0 v1 v2 -> v0 o v2"
    assert m.inverse().inverse() == m
    with pytest.raises(MoveMismatch):
        Move(TRIANGLE, 1, (0, 1, 2), (0, 2), ()).inverse()


def test_straighten_examples(tet, hexd):
    a, b = ids(tet, "a b")
    final, moves = straighten(tet, (a, b, a))
    assert final == (a,) and [m.kind for m in moves] == [TRIVIAL]
    a, b, c, d = ids(tet, "a b c d")
    final, moves = straighten(tet, (a, c, b), (a, d, b))
    assert final == (a, d, b)
    assert len(moves) == 1 and moves[0].kind == TRI_TRI and moves[0].position == 1
    alpha, beta = ids(hexd, "v0 v1 v2 v3"), ids(hexd, "v0 o v3")
    final, moves = straighten(hexd, alpha, beta)
    assert final == beta and replay(alpha, moves) == beta


def test_straighten_errors(hexd):
    with pytest.raises(EndpointMismatch):
        straighten(hexd, ids(hexd, "v0 o"), ids(hexd, "v0 v1"))
    with pytest.raises(TargetNotGeodesic):
        straighten(hexd, ids(hexd, "v0 o v3"), ids(hexd, "v0 v1 v2 v3"))
    with pytest.raises(TargetNotGeodesic):
        straighten(hexd, ids(hexd, "v0 v1 v2"), ids(hexd, "v0 v5 o v2"))


def test_straighten_to_a_reachable_non_geodesic(hexd):
    alpha = ids(hexd, "v0 v1 v2 v3 v2")
    final, moves = straighten(hexd, alpha, ids(hexd, "v0 o v3 v2"))
    assert final == ids(hexd, "v0 o v3 v2") and replay(alpha, moves) == final


def test_shorter_fellow_examples(tet, hexd):
    assert shorter_fellow(hexd, ids(hexd, "v0 o v3")) is None
    a, b = ids(tet, "a b")
    assert shorter_fellow(tet, (a, b, a)) == (a,)
    alpha = ids(hexd, "v0 v1 v2 v3")
    fellow = shorter_fellow(hexd, alpha)
    assert len(fellow) == 3 and path_distance(hexd, alpha, fellow) <= 1


def test_backtrack_without_close_shortcut(hexd):
    # every shorter o -> v3 path sits next to v3 at time 1, two steps from v0
    alpha = ids(hexd, "o v0 o v3")
    assert shorter_fellow(hexd, alpha) is None
    fellow = shorter_fellow(hexd, alpha, k=2)
    assert fellow is not None and len(fellow) < len(alpha)
    assert path_distance(hexd, alpha, fellow) == 2


def test_chain_shortening_on_hexagon(hexd):
    (D,) = minimal_spanning_disk(hexd, ids(hexd, "v0 v1 v2 v3 v4 v5 v0"))
    gamma = ids(hexd, "v0 v1 v2 v3")
    seq = find_chain_shortening(gamma, D)
    assert [m.kind for m in seq] == [TRI_TRI, TRIANGLE]
    assert replay(gamma, seq) == ids(hexd, "v0 o v3")


def test_chain_shortening_blocked_by_negative_vertex():
    # gamma 0 1 2 3 4 with degrees 3, 5, 3 at 1, 2, 3
    tris = [(2, 1, 5), (2, 5, 6), (2, 6, 7), (2, 7, 3), (1, 0, 5), (3, 7, 4)]
    D = make_disk(tris, (2, 1, 0, 5, 6, 7, 4, 3, 2), list(range(8)))
    assert validate_disk(D).nonsingular
    assert [D.degree(v) for v in (1, 2, 3)] == [3, 5, 3]
    assert find_chain_shortening((0, 1, 2, 3, 4), D) is None


def test_chain_shortening_all_zero():
    K = fixture("strip", 3).complex
    (D,) = minimal_spanning_disk(K, ids(K, "b0 b1 b2 b3 t3 t2 t1 t0 b0"))
    assert find_chain_shortening(ids(K, "b0 b1 b2 b3"), D) is None


def test_chain_shortening_on_a_strip():
    K = fixture("strip", 2).complex
    (D,) = minimal_spanning_disk(K, ids(K, "t0 b0 b1 t1 t0"))
    gamma = ids(K, "t0 b0 b1 t1")
    seq = find_chain_shortening(gamma, D)
    out = replay(gamma, seq)
    assert len(out) == len(gamma) - 1 and out[0] == gamma[0] and out[-1] == gamma[-1]


@st.composite
def fixture_and_path(draw):
    name = draw(st.sampled_from(sorted(FIXTURES)))
    K = FIXTURES[name]
    p = [draw(st.sampled_from(K.vertices))]
    for _ in range(draw(st.integers(0, 6))):
        p.append(draw(st.sampled_from(sorted(K.neighbors(p[-1])))))
    return K, tuple(p)


@settings(max_examples=200, deadline=None)
@given(fixture_and_path())
def test_moves_preserve_endpoints_and_change_length_by_kind(data):
    K, alpha = data
    for m in enumerate_moves(K, alpha):
        beta = apply_move(alpha, m)
        assert (beta[0], beta[-1]) == (alpha[0], alpha[-1])
        assert len(beta) - len(alpha) == LENGTH_CHANGE[m.kind] == m.length_change
        assert all(K.is_edge(x, y) for x, y in zip(beta, beta[1:]))


@settings(max_examples=200, deadline=None)
@given(fixture_and_path())
def test_straightening_reaches_a_geodesic_without_lengthening(data):
    K, alpha = data
    final, moves = reduce_to_geodesic(K, alpha)
    assert is_geodesic(K, final) and replay(alpha, moves) == final
    assert all(m.length_change <= 0 for m in moves)
    assert final in move_graph_component(K, alpha)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_every_path_is_connected_to_a_fixed_geodesic(name):
    """Paths of length <= 6 sharing endpoints all meet in the basic-move graph."""
    K = FIXTURES[name]
    anchors = {}
    for n in range(7):
        for v in K.vertices:
            for alpha in iter_paths(K, v, n):
                ends = (alpha[0], alpha[-1])
                if ends not in anchors:
                    anchors[ends] = enumerate_geodesics(K, *ends)[0]
                final, moves = straighten(K, alpha, anchors[ends])
                assert final == anchors[ends] and replay(alpha, moves) == final


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_shorter_fellows(name):
    """Distance 2 always suffices; distance 1 fails only where a trivial move is forced."""
    K = FIXTURES[name]
    for n in range(2, 6):
        for v in K.vertices:
            for alpha in iter_paths(K, v, n):
                if is_geodesic(K, alpha):
                    assert shorter_fellow(K, alpha) is None
                    continue
                two = shorter_fellow(K, alpha, k=2)
                assert two is not None and len(two) < len(alpha) and path_distance(K, alpha, two) <= 2
                one = shorter_fellow(K, alpha)
                if one is None:
                    assert any(alpha[i - 1] == alpha[i + 1] for i in range(1, n))
                else:
                    assert len(one) < len(alpha) and path_distance(K, alpha, one) <= 1
