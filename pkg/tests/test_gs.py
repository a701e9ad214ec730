import pytest

from cat0kit.complex import validate_automorphism
from cat0kit.errors import DimensionTooHigh, NonTermination, NotGeodesic, NotSimplicial
from cat0kit.fixtures import declared_cat0_fixtures, default_fixtures, fixture
from cat0kit.gs import (
    PathSystem,
    check_fellow_travel,
    check_g_invariance,
    find_bad_pairs,
    geodesic_system,
    gs_geodesics,
    gs_orbit_closed,
    gs_system,
    is_gs,
    resolve_bad_pairs,
    witness_disks,
)
from cat0kit.moves import TRI_TRI
from cat0kit.paths import enumerate_geodesics, is_geodesic

from conftest import ids

LOW_DIM = [f for f in default_fixtures() if f.complex.dim <= 3]


def octahedron_generators(K):
    def auto(pairs):
        m = {K.vertex(a): K.vertex(b) for a, b in pairs.items()}
        return validate_automorphism(K, m)

    quarter_z = auto({"+x": "+y", "+y": "-x", "-x": "-y", "-y": "+x", "+z": "+z", "-z": "-z"})
    swap_xz = auto({"+x": "+z", "+z": "+x", "-x": "-z", "-z": "-x", "+y": "+y", "-y": "-y"})
    flip_x = auto({"+x": "-x", "-x": "+x", "+y": "+y", "-y": "-y", "+z": "+z", "-z": "-z"})
    return [quarter_z, swap_xz, flip_x]


def test_unique_geodesic_has_no_witnesses(hexd):
    gamma = ids(hexd, "v0 o v3")
    assert witness_disks(hexd, gamma) == []
    assert is_gs(hexd, gamma)


def test_witness_requires_geodesic(hexd):
    with pytest.raises(NotGeodesic):
        witness_disks(hexd, ids(hexd, "v0 v1 v2 v3"))


def test_witness_needs_low_dimension():
    K = fixture("pentagon_join", 4).complex
    with pytest.raises(DimensionTooHigh):
        witness_disks(K, ids(K, "v0 x1"))


def test_octahedron_witnesses(octa):
    geos = enumerate_geodesics(octa, *ids(octa, "+x -x"))
    gamma = geos[0]
    wits = witness_disks(octa, gamma)
    assert {w.companion for w in wits} == set(geos[1:])
    for w in wits:
        assert w.disk.labels[w.disk.boundary[0]] == gamma[w.start]


def test_short_paths_have_no_bad_pairs(tet):
    assert find_bad_pairs(tet, ids(tet, "a b")) == []
    assert find_bad_pairs(tet, ids(tet, "a")) == []


def test_strip_bad_pair_and_resolution():
    K = fixture("strip").complex
    gamma = ids(K, "b0 b1 b2 t2")
    (bp,) = find_bad_pairs(K, gamma)
    assert bp.index == 2
    assert bp.witness.degree_at(2) <= 3 and bp.witness.degree_at(1) == 4
    final, moves = resolve_bad_pairs(K, gamma)
    assert is_gs(K, final) and find_bad_pairs(K, final) == []
    assert all(m.kind == TRI_TRI for m in moves)
    n = len(gamma) - 1
    assert len(moves) <= n * (n - 1) // 2
    got = {tuple(K.path_names(g)) for g in gs_geodesics(K, *ids(K, "b0 t2"))}
    assert got == {("b0", "b1", "t1", "t2"), ("b0", "t0", "t1", "t2")}
    assert tuple(K.path_names(final)) in got


def test_already_gs_is_unchanged(hexd):
    gamma = ids(hexd, "v0 o v2")
    assert resolve_bad_pairs(hexd, gamma) == (gamma, [])


def test_narwhal_has_a_pair_without_gs_geodesic():
    K = fixture("narwhal").complex
    u, v0 = ids(K, "u v0")
    assert gs_geodesics(K, u, v0) == []
    for g in enumerate_geodesics(K, u, v0):
        assert find_bad_pairs(K, g)
    with pytest.raises(NonTermination):
        resolve_bad_pairs(K, ids(K, "v0 x1 v2 u"))


@pytest.mark.parametrize("f", LOW_DIM, ids=lambda f: f.name)
def test_witness_disk_degree_bounds(f):
    K = f.complex
    for u in K.vertices:
        for w in K.vertices:
            for g in enumerate_geodesics(K, u, w):
                for wit in witness_disks(K, g):
                    inner = range(wit.start + 1, wit.end)
                    assert all(wit.degree_at(i) >= 3 for i in inner)
                    if f.declared_cat0:
                        assert sum(4 - wit.degree_at(i) for i in inner) <= 1


@pytest.mark.parametrize("f", declared_cat0_fixtures(), ids=lambda f: f.name)
def test_resolution_gives_gs_geodesics(f):
    K = f.complex
    for u in K.vertices:
        for w in K.vertices:
            brute = set(gs_geodesics(K, u, w))
            assert brute
            for g in enumerate_geodesics(K, u, w):
                final, moves = resolve_bad_pairs(K, g)
                assert final in brute and is_geodesic(K, final)
                assert all(m.kind == TRI_TRI for m in moves)


@pytest.mark.parametrize("f", declared_cat0_fixtures(), ids=lambda f: f.name)
def test_resolving_one_bad_pair_keeps_others_clean(f):
    K = f.complex
    for u in K.vertices:
        for w in K.vertices:
            for g in enumerate_geodesics(K, u, w):
                bad = find_bad_pairs(K, g)
                if not bad:
                    continue
                final, moves = resolve_bad_pairs(K, g)
                # no clean prefix becomes dirty: the first bad index never moves left
                first = bad[0].index
                after = find_bad_pairs(K, final)
                assert not after or after[0].index >= first


@pytest.mark.parametrize("f", declared_cat0_fixtures(), ids=lambda f: f.name)
def test_gs_system_fellow_travels(f):
    res = check_fellow_travel(f.complex, gs_system(f.complex), 2, 1)
    assert res.ok and res.worst <= 2


def test_fellow_travel_trivial_cases(octa):
    single = PathSystem(frozenset({ids(octa, "+x +y")}))
    res = check_fellow_travel(octa, single, 0, 0)
    assert res.ok and res.worst == 0
    # geodesics from +x to -x can pass through opposite poles
    res = check_fellow_travel(octa, geodesic_system(octa), 1, 0)
    assert not res.ok and res.worst == 2


def test_octahedron_gs_system_is_invariant(octa):
    gens = octahedron_generators(octa)
    assert check_g_invariance(gs_system(octa), gens).ok
    assert gs_orbit_closed(octa, gens).ok


def test_invariance_detects_missing_image(octa):
    gens = octahedron_generators(octa)
    S = PathSystem(frozenset({ids(octa, "+x +y")}))
    res = check_g_invariance(S, gens)
    assert not res.ok and res.witness is not None


def test_identity_keeps_any_system(hexd):
    from cat0kit.complex import Automorphism

    assert check_g_invariance(gs_system(hexd), [Automorphism.identity(hexd)]).ok


def test_non_automorphism_is_rejected(octa):
    with pytest.raises(NotSimplicial):
        validate_automorphism(octa, {v: (v + 1) % 6 if v < 2 else v for v in octa.vertices})


def test_gs_filter_matches_is_gs():
    K = fixture("strip").complex
    S = gs_system(K)
    for g in geodesic_system(K).members:
        assert (g in S) == is_gs(K, g)
