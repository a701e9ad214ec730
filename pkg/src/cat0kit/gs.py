"""Gersten-Short geodesics: the diagonal condition on witness disks.

The witness disks of a geodesic ``gamma`` are the minimal disks spanning
``gamma`` against every other geodesic ``delta`` with the same endpoints.
Where the two paths meet the loop is pinched, so it is cut at the shared
vertices into simple loops ("lunes"); each lune's minimal disks are
nonsingular and carry the sign classification.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import Automorphism, SimplicialComplex, generated_group
from .disks import DiskDiagram, minimal_spanning_disk
from .errors import NonTermination, NotGeodesic, TooManyCompanions
from .moves import TRI_TRI, Move, apply_move
from .paths import Path, check_path, enumerate_geodesics, is_geodesic, path_distance

DEFAULT_COMPANION_CAP = 10_000


@dataclass(frozen=True)
class Witness:
    """A minimal disk spanning ``gamma[start..end]`` against ``companion``.

    Boundary positions ``0 .. end-start`` of the disk walk are
    ``gamma[start] .. gamma[end]``.
    """

    companion: Path
    start: int
    end: int
    disk: DiskDiagram

    def degree_at(self, i: int) -> int:
        """Degree on this disk of ``gamma[i]`` for ``start <= i <= end``."""
        return self.disk.degree(self.disk.boundary[i - self.start])


@dataclass(frozen=True)
class BadPair:
    index: int                 # v_index is positive, v_(index-1) is zero
    witness: Witness

    @property
    def disk(self) -> DiskDiagram:
        return self.witness.disk


def _lunes(gamma: Path, delta: Path) -> list[tuple[int, int]]:
    """Index ranges between consecutive vertices the two geodesics share."""
    shared = [i for i in range(len(gamma)) if gamma[i] == delta[i]]
    return [(a, b) for a, b in zip(shared, shared[1:]) if b - a >= 2]


def _lune_disks(K: SimplicialComplex, gamma: Path, delta: Path, a: int, b: int) -> list[DiskDiagram]:
    loop = gamma[a : b + 1] + tuple(reversed(delta[a:b]))
    cache = K._cache.setdefault("lune_disks", {})
    if loop not in cache:
        cache[loop] = minimal_spanning_disk(K, loop)
    return cache[loop]


def _require_geodesic(K: SimplicialComplex, gamma: Sequence[int]) -> Path:
    g = check_path(K, gamma)
    if not is_geodesic(K, g):
        raise NotGeodesic(f"{K.path_names(g)} is not a geodesic")
    return g


def witness_disks(
    K: SimplicialComplex, gamma: Sequence[int], *, cap: int = DEFAULT_COMPANION_CAP
) -> list[Witness]:
    """Minimal disks between ``gamma`` and each companion geodesic, lune by lune."""
    K.require_dim_at_most(3, "witness_disks")
    g = _require_geodesic(K, gamma)
    companions = enumerate_geodesics(K, g[0], g[-1], limit=cap)
    if len(companions) > cap:
        raise TooManyCompanions(f"more than {cap} companion geodesics")
    out = []
    for delta in companions:
        if delta == g:
            continue
        for a, b in _lunes(g, delta):
            for D in _lune_disks(K, g, delta, a, b):
                out.append(Witness(delta, a, b, D))
    return out


def find_bad_pairs(K: SimplicialComplex, gamma: Sequence[int]) -> list[BadPair]:
    """Pairs ``(v_(i-1), v_i)`` with ``v_i`` positive and ``v_(i-1)`` zero on a witness disk."""
    out = []
    for wit in witness_disks(K, gamma):
        for i in range(wit.start + 1, wit.end):
            if wit.degree_at(i) <= 3 and wit.degree_at(i - 1) == 4:
                out.append(BadPair(i, wit))
    out.sort(key=lambda bp: (bp.index, bp.witness.companion, bp.witness.start))
    return out


def is_gs(K: SimplicialComplex, gamma: Sequence[int]) -> bool:
    g = check_path(K, gamma)
    return is_geodesic(K, g) and not find_bad_pairs(K, g)


def _resolving_move(K: SimplicialComplex, gamma: Path, bp: BadPair) -> Move:
    """The triangle-triangle move across the witness disk at ``v_i``."""
    i = bp.index
    D = bp.disk
    v = D.boundary[i - bp.witness.start]
    prev = D.boundary[i - 1 - bp.witness.start]
    nxt = D.boundary[i + 1 - bp.witness.start]
    (w,) = D.neighbors[v] - {prev, nxt}
    x, y, z, lw = gamma[i - 1], gamma[i], gamma[i + 1], D.labels[w]
    witness = (tuple(sorted((x, y, lw))), tuple(sorted((y, z, lw))))
    return Move(TRI_TRI, i, (x, y, z), (x, lw, z), witness)


def resolve_bad_pairs(K: SimplicialComplex, gamma: Sequence[int]) -> tuple[Path, list[Move]]:
    """Remove bad pairs leftmost first until ``gamma`` is a GS-geodesic.

    Every step is a triangle-triangle move, so the result is a geodesic
    with the same endpoints.  Revisiting a path raises
    :class:`NonTermination`.
    """
    g = _require_geodesic(K, gamma)
    seen = {g}
    moves: list[Move] = []
    while True:
        bad = find_bad_pairs(K, g)
        if not bad:
            return g, moves
        m = _resolving_move(K, g, bad[0])
        g = apply_move(g, m)
        moves.append(m)
        if g in seen:
            raise NonTermination(f"bad-pair resolution revisits {K.path_names(g)}")
        seen.add(g)


def gs_geodesics(K: SimplicialComplex, u: int, w: int) -> list[Path]:
    """All GS-geodesics from ``u`` to ``w`` (filter of every geodesic)."""
    return [g for g in enumerate_geodesics(K, u, w) if not find_bad_pairs(K, g)]


# -- path systems -----------------------------------------------------------------


@dataclass(frozen=True)
class PathSystem:
    members: frozenset[Path]

    def __contains__(self, path: object) -> bool:
        return tuple(path) in self.members  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[Path]:
        return sorted(self.members, key=lambda p: (len(p), p))


def geodesic_system(K: SimplicialComplex, basepoints: Iterable[int] | None = None) -> PathSystem:
    pts = sorted(K.vertices if basepoints is None else set(basepoints))
    return PathSystem(frozenset(g for u in pts for w in pts for g in enumerate_geodesics(K, u, w)))


def gs_system(K: SimplicialComplex, basepoints: Iterable[int] | None = None) -> PathSystem:
    pts = sorted(K.vertices if basepoints is None else set(basepoints))
    return PathSystem(frozenset(g for u in pts for w in pts for g in gs_geodesics(K, u, w)))


@dataclass(frozen=True)
class FellowTravelResult:
    ok: bool
    worst: float
    pair: tuple[Path, Path] | None


def check_fellow_travel(K: SimplicialComplex, S: PathSystem | Iterable[Path], k: float, l: int) -> FellowTravelResult:
    """``(k, l)`` fellow travelling: paths whose starts and ends are within
    ``l`` of each other stay within ``k`` at every integer time."""
    members = sorted(S.members if isinstance(S, PathSystem) else set(map(tuple, S)))
    dist = K.distance_matrix()
    by_start: dict[int, list[Path]] = {}
    for p in members:
        by_start.setdefault(p[0], []).append(p)
    worst, pair = 0, None
    for a in members:
        for s, group in by_start.items():
            if dist[a[0]][s] > l:
                continue
            for b in group:
                if dist[a[-1]][b[-1]] > l:
                    continue
                d = path_distance(K, a, b)
                if d > worst:
                    worst, pair = d, (a, b)
    return FellowTravelResult(worst <= k, float(worst), pair)


@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    witness: tuple[Automorphism, Path] | None


def check_g_invariance(S: PathSystem, autos: Sequence[Automorphism]) -> InvarianceResult:
    for g in autos:
        for p in sorted(S.members):
            if g.apply(p) not in S.members:
                return InvarianceResult(False, (g, p))
    return InvarianceResult(True, None)


def gs_orbit_closed(K: SimplicialComplex, autos: Sequence[Automorphism]) -> InvarianceResult:
    """G-invariance of the full GS system under the group the generators span."""
    return check_g_invariance(gs_system(K), generated_group(K, autos))
