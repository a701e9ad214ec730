"""Checkable necessary conditions for CAT(0): flagness, empty n-gons,
6-largeness of links (systolicity) and girth of edge links.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .complex import DIHEDRAL_ANGLE, Simplex, SimplicialComplex, edge_metric_link, local_structure
from .errors import UnsupportedN

#: Smallest number of regular-tetrahedron dihedral angles summing past 2*pi.
MIN_EDGE_LINK_GIRTH = 6


def iter_cliques(K: SimplicialComplex, max_size: int) -> Iterator[tuple[int, ...]]:
    """Cliques of the 1-skeleton with at least 3 vertices, by increasing size."""
    level = [tuple(e) for e in K.edges]
    size = 2
    while level and size < max_size:
        nxt = []
        for c in level:
            common = set(K.neighbors(c[0]))
            for v in c[1:]:
                common &= K.neighbors(v)
            for w in sorted(x for x in common if x > c[-1]):
                nxt.append(c + (w,))
        size += 1
        yield from nxt
        level = nxt


def is_flag(K: SimplicialComplex) -> tuple[bool, tuple[int, ...] | None]:
    """Return ``(flag, witness)``; the witness is a smallest clique that spans no simplex."""
    for clique in iter_cliques(K, K.dim + 2):
        if clique not in K.face_index:
            return False, clique
    return True, None


def iter_simple_cycles(K: SimplicialComplex, n: int) -> Iterator[tuple[int, ...]]:
    """Each simple n-cycle once, as its least rotation/reflection."""
    for s in K.vertices:
        path = [s]
        onpath = {s}

        def extend() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            if len(path) == n:
                if K.is_edge(last, s) and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in sorted(K.neighbors(last)):
                if w > s and w not in onpath:
                    path.append(w)
                    onpath.add(w)
                    yield from extend()
                    path.pop()
                    onpath.discard(w)

        yield from extend()


def _face(K: SimplicialComplex, *vs: int) -> bool:
    return tuple(sorted(vs)) in K.face_index


def is_empty_cycle(K: SimplicialComplex, cycle: tuple[int, ...]) -> bool:
    """Emptiness test for a tight 3-, 4- or 5-cycle.

    A triangle is filled by a face, a square by two faces on a diagonal
    edge, a pentagon by the three faces of one of its five fans.
    """
    n = len(cycle)
    if n == 3:
        return not _face(K, *cycle)
    if n == 4:
        a, b, c, d = cycle
        return not (
            (_face(K, a, b, c) and _face(K, a, c, d)) or (_face(K, a, b, d) and _face(K, b, c, d))
        )
    if n == 5:
        for i in range(5):
            v = [cycle[(i + k) % 5] for k in range(5)]
            if _face(K, v[0], v[1], v[2]) and _face(K, v[0], v[2], v[3]) and _face(K, v[0], v[3], v[4]):
                return False
        return True
    raise UnsupportedN(f"empty n-gon test supports n in {{3, 4, 5}}, got {n}")


def find_empty_ngon(K: SimplicialComplex, n: int) -> tuple[int, ...] | None:
    if n not in (3, 4, 5):
        raise UnsupportedN(f"n must be 3, 4 or 5, got {n}")
    for cycle in iter_simple_cycles(K, n):
        if is_empty_cycle(K, cycle):
            return cycle
    return None


@dataclass(frozen=True)
class SystolicFailure:
    simplex: Simplex          # () stands for the whole complex
    reason: str               # "not-flag" or "empty-<n>-gon"
    cycle: tuple[int, ...]


def check_systolic(K: SimplicialComplex) -> tuple[bool, list[SystolicFailure]]:
    """6-largeness of ``K`` and of every combinatorial link.

    Returns every failure found; the list is empty iff ``K`` is systolic.
    """
    failures: list[SystolicFailure] = []
    sigmas: list[Simplex] = [()] + sorted(K.face_index, key=lambda f: (len(f), f))
    for sigma in sigmas:
        _, lk = local_structure(K, sigma)
        if not lk.vertices:
            continue
        flag, witness = is_flag(lk)
        if not flag:
            failures.append(SystolicFailure(sigma, "not-flag", witness))
            continue
        for n in (3, 4, 5):
            cycle = find_empty_ngon(lk, n)
            if cycle is not None:
                failures.append(SystolicFailure(sigma, f"empty-{n}-gon", cycle))
    return not failures, failures


def shortest_cycle(adj: dict[int, set[int]]) -> tuple[int, ...] | None:
    """A shortest cycle of a simple graph, or ``None`` for a forest."""
    best: tuple[int, ...] | None = None
    for root in sorted(adj):
        parent: dict[int, int | None] = {root: None}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * depth[u] + 1 >= len(best):
                break
            for w in sorted(adj[u]):
                if w not in depth:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif parent[u] != w:
                    cycle = _join_branches(parent, u, w)
                    if best is None or len(cycle) < len(best):
                        best = cycle
    return best


def _join_branches(parent: dict[int, int | None], u: int, w: int) -> tuple[int, ...]:
    def chain(x: int | None) -> list[int]:
        out = []
        while x is not None:
            out.append(x)
            x = parent[x]
        return out

    cu, cw = chain(u), chain(w)
    in_cw = set(cw)
    iu = next(i for i, x in enumerate(cu) if x in in_cw)
    iw = cw.index(cu[iu])
    return tuple(cu[: iu + 1] + cw[:iw][::-1])


@dataclass(frozen=True)
class EdgeLinkResult:
    ok: bool
    worst_edge: Simplex | None
    worst_girth: int | None          # combinatorial girth of the worst link
    worst_length: float              # girth times arccos(1/3); inf for acyclic links
    worst_cycle: tuple[int, ...] | None


def check_edge_links(K: SimplicialComplex) -> EdgeLinkResult:
    """Girth test on the metric link of every edge of a complex of dim <= 3."""
    K.require_dim_at_most(3, "check_edge_links")
    worst: tuple[int, Simplex, tuple[int, ...]] | None = None
    for e in K.edges:
        cycle = shortest_cycle(edge_metric_link(K, e).adjacency())
        if cycle is not None and (worst is None or len(cycle) < worst[0]):
            worst = (len(cycle), e, cycle)
    if worst is None:
        return EdgeLinkResult(True, None, None, math.inf, None)
    girth, e, cycle = worst
    return EdgeLinkResult(girth >= MIN_EDGE_LINK_GIRTH, e, girth, girth * DIHEDRAL_ANGLE, cycle)


@dataclass(frozen=True)
class CurvatureReport:
    flag: bool
    flag_witness: tuple[int, ...] | None
    empty_ngon_witnesses: dict[int, tuple[int, ...] | None]
    systolic: bool
    systolic_failures: list[SystolicFailure] = field(default_factory=list)
    edge_links: EdgeLinkResult | None = None   # None when dim > 3

    @property
    def passes(self) -> bool:
        edge_ok = self.edge_links is None or self.edge_links.ok
        no_ngon = all(w is None for w in self.empty_ngon_witnesses.values())
        return self.flag and no_ngon and self.systolic and edge_ok


def certify_cat0_necessary(K: SimplicialComplex) -> CurvatureReport:
    """Run the whole battery.  Passing is necessary, not sufficient, for CAT(0)."""
    flag, flag_witness = is_flag(K)
    ngons = {n: find_empty_ngon(K, n) for n in (3, 4, 5)}
    systolic, failures = check_systolic(K)
    edges = check_edge_links(K) if K.dim <= 3 else None
    return CurvatureReport(flag, flag_witness, ngons, systolic, failures, edges)
