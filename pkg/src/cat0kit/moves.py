"""Basic moves on paths: trivial, triangle and triangle-triangle.

A move is located by ``position``, the index of the middle vertex of the
three-vertex segment it rewrites.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .complex import SimplicialComplex
from .disks import DiskDiagram, find_on_boundary
from .errors import EndpointMismatch, MoveMismatch, StraighteningFailed, TargetNotGeodesic
from .paths import Path, check_path, combinatorial_distance, is_geodesic

TRIVIAL = "trivial"
TRIANGLE = "triangle"
TRI_TRI = "triangle_triangle"

LENGTH_CHANGE = {TRIVIAL: -2, TRIANGLE: -1, TRI_TRI: 0}


@dataclass(frozen=True)
class Move:
    kind: str
    position: int
    old: tuple[int, ...]
    new: tuple[int, ...]
    witness: tuple[tuple[int, ...], ...]

    @property
    def length_change(self) -> int:
        return LENGTH_CHANGE[self.kind]

    def format(self, K: SimplicialComplex | None = None) -> str:
        show = (lambda p: " ".join(K.path_names(p))) if K is not None else (lambda p: " ".join(map(str, p)))
        return f"{self.kind}@{self.position}: {show(self.old)} -> {show(self.new)}"

    def inverse(self) -> Move:
        """Only triangle-triangle moves can be undone by a basic move."""
        if self.kind != TRI_TRI:
            raise MoveMismatch("only triangle-triangle moves are invertible")
        return Move(TRI_TRI, self.position, self.new, self.old, self.witness)


def _face(K: SimplicialComplex, *vs: int) -> bool:
    return tuple(sorted(vs)) in K.face_index


def moves_at(K: SimplicialComplex, path: Sequence[int], i: int) -> list[Move]:
    x, y, z = path[i - 1], path[i], path[i + 1]
    if x == z:
        return [Move(TRIVIAL, i, (x, y, x), (x,), (tuple(sorted((x, y))),))]
    out = []
    if _face(K, x, y, z):
        out.append(Move(TRIANGLE, i, (x, y, z), (x, z), (tuple(sorted((x, y, z))),)))
    for w in sorted(K.neighbors(x) & K.neighbors(y) & K.neighbors(z)):
        if w != y and _face(K, x, y, w) and _face(K, y, z, w):
            witness = (tuple(sorted((x, y, w))), tuple(sorted((y, z, w))))
            out.append(Move(TRI_TRI, i, (x, y, z), (x, w, z), witness))
    return out


def enumerate_moves(K: SimplicialComplex, alpha: Sequence[int]) -> list[Move]:
    """Every basic move applicable to ``alpha``, by position then kind."""
    p = check_path(K, alpha)
    return [m for i in range(1, len(p) - 1) for m in moves_at(K, p, i)]


def apply_move(alpha: Sequence[int], m: Move) -> Path:
    i = m.position
    if i < 1 or i + 1 >= len(alpha) or tuple(alpha[i - 1 : i + 2]) != m.old:
        raise MoveMismatch(f"{m.old!r} does not occur at position {i}")
    return tuple(alpha[: i - 1]) + m.new + tuple(alpha[i + 2 :])


def replay(alpha: Sequence[int], moves: Sequence[Move]) -> Path:
    p = tuple(alpha)
    for m in moves:
        p = apply_move(p, m)
    return p


# -- straightening -----------------------------------------------------------------


def _reducing_move(K: SimplicialComplex, p: Path) -> Move | None:
    best = None
    for i in range(1, len(p) - 1):
        for m in moves_at(K, p, i):
            if m.kind == TRIVIAL:
                return m
            if m.kind == TRIANGLE and best is None:
                best = m
    return best


def _tri_tri_neighbours(K: SimplicialComplex, p: Path) -> list[tuple[Move, Path]]:
    out = []
    for i in range(1, len(p) - 1):
        for m in moves_at(K, p, i):
            if m.kind == TRI_TRI:
                out.append((m, apply_move(p, m)))
    return out


def _search_tri_tri(K: SimplicialComplex, start: Path, goal) -> list[Move] | None:
    """Breadth-first search over triangle-triangle moves until ``goal(path)``."""
    parent: dict[Path, tuple[Path, Move] | None] = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if goal(p):
            seq = []
            while parent[p] is not None:
                prev, m = parent[p]  # type: ignore[misc]
                seq.append(m)
                p = prev
            return seq[::-1]
        for m, q in _tri_tri_neighbours(K, p):
            if q not in parent:
                parent[q] = (p, m)
                queue.append(q)
    return None


def _search_moves(K: SimplicialComplex, start: Path, target: Path) -> list[Move] | None:
    """Shortest basic-move sequence from ``start`` to ``target``, if any."""
    if len(target) > len(start):
        return None
    parent: dict[Path, tuple[Path, Move] | None] = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if p == target:
            seq = []
            while parent[p] is not None:
                prev, m = parent[p]  # type: ignore[misc]
                seq.append(m)
                p = prev
            return seq[::-1]
        for m in enumerate_moves(K, p):
            q = apply_move(p, m)
            if q not in parent and len(q) >= len(target):
                parent[q] = (p, m)
                queue.append(q)
    return None


def reduce_to_geodesic(K: SimplicialComplex, alpha: Sequence[int]) -> tuple[Path, list[Move]]:
    """Greedy straightening: trivial before triangle moves, and otherwise
    the nearest triangle-triangle rearrangement that exposes one."""
    cache = K._cache.setdefault("reduce", {})
    p = check_path(K, alpha)
    if p in cache:
        return cache[p]
    seq: list[Move] = []
    cur = p
    target = combinatorial_distance(K, p[0], p[-1])
    while len(cur) - 1 > target:
        m = _reducing_move(K, cur)
        if m is not None:
            seq.append(m)
            cur = apply_move(cur, m)
            continue
        run = _search_tri_tri(K, cur, lambda q: _reducing_move(K, q) is not None)
        if not run:
            raise StraighteningFailed(
                f"no basic-move sequence shortens {K.path_names(cur)}"
            )
        seq.extend(run)
        cur = replay(cur, run)
    cache[p] = (cur, seq)
    return cur, seq


def _geodesic_tree(K: SimplicialComplex, beta: Path) -> dict[Path, tuple[Path, Move] | None]:
    """Triangle-triangle BFS tree over the geodesics reachable from ``beta``."""
    cache = K._cache.setdefault("geodesic_tree", {})
    if beta not in cache:
        parent: dict[Path, tuple[Path, Move] | None] = {beta: None}
        queue = deque([beta])
        while queue:
            p = queue.popleft()
            for m, q in _tri_tri_neighbours(K, p):
                if q not in parent:
                    parent[q] = (p, m)
                    queue.append(q)
        cache[beta] = parent
    return cache[beta]


def straighten(
    K: SimplicialComplex, alpha: Sequence[int], beta: Sequence[int] | None = None
) -> tuple[Path, list[Move]]:
    """Turn ``alpha`` into a geodesic (``beta`` if given) by basic moves.

    Lengths never increase along the returned sequence, and once a
    geodesic is reached only triangle-triangle moves are used.  A
    non-geodesic ``beta`` is accepted when some such sequence reaches it,
    found by breadth-first search over paths no longer than ``alpha``.
    """
    a = check_path(K, alpha)
    if beta is None:
        return reduce_to_geodesic(K, a)
    b = check_path(K, beta)
    if (a[0], a[-1]) != (b[0], b[-1]):
        raise EndpointMismatch("paths have different endpoints")
    if not is_geodesic(K, b):
        seq = _search_moves(K, a, b)
        if seq is None:
            raise TargetNotGeodesic("target is not a geodesic and no basic-move sequence reaches it")
        return b, seq
    geo, seq = reduce_to_geodesic(K, a)
    tree = _geodesic_tree(K, b)
    if geo not in tree:
        raise StraighteningFailed(
            f"geodesics {K.path_names(geo)} and {K.path_names(b)} are not joined by triangle-triangle moves"
        )
    tail = []
    p = geo
    while tree[p] is not None:
        prev, m = tree[p]  # type: ignore[misc]
        tail.append(m.inverse())
        p = prev
    return b, seq + tail


def move_graph_component(K: SimplicialComplex, alpha: Sequence[int]) -> set[Path]:
    """All paths reachable from ``alpha`` by basic moves (finite: lengths only drop or stay)."""
    start = check_path(K, alpha)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for m in enumerate_moves(K, p):
            q = apply_move(p, m)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


# -- fellow travelling by shorter paths -----------------------------------------------


def shorter_fellow(K: SimplicialComplex, alpha: Sequence[int], k: int = 1) -> Path | None:
    """A strictly shorter path with the same endpoints within distance ``k`` of ``alpha``.

    Distance is measured at integer times.  The search is exact: among
    lengths below ``len(alpha)`` it tries the longest first and returns
    ``None`` only when no such path exists.  Geodesics always give
    ``None``.  With ``k = 1`` a backtrack such as ``o v0 o v3`` in the
    hexagonal disk also gives ``None``: every shorter path is at a
    neighbour of ``v3`` at time 1, two steps from ``v0``.
    """
    a = check_path(K, alpha)
    n = len(a) - 1
    dist = K.distance_matrix()
    u, w = a[0], a[-1]
    for i in range(1, n):
        if a[i - 1] != a[i + 1] and _face(K, a[i - 1], a[i], a[i + 1]):
            return a[:i] + a[i + 1 :]
    for m in range(n - 1, dist[u][w] - 1, -1):
        if any(dist[w][a[t]] > k for t in range(m, n + 1)):
            continue
        layers: list[dict[int, int | None]] = [{u: None}]
        for t in range(1, m + 1):
            nxt: dict[int, int | None] = {}
            for x in sorted(layers[-1]):
                for y in sorted(K.neighbors(x)):
                    if y not in nxt and dist[y][a[t]] <= k and dist[y][w] <= m - t:
                        nxt[y] = x
            layers.append(nxt)
            if not nxt:
                break
        if w in layers[-1] and len(layers) == m + 1:
            path = [w]
            for t in range(m, 0, -1):
                path.append(layers[t][path[-1]])  # type: ignore[arg-type]
            return tuple(reversed(path))
    return None


# -- chain shortenings on a disk --------------------------------------------------------


def find_chain_shortening(gamma: Sequence[int], D: DiskDiagram) -> list[Move] | None:
    """Moves shortening ``gamma`` by one across the disk ``D``.

    Looks for interior vertices of ``gamma`` that are positive on ``D`` and
    separated only by zero vertices.  The run of zero vertices is swept by
    triangle-triangle moves, then a triangle move removes the far positive
    vertex.  A lone vertex of degree 2 (or 1) is itself a shortening.
    """
    g = tuple(gamma)
    n = len(g) - 1
    pos = find_on_boundary(D, g)
    if pos is None:
        D = D.mirrored()
        pos = find_on_boundary(D, g)
        if pos is None:
            return None
    walk = D.boundary[:-1]
    L = len(walk)
    seam = [walk[(pos + k) % L] for k in range(n + 1)]
    if len(set(seam)) != len(seam):
        return None
    deg = [D.degree(v) for v in seam]
    for i in range(1, n):
        if deg[i] == 1 and g[i - 1] == g[i + 1]:
            return [Move(TRIVIAL, i, (g[i - 1], g[i], g[i + 1]), (g[i - 1],), (tuple(sorted(g[i - 1 : i + 1])),))]
        if deg[i] == 2:
            face = tuple(sorted(g[i - 1 : i + 2]))
            return [Move(TRIANGLE, i, g[i - 1 : i + 2], (g[i - 1], g[i + 1]), (face,))]
    for i in range(1, n):
        if deg[i] != 3:
            continue
        j = i + 1
        while j < n and deg[j] == 4:
            j += 1
        if j < n and deg[j] == 3:
            return _sweep_chain(D, g, seam, i, j)
    return None


def _sweep_chain(D: DiskDiagram, g: Path, seam: list[int], i: int, j: int) -> list[Move]:
    tris = {frozenset(t) for t in D.triangles}
    lab = D.labels
    seq: list[Move] = []
    path = list(seam)
    for k in range(i, j):
        prev, v, nxt = path[k - 1], path[k], path[k + 1]
        ws = [
            w
            for w in D.neighbors[v]
            if frozenset((prev, v, w)) in tris and frozenset((v, nxt, w)) in tris
        ]
        w = min(ws)
        tris.discard(frozenset((prev, v, w)))
        tris.discard(frozenset((v, nxt, w)))
        x, y, z = lab[prev], lab[v], lab[nxt]
        witness = (tuple(sorted((x, y, lab[w]))), tuple(sorted((y, z, lab[w]))))
        seq.append(Move(TRI_TRI, k, (x, y, z), (x, lab[w], z), witness))
        path[k] = w
    prev, v, nxt = path[j - 1], path[j], path[j + 1]
    face = tuple(sorted((lab[prev], lab[v], lab[nxt])))
    seq.append(Move(TRIANGLE, j, (lab[prev], lab[v], lab[nxt]), (lab[prev], lab[nxt]), (face,)))
    return seq
