"""Triangulated disk diagrams and the search for minimal spanning disks.

A disk is stored by oriented triangles over local vertex ids plus a closed
boundary walk whose directed edges agree with the triangle orientations.
Edges that carry no triangle (spurs) are walked twice, once each way.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .complex import SimplicialComplex
from .errors import (
    DeclaredCat0Contradiction,
    LabelMismatchOnGamma,
    LabelNotAFace,
    NoDiskWithinBound,
    NotADisk,
    NotClosed,
    SingularDisk,
    UnresolvableVertex,
)
from .paths import check_path

Triangle = tuple[int, int, int]


def _rotate_min(t: Sequence[int]) -> Triangle:
    i = min(range(3), key=lambda k: t[k])
    return (t[i], t[(i + 1) % 3], t[(i + 2) % 3])


def _directed_edges(t: Triangle) -> tuple[tuple[int, int], ...]:
    a, b, c = t
    return ((a, b), (b, c), (c, a))


@dataclass(frozen=True)
class DiskDiagram:
    """A triangulated disk with a labelling of its vertices by vertices of K.

    ``boundary`` is a closed walk (first entry repeated at the end); a disk
    made of a single vertex has ``boundary == (v,)``.
    """

    triangles: tuple[Triangle, ...]
    boundary: tuple[int, ...]
    labels: tuple[int, ...]
    basepoints: tuple[int, int] | None = None

    @property
    def area(self) -> int:
        return len(self.triangles)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def boundary_length(self) -> int:
        return max(len(self.boundary) - 1, 0)

    @property
    def boundary_labels(self) -> tuple[int, ...]:
        return tuple(self.labels[v] for v in self.boundary)

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n_vertices)}
        for t in self.triangles:
            for a, b in _directed_edges(t):
                adj[a].add(b)
                adj[b].add(a)
        for a, b in zip(self.boundary, self.boundary[1:]):
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def degree(self, v: int) -> int:
        """Number of edges at ``v``; for boundary vertices of a nonsingular
        disk this is one more than the number of triangles."""
        return len(self.neighbors[v])

    @cached_property
    def boundary_vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @cached_property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if v not in self.boundary_vertex_set)

    @cached_property
    def third_vertex(self) -> dict[tuple[int, int], int]:
        """Directed edge ``(a, b)`` -> apex of the triangle oriented ``a, b, c``."""
        out = {}
        for a, b, c in self.triangles:
            out[(a, b)] = c
            out[(b, c)] = a
            out[(c, a)] = b
        return out

    @cached_property
    def rotation_system(self) -> dict[int, tuple[tuple[int, ...], ...]]:
        """For each vertex, its neighbours in cyclic order, one tuple per fan.

        Interior vertices have a single closed fan; boundary vertices list
        each fan from its incoming to its outgoing boundary edge.
        """
        succ: dict[int, dict[int, int]] = defaultdict(dict)
        for a, b, c in self.triangles:
            succ[a][b] = c
            succ[b][c] = a
            succ[c][a] = b
        out: dict[int, tuple[tuple[int, ...], ...]] = {}
        for v in range(self.n_vertices):
            nxt = succ.get(v, {})
            targets = set(nxt.values())
            starts = sorted(x for x in nxt if x not in targets)
            fans: list[tuple[int, ...]] = []
            seen: set[int] = set()
            for s in starts:
                fan = [s]
                while fan[-1] in nxt:
                    fan.append(nxt[fan[-1]])
                seen.update(fan)
                fans.append(tuple(fan))
            for s in sorted(nxt):
                if s in seen:
                    continue
                fan = [s]
                seen.add(s)
                while nxt[fan[-1]] != s:
                    fan.append(nxt[fan[-1]])
                    seen.add(fan[-1])
                fans.append(tuple(fan))
            spur_ends = sorted(self.neighbors[v] - seen)
            fans.extend((x,) for x in spur_ends)
            out[v] = tuple(fans)
        return out

    def mirrored(self) -> DiskDiagram:
        """The same disk with the opposite orientation."""
        return DiskDiagram(
            tuple((a, c, b) for a, b, c in self.triangles),
            tuple(reversed(self.boundary)),
            self.labels,
            self.basepoints,
        )

    def with_basepoints(self, u: int, v: int) -> DiskDiagram:
        return DiskDiagram(self.triangles, self.boundary, self.labels, (u, v))

    def to_text(self, K: SimplicialComplex | None = None) -> str:
        """Plain-text serialization: label map then oriented triangles."""
        name = (lambda x: K.name(x)) if K is not None else str
        lines = [f"vertices {self.n_vertices}"]
        lines += [f"label {v} {name(lab)}" for v, lab in enumerate(self.labels)]
        lines.append("boundary " + " ".join(map(str, self.boundary)))
        lines += [f"triangle {a} {b} {c}" for a, b, c in self.triangles]
        return "\n".join(lines) + "\n"


def make_disk(
    triangles: Iterable[Sequence[int]],
    boundary: Sequence[int],
    labels: Sequence[int] | dict[int, int],
    basepoints: tuple[int, int] | None = None,
) -> DiskDiagram:
    if isinstance(labels, dict):
        labels = [labels[v] for v in range(len(labels))]
    return DiskDiagram(
        tuple(tuple(t) for t in triangles),  # type: ignore[misc]
        tuple(boundary),
        tuple(labels),
        basepoints,
    )


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class DiskValidation:
    nonsingular: bool
    cut_points: tuple[int, ...]
    pieces: int
    spurs: int


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _fans(D: DiskDiagram) -> dict[int, list[list[int]]]:
    """Triangles (by index) at each vertex, grouped into fans."""
    at: dict[int, list[int]] = defaultdict(list)
    for i, t in enumerate(D.triangles):
        for v in t:
            at[v].append(i)
    out: dict[int, list[list[int]]] = {}
    for v, tris in at.items():
        uf = _UnionFind()
        by_edge: dict[int, list[int]] = defaultdict(list)
        for i in tris:
            uf.find(i)
            for x in D.triangles[i]:
                if x != v:
                    by_edge[x].append(i)
        for group in by_edge.values():
            for i in group[1:]:
                uf.union(group[0], i)
        groups: dict[int, list[int]] = defaultdict(list)
        for i in tris:
            groups[uf.find(i)].append(i)
        out[v] = sorted(groups.values())
    return out


def _triangle_pieces(D: DiskDiagram) -> list[list[int]]:
    uf = _UnionFind()
    by_edge: dict[frozenset, list[int]] = defaultdict(list)
    for i, t in enumerate(D.triangles):
        uf.find(i)
        for a, b in _directed_edges(t):
            by_edge[frozenset((a, b))].append(i)
    for group in by_edge.values():
        for i in group[1:]:
            uf.union(group[0], i)
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(D.triangles)):
        groups[uf.find(i)].append(i)
    return sorted(groups.values())


def validate_disk(D: DiskDiagram, K: SimplicialComplex | None = None) -> DiskValidation:
    """Check that ``D`` is a (possibly singular) disk diagram mapping into ``K``.

    A disk diagram here is a tree-like union of nonsingular disks and spur
    edges glued at vertices.  Raises :class:`NotADisk` or
    :class:`LabelNotAFace`.
    """
    n = D.n_vertices
    if not D.boundary:
        raise NotADisk("empty boundary")
    if len(D.boundary) > 1 and D.boundary[0] != D.boundary[-1]:
        raise NotADisk("boundary walk is not closed")
    used = set(D.boundary)
    for t in D.triangles:
        if len(t) != 3 or len(set(t)) != 3:
            raise NotADisk(f"degenerate triangle {t!r}")
        used.update(t)
    if used != set(range(n)):
        raise NotADisk("vertex ids must be exactly 0..n-1 and all used")

    tri_edges = Counter(e for t in D.triangles for e in _directed_edges(t))
    if any(c > 1 for c in tri_edges.values()):
        raise NotADisk("an edge is used twice in the same direction")
    tri_undirected = {frozenset(e) for e in tri_edges}
    walk = list(zip(D.boundary, D.boundary[1:]))
    for a, b in walk:
        if a == b:
            raise NotADisk("boundary walk repeats a vertex in place")
    expected = Counter(e for e in tri_edges if (e[1], e[0]) not in tri_edges)
    spur_edges = {frozenset(e) for e in walk if frozenset(e) not in tri_undirected}
    for s in spur_edges:
        a, b = tuple(s)
        expected[(a, b)] += 1
        expected[(b, a)] += 1
    if Counter(walk) != expected:
        raise NotADisk("boundary walk does not match the free edges of the triangles")

    fans = _fans(D)
    edge_use = Counter(frozenset(e) for e in tri_edges)
    for v in range(n):
        vfans = fans.get(v, [])
        for fan in vfans:
            closed = all(
                edge_use[frozenset((v, x))] == 2 for i in fan for x in D.triangles[i] if x != v
            )
            if v in D.boundary_vertex_set and closed:
                raise NotADisk(f"boundary vertex {v} has a closed fan")
            if v not in D.boundary_vertex_set and (len(vfans) != 1 or not closed):
                raise NotADisk(f"interior vertex {v} does not have a single closed fan")

    # block tree: vertices, triangle pieces and spur edges
    pieces = _triangle_pieces(D)
    piece_of = {i: k for k, piece in enumerate(pieces) for i in piece}
    links: list[tuple[int, tuple[str, int]]] = []
    for v, vfans in fans.items():
        for fan in vfans:
            links.append((v, ("piece", piece_of[fan[0]])))
    for k, s in enumerate(sorted(tuple(sorted(s)) for s in spur_edges)):
        for v in s:
            links.append((v, ("spur", k)))
    nodes = n + len(pieces) + len(spur_edges)
    if len(links) != nodes - 1 and not (n == 1 and not links):
        raise NotADisk("vertices, pieces and spurs do not form a tree")
    uf = _UnionFind()
    for v in range(n):
        uf.find(("v", v))
    for v, block in links:
        uf.union(("v", v), block)
    if len({uf.find(("v", v)) for v in range(n)}) != 1:
        raise NotADisk("disk is disconnected")

    for k, piece in enumerate(pieces):
        verts = {v for i in piece for v in D.triangles[i]}
        edges = {frozenset(e) for i in piece for e in _directed_edges(D.triangles[i])}
        if len(verts) - len(edges) + len(piece) != 1:
            raise NotADisk("a piece has nonzero genus or several boundary circles")

    for t in D.triangles:
        labs = [D.labels[v] for v in t]
        if len(set(labs)) != 3 or (K is not None and not K.has_simplex(labs)):
            raise LabelNotAFace(f"triangle {t!r} is labelled {labs!r}")
    for a, b in walk:
        la, lb = D.labels[a], D.labels[b]
        if la == lb or (K is not None and not K.is_edge(la, lb)):
            raise LabelNotAFace(f"edge ({a}, {b}) is labelled ({la}, {lb})")

    link_count = Counter(v for v, _ in links)
    cut_points = tuple(sorted(v for v, c in link_count.items() if c >= 2))
    nonsingular = bool(D.triangles) and not cut_points and not spur_edges
    return DiskValidation(nonsingular, cut_points, len(pieces), len(spur_edges))


def _compact(triangles: Iterable[Triangle], boundary: Sequence[int], labels: dict[int, int] | Sequence[int]) -> DiskDiagram:
    """Renumber a disk canonically: boundary walk first, then across triangles."""
    tris = [tuple(t) for t in triangles]
    third: dict[tuple[int, int], int] = {}
    for a, b, c in tris:
        third[(a, b)] = c
        third[(b, c)] = a
        third[(c, a)] = b
    order: dict[int, int] = {}
    for v in boundary:
        order.setdefault(v, len(order))
    queue = [e for e in zip(boundary, boundary[1:]) if e in third]
    head = 0
    seen_edges: set[tuple[int, int]] = set()
    while head < len(queue):
        a, b = queue[head]
        head += 1
        if (a, b) in seen_edges:
            continue
        c = third[(a, b)]
        for e in ((a, b), (b, c), (c, a)):
            seen_edges.add(e)
        order.setdefault(c, len(order))
        for x, y in ((b, c), (c, a)):
            if (y, x) in third and (y, x) not in seen_edges:
                queue.append((y, x))
    for a, b, c in sorted(tris):
        for v in (a, b, c):
            order.setdefault(v, len(order))
    lab = labels if isinstance(labels, dict) else dict(enumerate(labels))
    new_labels = [0] * len(order)
    for old, new in order.items():
        new_labels[new] = lab[old]
    new_tris = tuple(sorted(_rotate_min([order[v] for v in t]) for t in tris))
    return DiskDiagram(new_tris, tuple(order[v] for v in boundary), tuple(new_labels))


def canonical_form(D: DiskDiagram) -> DiskDiagram:
    """Representative of ``D`` up to label-preserving isomorphism fixing the boundary walk."""
    out = _compact(D.triangles, D.boundary, D.labels)
    return DiskDiagram(out.triangles, out.boundary, out.labels, D.basepoints)


def nonsingular_pieces(D: DiskDiagram) -> list[DiskDiagram]:
    """Split a disk at its cut points into nonsingular disks (spurs dropped)."""
    validate_disk(D)
    out = []
    for piece in _triangle_pieces(D):
        tris = [D.triangles[i] for i in piece]
        edges = {e for t in tris for e in _directed_edges(t)}
        free = {a: b for a, b in edges if (b, a) not in edges}
        start = min(free)
        walk = [start]
        while True:
            walk.append(free[walk[-1]])
            if walk[-1] == start:
                break
        out.append(_compact(tris, walk, D.labels))
    return out


# -- combinatorics ------------------------------------------------------------


@dataclass(frozen=True)
class VertexSign:
    vertex: int
    label: int
    degree: int

    @property
    def defect(self) -> int:
        return 4 - self.degree

    @property
    def sign(self) -> str:
        d = self.defect
        return "positive" if d > 0 else "zero" if d == 0 else "negative"

    @property
    def positive_class(self) -> int | None:
        """``k`` for the class alpha_k (4 - deg = k), else ``None``."""
        return self.defect if self.defect > 0 else None


@dataclass(frozen=True)
class SignClassification:
    boundary: tuple[VertexSign, ...]           # in boundary-walk order
    interior: dict[int, int] = field(default_factory=dict)   # vertex -> degree

    def of(self, v: int) -> VertexSign:
        return next(s for s in self.boundary if s.vertex == v)

    def by_class(self, k: int) -> list[int]:
        return [s.vertex for s in self.boundary if s.positive_class == k]


def _require_nonsingular(D: DiskDiagram) -> None:
    if not validate_disk(D).nonsingular:
        raise SingularDisk("operation needs a nonsingular disk")


def classify_boundary(D: DiskDiagram) -> SignClassification:
    _require_nonsingular(D)
    signs = tuple(VertexSign(v, D.labels[v], D.degree(v)) for v in D.boundary[:-1])
    return SignClassification(signs, {v: D.degree(v) for v in D.interior_vertices})


def gauss_bonnet_sum(D: DiskDiagram) -> int:
    _require_nonsingular(D)
    boundary = sum(4 - D.degree(v) for v in D.boundary[:-1])
    interior = sum(6 - D.degree(v) for v in D.interior_vertices)
    return boundary + interior


def is_cat0_disk(D: DiskDiagram) -> bool:
    return all(D.degree(v) >= 6 for v in D.interior_vertices)


def random_disk(rng, steps: int) -> DiskDiagram:
    """A random nonsingular disk grown from one triangle.

    Each step either glues a new triangle with a fresh vertex onto a boundary
    edge or fills a boundary corner whose two neighbours are not yet joined.
    Labels are the vertex ids themselves.
    """
    tris: list[Triangle] = [(0, 1, 2)]
    cycle = [0, 1, 2]
    nxt = 3
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    for _ in range(steps):
        m = len(cycle)
        i = rng.randrange(m)
        if m > 3 and rng.random() < 0.4:
            a, v, b = cycle[i - 1], cycle[i], cycle[(i + 1) % m]
            if b not in adj[a]:
                tris.append((a, b, v))
                adj[a].add(b)
                adj[b].add(a)
                del cycle[i]
                continue
        a, b = cycle[i], cycle[(i + 1) % m]
        z = nxt
        nxt += 1
        tris.append((b, a, z))
        adj[z] = {a, b}
        adj[a].add(z)
        adj[b].add(z)
        cycle.insert(i + 1, z)
    return DiskDiagram(tuple(tris), tuple(cycle) + (cycle[0],), tuple(range(nxt)))


# -- minimal disk search --------------------------------------------------------

Word = tuple[tuple[int, int], ...]   # cyclic sequence of (label, disk vertex)


def _fold(word: Word) -> tuple[Word, list[tuple[int, int]]]:
    """Cyclically remove backtracks ``x y x``, recording identified disk vertices."""
    w = list(word)
    merges: list[tuple[int, int]] = []
    changed = True
    while changed and len(w) >= 2:
        changed = False
        if len(w) == 2:
            return (w[0],), merges
        m = len(w)
        for i in range(m):
            a, c = w[i - 1], w[(i + 1) % m]
            if a[0] == c[0]:
                merges.append((a[1], c[1]))
                drop = {i, (i + 1) % m}
                w = [x for k, x in enumerate(w) if k not in drop]
                changed = True
                break
    return tuple(w), merges


def _canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    m = len(labels)
    rev = list(reversed(labels))
    return min(
        min(tuple(labels[(i + k) % m] for k in range(m)) for i in range(m)),
        min(tuple(rev[(i + k) % m] for k in range(m)) for i in range(m)),
    )


def _static_lower_bound(labels: Sequence[int]) -> int:
    m = len(labels)
    edges = [(labels[i], labels[(i + 1) % m]) for i in range(m)]
    present = set(edges)
    unpaired = sum(1 for a, b in edges if (b, a) not in present)
    return math.ceil(unpaired / 3)


class _Option:
    __slots__ = ("cost", "triangle", "merges", "children")

    def __init__(self, cost, triangle, merges, children):
        self.cost = cost
        self.triangle = triangle
        self.merges = merges
        self.children = children


class DiskSearch:
    """Memoized minimal-area computation and enumeration for loops in ``K``.

    Areas are cached by loop word up to rotation and reflection, together
    with proven lower bounds from failed searches, so repeated queries on
    the same complex are cheap.
    """

    def __init__(self, K: SimplicialComplex):
        self.K = K
        self._exact: dict[tuple[int, ...], int] = {}
        self._lower: dict[tuple[int, ...], int] = {}
        self._apices: dict[tuple[int, int], tuple[int, ...]] = {}
        self._fresh = itertools.count(-2, -1)

    @classmethod
    def for_complex(cls, K: SimplicialComplex) -> DiskSearch:
        if "disk_search" not in K._cache:
            K._cache["disk_search"] = cls(K)
        return K._cache["disk_search"]

    def _face(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.K.face_index

    def apices(self, a: int, b: int) -> tuple[int, ...]:
        key = (a, b) if a < b else (b, a)
        if key not in self._apices:
            common = self.K.neighbors(a) & self.K.neighbors(b)
            self._apices[key] = tuple(sorted(z for z in common if self._face(a, b, z)))
        return self._apices[key]

    def _options(self, w: Word) -> Iterable[_Option]:
        m = len(w)
        (l0, d0), (l1, d1) = w[0], w[1]
        if self._face(l0, l1, w[2][0]):
            yield _Option(1, (d0, d1, w[2][1]), (), ((w[0],) + w[2:],))
        if m >= 4 and self._face(w[-1][0], l0, l1):
            yield _Option(1, (w[-1][1], d0, d1), (), (w[1:],))
        for j in range(3, m - 1):
            if self._face(l0, l1, w[j][0]):
                yield _Option(1, (d0, d1, w[j][1]), (), (w[1 : j + 1], w[j:] + (w[0],)))
        skip = {w[2][0], w[-1][0]}
        for z in self.apices(l0, l1):
            if z not in skip:
                dz = next(self._fresh)
                yield _Option(1, (d0, d1, dz), (), ((w[0], (z, dz)) + w[1:],))
        for j in range(2, m - 1):
            if w[j][0] == l1 and w[(j + 1) % m][0] == l0:
                merges = ((d1, w[j][1]), (d0, w[j + 1][1]))
                yield _Option(0, None, merges, (w[1:j], w[j + 1 :]))

    def min_area(self, labels: Sequence[int], cap: int) -> int | None:
        """Least area of a disk spanning the cyclic word, or ``None`` if above ``cap``."""
        word, _ = _fold(tuple((lab, -1) for lab in labels))
        if len(word) <= 1:
            return 0 if cap >= 0 else None
        if cap < 0:
            return None
        key = _canonical_labels([lab for lab, _ in word])
        if key in self._exact:
            e = self._exact[key]
            return e if e <= cap else None
        m = len(key)
        lo = max(self._lower.get(key, 0), _static_lower_bound(key))
        if (lo - m) % 2:
            lo += 1
        canon = tuple((lab, -1) for lab in key)
        b = lo
        while b <= cap:
            if self._feasible(canon, b):
                self._exact[key] = b
                return b
            b += 2
            self._lower[key] = b
        return None

    def _feasible(self, w: Word, budget: int) -> bool:
        for opt in self._options(w):
            rem = budget - opt.cost
            first = self.min_area([lab for lab, _ in opt.children[0]], rem)
            if first is None:
                continue
            if len(opt.children) == 1:
                return True
            if self.min_area([lab for lab, _ in opt.children[1]], rem - first) is not None:
                return True
        return False

    def enumerate(self, w: Word, budget: int) -> list[tuple[tuple[Triangle, ...], tuple, dict[int, int]]]:
        """All fillings of exactly ``budget`` triangles; ``budget`` must be minimal.

        Each result is ``(triangles, merges, new_labels)`` over disk-vertex ids.
        """
        w, merges0 = _fold(w)
        if len(w) <= 1:
            return [((), tuple(merges0), {})] if budget == 0 else []
        out = []
        for opt in self._options(w):
            rem = budget - opt.cost
            subs = [self.min_area([lab for lab, _ in c], rem) for c in opt.children[:1]]
            if subs[0] is None:
                continue
            if len(opt.children) == 2:
                second = self.min_area([lab for lab, _ in opt.children[1]], rem - subs[0])
                if second is None or subs[0] + second != rem:
                    continue
                subs.append(second)
            elif subs[0] != rem:
                continue
            fresh = {}
            if opt.triangle is not None:
                for d, lab in zip(opt.triangle, self._triangle_labels(w, opt)):
                    if d <= -2:
                        fresh[d] = lab
            parts = [self.enumerate(c, s) for c, s in zip(opt.children, subs)]
            for combo in itertools.product(*parts):
                tris = () if opt.triangle is None else (opt.triangle,)
                mg = tuple(merges0) + tuple(opt.merges)
                labs = dict(fresh)
                for t, m2, l2 in combo:
                    tris += t
                    mg += m2
                    labs.update(l2)
                out.append((tris, mg, labs))
        return out

    @staticmethod
    def _triangle_labels(w: Word, opt: _Option) -> list[int]:
        lookup = {d: lab for lab, d in w}
        for child in opt.children:
            lookup.update({d: lab for lab, d in child})
        return [lookup[d] for d in opt.triangle]


def minimal_spanning_disk(
    K: SimplicialComplex,
    alpha: Sequence[int],
    max_area: int | None = None,
    *,
    declared_cat0: bool = False,
) -> list[DiskDiagram]:
    """Every minimal-area disk spanning the closed path ``alpha``, deduplicated.

    Uses iterative deepening on area with memoized lower bounds.  With
    ``declared_cat0`` every disk must have interior degrees >= 6.
    """
    path = check_path(K, alpha)
    if path[0] != path[-1]:
        raise NotClosed("path is not a loop")
    loop = path[:-1] if len(path) > 1 else path
    n = len(loop)
    if max_area is None:
        max_area = max(n * n, 1)
    search = DiskSearch.for_complex(K)
    area = search.min_area(loop, max_area)
    if area is None:
        raise NoDiskWithinBound(f"no disk of area <= {max_area}")
    word = tuple((lab, i) for i, lab in enumerate(loop))
    seen: dict[tuple, DiskDiagram] = {}
    for tris, merges, fresh in search.enumerate(word, area):
        uf = _UnionFind()
        for a, b in merges:
            uf.union(a, b)
        labels = {i: lab for i, lab in enumerate(loop)}
        labels.update(fresh)
        labels = {uf.find(d): lab for d, lab in labels.items()}
        boundary = [uf.find(i) for i in range(n)] + [uf.find(0)]
        if n == 1:
            boundary = boundary[:1]
        triangles = [tuple(uf.find(d) for d in t) for t in tris]
        disk = _compact(triangles, boundary, labels)
        seen.setdefault((disk.triangles, disk.labels, disk.boundary), disk)
    disks = [seen[k] for k in sorted(seen)]
    for D in disks:
        validate_disk(D, K)
        if declared_cat0 and not is_cat0_disk(D):
            raise DeclaredCat0Contradiction("a minimal disk has an interior vertex of degree < 6")
    return disks


def minimal_area(K: SimplicialComplex, alpha: Sequence[int], max_area: int | None = None) -> int:
    path = check_path(K, alpha)
    if path[0] != path[-1]:
        raise NotClosed("path is not a loop")
    loop = path[:-1] if len(path) > 1 else path
    cap = max(len(loop) ** 2, 1) if max_area is None else max_area
    area = DiskSearch.for_complex(K).min_area(loop, cap)
    if area is None:
        raise NoDiskWithinBound(f"no disk of area <= {cap}")
    return area


# -- gluing two disks along a geodesic ---------------------------------------------


def find_on_boundary(D: DiskDiagram, path: Sequence[int]) -> int | None:
    """Start position of ``path`` (by labels) as a consecutive run of ``D.boundary``."""
    walk = D.boundary[:-1]
    L = len(walk)
    n = len(path) - 1
    if L == 0 or n > L:
        return None
    for p in range(L):
        if all(D.labels[walk[(p + k) % L]] == path[k] for k in range(n + 1)):
            return p
    return None


@dataclass(frozen=True)
class MergeResult:
    disk: DiskDiagram
    gamma: tuple[int, ...]            # the image of the shared path, as labels
    seam: tuple[int, ...]             # the same path as disk vertices
    moves: tuple                      # triangle-triangle moves applied to gamma


def link_cycle(D: DiskDiagram, v: int) -> list[int]:
    """Neighbours of an interior vertex in rotation order."""
    (fan,) = D.rotation_system[v]
    return list(fan)


def seam_sides(D: DiskDiagram, seam: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Link vertices of interior seam vertex ``seam[i]`` on each side of the seam.

    The first side is the one lying to the right of the seam's direction,
    i.e. the side of the disk that carried the seam forward on its boundary.
    """
    cycle = link_cycle(D, seam[i])
    k = cycle.index(seam[i + 1])
    cycle = cycle[k:] + cycle[:k]
    j = cycle.index(seam[i - 1])
    return cycle[1:j], cycle[j + 1 :]


def merge_disks(K: SimplicialComplex, D1: DiskDiagram, D2: DiskDiagram, gamma: Sequence[int]) -> MergeResult:
    """Glue ``D1`` and ``D2`` along the geodesic ``gamma`` and reduce the result.

    Interior vertices of the seam with degree 4 or 5 are removed one at a
    time, in seam order, by replacing them with a link vertex; each such
    step is a triangle-triangle move on the seam.
    """
    from .moves import Move  # moves imports this module

    gamma = check_path(K, gamma)
    n = len(gamma) - 1
    p = find_on_boundary(D1, gamma)
    if p is None:
        if find_on_boundary(D1, gamma[::-1]) is None:
            raise LabelMismatchOnGamma("gamma does not lie on the boundary of the first disk")
        D1 = D1.mirrored()
        p = find_on_boundary(D1, gamma)
    q = find_on_boundary(D2, gamma[::-1])
    if q is None:
        if find_on_boundary(D2, gamma) is None:
            raise LabelMismatchOnGamma("gamma does not lie on the boundary of the second disk")
        D2 = D2.mirrored()
        q = find_on_boundary(D2, gamma[::-1])
    assert p is not None and q is not None
    w1, w2 = D1.boundary[:-1], D2.boundary[:-1]
    L1, L2 = len(w1), len(w2)
    off = D1.n_vertices
    ident = {w2[(q + k) % L2]: w1[(p + n - k) % L1] for k in range(n + 1)}

    def m2(v: int) -> int:
        return ident.get(v, v + off)

    labels = dict(enumerate(D1.labels))
    for v, lab in enumerate(D2.labels):
        labels.setdefault(m2(v), lab)
    tris = list(D1.triangles) + [tuple(m2(v) for v in t) for t in D2.triangles]
    walk = [w1[(p + n + t) % L1] for t in range(L1 - n + 1)]
    walk += [m2(w2[(q + n + t) % L2]) for t in range(1, L2 - n + 1)]
    seam = [w1[(p + k) % L1] for k in range(n + 1)]
    if len(walk) == 1:
        walk = walk[:1]

    disk = _compact(tris, walk, labels)
    seam_local = _compact_map(tris, walk)
    seam = [seam_local[v] for v in seam]
    validate_disk(disk, K)

    moves = []
    while True:
        target = None
        for i in range(1, n):
            v = seam[i]
            if v not in disk.boundary_vertex_set and disk.degree(v) < 6:
                target = i
                break
        if target is None:
            break
        disk, seam, move = _resolve_seam_vertex(K, disk, seam, target, Move)
        moves.append(move)
    return MergeResult(disk, tuple(disk.labels[v] for v in seam), tuple(seam), tuple(moves))


def _compact_map(triangles, boundary) -> dict[int, int]:
    """The vertex renumbering that :func:`_compact` applies."""
    verts = {v for t in triangles for v in t} | set(boundary)
    probe = _compact(triangles, boundary, {v: v for v in verts})
    return {old: new for new, old in enumerate(probe.labels)}


def _resolve_seam_vertex(K, disk: DiskDiagram, seam: list[int], i: int, Move):
    v = seam[i]
    deg = disk.degree(v)
    side1, side2 = seam_sides(disk, seam, i)
    if deg == 3 or not side1 or not side2:
        raise UnresolvableVertex(f"seam vertex {i} has degree {deg}; the shared path is not geodesic")
    if deg == 4:
        candidates = side1 + side2
    else:
        # side1 runs from seam[i+1] round to seam[i-1], side2 the other way
        if len(side1) < len(side2):
            candidates = side1 + [side2[-1], side2[0]]
        else:
            candidates = side2 + [side1[0], side1[-1]]
    cycle = link_cycle(disk, v)
    lab = disk.labels
    for a in candidates:
        new = []
        ok = True
        for k in range(len(cycle)):
            x, y = cycle[k], cycle[(k + 1) % len(cycle)]
            if a in (x, y):
                continue
            if not K.has_simplex((lab[a], lab[x], lab[y])):
                ok = False
                break
            new.append((a, x, y))
        if not ok:
            continue
        tris = [t for t in disk.triangles if v not in t] + new
        labels = {u: lab[u] for u in range(disk.n_vertices) if u != v}
        try:
            candidate = _compact(tris, disk.boundary, labels)
            validate_disk(candidate, K)
        except (NotADisk, KeyError):
            continue
        remap = _compact_map(tris, disk.boundary)
        new_seam = [remap[a] if k == i else remap[u] for k, u in enumerate(seam)]
        prev, nxt = lab[seam[i - 1]], lab[seam[i + 1]]
        witness = (tuple(sorted((prev, lab[v], lab[a]))), tuple(sorted((lab[v], nxt, lab[a]))))
        move = Move("triangle_triangle", i, (prev, lab[v], nxt), (prev, lab[a], nxt), witness)
        return candidate, new_seam, move
    raise UnresolvableVertex(f"no filling of the link of seam vertex {i} exists in the complex")
