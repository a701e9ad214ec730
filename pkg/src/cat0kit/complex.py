"""Regular simplicial complexes given by their maximal simplices.

A complex is immutable once built.  Vertices are interned to dense integer
ids in order of first appearance; the original names are kept so complexes
can be printed and serialized back.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    DimensionTooHigh,
    DisconnectedComplex,
    DuplicateVertexInSimplex,
    EmptyOrDisconnectedResult,
    NotAnEdge,
    NotSimplicial,
    SimplexNotInComplex,
    UnknownVertex,
)

Simplex = tuple[int, ...]

#: Dihedral angle of a regular Euclidean tetrahedron along an edge.
DIHEDRAL_ANGLE = math.acos(1.0 / 3.0)


def as_simplex(vertices: Iterable[int]) -> Simplex:
    verts = tuple(vertices)
    s = tuple(sorted(verts))
    if len(set(s)) != len(s):
        raise DuplicateVertexInSimplex(f"repeated vertex in {verts!r}")
    return s


class SimplicialComplex:
    """A finite simplicial complex stored by maximal simplices.

    ``face_index`` maps every face (a sorted vertex tuple) to the maximal
    simplices that contain it, so membership tests are dictionary lookups.
    """

    __slots__ = ("maximal", "face_index", "vertices", "_adj", "names", "dim", "_name_to_id", "_cache")

    def __init__(
        self,
        maximal: Iterable[Simplex],
        names: Mapping[int, str] | None = None,
        *,
        require_connected: bool = True,
    ):
        tops = _maximal_only({as_simplex(s) for s in maximal})
        face_index: dict[Simplex, list[Simplex]] = {}
        for top in tops:
            for k in range(1, len(top) + 1):
                for face in combinations(top, k):
                    face_index.setdefault(face, []).append(top)
        adj: dict[int, set[int]] = {}
        for top in tops:
            for v in top:
                adj.setdefault(v, set())
            for u, v in combinations(top, 2):
                adj[u].add(v)
                adj[v].add(u)
        self.maximal: tuple[Simplex, ...] = tuple(sorted(tops))
        self.face_index = {f: tuple(sorted(ts)) for f, ts in face_index.items()}
        self.vertices: tuple[int, ...] = tuple(sorted(adj))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.dim = max((len(t) - 1 for t in tops), default=-1)
        all_names = dict(names) if names else {}
        self.names = {v: all_names.get(v, str(v)) for v in self.vertices}
        self._name_to_id = {n: v for v, n in self.names.items()}
        self._cache: dict = {}
        if require_connected and not self.is_connected():
            raise DisconnectedComplex("1-skeleton is not connected")

    # -- basic queries -------------------------------------------------

    def __repr__(self) -> str:
        return f"SimplicialComplex(V={len(self.vertices)}, dim={self.dim}, maximal={len(self.maximal)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.maximal == other.maximal

    def __hash__(self) -> int:
        return hash(self.maximal)

    def __contains__(self, simplex: Iterable[int]) -> bool:
        return self.has_simplex(simplex)

    def has_simplex(self, simplex: Iterable[int]) -> bool:
        s = tuple(sorted(simplex))
        return s in self.face_index

    def is_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._adj.get(u, ())

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def simplices(self, k: int) -> list[Simplex]:
        """All ``k``-dimensional simplices, sorted."""
        return sorted(f for f in self.face_index if len(f) == k + 1)

    @property
    def edges(self) -> list[Simplex]:
        return self.simplices(1)

    @property
    def triangles(self) -> list[Simplex]:
        return self.simplices(2)

    @property
    def tetrahedra(self) -> list[Simplex]:
        return self.simplices(3)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self.face_index:
            counts[len(f) - 1] += 1
        return tuple(counts)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            v = todo.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    # -- naming --------------------------------------------------------

    def vertex(self, name: Hashable) -> int:
        """Resolve a vertex name (or an id) to its id."""
        if isinstance(name, str) and name in self._name_to_id:
            return self._name_to_id[name]
        if isinstance(name, int) and name in self._adj:
            return name
        raise UnknownVertex(f"unknown vertex {name!r}")

    def vertex_ids(self, names: Iterable[Hashable]) -> list[int]:
        return [self.vertex(n) for n in names]

    def name(self, v: int) -> str:
        return self.names[v]

    def path_names(self, path: Iterable[int]) -> list[str]:
        return [self.names[v] for v in path]

    # -- distances -----------------------------------------------------

    def bfs_distances(self, source: int) -> dict[int, int]:
        self.neighbors(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in self._adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def distance_matrix(self) -> dict[int, dict[int, int]]:
        """All-pairs combinatorial distances (computed once, then cached)."""
        if "dist" not in self._cache:
            self._cache["dist"] = {v: self.bfs_distances(v) for v in self.vertices}
        return self._cache["dist"]

    def require_dim_at_most(self, d: int, what: str) -> None:
        if self.dim > d:
            raise DimensionTooHigh(f"{what} requires dimension <= {d}, complex has dimension {self.dim}")


def _maximal_only(simplices: set[Simplex]) -> list[Simplex]:
    by_size = sorted(simplices, key=len, reverse=True)
    kept: list[Simplex] = []
    kept_sets: list[frozenset[int]] = []
    for s in by_size:
        fs = frozenset(s)
        if any(fs <= k for k in kept_sets):
            continue
        kept.append(s)
        kept_sets.append(fs)
    return kept


def build_complex(maximal: Sequence[Sequence[Hashable]]) -> SimplicialComplex:
    """Build a complex from simplices given by vertex names.

    Non-maximal input simplices are absorbed.  Vertex ids are assigned in
    order of first appearance.
    """
    if not maximal:
        raise ValueError("a complex needs at least one simplex")
    ids: dict[Hashable, int] = {}
    simplices = []
    for raw in maximal:
        raw = list(raw)
        if not raw:
            raise ValueError("empty simplex")
        if len(set(raw)) != len(raw):
            raise DuplicateVertexInSimplex(f"repeated vertex in {raw!r}")
        for name in raw:
            if name not in ids:
                ids[name] = len(ids)
        simplices.append(tuple(ids[n] for n in raw))
    names = {v: str(n) for n, v in ids.items()}
    return SimplicialComplex(simplices, names)


def local_structure(K: SimplicialComplex, sigma: Iterable[int]) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Closed star and combinatorial link of ``sigma``.

    An empty ``sigma`` gives ``(K, K)``.  The link of a maximal simplex is
    the empty complex.
    """
    s = tuple(sorted(sigma))
    if not s:
        return K, K
    if s not in K.face_index:
        raise SimplexNotInComplex(f"{s!r} is not a simplex of the complex")
    tops = K.face_index[s]
    star = SimplicialComplex(tops, K.names)
    sset = set(s)
    link_tops = [tuple(v for v in t if v not in sset) for t in tops]
    link = SimplicialComplex([t for t in link_tops if t], K.names, require_connected=False)
    return star, link


def link(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    return local_structure(K, sigma)[1]


def full_subcomplex(
    K: SimplicialComplex, W: Iterable[int], *, allow_disconnected: bool = False
) -> SimplicialComplex:
    """The largest subcomplex of ``K`` whose vertices all lie in ``W``."""
    wset = set(W)
    if not wset:
        raise EmptyOrDisconnectedResult("empty vertex set")
    for v in wset:
        if v not in K._adj:
            raise UnknownVertex(f"unknown vertex {v!r}")
    faces = [f for f in K.face_index if wset.issuperset(f)]
    sub = SimplicialComplex(faces, K.names, require_connected=False)
    if not allow_disconnected and not sub.is_connected():
        raise EmptyOrDisconnectedResult(f"full subcomplex on {sorted(wset)} is disconnected")
    return sub


@dataclass(frozen=True)
class MetricGraph:
    """A graph with positive edge lengths (radians)."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, float], ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @property
    def total_length(self) -> float:
        return sum(length for _, _, length in self.edges)


def edge_metric_link(K: SimplicialComplex, e: Iterable[int]) -> MetricGraph:
    """Metric link of an edge in a regular complex of dimension at most 3.

    Each tetrahedron through ``e`` contributes one arc of length
    ``arccos(1/3)``; link vertices coming only from triangles stay isolated.
    """
    edge = tuple(sorted(e))
    if len(edge) != 2 or edge not in K.face_index:
        raise NotAnEdge(f"{edge!r} is not an edge")
    K.require_dim_at_most(3, "edge_metric_link")
    _, lk = local_structure(K, edge)
    arcs = tuple(
        (t[0], t[1], DIHEDRAL_ANGLE) for t in lk.maximal if len(t) == 2
    )
    return MetricGraph(lk.vertices, arcs)


@dataclass(frozen=True)
class Automorphism:
    """A simplicial automorphism, stored as a vertex map."""

    mapping: tuple[tuple[int, int], ...]
    _lookup: dict[int, int] = field(default=None, compare=False, hash=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(self.mapping))

    def __call__(self, v: int) -> int:
        return self._lookup[v]

    def apply(self, path: Iterable[int]) -> tuple[int, ...]:
        return tuple(self._lookup[v] for v in path)

    def compose(self, other: Automorphism) -> Automorphism:
        """``self`` after ``other``."""
        return Automorphism(tuple((v, self._lookup[other._lookup[v]]) for v, _ in other.mapping))

    def inverse(self) -> Automorphism:
        return Automorphism(tuple(sorted((w, v) for v, w in self.mapping)))

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.mapping)

    @classmethod
    def identity(cls, K: SimplicialComplex) -> Automorphism:
        return cls(tuple((v, v) for v in K.vertices))


def validate_automorphism(K: SimplicialComplex, g: Mapping[int, int] | Sequence[int]) -> Automorphism:
    """Check that ``g`` permutes the maximal simplices of ``K``."""
    mapping = dict(g) if isinstance(g, Mapping) else dict(enumerate(g))
    verts = set(K.vertices)
    if set(mapping) != verts or set(mapping.values()) != verts:
        raise NotSimplicial("map is not a bijection on the vertex set")
    tops = set(K.maximal)
    for t in K.maximal:
        image = tuple(sorted(mapping[v] for v in t))
        if image not in tops:
            raise NotSimplicial(f"image of {t!r} is {image!r}, which is not a maximal simplex")
    return Automorphism(tuple(sorted(mapping.items())))


def generated_group(K: SimplicialComplex, generators: Iterable[Automorphism]) -> list[Automorphism]:
    """All elements of the (finite) group generated by ``generators``."""
    ident = Automorphism.identity(K)
    gens = list(generators)
    seen = {ident.mapping: ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = h.compose(g)
            if gh.mapping not in seen:
                seen[gh.mapping] = gh
                queue.append(gh)
    return sorted(seen.values(), key=lambda a: a.mapping)
