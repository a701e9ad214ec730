"""Combinatorial paths in the 1-skeleton: validity, distances, geodesics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .complex import SimplicialComplex
from .errors import GeodesicOverflow, InvalidStep, UnknownVertex

Path = tuple[int, ...]

DEFAULT_GEODESIC_LIMIT = 10**6


@dataclass(frozen=True)
class PathProperties:
    valid: bool
    tight: bool
    closed: bool
    length: int


def check_path(K: SimplicialComplex, path: Sequence[int]) -> Path:
    """Return ``path`` as a tuple, raising if some step is not an edge."""
    p = tuple(path)
    if not p:
        raise InvalidStep("a path needs at least one vertex")
    for v in p:
        K.neighbors(v)
    for a, b in zip(p, p[1:]):
        if not K.is_edge(a, b):
            raise InvalidStep(f"{K.name(a)} -> {K.name(b)} is not an edge")
    return p


def path_properties(K: SimplicialComplex, path: Sequence[int]) -> PathProperties:
    p = check_path(K, path)
    steps = [frozenset(e) for e in zip(p, p[1:])]
    return PathProperties(True, len(set(steps)) == len(steps), p[0] == p[-1], len(p) - 1)


def is_tight(path: Sequence[int]) -> bool:
    steps = [frozenset(e) for e in zip(path, path[1:])]
    return len(set(steps)) == len(steps)


@dataclass(frozen=True)
class Point:
    """A point of the 1-skeleton: ``offset`` of the way from ``tail`` to ``head``.

    Vertices have ``offset == 0`` and ``tail == head``.
    """

    tail: int
    head: int
    offset: Fraction

    @property
    def is_vertex(self) -> bool:
        return self.offset == 0

    @classmethod
    def at(cls, v: int) -> Point:
        return cls(v, v, Fraction(0))


def evaluate(path: Sequence[int], t: float | Fraction) -> Point:
    """The point ``t`` units along ``path``, clamped to its endpoints."""
    n = len(path) - 1
    t = Fraction(t)
    if t <= 0:
        return Point.at(path[0])
    if t >= n:
        return Point.at(path[-1])
    i = math.floor(t)
    frac = t - i
    if frac == 0:
        return Point.at(path[i])
    return Point(path[i], path[i + 1], frac)


def point_distance(K: SimplicialComplex, p: Point, q: Point) -> Fraction:
    """Distance between points of the 1-skeleton.

    Points on a common edge are measured along it; otherwise the distance
    goes through the nearest endpoints of the two carrying edges.
    """
    dist = K.distance_matrix()
    if {p.tail, p.head} == {q.tail, q.head} and not (p.is_vertex and q.is_vertex and p.tail != q.tail):
        pos_p = p.offset if p.tail == min(p.tail, p.head) else 1 - p.offset
        pos_q = q.offset if q.tail == min(q.tail, q.head) else 1 - q.offset
        if p.is_vertex:
            pos_p = Fraction(0) if p.tail == min(q.tail, q.head) else Fraction(1)
        if q.is_vertex:
            pos_q = Fraction(0) if q.tail == min(p.tail, p.head) else Fraction(1)
        return abs(pos_p - pos_q)
    ends_p = [(p.tail, p.offset), (p.head, 1 - p.offset)] if not p.is_vertex else [(p.tail, Fraction(0))]
    ends_q = [(q.tail, q.offset), (q.head, 1 - q.offset)] if not q.is_vertex else [(q.tail, Fraction(0))]
    return min(a_off + dist[a][b] + b_off for a, a_off in ends_p for b, b_off in ends_q)


def path_distance(
    K: SimplicialComplex, alpha: Sequence[int], beta: Sequence[int], *, samples_per_edge: int = 1
) -> Fraction:
    """Largest distance between ``alpha(t)`` and ``beta(t)`` over sampled times.

    The default samples integer times only, which is the usual convention
    for fellow travelling in graphs.  ``samples_per_edge=2`` adds the
    midpoints of edges.
    """
    horizon = max(len(alpha), len(beta)) - 1
    if samples_per_edge == 1:
        dist = K.distance_matrix()
        la, lb = len(alpha) - 1, len(beta) - 1
        return Fraction(
            max(dist[alpha[min(t, la)]][beta[min(t, lb)]] for t in range(horizon + 1))
        )
    best = Fraction(0)
    for k in range(horizon * samples_per_edge + 1):
        t = Fraction(k, samples_per_edge)
        best = max(best, point_distance(K, evaluate(alpha, t), evaluate(beta, t)))
    return best


def combinatorial_distance(K: SimplicialComplex, v: int, w: int) -> int:
    dist = K.distance_matrix()
    if v not in dist:
        raise UnknownVertex(f"unknown vertex {v!r}")
    if w not in dist[v]:
        raise UnknownVertex(f"unknown vertex {w!r}")
    return dist[v][w]


def is_geodesic(K: SimplicialComplex, path: Sequence[int]) -> bool:
    p = check_path(K, path)
    return len(p) - 1 == combinatorial_distance(K, p[0], p[-1])


def enumerate_geodesics(
    K: SimplicialComplex, v: int, w: int, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> list[Path]:
    """Every geodesic from ``v`` to ``w`` in lexicographic order.

    Walks the layered graph of BFS levels backwards from ``w`` so every
    branch taken reaches ``v``; raises once more than ``limit`` are found.
    """
    d = combinatorial_distance(K, v, w)
    to_w = K.distance_matrix()[w]
    out: list[Path] = []
    path = [v]

    def walk() -> None:
        last = path[-1]
        if last == w:
            out.append(tuple(path))
            if len(out) > limit:
                raise GeodesicOverflow(f"more than {limit} geodesics")
            return
        remaining = d - (len(path) - 1)
        for x in sorted(K.neighbors(last)):
            if to_w[x] == remaining - 1:
                path.append(x)
                walk()
                path.pop()

    walk()
    return out


def iter_paths(K: SimplicialComplex, start: int, length: int) -> Iterator[Path]:
    """All paths of exactly ``length`` steps from ``start``."""
    path = [start]

    def walk() -> Iterator[Path]:
        if len(path) == length + 1:
            yield tuple(path)
            return
        for x in sorted(K.neighbors(path[-1])):
            path.append(x)
            yield from walk()
            path.pop()

    yield from walk()


def reverse(path: Sequence[int]) -> Path:
    return tuple(reversed(path))
