"""Simple undirected graphs over dense vertex indices, stored as adjacency bitsets.

A vertex set is a Python int used as a bit array; :class:`VertexSet` wraps
one together with the width of the graph that owns it so that sets from
different graphs cannot be mixed by accident.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    GNotConnected,
    SelfLoop,
    TooFewVertices,
    VertexOutOfRange,
    WidthMismatch,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class VertexSet:
    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.width:
            raise VertexOutOfRange(f"bits outside [0, {self.width})")

    @classmethod
    def of(cls, width: int, indices: Iterable[int] = ()) -> VertexSet:
        indices = list(indices)
        for i in indices:
            if not 0 <= i < width:
                raise VertexOutOfRange(f"vertex {i} not in [0, {width})")
        return cls(mask_of(indices), width)

    @classmethod
    def full(cls, width: int) -> VertexSet:
        return cls((1 << width) - 1, width)

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.width != self.width:
            raise WidthMismatch(f"width {self.width} vs {other.width}")

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & other.bits, self.width)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits | other.bits, self.width)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.width)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits ^ other.bits, self.width)

    def __le__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def issubset(self, other: VertexSet) -> bool:
        return self <= other

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.width and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, width={self.width})"


class ProductVertex(NamedTuple):
    g: int
    h: int

    def index(self, h_order: int) -> int:
        return self.g * h_order + self.h

    @classmethod
    def from_index(cls, index: int, h_order: int) -> ProductVertex:
        return cls(*divmod(index, h_order))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``masks[u]`` is the open neighbourhood of ``u`` as an int bitset; ``adj``
    exposes the same data as :class:`VertexSet` objects.
    """

    n: int
    masks: tuple[int, ...]
    name: str | None = field(default=None, compare=False)
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise TooFewVertices(f"graphs need at least two vertices, got {self.n}")
        if len(self.masks) != self.n:
            raise ValueError("one adjacency mask per vertex required")
        for u, m in enumerate(self.masks):
            if m >> self.n or m < 0:
                raise VertexOutOfRange(f"neighbour of {u} outside [0, {self.n})")
            if m >> u & 1:
                raise SelfLoop(f"self-loop at {u}")
            for v in iter_bits(m):
                if not self.masks[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @property
    def adj(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(m, self.n) for m in self.masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v!r} not in [0, {self.n})")

    def ball_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u]) if u < v]

    def degree(self, v: int) -> int:
        return bin(self.masks[v]).count("1")

    def vertex_set(self, indices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, indices)

    def label(self) -> str:
        return self.name or f"G{self.n}"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], name: str | None = None,
                   labels: tuple[str, ...] | None = None) -> Graph:
    if n < 2:
        raise TooFewVertices(f"graphs need at least two vertices, got {n}")
    masks = [0] * n
    for u, v in edges:
        for x in (u, v):
            if not (isinstance(x, int) and 0 <= x < n):
                raise VertexOutOfRange(f"endpoint {x!r} not in [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks), name, labels)


def path(n: int) -> Graph:
    if n < 2:
        raise TooFewVertices(f"path needs n >= 2, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooFewVertices(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 2:
        raise TooFewVertices(f"complete graph needs n >= 2, got {n}")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def star(leaves: int) -> Graph:
    """Star with centre 0 and leaves ``1..leaves``."""
    if leaves < 1:
        raise TooFewVertices(f"star needs at least one leaf, got {leaves}")
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)], f"S{leaves}")


def ball(G: Graph, v: int) -> VertexSet:
    G.check_vertex(v)
    return VertexSet(G.ball_mask(v), G.n)


def _reach_mask(G: Graph, start: int, r: int | None) -> int:
    seen = frontier = 1 << start
    steps = 0
    while frontier and (r is None or steps < r):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= G.masks[u]
        frontier = nxt & ~seen
        seen |= frontier
        steps += 1
    return seen


def r_ball(G: Graph, v: int, r: int) -> VertexSet:
    G.check_vertex(v)
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    return VertexSet(_reach_mask(G, v, r), G.n)


def distances_from(G: Graph, s: int) -> list[int | None]:
    """BFS distances from ``s``; ``None`` marks unreachable vertices."""
    G.check_vertex(s)
    dist: list[int | None] = [None] * G.n
    dist[s] = 0
    frontier, seen, d = 1 << s, 1 << s, 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= G.masks[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in iter_bits(frontier):
            dist[u] = d
    return dist


def is_connected(G: Graph) -> bool:
    return _reach_mask(G, 0, None) == G.full_mask


def max_degree(G: Graph) -> int:
    return max(G.degree(v) for v in range(G.n))


def lex_product(G: Graph, H: Graph) -> Graph:
    """Lexicographic product G[H]; vertex (u, v) has flattened index u*|V(H)| + v."""
    if not is_connected(G):
        raise GNotConnected(f"{G.label()} is not connected")
    nh = H.n
    fiber = (1 << nh) - 1
    masks = []
    for u in range(G.n):
        outer = 0
        for w in iter_bits(G.masks[u]):
            outer |= fiber << (w * nh)
        for v in range(nh):
            masks.append(outer | (H.masks[v] << (u * nh)))
    return Graph(G.n * nh, tuple(masks), f"LEX({G.label()},{H.label()})")


def is_labeled_path(G: Graph) -> bool:
    return G.masks == path(G.n).masks


def is_labeled_cycle(G: Graph) -> bool:
    return G.n >= 3 and G.masks == cycle(G.n).masks
