"""Closed-twin / open-twin classes and the statistics s(G), t(G).

Two vertices are equivalent when they share a closed ball (closed twins,
always adjacent) or an open neighbourhood (open twins, never adjacent).
Classes are swept in increasing order of their least member; that member is
the class representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet


@dataclass(frozen=True)
class TwinPartition:
    width: int
    w_classes: tuple[VertexSet, ...]
    u_classes: tuple[VertexSet, ...]
    v_classes: tuple[VertexSet, ...]

    @property
    def p(self) -> int:
        return len(self.w_classes)

    @property
    def k(self) -> int:
        return len(self.u_classes)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.v_classes)

    @property
    def s(self) -> int:
        return sum(len(c) for c in self.u_classes) - self.k

    @property
    def t(self) -> int:
        return sum(len(c) for c in self.v_classes) - self.l

    @property
    def u_representatives(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.u_classes)

    @property
    def v_representatives(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.v_classes)

    def classes(self) -> list[tuple[str, VertexSet]]:
        """All classes tagged W/U/V, ordered by least member."""
        tagged = [("W", c) for c in self.w_classes]
        tagged += [("U", c) for c in self.u_classes]
        tagged += [("V", c) for c in self.v_classes]
        return sorted(tagged, key=lambda tc: min(tc[1]))


def twin_classes(G: Graph) -> TwinPartition:
    assigned = 0
    w, u, v = [], [], []
    for i in range(G.n):
        if assigned >> i & 1:
            continue
        closed = 1 << i
        open_ = 1 << i
        bi, ni = G.ball_mask(i), G.masks[i]
        for j in range(i + 1, G.n):
            if G.ball_mask(j) == bi:
                closed |= 1 << j
            elif G.masks[j] == ni:
                open_ |= 1 << j
        # a vertex cannot have both a closed twin and an open twin
        assert closed == 1 << i or open_ == 1 << i
        if closed != 1 << i:
            u.append(VertexSet(closed, G.n))
            assigned |= closed
        elif open_ != 1 << i:
            v.append(VertexSet(open_, G.n))
            assigned |= open_
        else:
            w.append(VertexSet(1 << i, G.n))
            assigned |= 1 << i
    return TwinPartition(G.n, tuple(w), tuple(u), tuple(v))


@dataclass(frozen=True)
class ReducedPartition:
    base: VertexSet
    u_rest: tuple[VertexSet, ...]
    v_rest: tuple[VertexSet, ...]


def reduced_partition(P: TwinPartition) -> ReducedPartition:
    """Singletons plus one representative per twin class, then the remaining twins per class."""
    base = 0
    for c in P.w_classes:
        base |= c.bits
    u_rest, v_rest = [], []
    for group, out in ((P.u_classes, u_rest), (P.v_classes, v_rest)):
        for c in group:
            rep = 1 << min(c)
            base |= rep
            out.append(VertexSet(c.bits & ~rep, P.width))
    return ReducedPartition(VertexSet(base, P.width), tuple(u_rest), tuple(v_rest))
