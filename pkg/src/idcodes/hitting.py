"""Exact minimum hitting sets over int bitsets.

Every code parameter in this package reduces to a hitting-set instance: a
code must meet each set of a family (a ball for coverage, a symmetric
difference of two balls for separation, a ball complement for "not inside
any ball").  The search here is a plain branch and bound:

* branch on the elements of the smallest unhit set, excluding earlier
  siblings so every solution is visited once;
* prune with a greedy packing of pairwise disjoint sets, each of which
  needs its own element;
* split the family into connected components (sets sharing no element) and
  solve them independently;
* memoise results per reduced family.

``lex_least`` then recovers the lexicographically least optimum by fixing
one element at a time and asking the optimiser whether the remainder is
still completable within budget.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import iter_bits


def _key(s: int) -> tuple[int, int]:
    return (s.bit_count(), s)


def normalize(sets: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and order by (size, value); the smallest set comes first."""
    return tuple(sorted(set(sets), key=_key))


def drop_supersets(sets: Iterable[int]) -> tuple[int, ...]:
    """Remove every set that strictly contains another one (it is hit for free)."""
    kept: list[int] = []
    for s in normalize(sets):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return tuple(kept)


def packing_bound(sets: Sequence[int]) -> int:
    """Size of a greedy family of pairwise disjoint sets, a lower bound on any hitting set."""
    used = 0
    count = 0
    for s in sets:
        if not s & used:
            used |= s
            count += 1
    return count


def components(sets: Sequence[int]) -> list[tuple[int, ...]]:
    groups: list[tuple[int, list[int]]] = []
    for s in sets:
        merged_mask = s
        merged: list[int] = [s]
        rest = []
        for mask, members in groups:
            if mask & merged_mask:
                merged_mask |= mask
                merged.extend(members)
            else:
                rest.append((mask, members))
        rest.append((merged_mask, merged))
        groups = rest
    return [normalize(members) for _, members in groups]


class HittingSetSolver:
    """Memoising exact solver; one instance per family of related queries."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, ...], tuple[int, bool]] = {}
        self.nodes = 0

    def min_size(self, sets: tuple[int, ...], ub: int) -> int:
        """Exact minimum if it is <= ``ub``; otherwise some lower bound > ``ub``.

        ``sets`` must be normalized and contain no empty set.
        """
        if not sets:
            return 0
        if ub <= 0:
            return 1
        memo = self._memo.get(sets)
        if memo is not None:
            value, exact = memo
            if exact or value > ub:
                return value
        self.nodes += 1

        parts = components(sets)
        if len(parts) > 1:
            result, exact = self._solve_parts(parts, ub)
        else:
            result, exact = self._branch(sets, ub)
        if memo is None or exact or result > memo[0]:
            self._memo[sets] = (result, exact)
        return result

    def _solve_parts(self, parts: list[tuple[int, ...]], ub: int) -> tuple[int, bool]:
        bounds = [packing_bound(p) for p in parts]
        remaining = sum(bounds)
        if remaining > ub:
            return remaining, False
        total = 0
        for part, bound in zip(parts, bounds):
            remaining -= bound
            total += self.min_size(part, ub - total - remaining)
            if total + remaining > ub:
                return total + remaining, False
        return total, True

    def _branch(self, sets: tuple[int, ...], ub: int) -> tuple[int, bool]:
        lb = packing_bound(sets)
        if lb > ub:
            return lb, False
        best = ub + 1
        excluded = 0
        for e in iter_bits(sets[0]):
            bit = 1 << e
            keep = ~excluded
            excluded |= bit
            rest = []
            for s in sets:
                if s & bit:
                    continue
                s &= keep
                if not s:
                    break
                rest.append(s)
            else:
                value = 1 + self.min_size(normalize(rest), best - 2)
                if value < best:
                    best = value
                    if best == lb:
                        break
        if best <= ub:
            return best, True
        return ub + 1, False

    def minimum(self, sets: Iterable[int], start: int = 0) -> int | None:
        """Smallest k >= ``start`` admitting a hitting set, or ``None`` if none exists.

        Sizes are tried in increasing order; ``start`` must be a valid lower bound.
        """
        family = drop_supersets(sets)
        if family and family[0] == 0:
            return None
        if not family:
            return 0
        universe = 0
        for s in family:
            universe |= s
        k = max(start, packing_bound(family))
        top = universe.bit_count()
        while k <= top:
            if self.min_size(family, k) <= k:
                return k
            k += 1
        return None

    def lex_least(self, sets: Iterable[int], k: int) -> list[int]:
        """Lexicographically least hitting set of size ``k``, where ``k`` is the optimum."""
        live = drop_supersets(sets)
        chosen: list[int] = []
        budget = k
        start = 0
        while live:
            universe = 0
            for s in live:
                universe |= s
            for v in iter_bits(universe >> start << start):
                bit = 1 << v
                above = ~((bit << 1) - 1)
                rest = []
                for s in live:
                    if s & bit:
                        continue
                    s &= above
                    if not s:
                        break
                    rest.append(s)
                else:
                    rest_t = normalize(rest)
                    if self.min_size(rest_t, budget - 1) <= budget - 1:
                        chosen.append(v)
                        live = rest_t
                        budget -= 1
                        start = v + 1
                        break
            else:
                raise ValueError(f"no hitting set of size {k}")
        if budget:
            raise ValueError(f"{k} is not the optimum; found a hitting set of size {k - budget}")
        return chosen
