"""Identifying codes of lexicographic products G[H].

For connected G the minimum identifying code of G[H] is determined by
I(H), I'(H), I''(H) and the twin statistics s(G), t(G).  Each statement
here comes with a brute-force check on the explicit product graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import graph as gc
from .errors import (
    GNotConnected,
    NotAnIdentifyingCode,
    NotIdentifiableProduct,
    OutOfCorollaryRange,
    TooLargeForExactSearch,
    UndefinedParameter,
)
from .graph import Graph, ProductVertex, VertexSet
from .solver import (
    DEFAULT_CAP,
    Family,
    Kind,
    ParamResult,
    is_identifiable,
    is_identifying_code,
    min_identifying_code,
    parameter,
)
from .twins import ReducedPartition, reduced_partition, twin_classes


class Branch(str, Enum):
    DELTA_SMALL = "delta_small"  # max degree of H <= |V(H)| - 2
    DELTA_FULL = "delta_full"    # H has a universal vertex


@dataclass
class ProductPlan:
    g: str
    h: str
    g_order: int
    h_order: int
    branch: Branch
    h_stats: dict[Kind, ParamResult]
    s: int
    t: int
    predicted: int
    witness: VertexSet | None
    verified: bool | None = None
    oracle_value: int | None = None
    oracle_witness: VertexSet | None = field(default=None, repr=False)


def _require_connected(G: Graph) -> None:
    if not gc.is_connected(G):
        raise GNotConnected(f"{G.label()} is not connected")


def branch_of(H: Graph) -> Branch:
    return Branch.DELTA_SMALL if gc.max_degree(H) <= H.n - 2 else Branch.DELTA_FULL


def product_identifiable(G: Graph, H: Graph) -> bool:
    _require_connected(G)
    if not is_identifiable(H):
        return False
    return gc.max_degree(H) <= H.n - 2 or is_identifiable(G)


def product_identifiable_direct(G: Graph, H: Graph) -> bool:
    """Oracle: build G[H] and compare all balls pairwise."""
    return is_identifiable(gc.lex_product(G, H))


def formula_value(branch: Branch, g_order: int, s: int, t: int,
                  i: int, i_prime: int, i_dprime: int | None) -> int:
    if branch is Branch.DELTA_FULL:
        return (g_order - t) * i_prime + t * i
    if i_dprime is None:
        raise UndefinedParameter("I''(H) is required when H has no universal vertex")
    return (g_order - s - t) * i_prime + s * i_dprime + t * i


def _fiber(code: VertexSet, u: int, h_order: int) -> int:
    return code.bits << (u * h_order)


def assemble_code(G: Graph, H: Graph, reduced: ReducedPartition, ident: VertexSet,
                  separating: VertexSet, undominated: VertexSet | None) -> VertexSet:
    """Place copies of the three H-codes on the fibres above the reduced partition."""
    bits = 0
    for u in reduced.base:
        bits |= _fiber(separating, u, H.n)
    for part in reduced.u_rest:
        for u in part:
            if undominated is None:
                raise UndefinedParameter("a closed-twin fibre needs an undominated separating code")
            bits |= _fiber(undominated, u, H.n)
    for part in reduced.v_rest:
        for u in part:
            bits |= _fiber(ident, u, H.n)
    return VertexSet(bits, G.n * H.n)


def _h_stats(H: Graph, branch: Branch, cap: int | None) -> dict[Kind, ParamResult]:
    stats = {Kind.I: parameter(H, Kind.I, cap), Kind.I_PRIME: parameter(H, Kind.I_PRIME, cap)}
    if branch is Branch.DELTA_SMALL:
        stats[Kind.I_DPRIME] = parameter(H, Kind.I_DPRIME, cap)
    else:
        stats[Kind.I_DPRIME] = ParamResult(None, None, None, "not used: H has a universal vertex")
    for kind, res in stats.items():
        if res.refused:
            raise TooLargeForExactSearch(f"{kind.value}({H.label()}): {res.note}")
    return stats


def theorem_min_identifying(G: Graph, H: Graph, cap: int | None = None) -> ProductPlan:
    """Predicted I(G[H]) and the constructed code achieving it; no oracle is run."""
    if not product_identifiable(G, H):
        raise NotIdentifiableProduct(f"LEX({G.label()},{H.label()}) is not identifiable")
    branch = branch_of(H)
    stats = _h_stats(H, branch, cap)
    part = twin_classes(G)
    i, ip, ipp = (stats[k].value for k in Kind)
    predicted = formula_value(branch, G.n, part.s, part.t, i, ip, ipp)

    ident, sep, undom = (stats[k].witness for k in Kind)
    # witnesses are missing when H only has closed-form values (beyond the cap)
    if ident is None or sep is None or (part.s and undom is None):
        witness = None
    else:
        witness = assemble_code(G, H, reduced_partition(part), ident, sep, undom)
    return ProductPlan(G.label(), H.label(), G.n, H.n, branch, stats, part.s, part.t,
                       predicted, witness)


def construct_product_code(G: Graph, H: Graph, cap: int | None = None) -> VertexSet:
    plan = theorem_min_identifying(G, H, cap)
    if plan.witness is None:
        raise TooLargeForExactSearch(f"no witness codes for {H.label()} within the cap")
    return plan.witness


def verify_theorem(G: Graph, H: Graph, cap: int | None = None) -> ProductPlan:
    """Run the formula, then solve G[H] exactly and compare."""
    limit = DEFAULT_CAP if cap is None else cap
    if G.n * H.n > limit:
        raise TooLargeForExactSearch(
            f"LEX({G.label()},{H.label()}) has {G.n * H.n} vertices, cap is {limit}")
    plan = theorem_min_identifying(G, H, cap)
    value, witness = min_identifying_code(gc.lex_product(G, H), cap=limit)
    plan.oracle_value = value
    plan.oracle_witness = witness
    plan.verified = value == plan.predicted
    return plan


def slices(G: Graph, H: Graph, S: VertexSet) -> list[int]:
    full = H.full_mask
    return [(S.bits >> (u * H.n)) & full for u in range(G.n)]


def check_slice_conditions(G: Graph, H: Graph, S: VertexSet) -> bool:
    """Necessary structure of an identifying code S of G[H], slice by slice."""
    product = gc.lex_product(G, H)
    if S.width != product.n or not is_identifying_code(product, S):
        raise NotAnIdentifyingCode("S is not an identifying code of the product")
    per_u = slices(G, H, S)
    balls = [H.ball_mask(v) for v in range(H.n)]
    for sl in per_u:
        if len({b & sl for b in balls}) != H.n:
            return False
    part = twin_classes(G)
    for cls in part.u_classes:
        inside = [u for u in cls if any(per_u[u] & ~b == 0 for b in balls)]
        if len(inside) > 1:
            return False
    for cls in part.v_classes:
        missing = [u for u in cls if any(per_u[u] & b == 0 for b in balls)]
        if len(missing) > 1:
            return False
    return True


def corollary_value(g_order: int, family: Family, n: int) -> int:
    family = Family(family)
    if g_order < 2:
        raise OutOfCorollaryRange(f"G needs order >= 2, got {g_order}")
    if family is Family.PATH:
        if n < 7:
            raise OutOfCorollaryRange(f"path corollary needs n >= 7, got {n}")
        return g_order * (n // 2 + 1)
    if n < 12:
        raise OutOfCorollaryRange(f"cycle corollary needs n >= 12, got {n}")
    return g_order * n // 2 if n % 2 == 0 else g_order * (n + 3) // 2


def r_identifying_impossible(G: Graph, H: Graph, r: int) -> tuple[ProductVertex, ProductVertex]:
    """A same-fibre pair of G[H] whose radius-r balls coincide, for r >= 2."""
    if r < 2:
        raise ValueError(f"radius must be >= 2, got {r}")
    product = gc.lex_product(G, H)
    for u in range(G.n):
        first = gc.r_ball(product, u * H.n, r)
        for v in range(1, H.n):
            if gc.r_ball(product, u * H.n + v, r) == first:
                return ProductVertex(u, 0), ProductVertex(u, v)
    raise AssertionError("no same-fibre pair with equal balls")
