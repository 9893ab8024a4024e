"""Identifying, separating and undominated-separating codes.

Three parameters of a graph G are computed exactly:

* ``I(G)``   minimum identifying code (covers every vertex, separates every pair);
* ``I'(G)``  minimum code separating every pair, coverage not required;
* ``I''(G)`` minimum separating code that is not contained in any ball.

Each is a hitting-set problem solved by :mod:`idcodes.hitting`.  Witnesses
are the lexicographically least optimal codes (compared as sorted tuples).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import graph as gc
from .errors import (
    ClosedFormMismatch,
    NotIdentifiable,
    SameVertex,
    TooFewVertices,
    TooLargeForExactSearch,
    UndefinedParameter,
    WidthMismatch,
)
from .graph import Graph, VertexSet
from .hitting import HittingSetSolver

DEFAULT_CAP = 26


class Kind(str, Enum):
    I = "I"
    I_PRIME = "I'"
    I_DPRIME = "I''"


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    EXACT_SEARCH = "exact_search"


def _check_width(G: Graph, C: VertexSet) -> None:
    if C.width != G.n:
        raise WidthMismatch(f"code has width {C.width}, graph has {G.n} vertices")


def covers(G: Graph, C: VertexSet, v: int) -> bool:
    _check_width(G, C)
    G.check_vertex(v)
    return bool(G.ball_mask(v) & C.bits)


def separates(G: Graph, C: VertexSet, x: int, y: int) -> bool:
    _check_width(G, C)
    G.check_vertex(x)
    G.check_vertex(y)
    if x == y:
        raise SameVertex(f"cannot separate {x} from itself")
    return bool((G.ball_mask(x) ^ G.ball_mask(y)) & C.bits)


def _separates_all(G: Graph, bits: int) -> bool:
    traces = {G.ball_mask(v) & bits for v in range(G.n)}
    return len(traces) == G.n


def is_separating_code(G: Graph, C: VertexSet) -> bool:
    _check_width(G, C)
    return _separates_all(G, C.bits)


def is_undominated(G: Graph, C: VertexSet) -> bool:
    """True iff C is not a subset of any ball B(v)."""
    _check_width(G, C)
    return all(C.bits & ~G.ball_mask(v) for v in range(G.n))


def is_identifying_code(G: Graph, C: VertexSet) -> bool:
    _check_width(G, C)
    if not C.bits:
        return False
    if not all(G.ball_mask(v) & C.bits for v in range(G.n)):
        return False
    return _separates_all(G, C.bits)


def is_identifiable(G: Graph) -> bool:
    return len({G.ball_mask(v) for v in range(G.n)}) == G.n


def _predicate(kind: Kind):
    if kind is Kind.I:
        return is_identifying_code
    if kind is Kind.I_PRIME:
        return lambda G, C: bool(C.bits) and is_separating_code(G, C)
    return lambda G, C: bool(C.bits) and is_separating_code(G, C) and is_undominated(G, C)


def satisfies(G: Graph, C: VertexSet, kind: Kind) -> bool:
    """Whether C is a code of the given kind (identifying / separating / undominated separating)."""
    return _predicate(Kind(kind))(G, C)


def constraint_family(G: Graph, kind: Kind) -> list[int]:
    """Sets every code of ``kind`` must meet.  Raises NotIdentifiable on twin balls."""
    balls = [G.ball_mask(v) for v in range(G.n)]
    family = []
    for x in range(G.n):
        for y in range(x + 1, G.n):
            diff = balls[x] ^ balls[y]
            if not diff:
                raise NotIdentifiable(f"{G.label()}: vertices {x} and {y} have the same ball")
            family.append(diff)
    if kind is Kind.I:
        family.extend(balls)
    elif kind is Kind.I_DPRIME:
        full = G.full_mask
        family.extend(full & ~b for b in balls)
    return family


def _solve(G: Graph, kind: Kind, cap: int | None) -> tuple[int, VertexSet]:
    limit = DEFAULT_CAP if cap is None else cap
    if G.n > limit:
        raise TooLargeForExactSearch(
            f"{G.label()} has {G.n} vertices, exact search cap is {limit}")
    family = constraint_family(G, kind)
    # information bound: n distinct nonempty traces need 2^k - 1 >= n
    start = math.ceil(math.log2(G.n + 1)) if kind is Kind.I else 1
    solver = HittingSetSolver()
    k = solver.minimum(family, start)
    if k is None:
        raise UndefinedParameter(f"{kind.value}({G.label()}) is not defined")
    witness = solver.lex_least(family, k)
    return k, VertexSet.of(G.n, witness)


def min_identifying_code(G: Graph, cap: int | None = None) -> tuple[int, VertexSet]:
    return _solve(G, Kind.I, cap)


def min_separating_code(G: Graph, cap: int | None = None) -> tuple[int, VertexSet]:
    return _solve(G, Kind.I_PRIME, cap)


def min_separating_undominated_code(G: Graph, cap: int | None = None) -> tuple[int, VertexSet]:
    return _solve(G, Kind.I_DPRIME, cap)


def min_code(G: Graph, kind: Kind, cap: int | None = None) -> tuple[int, VertexSet]:
    return _solve(G, Kind(kind), cap)


def closed_form(kind: Kind, family: Family, n: int) -> int | None:
    """Known value for paths and cycles, or ``None`` outside the proven range."""
    kind, family = Kind(kind), Family(family)
    if family is Family.PATH:
        if n < 2:
            raise TooFewVertices(f"path needs n >= 2, got {n}")
        if kind is Kind.I and n >= 3:
            return n // 2 + 1
        if kind is not Kind.I and n >= 7:
            return n // 2 + 1
        return None
    if n < 3:
        raise TooFewVertices(f"cycle needs n >= 3, got {n}")
    if kind is Kind.I:
        if n >= 6:
            return n // 2 if n % 2 == 0 else (n + 3) // 2
        return None
    if n % 2 == 0 and n >= 8:
        return n // 2
    if n % 2 == 1 and n >= 13:
        return (n + 3) // 2
    return None


def recognize_family(G: Graph) -> Family | None:
    if gc.is_labeled_path(G):
        return Family.PATH
    if gc.is_labeled_cycle(G):
        return Family.CYCLE
    return None


@dataclass(frozen=True)
class ParamResult:
    """One of I, I', I'' for a graph; ``value`` is None when undefined."""

    value: int | None
    witness: VertexSet | None
    method: Method | None
    note: str | None = None
    refused: bool = False


@dataclass(frozen=True)
class CodeReport:
    graph: str
    n: int
    identifiable: bool
    i: ParamResult
    i_prime: ParamResult
    i_dprime: ParamResult

    def params(self) -> dict[Kind, ParamResult]:
        return {Kind.I: self.i, Kind.I_PRIME: self.i_prime, Kind.I_DPRIME: self.i_dprime}


_UNDEFINED = ParamResult(None, None, None, "graph not identifiable")


def parameter(G: Graph, kind: Kind, cap: int | None = None,
              use_closed_form: bool = True) -> ParamResult:
    """Compute one parameter, preferring a closed form for labeled paths/cycles.

    A closed-form value still gets an exact witness when the graph is within
    the cap; the two must agree or ClosedFormMismatch is raised.
    """
    kind = Kind(kind)
    family = recognize_family(G) if use_closed_form else None
    formula = closed_form(kind, family, G.n) if family else None
    limit = DEFAULT_CAP if cap is None else cap
    if formula is not None:
        if G.n > limit:
            return ParamResult(formula, None, Method.CLOSED_FORM, "witness beyond exact-search cap")
        value, witness = min_code(G, kind, cap)
        if value != formula:
            raise ClosedFormMismatch(
                f"{kind.value}({G.label()}): closed form {formula}, exact search {value}")
        return ParamResult(formula, witness, Method.CLOSED_FORM)
    try:
        value, witness = min_code(G, kind, cap)
    except TooLargeForExactSearch as exc:
        return ParamResult(None, None, None, str(exc), refused=True)
    except NotIdentifiable:
        return _UNDEFINED
    except UndefinedParameter:
        return ParamResult(None, None, Method.EXACT_SEARCH, "no code of this kind exists")
    return ParamResult(value, witness, Method.EXACT_SEARCH)


def full_report(G: Graph, cap: int | None = None, use_closed_form: bool = True) -> CodeReport:
    """Identifiability and all three parameters.

    A cap refusal is recorded on the affected field (``refused=True``) and the
    other fields are still computed.
    """
    ident = is_identifiable(G)
    if not ident:
        return CodeReport(G.label(), G.n, False, _UNDEFINED, _UNDEFINED, _UNDEFINED)
    results = [parameter(G, k, cap, use_closed_form) for k in Kind]
    return CodeReport(G.label(), G.n, True, *results)


def family_table(family: Family, n_max: int, cap: int | None = None) -> list[dict]:
    """Rows n = 3..n_max of I, I', I'' for paths or cycles.

    Every cell is solved exactly; where a closed form applies the cell is
    tagged ``closed_form`` and the two values must agree.
    """
    family = Family(family)
    build = gc.path if family is Family.PATH else gc.cycle
    rows = []
    for n in range(3, n_max + 1):
        G = build(n)
        row: dict = {"n": n}
        for kind in Kind:
            formula = closed_form(kind, family, n)
            try:
                value: int | None = min_code(G, kind, cap)[0]
            except (NotIdentifiable, UndefinedParameter):
                value = None
            if formula is not None and formula != value:
                raise ClosedFormMismatch(
                    f"{kind.value}({G.label()}): closed form {formula}, exact search {value}")
            if value is None:
                method = None
            else:
                method = Method.CLOSED_FORM if formula is not None else Method.EXACT_SEARCH
            row[kind.value] = {"value": value, "method": method.value if method else None}
        rows.append(row)
    return rows
