"""The versioned verification corpus of (G, H) pairs.

One case per line: ``<G-expr> <H-expr> <expected>`` where ``expected`` is the
minimum identifying code size of G[H], ``-`` when G[H] is not identifiable,
or ``?`` to derive it with the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ParseError
from .lexico import product_identifiable, product_identifiable_direct, verify_theorem
from .parse import load_graph

NOT_IDENTIFIABLE = "-"
DERIVE = "?"


@dataclass(frozen=True)
class CorpusCase:
    g: str
    h: str
    expected: int | str

    def line(self) -> str:
        return f"{self.g} {self.h} {self.expected}"


def parse_corpus(text: str) -> list[CorpusCase]:
    cases = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"corpus line {lineno}: expected '<G> <H> <expected>'")
        g, h, exp = parts
        if exp not in (NOT_IDENTIFIABLE, DERIVE):
            try:
                exp = int(exp)
            except ValueError:
                raise ParseError(f"corpus line {lineno}: bad expected value {exp!r}") from None
        cases.append(CorpusCase(g, h, exp))
    return cases


def load_corpus(path: str | Path | None = None) -> list[CorpusCase]:
    if path is None:
        text = resources.files("idcodes").joinpath("data/corpus.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_corpus(text)


def run_case(case: CorpusCase, cap: int = 32) -> dict[str, Any]:
    """Check identifiability both ways and, when identifiable, formula against oracle."""
    G, H = load_graph(case.g), load_graph(case.h)
    formula = product_identifiable(G, H)
    direct = product_identifiable_direct(G, H)
    row: dict[str, Any] = {
        "G": case.g,
        "H": case.h,
        "identifiable": formula,
        "identifiable_direct": direct,
        "predicted": None,
        "oracle": None,
        "verified": None,
        "expected": case.expected,
    }
    if formula and direct:
        plan = verify_theorem(G, H, cap=cap)
        row.update(predicted=plan.predicted, oracle=plan.oracle_value, verified=plan.verified)
        actual: int | str = plan.oracle_value
    else:
        actual = NOT_IDENTIFIABLE
    row["matches_expected"] = case.expected == DERIVE or case.expected == actual
    row["ok"] = formula == direct and row["verified"] is not False and row["matches_expected"]
    return row
