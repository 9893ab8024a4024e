"""Plain-dict views of results and the structured run report.

The structured format is JSON with a fixed key order; ``parse(emit(r)) == r``.
Timing is only included when asked for, so that repeated runs are
byte-identical by default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, ProductVertex, VertexSet
from .lexico import ProductPlan
from .solver import CodeReport, Kind, ParamResult
from .twins import TwinPartition, reduced_partition


def _vs(v: VertexSet | None) -> list[int] | None:
    return None if v is None else v.to_list()


def param_dict(p: ParamResult) -> dict[str, Any]:
    return {
        "value": p.value,
        "method": p.method.value if p.method else None,
        "witness": _vs(p.witness),
        "note": p.note,
        "refused": p.refused,
    }


def code_report_dict(r: CodeReport) -> dict[str, Any]:
    out: dict[str, Any] = {"graph": r.graph, "n": r.n, "identifiable": r.identifiable}
    for kind, p in r.params().items():
        out[kind.value] = param_dict(p)
    return out


def twins_dict(G: Graph, P: TwinPartition) -> dict[str, Any]:
    red = reduced_partition(P)
    return {
        "graph": G.label(),
        "n": G.n,
        "W": [c.to_list() for c in P.w_classes],
        "U": [c.to_list() for c in P.u_classes],
        "V": [c.to_list() for c in P.v_classes],
        "representatives": {"U": list(P.u_representatives), "V": list(P.v_representatives)},
        "s": P.s,
        "t": P.t,
        "reduced": {
            "W0": red.base.to_list(),
            "U_rest": [c.to_list() for c in red.u_rest],
            "V_rest": [c.to_list() for c in red.v_rest],
        },
    }


def product_pairs(v: VertexSet | None, h_order: int) -> list[list[int]] | None:
    if v is None:
        return None
    return [list(ProductVertex.from_index(i, h_order)) for i in v]


def plan_dict(plan: ProductPlan) -> dict[str, Any]:
    return {
        "G": plan.g,
        "H": plan.h,
        "branch": plan.branch.value,
        "inputs": {
            "|V(G)|": plan.g_order,
            "s(G)": plan.s,
            "t(G)": plan.t,
            **{f"{k.value}(H)": plan.h_stats[k].value for k in Kind},
            "methods": {k.value: (plan.h_stats[k].method.value if plan.h_stats[k].method else None)
                        for k in Kind},
        },
        "predicted": plan.predicted,
        "witness_size": None if plan.witness is None else len(plan.witness),
        "witness": product_pairs(plan.witness, plan.h_order),
        "oracle": plan.oracle_value,
        "verified": plan.verified,
    }


@dataclass
class RunReport:
    command: str
    inputs: list[str]
    results: Any
    timing: dict[str, float] | None = field(default=None)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"command": self.command, "inputs": self.inputs,
                               "results": self.results}
        if self.timing is not None:
            out["timing_ms"] = self.timing
        return out


def emit(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> RunReport:
    data = json.loads(text)
    return RunReport(data["command"], data["inputs"], data["results"], data.get("timing_ms"))
