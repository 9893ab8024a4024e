from __future__ import annotations

from collections import deque
from itertools import combinations

import networkx as nx
import pytest

from idcodes.graph import Graph, from_edge_list


def nx_to_graph(g: nx.Graph) -> Graph:
    g = nx.convert_node_labels_to_integers(g)
    return from_edge_list(g.number_of_nodes(), list(g.edges()))


def closed_balls(G: Graph) -> list[frozenset[int]]:
    return [frozenset([v, *(u for u in range(G.n) if G.masks[v] >> u & 1)]) for v in range(G.n)]


def bfs_dist(G: Graph, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in range(G.n):
            if G.masks[u] >> w & 1 and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def brute_is_code(G: Graph, code: frozenset[int], kind: str) -> bool:
    """Definition-level check, straight from the set-theoretic statements."""
    balls = closed_balls(G)
    if not code:
        return False
    traces = [b & code for b in balls]
    if len(set(traces)) != G.n:
        return False
    if kind == "I":
        return all(traces)
    if kind == "I''":
        return all(not code <= b for b in balls)
    return True


def brute_min(G: Graph, kind: str) -> tuple[int, tuple[int, ...]] | None:
    """Smallest size and lexicographically first code, by plain enumeration."""
    for k in range(1, G.n + 1):
        for combo in combinations(range(G.n), k):
            if brute_is_code(G, frozenset(combo), kind):
                return k, combo
    return None


def connected_atlas(max_nodes: int = 7) -> list[Graph]:
    """All connected graphs on 2..max_nodes vertices, up to isomorphism."""
    out = []
    for g in nx.graph_atlas_g():
        if 2 <= g.number_of_nodes() <= max_nodes and nx.is_connected(g):
            out.append(nx_to_graph(g))
    return out


@pytest.fixture(scope="session")
def atlas7() -> list[Graph]:
    return connected_atlas(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
