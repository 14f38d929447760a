"""Quiver isomorphism, bounded mutation-sequence search, and cluster-variable enumeration."""
from __future__ import annotations

import logging
from collections import deque
from typing import Callable, Iterable, Optional

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .quiver import Quiver
from .modular import enumerate_modular
from .seed import Seed, mutate_seed

log = logging.getLogger(__name__)

# deeper symbolic enumeration of the Mat_3 structure takes minutes (10^5-term variables)
SYMBOLIC_DEPTH = 4


class NotFound(Exception):
    """No mutation sequence within the depth bound satisfies the goal."""


def _digraph(q: Quiver) -> nx.DiGraph:
    g = nx.DiGraph()
    for v in q.vertices:
        g.add_node(v, frozen=v in q.frozen)
    for (u, v), m in q.arrows.items():
        g.add_edge(u, v, mult=m)
    return g


def quiver_isomorphic(q1: Quiver, q2: Quiver) -> Optional[dict]:
    """A frozen-flag and multiplicity preserving isomorphism ``q1 -> q2``, or None."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.frozen) != len(q2.frozen):
        return None
    if q1.arrow_count() != q2.arrow_count():
        return None
    if sorted(map(q1.degree_signature, q1.vertices)) != sorted(map(q2.degree_signature, q2.vertices)):
        return None
    gm = DiGraphMatcher(
        _digraph(q1), _digraph(q2),
        node_match=lambda a, b: a["frozen"] == b["frozen"],
        edge_match=lambda a, b: a["mult"] == b["mult"],
    )
    for mapping in gm.isomorphisms_iter():
        return dict(mapping)
    return None


def search_sequence(
    s: Seed,
    goal: Callable[[Seed], bool],
    max_depth: int = 12,
    *,
    min_depth: int = 0,
    prune: Callable[[Seed, int], bool] | None = None,
    allow_backtrack: bool = False,
    directions: Iterable | None = None,
) -> list:
    """Iterative-deepening search for a vertex sequence whose terminal seed meets ``goal``.

    Directions are tried in vertex order, so the result is deterministic.
    ``prune(seed, remaining)`` may cut a branch that cannot reach the goal in
    ``remaining`` further steps.  Immediate repetition of a direction (which
    undoes the previous step) is skipped unless ``allow_backtrack``.
    Raises NotFound.
    """
    dirs = tuple(directions) if directions is not None else s.mutable
    seen: dict = {}

    def dfs(seed: Seed, path: list, remaining: int):
        if len(path) >= min_depth and goal(seed):
            return list(path)
        if remaining == 0:
            return None
        if prune is not None and prune(seed, remaining):
            return None
        key = seed.key()
        if not allow_backtrack:
            if seen.get(key, -1) >= remaining:
                return None
            seen[key] = remaining
        for v in dirs:
            if not allow_backtrack and path and path[-1] == v:
                continue
            path.append(v)
            found = dfs(mutate_seed(seed, v), path, remaining - 1)
            path.pop()
            if found is not None:
                return found
        return None

    for depth in range(0, max_depth + 1):
        seen.clear()
        found = dfs(s, [], depth)
        if found is not None:
            return found
    raise NotFound(f"no sequence of length <= {max_depth}")


def enumerate_seeds(s: Seed, depth: int, *, on_seed: Callable[[Seed, tuple], None] | None = None):
    """Breadth-first traversal of distinct seeds within ``depth`` mutations.

    Returns ``{seed key: (seed, path)}``; seeds reached along several paths
    are expanded once (the visited set is keyed by variables and matrix).
    """
    start = s
    visited = {start.key(): (start, ())}
    frontier = deque([(start, ())])
    if on_seed:
        on_seed(start, ())
    for _ in range(depth):
        nxt = deque()
        while frontier:
            seed, path = frontier.popleft()
            for v in seed.mutable:
                if path and path[-1] == v:
                    continue
                child = mutate_seed(seed, v)
                key = child.key()
                if key in visited:
                    continue
                cpath = path + (v,)
                visited[key] = (child, cpath)
                nxt.append((child, cpath))
                if on_seed:
                    on_seed(child, cpath)
        frontier = nxt
    return visited


def enumerate_cluster_variables(s: Seed, depth: int, *, max_depth: int = 8, method: str = "auto"):
    """All distinct mutable cluster variables within ``depth`` mutations of ``s``.

    ``method='symbolic'`` returns a set of exact functions.  ``'modular'``
    returns a :class:`ModularClusterVariables` (membership by fingerprint),
    which is what ``'auto'`` picks beyond ``SYMBOLIC_DEPTH``.
    """
    if depth > max_depth:
        raise ValueError(f"depth {depth} exceeds configured bound {max_depth}")
    if method not in ("auto", "symbolic", "modular"):
        raise ValueError(f"unknown method {method!r}")
    if method == "modular" or (method == "auto" and depth > SYMBOLIC_DEPTH):
        return enumerate_modular(s, depth)
    out = set()

    def collect(seed, path):
        out.update(seed.cluster())

    enumerate_seeds(s, depth, on_seed=collect)
    return out


def write_sequence(seq: Iterable) -> str:
    """MutationSequence file format: whitespace-separated ``i.j`` labels."""
    return " ".join(f"{v[0]}.{v[1]}" if isinstance(v, tuple) else str(v) for v in seq) + "\n"


def read_sequence(text: str) -> list:
    out = []
    for tok in text.split():
        if "." in tok:
            i, j = tok.split(".", 1)
            out.append((int(i), int(j)))
        else:
            out.append(int(tok))
    return out
