"""Bounded search for the sequence T carrying the initial CG cluster to its
w0-conjugate with quiver isomorphic to the opposite of the initial one."""
from __future__ import annotations

from .cg import CGParams, build_initial_seed, w0_conjugate
from .cluster import NotFound, Seed, mutate_sequence, quiver_isomorphic
from .cluster.modular import FingerprintSampler, to_modular


def w0_targets(s: Seed, n: int) -> dict:
    return {v: w0_conjugate(f, n) for v, f in zip(s.vertices, s.variables)}


def verify_transform(s: Seed, seq, n: int) -> dict:
    """Symbolic check of a candidate T; returns the vertex matching and quiver isomorphism."""
    end = mutate_sequence(s, seq)
    targets = w0_targets(s, n)
    match = {}
    for v, f in zip(end.vertices, end.variables):
        hits = [u for u, g in targets.items() if g == f]
        if len(hits) == 1:
            match[v] = hits[0]
    iso = quiver_isomorphic(end.quiver(), s.quiver().opposite())
    ok = len(match) == len(s.vertices) and iso is not None and all(iso.get(v) == u for v, u in match.items())
    return {"ok": ok, "regular": end.regular, "matching": match, "isomorphism": iso}


def search_transform(n: int = 3, max_depth: int = 10, variant: str = "mat") -> tuple:
    """Shortest T by breadth-first search over modular fingerprints, then verified symbolically."""
    s = build_initial_seed(CGParams.make(n, variant))
    sampler = FingerprintSampler()
    target = {sampler.of(f) for f in w0_targets(s, n).values()}
    one = sampler.one()
    start = to_modular(s, sampler)
    seen = {start.key()}
    frontier = [(start, ())]
    for _ in range(max_depth):
        nxt = []
        for seed, path in frontier:
            for k in range(seed.n_mutable):
                v = seed.vertices[k]
                if path and path[-1] == v:
                    continue
                child = seed.mutate(k, one)
                if child.key() in seen:
                    continue
                seen.add(child.key())
                cpath = path + (v,)
                if set(child.variables) == target:
                    res = verify_transform(s, cpath, n)
                    if res["ok"]:
                        return cpath, res
                nxt.append((child, cpath))
        frontier = nxt
    raise NotFound(f"no sequence of length <= {max_depth}")
