"""Cluster-variable enumeration by modular fingerprints.

Deep mutation sequences produce polynomials with 10^5+ terms, so symbolic
enumeration stops being practical around depth 5.  Here every variable is
represented by its total degree and its values modulo a large prime at a
few fixed random points.  Since cluster variables of a regular structure are
polynomials, the exchange relation evaluated pointwise gives the exact value
of the new variable modulo the prime.  Two distinct fingerprints therefore
certify two distinct functions; equal fingerprints of distinct functions
happen with probability about deg / PRIME per point.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..exact import Polynomial
from .exchange import MutationError, mutate_matrix
from .seed import Seed

PRIME = (1 << 61) - 1


@dataclass(frozen=True)
class Fingerprint:
    degree: int
    values: tuple

    def __mul__(self, other: "Fingerprint") -> "Fingerprint":
        return Fingerprint(self.degree + other.degree,
                           tuple(a * b % PRIME for a, b in zip(self.values, other.values)))

    def __add__(self, other: "Fingerprint") -> "Fingerprint":
        if self.degree != other.degree:
            raise MutationError("adding fingerprints of different degrees")
        return Fingerprint(self.degree, tuple((a + b) % PRIME for a, b in zip(self.values, other.values)))

    def __pow__(self, e: int) -> "Fingerprint":
        return Fingerprint(self.degree * e, tuple(pow(a, e, PRIME) for a in self.values))

    def divide(self, other: "Fingerprint") -> "Fingerprint":
        if any(v == 0 for v in other.values):
            raise ZeroDivisionError("fingerprint vanishes at a sample point")
        return Fingerprint(self.degree - other.degree,
                           tuple(a * pow(b, -1, PRIME) % PRIME for a, b in zip(self.values, other.values)))



class FingerprintSampler:
    """Fixed random points; maps polynomials in matrix entries to fingerprints."""

    def __init__(self, points: int = 3, seed: int = 20240601):
        self.rng = random.Random(seed)
        self.n_points = points
        self._points: list[dict] = [dict() for _ in range(points)]

    def _value(self, k: int, v) -> int:
        pt = self._points[k]
        if v not in pt:
            pt[v] = self.rng.randrange(2, PRIME - 1)
        return pt[v]

    def of(self, f: Polynomial) -> Fingerprint:
        deg = f.is_homogeneous()
        if deg is None:
            raise ValueError("fingerprints require homogeneous polynomials")
        vals = []
        for k in range(self.n_points):
            pt = {v: self._value(k, v) for v in f.variables()}
            vals.append(f.evaluate_mod(pt, PRIME))
        return Fingerprint(deg, tuple(vals))

    def one(self) -> Fingerprint:
        return Fingerprint(0, (1,) * self.n_points)


@dataclass(frozen=True)
class ModularSeed:
    vertices: tuple
    btilde: tuple
    variables: tuple  # Fingerprints
    casimir: Fingerprint | None = None

    @property
    def n_mutable(self) -> int:
        return len(self.btilde)

    def key(self):
        return (self.btilde, self.variables)

    def mutate(self, k: int, one: Fingerprint) -> "ModularSeed":
        row = self.btilde[k]
        pos, neg = one, one
        for b, x in zip(row, self.variables):
            if b > 0:
                pos = pos * x ** b
            elif b < 0:
                neg = neg * x ** (-b)
        if pos.degree != neg.degree:
            if self.casimir is None:
                raise MutationError("inhomogeneous exchange relation")
            diff = abs(pos.degree - neg.degree)
            if diff % self.casimir.degree:
                raise MutationError("exchange monomials cannot be balanced by the Casimir")
            bal = self.casimir ** (diff // self.casimir.degree)
            if pos.degree < neg.degree:
                pos = pos * bal
            else:
                neg = neg * bal
        new = (pos + neg).divide(self.variables[k])
        variables = self.variables[:k] + (new,) + self.variables[k + 1:]
        return ModularSeed(self.vertices, mutate_matrix(self.btilde, k), variables, self.casimir)


def to_modular(s: Seed, sampler: FingerprintSampler) -> ModularSeed:
    for v in s.variables:
        if not isinstance(v, Polynomial):
            raise ValueError("modular enumeration needs polynomial initial variables")
    cas = sampler.of(s.casimir) if s.casimir is not None else None
    return ModularSeed(s.vertices, tuple(tuple(r) for r in s.btilde),
                       tuple(sampler.of(v) for v in s.variables), cas)


class ModularClusterVariables:
    """Set of cluster-variable fingerprints; supports ``polynomial in self``."""

    def __init__(self, paths: dict, sampler: FingerprintSampler, seeds: int):
        self.paths = paths  # fingerprint -> (mutation path of vertex labels, position)
        self.fingerprints = set(paths)
        self.sampler = sampler
        self.seed_count = seeds

    def witness(self, f) -> tuple | None:
        """(path, vertex) producing a variable with the fingerprint of ``f``, or None."""
        fp = f if isinstance(f, Fingerprint) else self.sampler.of(f)
        return self.paths.get(fp)

    def __contains__(self, f) -> bool:
        if isinstance(f, Fingerprint):
            return f in self.fingerprints
        try:
            return self.sampler.of(f) in self.fingerprints
        except ValueError:
            return False  # inhomogeneous functions are never cluster variables here

    def __len__(self) -> int:
        return len(self.fingerprints)

    def __iter__(self) -> Iterator[Fingerprint]:
        return iter(self.fingerprints)

    def degrees(self) -> list[int]:
        return sorted(f.degree for f in self.fingerprints)


def enumerate_modular(s: Seed, depth: int, *, points: int = 3, rng_seed: int = 20240601,
                      sampler: FingerprintSampler | None = None) -> ModularClusterVariables:
    """Breadth-first enumeration of mutable cluster variables within ``depth`` steps."""
    sampler = sampler or FingerprintSampler(points, rng_seed)
    one = sampler.one()
    start = to_modular(s, sampler)
    visited = {start.key()}
    out = {fp: ((), start.vertices[k]) for k, fp in enumerate(start.variables[: start.n_mutable])}
    frontier: deque = deque([(start, ())])
    for _ in range(depth):
        nxt: deque = deque()
        for seed, path in frontier:
            for k in range(seed.n_mutable):
                v = seed.vertices[k]
                if path and path[-1] == v:
                    continue
                child = seed.mutate(k, one)
                key = child.key()
                if key in visited:
                    continue
                visited.add(key)
                cpath = path + (v,)
                out.setdefault(child.variables[k], (cpath, v))
                nxt.append((child, cpath))
        frontier = nxt
    return ModularClusterVariables(out, sampler, len(visited))
